#include "irred/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace irred {

PolynomialP build_p(const TypeSet& maximal) {
    if (maximal.types.empty()) throw EmptyTypeSet("no maximal types supplied");
    if (maximal.kind != TypeSetKind::Maximal && maximal.kind != TypeSetKind::Irreducible)
        throw EmptyTypeSet("build_p expects a set of maximal types");
    PolynomialP p;
    p.h = static_cast<int>(maximal.types.front().size());
    for (const TypeVec& t : maximal.types) {
        Rational denom(1);
        for (long long e : t) denom *= Rational::factorial(static_cast<int>(e));
        p.monomials.push_back({t, Rational(1) / denom});
    }
    return p;
}

double eval_p(const PolynomialP& p, const SimplexPoint& x) {
    if (static_cast<int>(x.size()) != p.h) throw DimensionMismatch("point dimension != h");
    double total = 0.0;
    for (const auto& mono : p.monomials) {
        double term = mono.coefficient.to_double();
        for (int i = 0; i < p.h; ++i) {
            long long e = mono.exponents[i];
            if (e == 0) continue;
            double xi = x[i];
            double pw = 1.0;
            for (long long k = 0; k < e; ++k) pw *= xi;
            term *= pw;
        }
        total += term;
    }
    return total;
}

std::vector<double> grad_p(const PolynomialP& p, const SimplexPoint& x) {
    if (static_cast<int>(x.size()) != p.h) throw DimensionMismatch("point dimension != h");
    std::vector<double> g(p.h, 0.0);
    for (const auto& mono : p.monomials) {
        for (int j = 0; j < p.h; ++j) {
            long long ej = mono.exponents[j];
            if (ej == 0) continue;
            double term = mono.coefficient.to_double() * static_cast<double>(ej);
            for (int i = 0; i < p.h; ++i) {
                long long e = mono.exponents[i] - (i == j ? 1 : 0);
                for (long long k = 0; k < e; ++k) term *= x[i];
            }
            g[j] += term;
        }
    }
    return g;
}

std::vector<std::vector<double>> hess_p(const PolynomialP& p, const SimplexPoint& x) {
    if (static_cast<int>(x.size()) != p.h) throw DimensionMismatch("point dimension != h");
    std::vector<std::vector<double>> hh(p.h, std::vector<double>(p.h, 0.0));
    for (const auto& mono : p.monomials) {
        for (int j = 0; j < p.h; ++j) {
            long long ej = mono.exponents[j];
            if (ej == 0) continue;
            for (int l = j; l < p.h; ++l) {
                long long el = mono.exponents[l] - (l == j ? 1 : 0);
                if (el == 0) continue;
                double term = mono.coefficient.to_double() * static_cast<double>(ej) *
                              static_cast<double>(el);
                for (int i = 0; i < p.h; ++i) {
                    long long e = mono.exponents[i] - (i == j ? 1 : 0) - (i == l ? 1 : 0);
                    for (long long k = 0; k < e; ++k) term *= x[i];
                }
                hh[j][l] += term;
                if (l != j) hh[l][j] += term;
            }
        }
    }
    return hh;
}

SimplexPoint project_to_simplex_face(const SimplexPoint& x, double s) {
    // Euclidean projection onto {y >= 0, sum y = s} (Held/Wolfe/Crowder).
    const int n = static_cast<int>(x.size());
    std::vector<double> u(x);
    std::sort(u.begin(), u.end(), std::greater<double>());
    double css = 0.0, theta = 0.0;
    int rho = 0;
    for (int i = 0; i < n; ++i) {
        css += u[i];
        double t = (css - s) / (i + 1);
        if (u[i] - t > 0) {
            rho = i + 1;
            theta = t;
        }
    }
    (void)rho;
    SimplexPoint y(n);
    for (int i = 0; i < n; ++i) y[i] = std::max(0.0, x[i] - theta);
    return y;
}

namespace {

struct AscentOutcome {
    SimplexPoint x;
    double value;
    double residual;
    bool converged;
};

double fixed_point_residual(const PolynomialP& p, const SimplexPoint& x, double face_sum) {
    std::vector<double> g = grad_p(p, x);
    SimplexPoint moved(x.size());
    for (size_t i = 0; i < x.size(); ++i) moved[i] = x[i] + g[i];
    SimplexPoint fp = project_to_simplex_face(moved, face_sum);
    double r = 0.0;
    for (size_t i = 0; i < x.size(); ++i) r = std::max(r, std::fabs(fp[i] - x[i]));
    return r;
}

// Newton iteration for grad P = lambda * 1 on the face spanned by the
// current support. Driven by the stationarity residual rather than the
// value: near a degenerate (quartically flat) ridge the value saturates in
// double precision long before the residual does.
void newton_polish(const PolynomialP& p, SimplexPoint& x, double& fx, double face_sum) {
    const int n = static_cast<int>(x.size());
    std::vector<int> support;
    for (int i = 0; i < n; ++i)
        if (x[i] > 1e-6 * face_sum) support.push_back(i);
    if (support.empty()) return;

    SimplexPoint best = x;
    double best_res = fixed_point_residual(p, x, face_sum);

    for (int round = 0; round < 100; ++round) {
        std::vector<double> g = grad_p(p, x);
        std::vector<std::vector<double>> hh = hess_p(p, x);
        int m = static_cast<int>(support.size());
        // [H -1; 1^T 0] [d; lambda] = [-g; 0]
        std::vector<std::vector<double>> a(m + 1, std::vector<double>(m + 2, 0.0));
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) a[i][j] = hh[support[i]][support[j]];
            a[i][m] = -1.0;
            a[i][m + 1] = -g[support[i]];
        }
        for (int j = 0; j < m; ++j) a[m][j] = 1.0;
        bool singular = false;
        for (int col = 0; col <= m; ++col) {
            int piv = col;
            for (int r2 = col + 1; r2 <= m; ++r2)
                if (std::fabs(a[r2][col]) > std::fabs(a[piv][col])) piv = r2;
            if (std::fabs(a[piv][col]) < 1e-14) {
                singular = true;
                break;
            }
            std::swap(a[col], a[piv]);
            for (int r2 = 0; r2 <= m; ++r2) {
                if (r2 == col) continue;
                double f = a[r2][col] / a[col][col];
                for (int c2 = col; c2 <= m + 1; ++c2) a[r2][c2] -= f * a[col][c2];
            }
        }
        if (singular) break;
        std::vector<double> d(m);
        double dmax = 0.0;
        for (int i = 0; i < m; ++i) {
            d[i] = a[i][m + 1] / a[i][i];
            dmax = std::max(dmax, std::fabs(d[i]));
        }
        if (dmax < 1e-15 * face_sum) break;

        double scale = 1.0;
        bool feasible = false;
        SimplexPoint trial;
        for (int bt = 0; bt < 40 && !feasible; ++bt, scale *= 0.5) {
            trial = x;
            feasible = true;
            for (int i = 0; i < m; ++i) {
                trial[support[i]] += scale * d[i];
                if (trial[support[i]] < 0) feasible = false;
            }
        }
        if (!feasible) break;
        x = std::move(trial);
        double res = fixed_point_residual(p, x, face_sum);
        if (res < best_res) {
            best = x;
            best_res = res;
        }
        if (res < 1e-13) break;
        if (res > 1e3 * best_res + 1.0) break; // diverging, keep the best seen
    }
    x = best;
    fx = eval_p(p, x);
}

AscentOutcome ascend(const PolynomialP& p, SimplexPoint x, double face_sum) {
    constexpr int kMaxIter = 5000;
    double fx = eval_p(p, x);
    double step = 0.0;
    for (int it = 0; it < kMaxIter; ++it) {
        std::vector<double> g = grad_p(p, x);
        double gnorm = 0.0;
        for (double v : g) gnorm += v * v;
        gnorm = std::sqrt(gnorm);
        if (gnorm == 0.0) break;
        if (step == 0.0) step = face_sum / gnorm;

        // expanding/backtracking search along the projected path
        bool advanced = false;
        for (int bt = 0; bt < 80 && !advanced; ++bt, step *= 0.5) {
            SimplexPoint trial(x.size());
            for (size_t i = 0; i < x.size(); ++i) trial[i] = x[i] + step * g[i];
            trial = project_to_simplex_face(trial, face_sum);
            double ft = eval_p(p, trial);
            if (ft > fx) {
                x = std::move(trial);
                fx = ft;
                advanced = true;
                step *= 4.0; // warm start the next iteration
            }
        }
        if (!advanced) break;
        // hand over to the Newton polish once the support has settled
        if ((it & 63) == 63 && fixed_point_residual(p, x, face_sum) < 1e-4) break;
    }
    newton_polish(p, x, fx, face_sum);
    double residual = fixed_point_residual(p, x, face_sum);
    return {x, fx, residual, residual < 1e-10};
}

} // namespace

MaximizationResult maximize_on_simplex(const PolynomialP& p, int h, uint64_t seed, int random_starts) {
    if (p.monomials.empty()) throw EmptyTypeSet("cannot maximize an empty polynomial");
    if (h != p.h) throw DimensionMismatch("h != polynomial dimension");

    std::vector<SimplexPoint> starts;
    for (int i = 0; i < h; ++i) {
        SimplexPoint v(h, 0.0);
        v[i] = static_cast<double>(h);
        starts.push_back(std::move(v));
    }
    starts.push_back(SimplexPoint(h, 1.0)); // barycenter of the face
    // one start per monomial, mass split proportionally to its exponents;
    // for a single monomial this is its exact maximizer
    for (const auto& mono : p.monomials) {
        long long deg = 0;
        for (long long e : mono.exponents) deg += e;
        if (deg == 0) continue;
        SimplexPoint v(h, 0.0);
        for (int i = 0; i < h; ++i)
            v[i] = static_cast<double>(mono.exponents[i]) * h / static_cast<double>(deg);
        starts.push_back(std::move(v));
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int r = 0; r < random_starts; ++r) {
        // exponential draws normalized to the face give a uniform simplex point
        SimplexPoint v(h);
        double total = 0.0;
        for (int i = 0; i < h; ++i) {
            v[i] = -std::log(1.0 - unif(rng));
            total += v[i];
        }
        for (int i = 0; i < h; ++i) v[i] *= h / total;
        starts.push_back(std::move(v));
    }

    MaximizationResult best;
    best.m = -HUGE_VAL;
    best.seed = seed;
    bool any_converged = false;
    int used = 0;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t s = 0; s < starts.size(); ++s) {
        AscentOutcome out = ascend(p, starts[s], static_cast<double>(h));
#ifdef _OPENMP
#pragma omp critical
#endif
        {
            ++used;
            if (out.converged) any_converged = true;
            if (out.converged &&
                (out.value > best.m ||
                 (out.value == best.m && (best.argmax.empty() || out.x < best.argmax)))) {
                best.m = out.value;
                best.argmax = out.x;
                best.kkt_residual = out.residual;
            }
        }
    }
    best.restarts_used = used;
    if (!any_converged) {
        double fallback = -HUGE_VAL;
        for (const auto& st : starts) fallback = std::max(fallback, eval_p(p, st));
        throw NonConvergence("no ascent start reached stationarity", fallback);
    }
    return best;
}

double max_nu_main_term(double m, int h, long long d, double x) {
    const double ee = std::exp(std::exp(1.0));
    if (!(x > ee)) throw DomainError("main term needs x > e^e");
    double base = std::log(x) / (h * std::log(std::log(x)));
    return m * std::pow(base, static_cast<double>(d));
}

} // namespace irred
