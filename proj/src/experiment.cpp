#include "irred/experiment.hpp"

#include <chrono>
#include <cmath>

namespace irred {

namespace {

double simpson(double (*f)(double), double a, double b) {
    double c = 0.5 * (a + b);
    return (b - a) / 6.0 * (f(a) + 4.0 * f(c) + f(b));
}

double adaptive(double (*f)(double), double a, double b, double whole, double eps, int depth) {
    double c = 0.5 * (a + b);
    double left = simpson(f, a, c);
    double right = simpson(f, c, b);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * eps * std::max(1.0, std::fabs(whole)))
        return left + right + delta / 15.0;
    return adaptive(f, a, c, left, eps / 2, depth - 1) +
           adaptive(f, c, b, right, eps / 2, depth - 1);
}

double inv_log(double t) { return 1.0 / std::log(t); }

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace

double log_integral(double x) {
    if (x < 2.0) throw DomainError("log_integral needs x >= 2");
    if (x == 2.0) return 0.0;
    return adaptive(inv_log, 2.0, x, simpson(inv_log, 2.0, x), 1e-10, 60);
}

ExperimentReport landau_check(const QuadField& k, const std::vector<long long>& x_grid,
                              scan::Mode mode) {
    Stopwatch sw;
    scan::PrimeCensus census = scan::prime_census(k, x_grid, mode);
    long long h = k.class_number();

    ExperimentReport rep;
    rep.id = "landau";
    rep.params["d"] = std::to_string(k.d());
    rep.params["h"] = std::to_string(h);
    rep.x_grid = x_grid;
    for (long long c = 1; c <= h; ++c) {
        ExperimentReport::Series s;
        s.label = "class " + std::to_string(c);
        for (size_t gi = 0; gi < x_grid.size(); ++gi) {
            double obs = static_cast<double>(census.counts[gi][c - 1]);
            double pred = log_integral(static_cast<double>(x_grid[gi])) / h;
            s.observed.push_back(obs);
            s.predicted.push_back(pred);
            s.ratio.push_back(obs / pred);
        }
        rep.series.push_back(std::move(s));
    }
    rep.wall_seconds = sw.seconds();
    return rep;
}

MertensTable mertens_by_class(const QuadField& k, const std::vector<long long>& x_grid,
                              scan::Mode mode) {
    scan::PrimeCensus census = scan::prime_census(k, x_grid, mode);
    long long h = k.class_number();
    MertensTable t;
    t.x_grid = x_grid;
    t.sums = census.inverse_sums;
    t.residuals.assign(x_grid.size(), std::vector<double>(h, 0.0));
    for (size_t gi = 0; gi < x_grid.size(); ++gi) {
        double target = std::log(std::log(static_cast<double>(x_grid[gi]))) / h;
        for (long long c = 0; c < h; ++c)
            t.residuals[gi][c] = t.sums[gi][c] - target;
    }
    return t;
}

ExtremalIdeal build_extremal_ideal(const QuadField& k, double big_x, const SimplexPoint& gamma) {
    long long h = k.class_number();
    if (static_cast<long long>(gamma.size()) != h) throw DimensionMismatch("gamma dimension != h");
    double total = 0.0;
    for (double gi : gamma) {
        if (gi < -1e-12) throw DomainError("gamma must be nonnegative");
        total += gi;
    }
    if (total > h + 1e-12) throw DomainError("gamma outside the simplex");

    double logx = std::log(big_x);
    ExtremalIdeal out;
    out.ideal = {1, 0, 1};
    out.omega.assign(h, 0);
    long long max_norm = 0;
    for (long long c = 0; c < h; ++c)
        max_norm = std::max(max_norm, static_cast<long long>(gamma[c] * logx));
    if (max_norm < 2) return out;
    for (const PrimeIdealRec& r : enumerate_prime_ideals(k, max_norm)) {
        double bound = gamma[r.class_index - 1] * logx;
        if (static_cast<double>(r.norm) <= bound) {
            out.ideal = multiply(k, out.ideal, r.ideal);
            ++out.omega[r.class_index - 1];
        }
    }
    return out;
}

ExperimentReport progression_experiment(const QuadField& k, const QIIdeal& m,
                                        const QIInteger& alpha,
                                        const std::vector<long long>& x_grid,
                                        scan::Mode mode) {
    Stopwatch sw;
    ExperimentReport rep;
    rep.id = "progression";
    rep.params["d"] = std::to_string(k.d());
    rep.params["modulus"] = std::to_string(m.a) + "," + std::to_string(m.b) + "," +
                            std::to_string(m.c);
    rep.params["alpha"] = std::to_string(alpha.x) + "," + std::to_string(alpha.y);
    rep.x_grid = x_grid;

    for (size_t i = 1; i < x_grid.size(); ++i)
        if (x_grid[i] <= x_grid[i - 1]) throw DomainError("x grid must be strictly increasing");

    QIIdeal g = gcd_ideal(k, principal_ideal(k, alpha), m);
    TypeVec tau_prime = ideal_type(k, g);
    bool weakly_coprime = is_weakly_coprime_type(k.ordering(), tau_prime);
    rep.params["degenerate"] = weakly_coprime ? "false" : "true";

    ExperimentReport::Series s;
    s.label = "count";
    std::optional<ProgressionConstants> constants;
    if (weakly_coprime) {
        QIIdeal f = scan::ideal_quotient_exact(k, m, g);
        ProgressionInstance inst;
        inst.ordering = &k.ordering();
        inst.tau_prime = tau_prime;
        inst.norm_g = ideal_norm(g);
        inst.phi = ray_phi(k, make_ray_modulus(k, f));
        constants = progression_constants(inst);
        rep.params["L"] = std::to_string(constants->L);
        rep.params["C_prime"] = constants->c_prime.str();
        rep.params["ratio_band"] = "[0.4, 2.5]";
    }

    bool trend_ok = true;
    double prev_dev = -1.0;
    for (size_t gi = 0; gi < x_grid.size(); ++gi) {
        long long observed = scan::progression_ideal_scan(k, x_grid[gi], m, alpha, mode);
        if (gi == 0) {
            long long cross = scan::progression_element_scan(k, x_grid[gi], m, alpha, mode);
            IRRED_CHECK(cross == observed, "element and ideal scans disagree");
            rep.params["element_cross_check"] = std::to_string(cross);
        }
        s.observed.push_back(static_cast<double>(observed));
        if (constants) {
            double pred = predicted_progression_count(*constants, static_cast<double>(x_grid[gi]));
            s.predicted.push_back(pred);
            double ratio = observed / pred;
            s.ratio.push_back(ratio);
            double dev = std::fabs(ratio - 1.0);
            if (prev_dev >= 0 && dev > prev_dev) trend_ok = false;
            prev_dev = dev;
        }
    }
    if (constants) rep.params["trend_nonincreasing"] = trend_ok ? "true" : "false";
    rep.series.push_back(std::move(s));
    rep.wall_seconds = sw.seconds();
    return rep;
}

ExperimentReport max_nu_experiment(const QuadField& k, long long x, scan::Mode mode) {
    Stopwatch sw;
    scan::MaxNuResult r = scan::max_nu_scan(k, x, mode);
    ExperimentReport rep;
    rep.id = "maxnu";
    rep.params["d"] = std::to_string(k.d());
    rep.params["x"] = std::to_string(x);
    rep.params["greedy_bound"] = std::to_string(r.greedy_bound);
    if (r.element_scanned) {
        rep.params["max_nu"] = std::to_string(r.max_nu);
        rep.params["witness"] = std::to_string(r.witness.x) + "," + std::to_string(r.witness.y);
        rep.params["predicted_main_term"] = [&] {
            TypeSet tmax = maximal_types(k.ordering());
            PolynomialP p = build_p(tmax);
            MaximizationResult mr = maximize_on_simplex(p, static_cast<int>(k.class_number()));
            double ee = std::exp(std::exp(1.0));
            if (x <= ee) return std::string("n/a");
            return std::to_string(max_nu_main_term(mr.m, static_cast<int>(k.class_number()),
                                                     k.davenport_constant(),
                                                     static_cast<double>(x)));
        }();
    }
    rep.wall_seconds = sw.seconds();
    return rep;
}

} // namespace irred
