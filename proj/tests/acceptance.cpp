// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries its own runtime ceiling.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "irred/experiment.hpp"
#include "irred/intutil.hpp"
#include "oracles.hpp"

using namespace irred;

namespace {

int g_failures = 0;

void criterion(const char* name, double time_limit_s, const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" [exception: ") + e.what() + "]";
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > time_limit_s) {
        ok = false;
        note += " [over time budget]";
    }
    std::printf("%s  %-34s (%.2fs / limit %.0fs)%s\n", ok ? "PASS" : "FAIL", name, dt,
                time_limit_s, note.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

bool cyclic_constants() {
    for (int h = 2; h <= 6; ++h) {
        FiniteAbelianGroup g = make_group({h});
        if (davenport(g).D != h) return false;
        PolynomialP p = build_p(maximal_types(canonical_ordering(g)));
        MaximizationResult r = maximize_on_simplex(p, h);
        double hfact = 1;
        for (int i = 2; i <= h; ++i) hfact *= i;
        if (std::fabs(r.m - std::pow(h, h) / hfact) > 1e-8) return false;
    }
    return true;
}

bool cyclic_maximal_types() {
    for (int h = 2; h <= 6; ++h) {
        TypeSet got = maximal_types(canonical_ordering(make_group({h})));
        std::set<TypeVec> expect;
        for (int i = 1; i <= h; ++i) {
            if (std::gcd(i, h) != 1) continue;
            TypeVec t(h, 0);
            t[i - 1] = h;
            expect.insert(t);
        }
        if (std::set<TypeVec>(got.types.begin(), got.types.end()) != expect) return false;
    }
    return true;
}

bool reference_instance() {
    QuadField k(-23);
    if (k.class_group().invariant_factors() != std::vector<long long>{3}) return false;
    QIInteger alpha{0, 1}; // (1 + sqrt(-23)) / 2
    QIIdeal m = integer_ideal(k, 3);
    QIIdeal g = gcd_ideal(k, principal_ideal(k, alpha), m);
    if (ideal_norm(g) != 3) return false;
    TypeVec tau_prime = ideal_type(k, g);
    if (tau_prime != TypeVec{1, 0, 0}) return false;
    MaximalWrtResult mw = types_maximal_wrt(k.ordering(), tau_prime);
    if (mw.types.types != std::vector<TypeVec>{{3, 0, 0}} || mw.L != 2) return false;
    QIIdeal p2 = scan::ideal_quotient_exact(k, m, g);
    Rational phi = ray_phi(k, make_ray_modulus(k, p2));
    if (!(phi == Rational(1))) return false;
    ProgressionInstance inst{&k.ordering(), tau_prime, ideal_norm(g), phi};
    ProgressionConstants c = progression_constants(inst);
    return c.L == 2 && c.c_prime == Rational(1, 27);
}

bool product_formula() {
    std::mt19937_64 rng(20240913);
    for (long long d : {-5LL, -23LL}) {
        QuadField k(d);
        std::vector<PrimeIdealRec> primes = enumerate_prime_ideals(k, 150);
        TypeSet irr = enumerate_irreducible_types(k.ordering());
        for (int trial = 0; trial < 100; ++trial) {
            std::uniform_int_distribution<int> nf(1, 8);
            int n = nf(rng);
            // n distinct primes, sampled without replacement
            std::vector<size_t> picks;
            std::uniform_int_distribution<size_t> pick(0, primes.size() - 1);
            while (static_cast<int>(picks.size()) < n) {
                size_t c = pick(rng);
                bool dup = false;
                for (size_t q : picks) dup |= (q == c);
                if (!dup) picks.push_back(c);
            }
            std::vector<long long> cls(n);
            QIIdeal a{1, 0, 1};
            for (int i = 0; i < n; ++i) {
                cls[i] = primes[picks[i]].class_index;
                a = multiply(k, a, primes[picks[i]].ideal);
            }
            // brute force over the 2^n divisor masks: a divisor is an
            // irreducible ideal iff its class sum vanishes and no proper
            // nonempty submask's does
            long long h = k.class_number();
            const FiniteAbelianGroup& grp = k.class_group();
            std::vector<GroupElement> sum(1u << n, identity_element(grp));
            std::vector<char> principal(1u << n, 0);
            std::vector<TypeVec> type_of(1u << n, TypeVec(h, 0));
            std::map<TypeVec, long long> count_by_type;
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                int low = __builtin_ctz(mask);
                unsigned rest = mask & (mask - 1);
                sum[mask] = add(grp, sum[rest], k.ordering().class_at(cls[low]));
                type_of[mask] = type_of[rest];
                ++type_of[mask][cls[low] - 1];
                principal[mask] = sum[mask] == identity_element(grp);
                if (!principal[mask]) continue;
                bool minimal = true;
                for (unsigned sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask)
                    if (principal[sub]) {
                        minimal = false;
                        break;
                    }
                if (minimal) ++count_by_type[type_of[mask]];
            }
            // compare against the binomial product for every irreducible type
            std::vector<long long> omega = omega_by_class(k, a);
            for (const TypeVec& t : irr.types) {
                long long prod = 1;
                for (long long i = 0; i < h && prod; ++i) {
                    if (t[i] > omega[i]) {
                        prod = 0;
                        break;
                    }
                    long long c = 1;
                    for (long long q = 0; q < t[i]; ++q) c = c * (omega[i] - q) / (q + 1);
                    prod *= c;
                }
                auto it = count_by_type.find(t);
                long long brute = it == count_by_type.end() ? 0 : it->second;
                if (brute != prod) return false;
            }
            // and nothing outside the irreducible set was counted
            std::set<TypeVec> irrset(irr.types.begin(), irr.types.end());
            for (const auto& [t, c] : count_by_type)
                if (c > 0 && !irrset.count(t)) return false;
        }
    }
    return true;
}

bool rayclass_equivalence() {
    QuadField k(-23);
    QIInteger alpha{0, 1};
    QIIdeal m = integer_ideal(k, 3);
    QIIdeal a0 = principal_ideal(k, alpha);
    QIIdeal g = gcd_ideal(k, a0, m);
    QIIdeal f = scan::ideal_quotient_exact(k, m, g);
    QIIdeal beta = scan::ideal_quotient_exact(k, a0, g);
    RayModulus ray = make_ray_modulus(k, f);

    for (const QIIdeal& a : oracle::enumerate_ideals(k, 500)) {
        if (!divides(g, a)) continue;
        bool has_gen = false;
        if (auto gen = is_principal_with_generator(k, a)) {
            for (const QIInteger& u : k.units()) {
                QIInteger rho = k.mul(u, *gen);
                if (ideal_contains(m, {rho.x - alpha.x, rho.y - alpha.y})) has_gen = true;
            }
        }
        QIIdeal aj = scan::ideal_quotient_exact(k, a, g);
        bool same = gcd_ideal(k, aj, f).is_unit_ideal() &&
                    same_strict_ray_class(k, aj, beta, ray);
        if (has_gen != same) return false;
    }
    return true;
}

bool dual_path() {
    QuadField k23(-23);
    QIInteger alpha{0, 1};
    QIIdeal m = integer_ideal(k23, 3);
    if (scan::progression_element_scan(k23, 5000, m, alpha, scan::Mode::Parallel) !=
        scan::progression_ideal_scan(k23, 5000, m, alpha, scan::Mode::Parallel))
        return false;
    for (long long d : {-1LL, -5LL, -23LL}) {
        QuadField k(d);
        QIIdeal one{1, 0, 1};
        QIInteger unit{1, 0};
        if (scan::progression_element_scan(k, 5000, one, unit, scan::Mode::Parallel) !=
            scan::progression_ideal_scan(k, 5000, one, unit, scan::Mode::Parallel))
            return false;
    }
    return true;
}

bool davenport_suite() {
    for (long long n = 2; n <= 10; ++n)
        if (davenport(make_group({n})).D != n) return false;
    for (long long d1 = 2; d1 * d1 <= 36; ++d1)
        for (long long d2 = d1; d1 * d2 <= 36; d2 += d1)
            if (davenport(make_group({d1, d2})).D != d1 + d2 - 1) return false;
    return true;
}

bool asymptotic_trend() {
    QuadField k(-23);
    QIInteger alpha{0, 1};
    QIIdeal m = integer_ideal(k, 3);
    ExperimentReport rep = progression_experiment(k, m, alpha, {10000, 100000, 1000000});
    const auto& s = rep.series.at(0);
    bool in_band = true, trend = true;
    double prev_dev = -1;
    for (size_t i = 0; i < s.ratio.size(); ++i) {
        if (!(s.ratio[i] >= 0.4 && s.ratio[i] <= 2.5)) in_band = false;
        double dev = std::fabs(s.ratio[i] - 1.0);
        if (prev_dev >= 0 && dev > prev_dev) trend = false;
        prev_dev = dev;
    }
    ExperimentReport landau = landau_check(k, {100000});
    bool landau_ok = true;
    for (const auto& cls : landau.series) {
        double ratio = cls.ratio.at(0);
        if (!(ratio >= 0.85 && ratio <= 1.15)) landau_ok = false;
    }
    std::printf("      ratios observed/predicted: %.3f %.3f %.3f (band [0.4, 2.5] %s, "
                "|ratio-1| nonincreasing %s, landau within 15%% %s)\n",
                s.ratio.at(0), s.ratio.at(1), s.ratio.at(2), in_band ? "ok" : "violated",
                trend ? "ok" : "violated", landau_ok ? "ok" : "violated");
    return in_band && trend && landau_ok;
}

bool gradient_and_optimizer() {
    std::mt19937_64 rng(20240913);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (long long n = 1; n <= 8; ++n) {
        for (const auto& inv : abelian_groups_of_order(n)) {
            PolynomialP p = build_p(maximal_types(canonical_ordering(make_group(inv))));
            int h = p.h;
            // finite differences at 100 random simplex points
            for (int trial = 0; trial < 100; ++trial) {
                SimplexPoint x(h);
                double tot = 0;
                for (int i = 0; i < h; ++i) {
                    x[i] = -std::log(1.0 - unif(rng));
                    tot += x[i];
                }
                double scale = unif(rng) * h / tot;
                for (int i = 0; i < h; ++i) x[i] *= scale;
                std::vector<double> grad = grad_p(p, x);
                for (int i = 0; i < h; ++i) {
                    SimplexPoint xp = x, xm = x;
                    xp[i] += 1e-6;
                    xm[i] -= 1e-6;
                    double fd = (eval_p(p, xp) - eval_p(p, xm)) / 2e-6;
                    double denom = std::max({1.0, std::fabs(fd), std::fabs(grad[i])});
                    if (std::fabs(fd - grad[i]) / denom > 1e-5) return false;
                }
            }
            // grid dominance of M on the face, plus stationarity
            MaximizationResult r = maximize_on_simplex(p, h);
            if (r.kkt_residual > 1e-8) return false;
            double sum = 0;
            for (double v : r.argmax) sum += v;
            if (std::fabs(sum - h) > 1e-10) return false;
            int steps = h <= 4 ? 32 : 8;
            bool dominated = true;
            SimplexPoint x(h, 0.0);
            std::function<void(int, int)> rec = [&](int i, int left) {
                if (!dominated) return;
                if (i == h - 1) {
                    x[i] = static_cast<double>(left) * h / steps;
                    if (eval_p(p, x) > r.m + 1e-9) dominated = false;
                    return;
                }
                for (int u = 0; u <= left; ++u) {
                    x[i] = static_cast<double>(u) * h / steps;
                    rec(i + 1, left - u);
                }
            };
            rec(0, steps);
            if (!dominated) return false;
        }
    }
    return true;
}

} // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion("cyclic constants D=h, M=h^h/h!", 10, cyclic_constants);
    criterion("cyclic maximal-type structure", 10, cyclic_maximal_types);
    criterion("Q(sqrt(-23)) reference instance", 5, reference_instance);
    criterion("product-formula oracle equality", 60, product_formula);
    criterion("ray-class generator equivalence", 120, rayclass_equivalence);
    criterion("dual-path count equality", 300, dual_path);
    criterion("davenport suite", 60, davenport_suite);
    criterion("asymptotic trend bands", 900, asymptotic_trend);
    criterion("gradient and optimizer checks", 60, gradient_and_optimizer);
    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
