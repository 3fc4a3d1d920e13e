#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "irred/extremal.hpp"

using namespace irred;

namespace {

PolynomialP p_of_group(const std::vector<long long>& inv) {
    return build_p(maximal_types(canonical_ordering(make_group(inv))));
}

// grid over the face sum x = h with the given number of steps per edge
void face_grid(int h, int steps, const std::function<void(const SimplexPoint&)>& f) {
    SimplexPoint x(h, 0.0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == h - 1) {
            x[i] = static_cast<double>(left) * h / steps;
            f(x);
            return;
        }
        for (int u = 0; u <= left; ++u) {
            x[i] = static_cast<double>(u) * h / steps;
            rec(i + 1, left - u);
        }
    };
    rec(0, steps);
}

} // namespace

TEST_CASE("rational coefficients of P") {
    PolynomialP triv = p_of_group({});
    REQUIRE(triv.monomials.size() == 1);
    CHECK(triv.monomials[0].coefficient == Rational(1));

    PolynomialP p3 = p_of_group({3});
    REQUIRE(p3.monomials.size() == 2);
    for (const auto& m : p3.monomials) CHECK(m.coefficient == Rational(1, 6));

    PolynomialP pk = p_of_group({2, 2});
    REQUIRE(pk.monomials.size() == 1);
    CHECK(pk.monomials[0].coefficient == Rational(1));

    CHECK_THROWS_AS(build_p(TypeSet{TypeSetKind::Maximal, {}}), EmptyTypeSet);
}

TEST_CASE("eval examples") {
    PolynomialP p3 = p_of_group({3});
    CHECK(eval_p(p3, {3, 0, 0}) == doctest::Approx(4.5).epsilon(1e-14));
    CHECK(eval_p(p3, {0, 0, 0}) == 0.0);
    PolynomialP pk = p_of_group({2, 2});
    double third = 4.0 / 3.0;
    CHECK(eval_p(pk, {third, third, third, 0}) == doctest::Approx(64.0 / 27.0).epsilon(1e-14));
    CHECK_THROWS_AS(eval_p(p3, {1.0}), DimensionMismatch);
}

TEST_CASE("gradient matches central differences") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (long long n = 1; n <= 8; ++n) {
        for (const auto& inv : abelian_groups_of_order(n)) {
            PolynomialP p = p_of_group(inv);
            int h = p.h;
            for (int trial = 0; trial < 100; ++trial) {
                // random point of the simplex
                SimplexPoint x(h);
                double tot = 0;
                for (int i = 0; i < h; ++i) {
                    x[i] = -std::log(1.0 - unif(rng));
                    tot += x[i];
                }
                double scale = unif(rng) * h / tot;
                for (int i = 0; i < h; ++i) x[i] *= scale;

                std::vector<double> g = grad_p(p, x);
                for (int i = 0; i < h; ++i) {
                    SimplexPoint xp = x, xm = x;
                    xp[i] += 1e-6;
                    xm[i] -= 1e-6;
                    double fd = (eval_p(p, xp) - eval_p(p, xm)) / 2e-6;
                    double denom = std::max({1.0, std::fabs(fd), std::fabs(g[i])});
                    CHECK(std::fabs(fd - g[i]) / denom <= 1e-5);
                }
            }
        }
    }
}

TEST_CASE("projection onto the scaled simplex face") {
    SimplexPoint y = project_to_simplex_face({5.0, -1.0}, 2.0);
    CHECK(y[0] == doctest::Approx(2.0));
    CHECK(y[1] == doctest::Approx(0.0));
    y = project_to_simplex_face({1.0, 1.0, 1.0}, 3.0);
    for (double v : y) CHECK(v == doctest::Approx(1.0));
    // result lies on the face
    y = project_to_simplex_face({0.3, 7.0, -2.0, 0.0}, 4.0);
    double s = 0;
    for (double v : y) {
        CHECK(v >= 0.0);
        s += v;
    }
    CHECK(s == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("maximum on the simplex: trivial and cyclic groups") {
    MaximizationResult triv = maximize_on_simplex(p_of_group({}), 1);
    CHECK(triv.m == doctest::Approx(1.0).epsilon(1e-10));

    // M = h^h / h! for cyclic groups
    double expected[] = {0, 0, 2.0, 4.5, 32.0 / 3.0};
    for (int h = 2; h <= 4; ++h) {
        MaximizationResult r = maximize_on_simplex(p_of_group({h}), h);
        CHECK(std::fabs(r.m - expected[h]) <= 1e-8);
        // argmax is a scaled vertex at a coprime position
        double sum = 0;
        for (double v : r.argmax) sum += v;
        CHECK(sum == doctest::Approx(h).epsilon(1e-10));
    }
    for (int h = 5; h <= 6; ++h) {
        double hfact = 1;
        for (int i = 2; i <= h; ++i) hfact *= i;
        MaximizationResult r = maximize_on_simplex(p_of_group({h}), h);
        CHECK(std::fabs(r.m - std::pow(h, h) / hfact) <= 1e-8);
    }
}

TEST_CASE("Klein group maximum 64/27 at the AM-GM point") {
    MaximizationResult r = maximize_on_simplex(p_of_group({2, 2}), 4);
    CHECK(std::fabs(r.m - 64.0 / 27.0) <= 1e-8);
    std::vector<double> expect = {4.0 / 3.0, 4.0 / 3.0, 4.0 / 3.0, 0.0};
    for (int i = 0; i < 4; ++i) CHECK(std::fabs(r.argmax[i] - expect[i]) <= 1e-6);
    CHECK(r.kkt_residual < 1e-8);

    // dense grid at step 1/64 of the edge never beats the optimizer
    PolynomialP p = p_of_group({2, 2});
    double best = 0.0;
    face_grid(4, 256, [&](const SimplexPoint& x) { best = std::max(best, eval_p(p, x)); });
    CHECK(best <= r.m + 1e-9);
    CHECK(r.m - best <= 1e-3); // and the grid comes close
}

TEST_CASE("grid dominance and stationarity for all groups of order <= 8") {
    std::mt19937_64 rng(20240913);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (long long n = 1; n <= 8; ++n) {
        for (const auto& inv : abelian_groups_of_order(n)) {
            PolynomialP p = p_of_group(inv);
            int h = p.h;
            MaximizationResult r = maximize_on_simplex(p, h);
            CHECK(r.kkt_residual < 1e-8);
            double sum = 0;
            for (double v : r.argmax) {
                sum += v;
                CHECK(v >= -1e-12);
            }
            CHECK(std::fabs(sum - h) <= 1e-10);

            int steps = h <= 4 ? 32 : 8;
            face_grid(h, steps,
                      [&](const SimplexPoint& x) { CHECK(eval_p(p, x) <= r.m + 1e-9); });
            for (int trial = 0; trial < 100000 / (h * h); ++trial) {
                SimplexPoint x(h);
                double tot = 0;
                for (int i = 0; i < h; ++i) {
                    x[i] = -std::log(1.0 - unif(rng));
                    tot += x[i];
                }
                double scale = unif(rng) * h / tot;
                for (int i = 0; i < h; ++i) x[i] *= scale;
                CHECK(eval_p(p, x) <= r.m + 1e-9);
            }
        }
    }
}

TEST_CASE("M is invariant under reordering the classes") {
    for (const auto& inv : {std::vector<long long>{5}, std::vector<long long>{2, 4}}) {
        FiniteAbelianGroup g = make_group(inv);
        long long n = g.order();
        std::vector<long long> perm(n);
        for (long long i = 0; i < n; ++i) perm[i] = (i + 2) % n + 1;
        PolynomialP p1 = build_p(maximal_types(canonical_ordering(g)));
        PolynomialP p2 = build_p(maximal_types(permuted_ordering(g, perm)));
        double m1 = maximize_on_simplex(p1, p1.h).m;
        double m2 = maximize_on_simplex(p2, p2.h).m;
        CHECK(std::fabs(m1 - m2) <= 1e-10);
    }
}

TEST_CASE("main term evaluator") {
    double x = std::exp(std::exp(2.0));
    CHECK(max_nu_main_term(1.0, 1, 1, x) == doctest::Approx(std::exp(2.0) / 2.0).epsilon(1e-12));
    CHECK_THROWS_AS(max_nu_main_term(1.0, 1, 1, std::exp(std::exp(1.0))), DomainError);
    double v1 = max_nu_main_term(4.5, 3, 3, 1e6);
    double base = std::log(1e6) / (3 * std::log(std::log(1e6)));
    CHECK(v1 == doctest::Approx(4.5 * base * base * base).epsilon(1e-12));
    // increasing in x at large scale
    CHECK(max_nu_main_term(4.5, 3, 3, 1e8) > max_nu_main_term(4.5, 3, 3, 1e7));
}
