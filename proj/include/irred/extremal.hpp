#pragma once

#include <cstdint>
#include <vector>

#include "irred/rational.hpp"
#include "irred/typelab.hpp"

namespace irred {

/// P(x_1,...,x_h) = sum over maximal irreducible types of prod x_i^{t_i}/t_i!.
/// Coefficients are kept exact; they only become doubles at evaluation.
struct PolynomialP {
    struct Monomial {
        TypeVec exponents;
        Rational coefficient; // 1 / prod t_i!
    };
    int h = 0;
    std::vector<Monomial> monomials;
};

/// Point of the simplex {x >= 0, sum x_i <= h}.
using SimplexPoint = std::vector<double>;

struct MaximizationResult {
    double m = 0.0;
    SimplexPoint argmax;
    double kkt_residual = 0.0;
    int restarts_used = 0;
    uint64_t seed = 0;
};

PolynomialP build_p(const TypeSet& maximal);

double eval_p(const PolynomialP& p, const SimplexPoint& x);
std::vector<double> grad_p(const PolynomialP& p, const SimplexPoint& x);
std::vector<std::vector<double>> hess_p(const PolynomialP& p, const SimplexPoint& x);

/// Euclidean projection onto {x >= 0, sum x_i = s}.
SimplexPoint project_to_simplex_face(const SimplexPoint& x, double s);

/// Multi-start projected gradient ascent on the face sum x_i = h (P has
/// nonnegative coefficients, so it is coordinatewise nondecreasing and some
/// maximizer lies on that face). Starts: the h scaled vertices, the
/// barycenter, and `random_starts` seeded draws. Throws NonConvergence if no
/// start reaches the stationarity tolerance.
MaximizationResult maximize_on_simplex(const PolynomialP& p, int h, uint64_t seed = 20240913,
                                       int random_starts = 50);

/// M * (log x / (h log log x))^D; requires x > e^e.
double max_nu_main_term(double m, int h, long long d, double x);

} // namespace irred
