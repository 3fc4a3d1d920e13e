#pragma once

#include "irred/rational.hpp"
#include "irred/typelab.hpp"

namespace irred {

/// Inputs of the progression constant: the type of the gcd ideal g, its norm,
/// and the ray-class ratio Phi of the complementary modulus. Phi is accepted
/// as an input so the combinatorics stay independent of any particular field
/// backend.
struct ProgressionInstance {
    const ClassOrdering* ordering = nullptr;
    TypeVec tau_prime;
    long long norm_g = 1;
    Rational phi = Rational(1);
};

struct ProgressionConstants {
    long long L = 0;
    Rational type_sum;                  // sum over maximal-wrt types of prod 1/(tau - tau')_i!
    Rational c_prime;                   // (1 / (N(g) Phi)) * (L / h^L) * type_sum
    std::vector<TypeVec> maximal_types; // the types the sum ranges over
};

/// True iff no nonzero subtype of tau (tau itself included) is principal.
bool is_weakly_coprime_type(const ClassOrdering& ord, const TypeVec& tau);

ProgressionConstants progression_constants(const ProgressionInstance& inst);

/// C' * (x / log x) * (log log x)^(L-1); requires x > e^e.
double predicted_progression_count(const ProgressionConstants& c, double x);

} // namespace irred
