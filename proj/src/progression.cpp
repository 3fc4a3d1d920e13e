#include "irred/progression.hpp"

#include <cmath>

namespace irred {

bool is_weakly_coprime_type(const ClassOrdering& ord, const TypeVec& tau) {
    return !has_principal_subtype(ord, tau);
}

ProgressionConstants progression_constants(const ProgressionInstance& inst) {
    if (inst.ordering == nullptr) throw DomainError("instance lacks an ordering");
    if (inst.norm_g < 1) throw DomainError("norm of the gcd ideal must be >= 1");
    if (!(inst.phi > Rational(0))) throw DomainError("Phi must be positive");
    const ClassOrdering& ord = *inst.ordering;

    MaximalWrtResult mw = types_maximal_wrt(ord, inst.tau_prime); // throws HasPrincipalSubtype

    ProgressionConstants out;
    out.L = mw.L;
    out.type_sum = Rational(0);
    for (const TypeVec& tau : mw.types.types) {
        Rational term(1);
        for (size_t i = 0; i < tau.size(); ++i)
            term /= Rational::factorial(static_cast<int>(tau[i] - inst.tau_prime[i]));
        out.type_sum += term;
        out.maximal_types.push_back(tau);
    }
    long long h = ord.size();
    Rational scale = Rational(out.L) / Rational::pow(h, static_cast<int>(out.L));
    out.c_prime = Rational(1) / (Rational(inst.norm_g) * inst.phi) * scale * out.type_sum;
    return out;
}

double predicted_progression_count(const ProgressionConstants& c, double x) {
    const double ee = std::exp(std::exp(1.0));
    if (!(x > ee)) throw DomainError("predicted count needs x > e^e");
    double ll = std::log(std::log(x));
    return c.c_prime.to_double() * (x / std::log(x)) * std::pow(ll, static_cast<double>(c.L - 1));
}

} // namespace irred
