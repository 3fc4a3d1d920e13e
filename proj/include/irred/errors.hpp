#pragma once

#include <stdexcept>
#include <string>

namespace irred {

// Error taxonomy shared across the library. Every failure mode callers are
// expected to handle has its own type; plain std::logic_error is reserved
// for internal invariant violations.

struct InvalidInvariants : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct GroupMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EmptyTypeSet : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct HasPrincipalSubtype : std::domain_error {
    using std::domain_error::domain_error;
};
struct NonConvergence : std::runtime_error {
    NonConvergence(const std::string& msg, double best) : std::runtime_error(msg), best_value(best) {}
    double best_value;
};
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotSquarefree : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotImaginary : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotPrime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ZeroIdeal : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct FactorizationOverflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};
struct DivisorExplosion : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotCoprimeToModulus : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ScanTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct RationalOverflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

// Structural invariant check that survives NDEBUG builds.
#define IRRED_CHECK(cond, msg) \
    do { \
        if (!(cond)) throw std::logic_error(msg); \
    } while (0)

} // namespace irred
