#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace irred {

long long isqrt_ll(long long n);
/// Exact square root, or nothing when n is not a perfect square.
std::optional<long long> exact_sqrt(long long n);

struct ExtGcd {
    long long g, u, v; // g = u*a + v*b
};
ExtGcd ext_gcd(long long a, long long b);

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_ll(long long n);

/// Prime factorization by trial division + Pollard rho. Throws
/// FactorizationOverflow for n > 2^62.
std::map<long long, int> factor_integer(long long n);

/// Square root of a mod p (p odd prime, a a quadratic residue).
long long sqrt_mod(long long a, long long p);

/// Kronecker symbol (a | n) for n > 0.
int kronecker(long long a, long long n);

/// Odd-indexed sieve of primes up to n inclusive.
std::vector<long long> primes_up_to(long long n);

} // namespace irred
