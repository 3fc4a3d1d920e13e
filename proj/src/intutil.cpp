#include "irred/intutil.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "irred/errors.hpp"

namespace irred {

long long isqrt_ll(long long n) {
    if (n < 0) throw DomainError("isqrt of negative");
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::optional<long long> exact_sqrt(long long n) {
    if (n < 0) return std::nullopt;
    long long r = isqrt_ll(n);
    if (r * r == n) return r;
    return std::nullopt;
}

ExtGcd ext_gcd(long long a, long long b) {
    long long old_r = a, r = b;
    long long old_u = 1, u = 0;
    long long old_v = 0, v = 1;
    while (r != 0) {
        long long q = old_r / r;
        long long t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_u - q * u;
        old_u = u;
        u = t;
        t = old_v - q * v;
        old_v = v;
        v = t;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_u = -old_u;
        old_v = -old_v;
    }
    return {old_r, old_u, old_v};
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // deterministic witness set for the 64-bit range
    for (uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
        uint64_t x = powmod_u64(a % n, d, n);
        if (x == 0 || x == 1 || x == static_cast<uint64_t>(n - 1)) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == static_cast<uint64_t>(n - 1)) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

long long pollard_rho(long long n) {
    if (n % 2 == 0) return 2;
    for (uint64_t c = 1;; ++c) {
        auto step = [&](uint64_t x) { return (mulmod_u64(x, x, n) + c) % n; };
        uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            d = std::gcd(diff, static_cast<uint64_t>(n));
        }
        if (d != 1 && d != static_cast<uint64_t>(n)) return static_cast<long long>(d);
    }
}

void factor_rec(long long n, std::map<long long, int>& out) {
    if (n == 1) return;
    if (is_prime_ll(n)) {
        ++out[n];
        return;
    }
    long long d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

std::map<long long, int> factor_integer(long long n) {
    if (n <= 0) throw DomainError("factor_integer needs n >= 1");
    if (n > (1LL << 62)) throw FactorizationOverflow("norm exceeds 2^62");
    std::map<long long, int> out;
    for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL}) {
        while (n % p == 0) { ++out[p]; n /= p; }
    }
    factor_rec(n, out);
    return out;
}

long long sqrt_mod(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (powmod_u64(a, (p - 1) / 2, p) != 1) throw DomainError("sqrt_mod of a nonresidue");
    if (p % 4 == 3) return static_cast<long long>(powmod_u64(a, (p + 1) / 4, p));
    // Tonelli-Shanks
    long long q = p - 1;
    int s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    long long z = 2;
    while (powmod_u64(z, (p - 1) / 2, p) != static_cast<uint64_t>(p - 1)) ++z;
    uint64_t m = s;
    uint64_t c = powmod_u64(z, q, p);
    uint64_t t = powmod_u64(a, q, p);
    uint64_t r = powmod_u64(a, (q + 1) / 2, p);
    while (t != 1) {
        uint64_t i = 0, tt = t;
        while (tt != 1) { tt = mulmod_u64(tt, tt, p); ++i; }
        uint64_t b = c;
        for (uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod_u64(b, b, p);
        m = i;
        c = mulmod_u64(b, b, p);
        t = mulmod_u64(t, c, p);
        r = mulmod_u64(r, b, p);
    }
    return static_cast<long long>(r);
}

int kronecker(long long a, long long n) {
    if (n <= 0) throw DomainError("kronecker expects n > 0");
    int result = 1;
    // factor 2 out of n: (a|2) = 0 for even a, +1 for a = +-1 (8), -1 otherwise
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        long long am8 = ((a % 8) + 8) % 8;
        if (am8 == 3 || am8 == 5) result = -result;
    }
    // Jacobi symbol for odd n by quadratic reciprocity
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

std::vector<long long> primes_up_to(long long n) {
    std::vector<long long> primes;
    if (n < 2) return primes;
    std::vector<char> comp(n + 1, 0);
    for (long long i = 2; i <= n; ++i) {
        if (!comp[i]) {
            primes.push_back(i);
            for (long long j = i * i; j <= n; j += i) comp[j] = 1;
        }
    }
    return primes;
}

} // namespace irred
