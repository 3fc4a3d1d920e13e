#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "irred/errors.hpp"

namespace irred {

/// Exact rational on 64-bit numerator/denominator. All arithmetic runs in
/// 128-bit intermediates and throws RationalOverflow if a reduced result no
/// longer fits; constants at desk scale (h <= 16, lengths <= 20) stay far
/// below that.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) { assign(n, d); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from128(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        __int128 n = static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from128(n, d);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DomainError("division of rational by zero");
        return from128(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        os << r.num_;
        if (r.den_ != 1) os << '/' << r.den_;
        return os;
    }

    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    /// n! as an exact rational; throws past 20! (does not fit in 64 bits).
    static Rational factorial(int n) {
        if (n < 0) throw DomainError("factorial of negative integer");
        if (n > 20) throw RationalOverflow("factorial exceeds 64-bit range");
        long long f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return Rational(f);
    }

    /// base^exp for integer base, exp >= 0.
    static Rational pow(long long base, int exp) {
        Rational r(1);
        for (int i = 0; i < exp; ++i) r *= Rational(base);
        return r;
    }

  private:
    static Rational from128(__int128 n, __int128 d) {
        if (d == 0) throw DomainError("zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 g = gcd128(a, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr __int128 kMax = INT64_MAX;
        if (n > kMax || -n > kMax || d > kMax)
            throw RationalOverflow("rational out of 64-bit range after reduction");
        Rational r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a;
    }

    void assign(long long n, long long d) {
        Rational r = from128(n, d);
        num_ = r.num_;
        den_ = r.den_;
    }

    long long num_;
    long long den_; // > 0, gcd(num_, den_) == 1
};

} // namespace irred
