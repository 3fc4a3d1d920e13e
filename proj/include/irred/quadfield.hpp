#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "irred/group.hpp"
#include "irred/rational.hpp"
#include "irred/typelab.hpp"

namespace irred {

/// Primitive positive definite binary quadratic form (A, B, C) of negative
/// discriminant B^2 - 4AC. Always stored reduced.
struct QuadForm {
    long long a = 1, b = 0, c = 0;

    bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator!=(const QuadForm& o) const { return !(*this == o); }
    // (A, |B|) with positive B preferred on ties; this key also fixes which
    // class the field construction distinguishes as C_1
    bool operator<(const QuadForm& o) const;
};

QuadForm reduce_form(long long a, long long b, long long c);
QuadForm compose_forms(const QuadForm& f, const QuadForm& g, long long disc);

/// Element x + y*omega of the maximal order, omega = (disc + sqrt(disc))/2.
struct QIInteger {
    long long x = 0, y = 0;

    bool operator==(const QIInteger& o) const { return x == o.x && y == o.y; }
    bool operator!=(const QIInteger& o) const { return !(*this == o); }
    bool operator<(const QIInteger& o) const { return std::pair(x, y) < std::pair(o.x, o.y); }
    bool is_zero() const { return x == 0 && y == 0; }
};

/// Nonzero integral ideal in Hermite normal form a*Z + (b + c*omega)*Z with
/// c | a, c | b, 0 <= b < a, and a*c | N(b + c*omega). Norm = a*c.
struct QIIdeal {
    long long a = 1, b = 0, c = 1;

    bool operator==(const QIIdeal& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator!=(const QIIdeal& o) const { return !(*this == o); }
    bool operator<(const QIIdeal& o) const {
        return std::tuple(a, b, c) < std::tuple(o.a, o.b, o.c);
    }
    bool is_unit_ideal() const { return a == 1 && c == 1; }
};

enum class SplitKind { Split, Ramified, Inert };

struct PrimeIdealRec {
    long long p = 0;
    SplitKind kind = SplitKind::Inert;
    QIIdeal ideal;
    long long norm = 0;
    long long class_index = 0; // 1-based position in the field ordering
    QIIdeal conjugate_hint;    // the conjugate prime (itself unless split)

    bool operator<(const PrimeIdealRec& o) const {
        return std::pair(norm, ideal) < std::pair(o.norm, o.ideal);
    }
};

struct RayModulus {
    QIIdeal ideal;
    std::vector<std::pair<PrimeIdealRec, int>> factorization;
};

/// An imaginary quadratic field Q(sqrt(d)), d < 0 squarefree, with its class
/// group realized by reduced forms and aligned to the canonical class
/// ordering. Immutable after construction.
class QuadField {
  public:
    explicit QuadField(long long d);

    long long d() const { return d_; }
    long long disc() const { return disc_; }
    /// omega satisfies omega^2 = t*omega - n.
    long long omega_trace() const { return t_; }
    long long omega_norm() const { return n_; }
    int unit_count() const { return w_; }
    const std::vector<QIInteger>& units() const { return units_; }

    const FiniteAbelianGroup& class_group() const { return group_; }
    const ClassOrdering& ordering() const { return *ordering_; }
    long long class_number() const { return group_.order(); }
    long long davenport_constant() const { return davenport_; }

    /// Reduced form representing ordering position i (1-based).
    const QuadForm& class_form(long long position) const { return class_forms_.at(position - 1); }
    long long position_of_form(const QuadForm& f) const;

    long long element_norm(const QIInteger& v) const;
    QIInteger conj(const QIInteger& v) const { return {v.x + v.y * t_, -v.y}; }
    QIInteger mul(const QIInteger& u, const QIInteger& v) const;

  private:
    long long d_, disc_, t_, n_;
    int w_;
    std::vector<QIInteger> units_;
    FiniteAbelianGroup group_{std::vector<long long>{}};
    std::optional<ClassOrdering> ordering_;
    std::vector<QuadForm> class_forms_;
    std::map<QuadForm, long long> form_position_;
    long long davenport_;
};

QuadField make_field(long long d);

// --- ideal arithmetic ---

QIIdeal principal_ideal(const QuadField& k, const QIInteger& g);
QIIdeal integer_ideal(const QuadField& k, long long n);
QIIdeal multiply(const QuadField& k, const QIIdeal& a, const QIIdeal& b);
QIIdeal conjugate(const QuadField& k, const QIIdeal& a);
long long ideal_norm(const QIIdeal& a);
bool ideal_contains(const QIIdeal& a, const QIInteger& v);
/// Divisibility a | b, i.e. b is contained in a.
bool divides(const QIIdeal& a, const QIIdeal& b);
QIIdeal gcd_ideal(const QuadField& k, const QIIdeal& a, const QIIdeal& b);

std::vector<PrimeIdealRec> split_prime(const QuadField& k, long long p);

struct IdealFactor {
    PrimeIdealRec prime;
    int exponent;
};
std::vector<IdealFactor> factorize(const QuadField& k, const QIIdeal& a);

QIIdeal divide_by_prime(const QuadField& k, const QIIdeal& a, const PrimeIdealRec& p);
int ideal_valuation(const QuadField& k, const QIIdeal& a, const PrimeIdealRec& p);

long long ideal_class(const QuadField& k, const QIIdeal& a);
TypeVec ideal_type(const QuadField& k, const QIIdeal& a);
std::vector<long long> omega_by_class(const QuadField& k, const QIIdeal& a);

std::optional<QIInteger> is_principal_with_generator(const QuadField& k, const QIIdeal& a);

/// All prime ideals of norm <= x, each once, in (norm, HNF) order.
void for_each_prime_ideal(const QuadField& k, long long x,
                          const std::function<void(const PrimeIdealRec&)>& f);
std::vector<PrimeIdealRec> enumerate_prime_ideals(const QuadField& k, long long x);

/// Number of nonassociate irreducibles pi with (pi) dividing a, by brute
/// force over the divisor lattice. Throws DivisorExplosion past 1e7 nodes.
long long nu(const QuadField& k, const QIIdeal& a);

RayModulus make_ray_modulus(const QuadField& k, const QIIdeal& f);

/// Same class in the strict ray class group mod f. Both ideals must be
/// coprime to f. Total positivity is vacuous here (no real embeddings).
bool same_strict_ray_class(const QuadField& k, const QIIdeal& a, const QIIdeal& b,
                           const RayModulus& f);

/// Phi(f) = h_{K,f} / h_K as an exact rational.
Rational ray_phi(const QuadField& k, const RayModulus& f);

/// Count of ideals (pi), pi irreducible, |N(pi)| <= x, with some generator
/// congruent to alpha mod m. Defined in scan.cpp (parallel kernel with a
/// serial reference).
long long count_progression_elements(const QuadField& k, long long x, const QIIdeal& m,
                                     const QIInteger& alpha);
/// The same count through the ray-class/ideal route of the structure theory.
long long count_progression_ideals(const QuadField& k, long long x, const QIIdeal& m,
                                   const QIInteger& alpha);

} // namespace irred
