#include "irred/quadfield.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "irred/intutil.hpp"

namespace irred {

bool QuadForm::operator<(const QuadForm& o) const {
    auto key = [](const QuadForm& f) {
        return std::tuple(f.a, f.b < 0 ? -f.b : f.b, f.b < 0 ? 1 : 0, f.c);
    };
    return key(*this) < key(o);
}

QuadForm reduce_form(long long a, long long b, long long c) {
    for (;;) {
        // normalize b into (-a, a]
        long long twoa = 2 * a;
        long long r = b % twoa;
        if (r <= -a) r += twoa;
        if (r > a) r -= twoa;
        if (r != b) {
            long long q = (b - r) / twoa;
            c -= q * (b + r) / 2;
            b = r;
        }
        if (a > c) {
            std::swap(a, c);
            b = -b;
            continue;
        }
        break;
    }
    if (a == c && b < 0) b = -b;
    return {a, b, c};
}

QuadForm compose_forms(const QuadForm& f1, const QuadForm& f2, long long disc) {
    // classical Gauss composition of primitive forms
    long long s = (f1.b + f2.b) / 2;
    ExtGcd e1 = ext_gcd(f1.a, f2.a); // g = u*a1 + v*a2
    ExtGcd e2 = ext_gcd(e1.g, s);    // d = u*g + v*s
    long long d = e2.g;
    long long a2d = f2.a / d;
    long long a3 = (f1.a / d) * a2d;
    __int128 two_a3 = 2 * static_cast<__int128>(a3);
    __int128 v = static_cast<__int128>(e1.v) * e2.u % two_a3;
    __int128 t = (static_cast<__int128>(s - f2.b) * v - static_cast<__int128>(e2.v) * f2.c) % two_a3;
    t = t * a2d % two_a3 * 2 % two_a3;
    __int128 b3 = (f2.b + t) % two_a3;
    if (b3 < 0) b3 += two_a3;
    long long b3l = static_cast<long long>(b3);
    __int128 c3 = (static_cast<__int128>(b3l) * b3l - disc) / (4 * static_cast<__int128>(a3));
    return reduce_form(a3, b3l, static_cast<long long>(c3));
}

long long QuadField::element_norm(const QIInteger& v) const {
    __int128 nn = static_cast<__int128>(v.x) * v.x + static_cast<__int128>(v.x) * v.y * t_ +
                  static_cast<__int128>(v.y) * v.y * n_;
    if (nn > (static_cast<__int128>(1) << 62)) throw FactorizationOverflow("element norm exceeds 2^62");
    return static_cast<long long>(nn);
}

QIInteger QuadField::mul(const QIInteger& u, const QIInteger& v) const {
    // (a + b w)(c + d w) with w^2 = t w - n
    __int128 x = static_cast<__int128>(u.x) * v.x - static_cast<__int128>(u.y) * v.y * n_;
    __int128 y = static_cast<__int128>(u.x) * v.y + static_cast<__int128>(u.y) * v.x +
                 static_cast<__int128>(u.y) * v.y * t_;
    constexpr __int128 kMax = INT64_MAX;
    if (x > kMax || -x > kMax || y > kMax || -y > kMax)
        throw FactorizationOverflow("element product out of range");
    return {static_cast<long long>(x), static_cast<long long>(y)};
}

namespace {

std::vector<QuadForm> reduced_forms_of_disc(long long disc) {
    std::vector<QuadForm> forms;
    long long absd = -disc;
    long long bmax = isqrt_ll(absd / 3);
    for (long long b = (absd % 2 == 0) ? 0 : 1; b <= bmax; b += 2) {
        long long m4 = b * b + absd; // = 4ac
        if (m4 % 4 != 0) continue;
        long long m = m4 / 4;
        for (long long a = std::max(b, 1LL); a * a <= m; ++a) {
            if (m % a != 0) continue;
            long long c = m / a;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            forms.push_back({a, b, c});
            if (b != 0 && a != b && a != c) forms.push_back({a, -b, c});
        }
    }
    std::sort(forms.begin(), forms.end());
    return forms;
}

struct Decomp {
    std::vector<long long> factors;              // ascending divisor chain
    std::vector<std::vector<long long>> coords;  // per element index
};

// Structure of a finite abelian group given by a multiplication oracle on
// indices 0..h-1. Splits off a cyclic factor of maximal order (always a
// direct summand), recurses on the quotient, and lifts the quotient basis.
Decomp decompose_abelian(int h, const std::function<int(int, int)>& mul, int identity) {
    Decomp out;
    out.coords.assign(h, {});
    if (h == 1) return out;

    auto pow = [&](int x, long long e) {
        int r = identity;
        for (long long i = 0; i < e; ++i) r = mul(r, x);
        return r;
    };
    std::vector<long long> order(h);
    for (int i = 0; i < h; ++i) {
        int x = i;
        long long o = 1;
        while (x != identity) {
            x = mul(x, i);
            ++o;
        }
        order[i] = o;
    }
    long long e = *std::max_element(order.begin(), order.end());
    int g = 0;
    while (order[g] != e) ++g;

    // discrete logs within <g>
    std::vector<long long> dlog(h, -1);
    {
        int x = identity;
        for (long long kpow = 0; kpow < e; ++kpow) {
            dlog[x] = kpow;
            x = mul(x, g);
        }
    }

    // cosets of <g>, canonical representative = least element index
    std::vector<int> coset_rep(h, -1);
    std::vector<int> reps;
    for (int i = 0; i < h; ++i) {
        if (coset_rep[i] != -1) continue;
        int x = i;
        for (long long kpow = 0; kpow < e; ++kpow) {
            coset_rep[x] = i;
            x = mul(x, g);
        }
        reps.push_back(i);
    }
    std::vector<int> rep_index(h, -1);
    for (size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = static_cast<int>(i);

    auto qmul = [&](int i, int j) { return rep_index[coset_rep[mul(reps[i], reps[j])]]; };
    Decomp q = decompose_abelian(static_cast<int>(reps.size()), qmul, rep_index[coset_rep[identity]]);

    // lift the quotient basis so each lifted generator has the same order in
    // the full group: x_j = r_j * g^{-c/d_j} where r_j^{d_j} = g^c
    size_t m = q.factors.size();
    std::vector<int> lifted(m);
    std::vector<int> basis_rep(m, -1);
    // recover a basis representative for each quotient factor from coords:
    // the element whose j-th coordinate is 1 and the rest 0
    for (size_t j = 0; j < m; ++j) {
        for (size_t qi = 0; qi < reps.size(); ++qi) {
            bool unit_vec = q.coords[qi].size() == m;
            if (!unit_vec) continue;
            for (size_t jj = 0; jj < m && unit_vec; ++jj)
                if (q.coords[qi][jj] != (jj == j ? 1 : 0)) unit_vec = false;
            if (unit_vec) {
                basis_rep[j] = reps[qi];
                break;
            }
        }
        assert(basis_rep[j] != -1);
        long long dj = q.factors[j];
        long long c = dlog[pow(basis_rep[j], dj)];
        assert(c >= 0 && c % dj == 0);
        lifted[j] = mul(basis_rep[j], pow(g, (e - c / dj) % e));
    }

    out.factors = q.factors;
    out.factors.push_back(e);
    for (int y = 0; y < h; ++y) {
        std::vector<long long> cy = q.coords[rep_index[coset_rep[y]]];
        int z = y;
        for (size_t j = 0; j < m; ++j)
            z = mul(z, pow(lifted[j], (q.factors[j] - cy[j]) % q.factors[j]));
        long long b = dlog[z];
        assert(b >= 0);
        cy.push_back(b);
        out.coords[y] = std::move(cy);
    }
    return out;
}

} // namespace

QuadField::QuadField(long long d) : d_(d) {
    if (d >= 0) throw NotImaginary("d must be negative");
    auto fac = factor_integer(-d);
    for (const auto& [p, e] : fac)
        if (e > 1) throw NotSquarefree("d must be squarefree");
    long long dm4 = ((d % 4) + 4) % 4;
    disc_ = (dm4 == 1) ? d : 4 * d;
    if (dm4 == 1) {
        t_ = 1;
        n_ = (1 - d) / 4;
    } else {
        t_ = 0;
        n_ = -d;
    }
    if (d == -1) {
        w_ = 4;
        units_ = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    } else if (d == -3) {
        w_ = 6;
        units_ = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    } else {
        w_ = 2;
        units_ = {{1, 0}, {-1, 0}};
    }

    class_forms_ = reduced_forms_of_disc(disc_);
    int h = static_cast<int>(class_forms_.size());
    std::map<QuadForm, int> idx;
    for (int i = 0; i < h; ++i) idx[class_forms_[i]] = i;

    std::vector<std::vector<int>> table(h, std::vector<int>(h));
    for (int i = 0; i < h; ++i)
        for (int j = i; j < h; ++j) {
            int k = idx.at(compose_forms(class_forms_[i], class_forms_[j], disc_));
            table[i][j] = table[j][i] = k;
        }

    QuadForm principal = class_forms_.front(); // a = 1 sorts first
    assert(principal.a == 1);
    Decomp dec = decompose_abelian(
        h, [&](int i, int j) { return table[i][j]; }, idx.at(principal));

    group_ = make_group(dec.factors);
    ordering_.emplace(canonical_ordering(group_));

    // place each form at the ordering position of its coordinates
    std::vector<QuadForm> by_position(h);
    for (int i = 0; i < h; ++i) {
        GroupElement el = make_element(group_, dec.coords[i]);
        by_position[ordering_->position_of(el) - 1] = class_forms_[i];
    }
    class_forms_ = std::move(by_position);
    form_position_.clear();
    for (int i = 0; i < h; ++i) form_position_[class_forms_[i]] = i + 1;

    davenport_ = davenport(group_).D;
}

long long QuadField::position_of_form(const QuadForm& f) const {
    auto it = form_position_.find(f);
    if (it == form_position_.end()) throw DomainError("form not of this discriminant");
    return it->second;
}

QuadField make_field(long long d) { return QuadField(d); }

// --- ideal arithmetic ---

long long ideal_norm(const QIIdeal& a) { return a.a * a.c; }

namespace {

__int128 gcd_128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// HNF basis (a, b + c*omega) of the lattice spanned by the given vectors.
// The x-coordinate of the running omega-basis vector is reduced mod the
// running x-axis gcd at every step, which keeps all intermediates bounded.
QIIdeal hnf_from_generators(const QuadField& k, std::vector<std::pair<long long, long long>> gens) {
    long long a = 0;      // gcd of the x-only vectors collected so far
    __int128 bb = 0;      // running basis vector (bb, c)
    long long c = 0;
    auto fold_x = [&](__int128 v) {
        if (v < 0) v = -v;
        if (a != 0) v %= a;
        a = static_cast<long long>(gcd_128(a, v));
    };
    for (const auto& [x, y] : gens) {
        if (y == 0) {
            fold_x(x);
            continue;
        }
        if (c == 0) {
            bb = x;
            c = y;
            if (c < 0) {
                bb = -bb;
                c = -c;
            }
        } else {
            ExtGcd e = ext_gcd(c, y);
            __int128 nb = static_cast<__int128>(e.u) * bb + static_cast<__int128>(e.v) * x;
            fold_x(bb - static_cast<__int128>(c / e.g) * nb);
            fold_x(x - static_cast<__int128>(y / e.g) * nb);
            bb = nb;
            c = e.g;
        }
        if (a != 0) bb %= a;
    }
    if (c == 0 && a == 0) throw ZeroIdeal("zero ideal");
    if (c == 0) throw ZeroIdeal("rank-1 lattice is not an ideal");
    IRRED_CHECK(a != 0, "lattice of rank 1 cannot be an ideal");
    long long b = static_cast<long long>(((bb % a) + a) % a);
    QIIdeal r{a, b, c};
    __int128 nrm = static_cast<__int128>(a) * c;
    if (nrm > (static_cast<__int128>(1) << 62))
        throw FactorizationOverflow("ideal norm exceeds 2^62");
    // HNF sanity: the module must be closed under multiplication by omega
    IRRED_CHECK(r.c > 0 && r.a > 0 && r.a % r.c == 0 && r.b % r.c == 0, "HNF shape violated");
    IRRED_CHECK((static_cast<__int128>(r.b) * r.b +
                 static_cast<__int128>(r.b) * r.c * k.omega_trace() +
                 static_cast<__int128>(r.c) * r.c * k.omega_norm()) %
                        (static_cast<__int128>(r.a) * r.c) ==
                    0,
                "lattice not an ideal");
    return r;
}

} // namespace

QIIdeal principal_ideal(const QuadField& k, const QIInteger& g) {
    if (g.is_zero()) throw ZeroIdeal("zero element generates the zero ideal");
    QIInteger gw = k.mul(g, {0, 1});
    return hnf_from_generators(k, {{g.x, g.y}, {gw.x, gw.y}});
}

QIIdeal integer_ideal(const QuadField& k, long long n) {
    (void)k;
    if (n == 0) throw ZeroIdeal("zero ideal");
    if (n < 0) n = -n;
    if (static_cast<__int128>(n) * n > (static_cast<__int128>(1) << 62))
        throw FactorizationOverflow("ideal norm exceeds 2^62");
    return {n, 0, n};
}

QIIdeal multiply(const QuadField& k, const QIIdeal& a, const QIIdeal& b) {
    __int128 nn = static_cast<__int128>(ideal_norm(a)) * ideal_norm(b);
    if (nn > (static_cast<__int128>(1) << 62))
        throw FactorizationOverflow("product norm exceeds 2^62");
    long long t = k.omega_trace(), n = k.omega_norm();
    // (b1 + c1 w)(b2 + c2 w) = b1 b2 - c1 c2 n + (b1 c2 + b2 c1 + c1 c2 t) w
    long long x4 = a.b * b.b - a.c * b.c * n;
    long long y4 = a.b * b.c + b.b * a.c + a.c * b.c * t;
    return hnf_from_generators(
        k, {{a.a * b.a, 0}, {a.a * b.b, a.a * b.c}, {b.a * a.b, b.a * a.c}, {x4, y4}});
}

QIIdeal conjugate(const QuadField& k, const QIIdeal& a) {
    // conj(b + c w) = (b + c t) - c w; same lattice as (-(b + c t)) + c w
    long long nb = -(a.b + a.c * k.omega_trace());
    nb %= a.a;
    if (nb < 0) nb += a.a;
    return {a.a, nb, a.c};
}

bool ideal_contains(const QIIdeal& a, const QIInteger& v) {
    if (v.y % a.c != 0) return false;
    long long x = v.x - (v.y / a.c) * a.b;
    return x % a.a == 0;
}

bool divides(const QIIdeal& a, const QIIdeal& b) {
    return ideal_contains(a, {b.a, 0}) && ideal_contains(a, {b.b, b.c});
}

QIIdeal gcd_ideal(const QuadField& k, const QIIdeal& a, const QIIdeal& b) {
    return hnf_from_generators(k, {{a.a, 0}, {a.b, a.c}, {b.a, 0}, {b.b, b.c}});
}

std::vector<PrimeIdealRec> split_prime(const QuadField& k, long long p) {
    if (!is_prime_ll(p)) throw NotPrime("p is not prime");
    long long t = k.omega_trace(), n = k.omega_norm();
    int chi;
    if (p == 2) {
        long long dm8 = ((k.disc() % 8) + 8) % 8;
        chi = (k.disc() % 2 == 0) ? 0 : (dm8 == 1 ? 1 : -1);
    } else {
        chi = kronecker(k.disc(), p);
    }

    std::vector<PrimeIdealRec> out;
    if (chi == -1) {
        PrimeIdealRec r;
        r.p = p;
        r.kind = SplitKind::Inert;
        r.ideal = {p, 0, p};
        r.norm = p * p;
        r.class_index = k.class_number();
        r.conjugate_hint = r.ideal;
        out.push_back(r);
        return out;
    }

    auto root_of_norm_form = [&]() -> long long {
        // least b in [0, p) with b^2 + t b + n = 0 (mod p)
        if (p == 2) {
            for (long long b = 0; b < 2; ++b)
                if ((b * b + t * b + n) % 2 == 0) return b;
            throw DomainError("no root mod 2");
        }
        if (chi == 0) {
            // double root -t/2 mod p
            long long inv2 = (p + 1) / 2;
            long long b = ((-t % p + p) % p) * inv2 % p;
            return b;
        }
        long long s = sqrt_mod(((k.disc() % p) + p) % p, p);
        long long inv2 = (p + 1) / 2;
        long long b1 = ((s - t) % p + p) % p * inv2 % p;
        long long b2 = ((-s - t) % p + p) % p * inv2 % p;
        return std::min(b1, b2);
    };

    long long b = root_of_norm_form();
    if (chi == 0) {
        PrimeIdealRec r;
        r.p = p;
        r.kind = SplitKind::Ramified;
        r.ideal = {p, b, 1};
        r.norm = p;
        r.class_index = ideal_class(k, r.ideal);
        r.conjugate_hint = r.ideal;
        out.push_back(r);
        return out;
    }

    long long b2 = ((-(b + t)) % p + p) % p;
    PrimeIdealRec r1, r2;
    r1.p = r2.p = p;
    r1.kind = r2.kind = SplitKind::Split;
    r1.ideal = {p, b, 1};
    r2.ideal = {p, b2, 1};
    r1.norm = r2.norm = p;
    r1.class_index = ideal_class(k, r1.ideal);
    r2.class_index = ideal_class(k, r2.ideal);
    r1.conjugate_hint = r2.ideal;
    r2.conjugate_hint = r1.ideal;
    out.push_back(r1);
    out.push_back(r2);
    if (out[1].ideal < out[0].ideal) std::swap(out[0], out[1]);
    return out;
}

QIIdeal divide_by_prime(const QuadField& k, const QIIdeal& a, const PrimeIdealRec& p) {
    QIIdeal t = (p.kind == SplitKind::Inert) ? a : multiply(k, a, conjugate(k, p.ideal));
    if (t.a % p.p != 0 || t.b % p.p != 0 || t.c % p.p != 0)
        throw DomainError("ideal not divisible by prime");
    return {t.a / p.p, t.b / p.p, t.c / p.p};
}

int ideal_valuation(const QuadField& k, const QIIdeal& a, const PrimeIdealRec& p) {
    int v = 0;
    QIIdeal work = a;
    while (divides(p.ideal, work)) {
        work = divide_by_prime(k, work, p);
        ++v;
    }
    return v;
}

std::vector<IdealFactor> factorize(const QuadField& k, const QIIdeal& a) {
    std::vector<IdealFactor> out;
    long long nrm = ideal_norm(a);
    if (nrm == 1) return out;
    QIIdeal work = a;
    for (const auto& [p, e] : factor_integer(nrm)) {
        (void)e;
        for (const PrimeIdealRec& rec : split_prime(k, p)) {
            int v = 0;
            while (divides(rec.ideal, work)) {
                work = divide_by_prime(k, work, rec);
                ++v;
            }
            if (v > 0) out.push_back({rec, v});
        }
    }
    IRRED_CHECK(work.is_unit_ideal(), "factorization left a nontrivial cofactor");
    return out;
}

long long ideal_class(const QuadField& k, const QIIdeal& a) {
    long long ap = a.a / a.c, bp = a.b / a.c;
    long long B = -(2 * bp + k.omega_trace());
    __int128 nb = static_cast<__int128>(bp) * bp + static_cast<__int128>(bp) * k.omega_trace() +
                  k.omega_norm();
    long long C = static_cast<long long>(nb / ap);
    return k.position_of_form(reduce_form(ap, B, C));
}

TypeVec ideal_type(const QuadField& k, const QIIdeal& a) {
    TypeVec t(k.class_number(), 0);
    for (const IdealFactor& f : factorize(k, a)) t[f.prime.class_index - 1] += f.exponent;
    return t;
}

std::vector<long long> omega_by_class(const QuadField& k, const QIIdeal& a) {
    std::vector<long long> w(k.class_number(), 0);
    for (const IdealFactor& f : factorize(k, a)) ++w[f.prime.class_index - 1];
    return w;
}

namespace {

long long isqrt_128(__int128 n) {
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<__int128>(r) * r > n) --r;
    while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace

std::optional<QIInteger> is_principal_with_generator(const QuadField& k, const QIIdeal& a) {
    if (ideal_class(k, a) != k.class_number()) return std::nullopt;
    long long target = ideal_norm(a);
    long long t = k.omega_trace();
    long long absd = -k.disc();
    // lattice points x*a + y*(b + c*omega); the norm form is positive
    // definite, so |y*c| <= sqrt(4N/|disc|)
    __int128 four_n = 4 * static_cast<__int128>(target);
    long long vmax = isqrt_128(four_n / absd);
    for (long long y = 0; y * a.c <= vmax; ++y) {
        long long v = y * a.c;
        __int128 rad = four_n - static_cast<__int128>(v) * v * absd;
        long long s = isqrt_128(rad);
        if (static_cast<__int128>(s) * s != rad) continue;
        for (int sign = 0; sign < ((v == 0 || s == 0) ? 1 : 2); ++sign) {
            long long sv = sign == 0 ? s : -s;
            long long twou = -v * t + sv;
            if (twou % 2 != 0) continue;
            long long u = twou / 2;
            if ((u - y * a.b) % a.a != 0) continue;
            QIInteger g{u, v};
            if (k.element_norm(g) == target && ideal_contains(a, g)) return g;
        }
    }
    // a principal ideal always has a generator in the scanned box
    return std::nullopt;
}

void for_each_prime_ideal(const QuadField& k, long long x,
                          const std::function<void(const PrimeIdealRec&)>& f) {
    if (x < 2) return;
    std::vector<long long> primes = primes_up_to(x);
    std::vector<long long> small = primes_up_to(isqrt_ll(x));
    // merge the norm-p stream (split/ramified) with the norm-p^2 stream (inert)
    size_t ip = 0, iq = 0;
    auto inert_norm = [&](size_t i) { return small[i] * small[i]; };
    while (ip < primes.size() || iq < small.size()) {
        bool take_inert;
        if (ip >= primes.size())
            take_inert = true;
        else if (iq >= small.size())
            take_inert = false;
        else
            take_inert = inert_norm(iq) < primes[ip];
        if (take_inert) {
            for (const PrimeIdealRec& r : split_prime(k, small[iq]))
                if (r.kind == SplitKind::Inert && r.norm <= x) f(r);
            ++iq;
        } else {
            for (const PrimeIdealRec& r : split_prime(k, primes[ip]))
                if (r.kind != SplitKind::Inert) f(r);
            ++ip;
        }
    }
}

std::vector<PrimeIdealRec> enumerate_prime_ideals(const QuadField& k, long long x) {
    std::vector<PrimeIdealRec> out;
    for_each_prime_ideal(k, x, [&](const PrimeIdealRec& r) { out.push_back(r); });
    return out;
}

long long nu(const QuadField& k, const QIIdeal& a) {
    std::vector<IdealFactor> fac = factorize(k, a);
    double lattice = 1;
    for (const auto& f : fac) lattice *= f.exponent + 1;
    if (lattice > 1e7) throw DivisorExplosion("divisor lattice exceeds 1e7 nodes");

    const ClassOrdering& ord = k.ordering();
    long long h = k.class_number();
    std::map<TypeVec, bool> memo;
    auto irreducible = [&](const TypeVec& t) {
        if (type_length(t) > k.davenport_constant()) return false;
        auto it = memo.find(t);
        if (it != memo.end()) return it->second;
        bool r = is_irreducible_type(ord, t);
        memo[t] = r;
        return r;
    };

    long long count = 0;
    std::vector<int> expo(fac.size(), 0);
    for (;;) {
        size_t i = 0;
        while (i < fac.size()) {
            if (expo[i] < fac[i].exponent) {
                ++expo[i];
                break;
            }
            expo[i] = 0;
            ++i;
        }
        if (i == fac.size()) break;
        TypeVec t(h, 0);
        for (size_t j = 0; j < fac.size(); ++j) t[fac[j].prime.class_index - 1] += expo[j];
        if (irreducible(t)) ++count;
    }
    return count;
}

RayModulus make_ray_modulus(const QuadField& k, const QIIdeal& f) {
    RayModulus m;
    m.ideal = f;
    for (const IdealFactor& fc : factorize(k, f)) m.factorization.push_back({fc.prime, fc.exponent});
    return m;
}

namespace {

int element_valuation(const QuadField& k, const QIInteger& v, const PrimeIdealRec& p) {
    return ideal_valuation(k, principal_ideal(k, v), p);
}

} // namespace

bool same_strict_ray_class(const QuadField& k, const QIIdeal& a, const QIIdeal& b,
                           const RayModulus& f) {
    if (!gcd_ideal(k, a, f.ideal).is_unit_ideal() || !gcd_ideal(k, b, f.ideal).is_unit_ideal())
        throw NotCoprimeToModulus("ideal shares a factor with the modulus");
    if (a == b) return true;
    QIIdeal prod = multiply(k, a, conjugate(k, b));
    auto gen = is_principal_with_generator(k, prod);
    if (!gen) return false;
    long long nb = ideal_norm(b);
    // a b^{-1} = (delta) / N(b); need a unit u with u delta / N(b) = 1 mod+ f
    for (const QIInteger& u : k.units()) {
        QIInteger delta = k.mul(u, *gen);
        QIInteger num{delta.x - nb, delta.y};
        if (num.is_zero()) return true;
        bool ok = true;
        for (const auto& [p, e] : f.factorization) {
            int vnum = element_valuation(k, num, p);
            int vden = ideal_valuation(k, integer_ideal(k, nb), p);
            if (vnum - vden < e) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

Rational ray_phi(const QuadField& k, const RayModulus& f) {
    if (f.ideal.is_unit_ideal()) return Rational(1);
    Rational phi_k(ideal_norm(f.ideal));
    for (const auto& [p, e] : f.factorization) {
        (void)e;
        phi_k *= Rational(p.norm - 1, p.norm);
    }
    // unit index [U : U_{f,1}]: units congruent to 1 mod f form a subgroup
    int cong = 0;
    for (const QIInteger& u : k.units()) {
        QIInteger um1{u.x - 1, u.y};
        if (um1.is_zero() || ideal_contains(f.ideal, um1)) ++cong;
    }
    long long index = k.unit_count() / cong;
    return phi_k / Rational(index);
}

} // namespace irred
