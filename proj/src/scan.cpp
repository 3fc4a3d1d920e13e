#include "irred/scan.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "irred/intutil.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace irred {
namespace scan {

namespace {

constexpr long long kScanCeiling = 10'000'000;

template <typename Fn>
void run_blocks(long long nblocks, Mode mode, const Fn& fn) {
    if (mode == Mode::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long b = 0; b < nblocks; ++b) fn(b);
    } else {
        for (long long b = 0; b < nblocks; ++b) fn(b);
    }
}

// split data cache local to one scan block
struct SplitCache {
    const QuadField* k;
    std::map<long long, std::vector<PrimeIdealRec>> cache;

    const std::vector<PrimeIdealRec>& get(long long p) {
        auto it = cache.find(p);
        if (it == cache.end()) it = cache.emplace(p, split_prime(*k, p)).first;
        return it->second;
    }
};

TypeVec element_type_impl(const QuadField& k, const QIInteger& v, SplitCache& sc) {
    TypeVec type(k.class_number(), 0);
    long long norm = k.element_norm(v);
    IRRED_CHECK(norm != 0, "type of the zero element");
    for (const auto& [p, e] : factor_integer(norm)) {
        const std::vector<PrimeIdealRec>& recs = sc.get(p);
        if (recs[0].kind == SplitKind::Inert) {
            type[recs[0].class_index - 1] += e / 2;
            continue;
        }
        if (recs[0].kind == SplitKind::Ramified) {
            type[recs[0].class_index - 1] += e;
            continue;
        }
        // split: strip the rational p-content, then the remainder lies in
        // exactly one of the two conjugates
        long long x = v.x, y = v.y;
        int content = 0;
        while (x % p == 0 && y % p == 0) {
            x /= p;
            y /= p;
            ++content;
        }
        type[recs[0].class_index - 1] += content;
        type[recs[1].class_index - 1] += content;
        int rest = e - 2 * content;
        if (rest > 0) {
            long long b = recs[0].ideal.b;
            bool in_first = ((x - y % p * b) % p + p) % p == 0;
            type[(in_first ? recs[0] : recs[1]).class_index - 1] += rest;
        }
    }
    return type;
}

// memoized irreducibility of small types
struct IrredTester {
    const QuadField* k;
    std::map<TypeVec, bool> memo;

    bool operator()(const TypeVec& t) {
        if (type_length(t) == 0 || type_length(t) > k->davenport_constant()) return false;
        auto it = memo.find(t);
        if (it == memo.end()) it = memo.emplace(t, is_irreducible_type(k->ordering(), t)).first;
        return it->second;
    }
};

} // namespace

TypeVec element_type(const QuadField& k, const QIInteger& v) {
    SplitCache sc{&k, {}};
    return element_type_impl(k, v, sc);
}

QIIdeal ideal_quotient_exact(const QuadField& k, const QIIdeal& m, const QIIdeal& g) {
    IRRED_CHECK(divides(g, m), "quotient of non-divisible ideals");
    QIIdeal t = multiply(k, m, conjugate(k, g));
    long long n = ideal_norm(g);
    IRRED_CHECK(t.a % n == 0 && t.b % n == 0 && t.c % n == 0, "inexact ideal quotient");
    return {t.a / n, t.b / n, t.c / n};
}

PrimeCensus prime_census(const QuadField& k, const std::vector<long long>& x_grid, Mode mode) {
    PrimeCensus out;
    out.x_grid = x_grid;
    long long xmax = 0;
    for (size_t i = 0; i < x_grid.size(); ++i) {
        if (x_grid[i] < 2 || (i > 0 && x_grid[i] <= x_grid[i - 1]))
            throw DomainError("x grid must be increasing and >= 2");
        xmax = std::max(xmax, x_grid[i]);
    }
    if (xmax > kScanCeiling) throw ScanTooLarge("census beyond 1e7");

    long long h = k.class_number();
    size_t ng = x_grid.size();
    std::vector<long long> primes = primes_up_to(xmax);

    constexpr long long kBlock = 4096;
    long long nblocks = (static_cast<long long>(primes.size()) + kBlock - 1) / kBlock;
    std::vector<std::vector<std::vector<long long>>> bcounts(
        nblocks, std::vector<std::vector<long long>>(ng, std::vector<long long>(h, 0)));
    std::vector<std::vector<std::vector<double>>> bsums(
        nblocks, std::vector<std::vector<double>>(ng, std::vector<double>(h, 0.0)));

    run_blocks(nblocks, mode, [&](long long b) {
        long long lo = b * kBlock;
        long long hi = std::min<long long>(lo + kBlock, primes.size());
        for (long long i = lo; i < hi; ++i) {
            for (const PrimeIdealRec& r : split_prime(k, primes[i])) {
                if (r.norm > xmax) continue;
                for (size_t gidx = 0; gidx < ng; ++gidx) {
                    if (r.norm > x_grid[gidx]) continue;
                    ++bcounts[b][gidx][r.class_index - 1];
                    bsums[b][gidx][r.class_index - 1] += 1.0 / static_cast<double>(r.norm);
                }
            }
        }
    });

    out.counts.assign(ng, std::vector<long long>(h, 0));
    out.inverse_sums.assign(ng, std::vector<double>(h, 0.0));
    for (long long b = 0; b < nblocks; ++b)
        for (size_t gidx = 0; gidx < ng; ++gidx)
            for (long long c = 0; c < h; ++c) {
                out.counts[gidx][c] += bcounts[b][gidx][c];
                out.inverse_sums[gidx][c] += bsums[b][gidx][c];
            }
    return out;
}

long long progression_element_scan(const QuadField& k, long long x, const QIIdeal& m,
                                   const QIInteger& alpha, Mode mode) {
    if (x > kScanCeiling) throw ScanTooLarge("element scan beyond 1e7");
    if (alpha.is_zero()) throw ZeroIdeal("alpha must be nonzero");
    if (x < 1) return 0;

    long long absd = -k.disc();
    long long tr = k.omega_trace(), nn = k.omega_norm();
    __int128 four_x = 4 * static_cast<__int128>(x);
    long long vmax = static_cast<long long>(std::sqrt(static_cast<double>(4.0 * x / absd))) + 2;

    long long tlo = -((vmax + alpha.y) / m.c) - 2;
    long long thi = (vmax - alpha.y) / m.c + 2;

    constexpr long long kBlock = 64;
    long long nt = thi - tlo + 1;
    long long nblocks = (nt + kBlock - 1) / kBlock;
    std::vector<std::vector<QIInteger>> reps(nblocks);

    run_blocks(nblocks, mode, [&](long long b) {
        SplitCache sc{&k, {}};
        IrredTester irred{&k, {}};
        const ClassOrdering& ord = k.ordering();
        const FiniteAbelianGroup& g = ord.group();
        GroupElement id = identity_element(g);
        std::vector<QIInteger>& local = reps[b];

        for (long long t = tlo + b * kBlock; t < std::min(thi + 1, tlo + (b + 1) * kBlock); ++t) {
            long long py = alpha.y + t * m.c;
            __int128 rad = four_x - static_cast<__int128>(py) * py * absd;
            if (rad < 0) continue;
            double sq = std::sqrt(static_cast<double>(rad));
            double ulo = (-static_cast<double>(py) * tr - sq) / 2.0;
            double uhi = (-static_cast<double>(py) * tr + sq) / 2.0;
            long long x0 = alpha.x + t * m.b;
            long long slo = static_cast<long long>(std::floor((ulo - x0) / m.a)) - 1;
            long long shi = static_cast<long long>(std::ceil((uhi - x0) / m.a)) + 1;
            for (long long s = slo; s <= shi; ++s) {
                long long px = x0 + s * m.a;
                __int128 norm = static_cast<__int128>(px) * px +
                                static_cast<__int128>(px) * py * tr +
                                static_cast<__int128>(py) * py * nn;
                if (norm == 0 || norm > x) continue;
                QIInteger pi{px, py};
                TypeVec type = element_type_impl(k, pi, sc);
                if (class_sum(ord, type) != id || !irred(type)) continue;
                // canonical representative of the unit orbit
                QIInteger rep = pi;
                for (const QIInteger& u : k.units()) {
                    QIInteger a2 = k.mul(u, pi);
                    if (std::pair(a2.y, a2.x) < std::pair(rep.y, rep.x)) rep = a2;
                }
                local.push_back(rep);
            }
        }
    });

    std::vector<QIInteger> all;
    for (long long b = 0; b < nblocks; ++b)
        all.insert(all.end(), reps[b].begin(), reps[b].end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return static_cast<long long>(all.size());
}

long long progression_ideal_scan(const QuadField& k, long long x, const QIIdeal& m,
                                 const QIInteger& alpha, Mode mode) {
    if (x > kScanCeiling) throw ScanTooLarge("ideal scan beyond 1e7");
    if (alpha.is_zero()) throw ZeroIdeal("alpha must be nonzero");
    if (x < 1) return 0;

    QIIdeal alpha_ideal = principal_ideal(k, alpha);
    QIIdeal g = gcd_ideal(k, alpha_ideal, m);
    long long ng = ideal_norm(g);
    if (x < ng) return 0;
    long long budget = x / ng;

    TypeVec tau_prime = ideal_type(k, g);
    QIIdeal f = ideal_quotient_exact(k, m, g);
    QIIdeal beta = ideal_quotient_exact(k, alpha_ideal, g);
    RayModulus ray = make_ray_modulus(k, f);

    // admissible full types for j: tau - tau' over irreducible tau >= tau'
    TypeSet irr = enumerate_irreducible_types(k.ordering());
    std::vector<TypeVec> allowed;
    for (const TypeVec& tau : irr.types) {
        if (!is_subtype(tau_prime, tau)) continue;
        TypeVec dif(tau.size());
        for (size_t i = 0; i < tau.size(); ++i) dif[i] = tau[i] - tau_prime[i];
        allowed.push_back(dif);
    }
    std::sort(allowed.begin(), allowed.end());
    if (allowed.empty()) return 0;

    auto below_some = [&](const TypeVec& s) {
        for (const TypeVec& a : allowed)
            if (is_subtype(s, a)) return true;
        return false;
    };
    auto exact_member = [&](const TypeVec& s) {
        return std::binary_search(allowed.begin(), allowed.end(), s);
    };

    std::vector<PrimeIdealRec> primes;
    for (const PrimeIdealRec& r : enumerate_prime_ideals(k, budget))
        if (!divides(r.ideal, f)) primes.push_back(r);

    long long h = k.class_number();

    // full subtree rooted at taking prime i as the next (>= index) factor
    std::function<long long(size_t, const QIIdeal&, TypeVec&, long long)> visit =
        [&](size_t i, const QIIdeal& j, TypeVec& sigma, long long rest) -> long long {
        long long total = exact_member(sigma) && same_strict_ray_class(k, j, beta, ray) ? 1 : 0;
        for (size_t nx = i; nx < primes.size() && primes[nx].norm <= rest; ++nx) {
            int cls = static_cast<int>(primes[nx].class_index - 1);
            ++sigma[cls];
            if (below_some(sigma))
                total += visit(nx, multiply(k, j, primes[nx].ideal), sigma, rest / primes[nx].norm);
            --sigma[cls];
        }
        return total;
    };

    // root node (j = (1)) plus one block per first prime
    std::vector<long long> sub(primes.size() + 1, 0);
    run_blocks(static_cast<long long>(primes.size()) + 1, mode, [&](long long b) {
        TypeVec sigma(h, 0);
        if (b == 0) {
            QIIdeal one{1, 0, 1};
            sub[0] = exact_member(sigma) && same_strict_ray_class(k, one, beta, ray) ? 1 : 0;
            return;
        }
        size_t i = static_cast<size_t>(b - 1);
        if (primes[i].norm > budget) return;
        int cls = static_cast<int>(primes[i].class_index - 1);
        ++sigma[cls];
        if (below_some(sigma))
            sub[b] = visit(i, multiply(k, QIIdeal{1, 0, 1}, primes[i].ideal), sigma,
                           budget / primes[i].norm);
    });

    long long total = 0;
    for (long long v : sub) total += v;
    return total;
}

MaxNuResult max_nu_scan(const QuadField& k, long long x, Mode mode) {
    if (x > 1'000'000) throw ScanTooLarge("max-nu scan beyond 1e6");
    MaxNuResult out;
    out.greedy_counts.assign(k.class_number(), 0);
    if (x < 1) return out;

    // greedy ideal bound: per class, prefixes of the smallest prime norms
    long long h = k.class_number();
    std::vector<std::vector<long long>> class_norms(h);
    for (const PrimeIdealRec& r : enumerate_prime_ideals(k, x))
        class_norms[r.class_index - 1].push_back(r.norm);
    TypeSet irr = enumerate_irreducible_types(k.ordering());

    std::vector<long long> counts(h, 0);
    std::function<void(long long, __int128)> greedy = [&](long long cls, __int128 prod) {
        if (cls == h) {
            long long total = 0;
            for (const TypeVec& tau : irr.types) {
                long long prodc = 1;
                for (long long i = 0; i < h && prodc != 0; ++i) {
                    long long kk = counts[i], tt = tau[i];
                    if (tt > kk) {
                        prodc = 0;
                        break;
                    }
                    // binomial C(kk, tt), small arguments only
                    long long c = 1;
                    for (long long q = 0; q < tt; ++q) c = c * (kk - q) / (q + 1);
                    prodc *= c;
                }
                total += prodc;
            }
            if (total > out.greedy_bound) {
                out.greedy_bound = total;
                out.greedy_counts = counts;
            }
            return;
        }
        greedy(cls + 1, prod);
        __int128 run = prod;
        for (size_t i = 0; i < class_norms[cls].size(); ++i) {
            run *= class_norms[cls][i];
            if (run > x) break;
            ++counts[cls];
            greedy(cls + 1, run);
        }
        counts[cls] = 0;
    };
    greedy(0, 1);

    if (x > 100'000) return out; // greedy ideal mode only

    out.element_scanned = true;
    // exact element scan over unit-orbit representatives
    long long absd = -k.disc();
    long long tr = k.omega_trace(), nn = k.omega_norm();
    long long vmax = static_cast<long long>(std::sqrt(4.0 * x / absd)) + 2;
    constexpr long long kBlock = 32;
    long long nblocks = (2 * vmax + 1 + kBlock - 1) / kBlock;
    std::vector<MaxNuResult> best(nblocks);

    run_blocks(nblocks, mode, [&](long long b) {
        for (long long py = -vmax + b * kBlock;
             py < std::min(vmax + 1, -vmax + (b + 1) * kBlock); ++py) {
            __int128 rad = 4 * static_cast<__int128>(x) - static_cast<__int128>(py) * py * absd;
            if (rad < 0) continue;
            double sq = std::sqrt(static_cast<double>(rad));
            long long ulo = static_cast<long long>(std::floor((-py * tr - sq) / 2.0)) - 1;
            long long uhi = static_cast<long long>(std::ceil((-py * tr + sq) / 2.0)) + 1;
            for (long long px = ulo; px <= uhi; ++px) {
                __int128 norm = static_cast<__int128>(px) * px +
                                static_cast<__int128>(px) * py * tr +
                                static_cast<__int128>(py) * py * nn;
                if (norm == 0 || norm > x) continue;
                QIInteger pi{px, py};
                QIInteger rep = pi;
                bool canonical = true;
                for (const QIInteger& u : k.units()) {
                    QIInteger a2 = k.mul(u, pi);
                    if (std::pair(a2.y, a2.x) < std::pair(rep.y, rep.x)) {
                        canonical = false;
                        break;
                    }
                }
                if (!canonical) continue;
                long long val = nu(k, principal_ideal(k, pi));
                if (val > best[b].max_nu ||
                    (val == best[b].max_nu &&
                     std::pair(pi.y, pi.x) < std::pair(best[b].witness.y, best[b].witness.x)))
                {
                    best[b].max_nu = val;
                    best[b].witness = pi;
                }
            }
        }
    });

    out.max_nu = 0;
    out.witness = {1, 0};
    bool first = true;
    for (const MaxNuResult& r : best) {
        if (r.max_nu > out.max_nu ||
            (r.max_nu == out.max_nu &&
             (first || std::pair(r.witness.y, r.witness.x) <
                           std::pair(out.witness.y, out.witness.x)))) {
            out.max_nu = r.max_nu;
            out.witness = r.witness;
            first = false;
        }
    }
    return out;
}

} // namespace scan

long long count_progression_elements(const QuadField& k, long long x, const QIIdeal& m,
                                     const QIInteger& alpha) {
    return scan::progression_element_scan(k, x, m, alpha, scan::Mode::Parallel);
}

long long count_progression_ideals(const QuadField& k, long long x, const QIIdeal& m,
                                   const QIInteger& alpha) {
    return scan::progression_ideal_scan(k, x, m, alpha, scan::Mode::Parallel);
}

} // namespace irred
