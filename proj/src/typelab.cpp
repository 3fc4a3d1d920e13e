#include "irred/typelab.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace irred {

long long type_length(const TypeVec& t) {
    long long s = 0;
    for (long long v : t) s += v;
    return s;
}

GroupElement class_sum(const ClassOrdering& ord, const TypeVec& tau) {
    if (static_cast<long long>(tau.size()) != ord.size())
        throw DimensionMismatch("type length does not match ordering size");
    const FiniteAbelianGroup& g = ord.group();
    GroupElement acc = identity_element(g);
    for (long long i = 0; i < ord.size(); ++i)
        if (tau[i] != 0)
            acc = add(g, acc, scalar_mul(g, tau[i], ord.class_at(i + 1)));
    return acc;
}

bool is_principal(const ClassOrdering& ord, const TypeVec& tau) {
    return class_sum(ord, tau) == identity_element(ord.group());
}

bool is_subtype(const TypeVec& tau_prime, const TypeVec& tau) {
    if (tau_prime.size() != tau.size())
        throw DimensionMismatch("types bound to different orderings");
    for (size_t i = 0; i < tau.size(); ++i)
        if (tau_prime[i] > tau[i]) return false;
    return true;
}

namespace {

// Odometer over subtypes sigma <= tau. Calls f on every nonzero sigma
// (including tau itself); stops early when f returns true.
bool scan_subtypes(const TypeVec& tau, const std::function<bool(const TypeVec&)>& f) {
    TypeVec sigma(tau.size(), 0);
    for (;;) {
        size_t i = 0;
        while (i < tau.size()) {
            if (sigma[i] < tau[i]) {
                ++sigma[i];
                break;
            }
            sigma[i] = 0;
            ++i;
        }
        if (i == tau.size()) return false; // wrapped around: done
        if (f(sigma)) return true;
    }
}

} // namespace

bool has_principal_subtype(const ClassOrdering& ord, const TypeVec& tau) {
    if (static_cast<long long>(tau.size()) != ord.size())
        throw DimensionMismatch("type length does not match ordering size");
    return scan_subtypes(tau, [&](const TypeVec& sigma) { return is_principal(ord, sigma); });
}

bool is_irreducible_type(const ClassOrdering& ord, const TypeVec& tau) {
    if (type_length(tau) == 0) return false;
    if (!is_principal(ord, tau)) return false;
    // no proper nonzero subtype may be principal
    return !scan_subtypes(tau, [&](const TypeVec& sigma) {
        return sigma != tau && is_principal(ord, sigma);
    });
}

namespace {

// Set of nonempty sub-multiset sums, as a bitset over mixed-radix element
// indices.
struct SumBits {
    std::vector<uint64_t> words;
    int count = 0;

    explicit SumBits(long long h) : words((h + 63) / 64, 0) {}

    bool test(long long i) const { return (words[i >> 6] >> (i & 63)) & 1; }
    void set(long long i) {
        uint64_t& w = words[i >> 6];
        uint64_t m = uint64_t(1) << (i & 63);
        if (!(w & m)) {
            w |= m;
            ++count;
        }
    }
};

// Depth-first enumeration of zero-sum-free count vectors over the ordering's
// classes (identity excluded), positions visited in nondecreasing order so
// each multiset appears once. visit() runs at every node, including the empty
// vector; a return value <= 0 cuts the branch.
class ZeroSumFreeDfs {
  public:
    explicit ZeroSumFreeDfs(const ClassOrdering& ord)
        : ord_(ord), h_(ord.size()), elem_index_(h_), add_to_index_(h_) {
        const FiniteAbelianGroup& g = ord_.group();
        for (long long p = 1; p <= h_; ++p)
            elem_index_[p - 1] = mixed_radix_index(g, ord_.class_at(p));
        // per-position translation tables: index of (x + C_p) for each x
        std::vector<GroupElement> by_index(h_);
        for (long long p = 1; p <= h_; ++p) by_index[elem_index_[p - 1]] = ord_.class_at(p);
        for (long long p = 1; p <= h_; ++p) {
            add_to_index_[p - 1].resize(h_);
            for (long long x = 0; x < h_; ++x)
                add_to_index_[p - 1][x] =
                    mixed_radix_index(g, add(g, by_index[x], ord_.class_at(p)));
        }
        identity_index_ = mixed_radix_index(g, identity_element(g));
        scratch_.assign(h_ + 2, SumBits(h_));
    }

    // visit(counts, total_index, sums_count, length) -> max further depth
    void run(const std::function<long long(const TypeVec&, long long, int, long long)>& visit) {
        TypeVec counts(h_, 0);
        step(counts, SumBits(h_), identity_index_, 0, 1, visit);
    }

  private:
    void step(TypeVec& counts, const SumBits& sums, long long total_idx, long long len,
              long long from_pos,
              const std::function<long long(const TypeVec&, long long, int, long long)>& visit) {
        long long budget = visit(counts, total_idx, sums.count, len);
        if (budget <= 0) return;
        for (long long p = from_pos; p <= h_; ++p) {
            long long e = elem_index_[p - 1];
            if (e == identity_index_) continue;
            const std::vector<long long>& shift = add_to_index_[p - 1];
            // next = sums union (sums + C_p) union {C_p}; reject if 0 appears
            SumBits& next = scratch_[len + 1];
            std::fill(next.words.begin(), next.words.end(), 0);
            next.count = 0;
            bool ok = true;
            for (size_t w = 0; w < sums.words.size() && ok; ++w) {
                uint64_t bits = sums.words[w];
                while (bits) {
                    long long x = static_cast<long long>(w << 6) + __builtin_ctzll(bits);
                    bits &= bits - 1;
                    next.set(x);
                    long long y = shift[x];
                    if (y == identity_index_) {
                        ok = false;
                        break;
                    }
                    next.set(y);
                }
            }
            if (!ok) continue;
            next.set(e);
            ++counts[p - 1];
            step(counts, next, shift[total_idx], len + 1, p, visit);
            --counts[p - 1];
        }
    }

    const ClassOrdering& ord_;
    long long h_;
    std::vector<long long> elem_index_;
    std::vector<std::vector<long long>> add_to_index_; // [pos-1][idx] -> idx
    long long identity_index_;
    std::vector<SumBits> scratch_;
};

} // namespace

DavenportResult davenport(const FiniteAbelianGroup& g) {
    ClassOrdering ord = canonical_ordering(g);
    long long h = g.order();
    long long best_len = -1;
    TypeVec best_counts(h, 0);

    ZeroSumFreeDfs dfs(ord);
    dfs.run([&](const TypeVec& counts, long long /*total_idx*/, int sums_count, long long len) {
        if (len > best_len) {
            best_len = len;
            best_counts = counts;
        }
        // Olson: a zero-sum-free sequence of length n has >= n distinct
        // subset sums, all nonzero, so at most h - 1 - sums_count more
        // elements can ever be added.
        long long ceiling = len + (h - 1 - sums_count);
        if (ceiling <= best_len) return static_cast<long long>(0);
        return h - len; // hard cap |G|
    });

    // close the best zero-sum-free vector with the inverse of its sum
    std::vector<GroupElement> witness;
    for (long long p = 1; p <= h; ++p)
        for (long long c = 0; c < best_counts[p - 1]; ++c) witness.push_back(ord.class_at(p));
    GroupElement total = identity_element(g);
    for (const auto& e : witness) total = add(g, total, e);
    witness.push_back(inverse(g, total));
    return DavenportResult{best_len + 1, std::move(witness)};
}

TypeSet enumerate_irreducible_types(const ClassOrdering& ord) {
    const FiniteAbelianGroup& g = ord.group();
    long long h = ord.size();
    std::set<TypeVec> found;

    ZeroSumFreeDfs dfs(ord);
    std::vector<GroupElement> by_index(h);
    for (long long p = 1; p <= h; ++p)
        by_index[mixed_radix_index(g, ord.class_at(p))] = ord.class_at(p);

    dfs.run([&](const TypeVec& counts, long long total_idx, int /*sums_count*/, long long len) {
        // closure: append the inverse of the running sum (the identity when
        // the vector is empty, which yields the identity-class singleton)
        GroupElement closing = inverse(g, by_index[total_idx]);
        TypeVec tau = counts;
        ++tau[ord.position_of(closing) - 1];
        found.insert(std::move(tau));
        return h - len;
    });

    TypeSet out;
    out.kind = TypeSetKind::Irreducible;
    out.types.assign(found.begin(), found.end());
    return out;
}

TypeSet maximal_types(const ClassOrdering& ord) {
    TypeSet all = enumerate_irreducible_types(ord);
    long long d = 0;
    for (const auto& t : all.types) d = std::max(d, type_length(t));
    TypeSet out;
    out.kind = TypeSetKind::Maximal;
    for (auto& t : all.types)
        if (type_length(t) == d) out.types.push_back(t);
    return out;
}

TypeVec extend_to_irreducible(const ClassOrdering& ord, const TypeVec& tau_prime) {
    if (is_irreducible_type(ord, tau_prime)) return tau_prime;
    if (has_principal_subtype(ord, tau_prime))
        throw HasPrincipalSubtype("type has a nonzero principal subtype");
    const FiniteAbelianGroup& g = ord.group();
    GroupElement s = class_sum(ord, tau_prime);
    long long j = ord.position_of(inverse(g, s));
    TypeVec tau = tau_prime;
    ++tau[j - 1];
    return tau;
}

MaximalWrtResult types_maximal_wrt(const ClassOrdering& ord, const TypeVec& tau_prime) {
    if (static_cast<long long>(tau_prime.size()) != ord.size())
        throw DimensionMismatch("type length does not match ordering size");
    if (has_principal_subtype(ord, tau_prime))
        throw HasPrincipalSubtype("type has a nonzero principal subtype");
    TypeSet all = enumerate_irreducible_types(ord);
    long long best = -1;
    for (const auto& t : all.types)
        if (is_subtype(tau_prime, t)) best = std::max(best, type_length(t));
    MaximalWrtResult r;
    r.types.kind = TypeSetKind::MaximalWrt;
    for (auto& t : all.types)
        if (is_subtype(tau_prime, t) && type_length(t) == best) r.types.types.push_back(t);
    r.L = best - type_length(tau_prime);
    return r;
}

} // namespace irred
