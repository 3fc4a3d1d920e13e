#include "irred/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace irred {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long long> invariant_factors)
    : factors_(std::move(invariant_factors)) {
    order_ = 1;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2)
            throw InvalidInvariants("invariant factor < 2");
        if (i > 0 && factors_[i] % factors_[i - 1] != 0)
            throw InvalidInvariants("invariant factors must form a dividing chain");
        order_ *= factors_[i];
    }
}

FiniteAbelianGroup make_group(const std::vector<long long>& invariant_factors) {
    return FiniteAbelianGroup(invariant_factors);
}

GroupElement identity_element(const FiniteAbelianGroup& g) {
    return GroupElement{std::vector<long long>(g.rank(), 0)};
}

GroupElement make_element(const FiniteAbelianGroup& g, const std::vector<long long>& coords) {
    if (static_cast<int>(coords.size()) != g.rank())
        throw GroupMismatch("coordinate count does not match group rank");
    GroupElement e{coords};
    for (int i = 0; i < g.rank(); ++i) {
        long long d = g.invariant_factors()[i];
        e.coords[i] = ((e.coords[i] % d) + d) % d;
    }
    return e;
}

static void check_shape(const FiniteAbelianGroup& g, const GroupElement& a) {
    if (static_cast<int>(a.coords.size()) != g.rank())
        throw GroupMismatch("element does not belong to this group");
}

GroupElement add(const FiniteAbelianGroup& g, const GroupElement& a, const GroupElement& b) {
    check_shape(g, a);
    check_shape(g, b);
    GroupElement r = a;
    for (int i = 0; i < g.rank(); ++i)
        r.coords[i] = (r.coords[i] + b.coords[i]) % g.invariant_factors()[i];
    return r;
}

GroupElement inverse(const FiniteAbelianGroup& g, const GroupElement& a) {
    check_shape(g, a);
    GroupElement r = a;
    for (int i = 0; i < g.rank(); ++i) {
        long long d = g.invariant_factors()[i];
        r.coords[i] = (d - r.coords[i]) % d;
    }
    return r;
}

GroupElement scalar_mul(const FiniteAbelianGroup& g, long long n, const GroupElement& a) {
    check_shape(g, a);
    GroupElement r = a;
    for (int i = 0; i < g.rank(); ++i) {
        long long d = g.invariant_factors()[i];
        long long c = (a.coords[i] % d) * (n % d) % d;
        r.coords[i] = ((c % d) + d) % d;
    }
    return r;
}

long long element_order(const FiniteAbelianGroup& g, const GroupElement& a) {
    check_shape(g, a);
    // lcm of componentwise orders d_i / gcd(d_i, a_i)
    long long ord = 1;
    for (int i = 0; i < g.rank(); ++i) {
        long long d = g.invariant_factors()[i];
        long long o = d / std::gcd(d, a.coords[i]);
        ord = std::lcm(ord, o);
    }
    return ord;
}

long long mixed_radix_index(const FiniteAbelianGroup& g, const GroupElement& e) {
    long long idx = 0;
    for (int i = 0; i < g.rank(); ++i)
        idx = idx * g.invariant_factors()[i] + e.coords[i];
    return idx;
}

ClassOrdering::ClassOrdering(FiniteAbelianGroup group, std::vector<GroupElement> classes)
    : group_(std::move(group)), classes_(std::move(classes)) {
    long long h = group_.order();
    if (static_cast<long long>(classes_.size()) != h)
        throw InvalidInvariants("ordering must list every class exactly once");
    position_by_index_.assign(h, 0);
    identity_pos_ = 0;
    GroupElement id = identity_element(group_);
    for (long long pos = 1; pos <= h; ++pos) {
        const GroupElement& e = classes_[pos - 1];
        check_shape(group_, e);
        long long idx = mixed_radix_index(group_, e);
        if (position_by_index_[idx] != 0)
            throw InvalidInvariants("ordering repeats a class");
        position_by_index_[idx] = pos;
        if (e == id) identity_pos_ = pos;
    }
}

long long ClassOrdering::position_of(const GroupElement& e) const {
    check_shape(group_, e);
    return position_by_index_[mixed_radix_index(group_, e)];
}

ClassOrdering canonical_ordering(const FiniteAbelianGroup& g) {
    long long h = g.order();
    std::vector<GroupElement> classes;
    classes.reserve(h);
    GroupElement cur = identity_element(g);
    for (long long n = 0; n < h; ++n) {
        classes.push_back(cur);
        // increment mixed-radix counter, rightmost coordinate fastest
        for (int i = g.rank() - 1; i >= 0; --i) {
            if (++cur.coords[i] < g.invariant_factors()[i]) break;
            cur.coords[i] = 0;
        }
    }
    // identity leads the enumeration; move it to position h
    std::rotate(classes.begin(), classes.begin() + 1, classes.end());
    return ClassOrdering(g, std::move(classes));
}

ClassOrdering permuted_ordering(const FiniteAbelianGroup& g, const std::vector<long long>& permutation) {
    ClassOrdering base = canonical_ordering(g);
    if (static_cast<long long>(permutation.size()) != g.order())
        throw InvalidInvariants("permutation size mismatch");
    std::vector<GroupElement> classes;
    classes.reserve(g.order());
    for (long long p : permutation) classes.push_back(base.class_at(p));
    return ClassOrdering(g, std::move(classes));
}

static void partitions_into_chains(long long n, long long max_div, std::vector<long long>& chain,
                                   std::vector<std::vector<long long>>& out) {
    if (n == 1) {
        std::vector<long long> asc(chain.rbegin(), chain.rend());
        out.push_back(asc);
        return;
    }
    for (long long d = 2; d <= std::min(n, max_div); ++d) {
        if (n % d != 0) continue;
        if (!chain.empty() && chain.back() % d != 0) continue;
        chain.push_back(d);
        partitions_into_chains(n / d, d, chain, out);
        chain.pop_back();
    }
}

std::vector<std::vector<long long>> abelian_groups_of_order(long long n) {
    std::vector<std::vector<long long>> out;
    if (n == 1) {
        out.push_back({});
        return out;
    }
    // enumerate chains d_k >= d_{k-1} >= ... with divisibility, largest first
    std::vector<long long> chain;
    partitions_into_chains(n, n, chain, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace irred
