#pragma once

#include <cstdint>
#include <vector>

#include "irred/errors.hpp"

namespace irred {

/// A finite abelian group in invariant-factor form: Z/d_1 x ... x Z/d_k with
/// d_1 | d_2 | ... | d_k and every d_i >= 2. The empty list is the trivial
/// group. Elements live in componentwise residue coordinates.
class FiniteAbelianGroup {
  public:
    explicit FiniteAbelianGroup(std::vector<long long> invariant_factors);

    const std::vector<long long>& invariant_factors() const { return factors_; }
    int rank() const { return static_cast<int>(factors_.size()); }
    long long order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }

    bool operator==(const FiniteAbelianGroup& o) const { return factors_ == o.factors_; }
    bool operator!=(const FiniteAbelianGroup& o) const { return !(*this == o); }

  private:
    std::vector<long long> factors_;
    long long order_;
};

/// Element of a FiniteAbelianGroup, coords[i] in [0, d_i).
struct GroupElement {
    std::vector<long long> coords;

    bool operator==(const GroupElement& o) const { return coords == o.coords; }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    bool operator<(const GroupElement& o) const { return coords < o.coords; }
};

GroupElement identity_element(const FiniteAbelianGroup& g);
GroupElement make_element(const FiniteAbelianGroup& g, const std::vector<long long>& coords);

GroupElement add(const FiniteAbelianGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement inverse(const FiniteAbelianGroup& g, const GroupElement& a);
GroupElement scalar_mul(const FiniteAbelianGroup& g, long long n, const GroupElement& a);
long long element_order(const FiniteAbelianGroup& g, const GroupElement& a);

/// All h elements of G, fixed once and for all. Positions are 1-based to
/// match the usual numbering C_1, ..., C_h of ideal classes; the identity is
/// always at position h. For cyclic groups position i holds the residue
/// i mod h.
class ClassOrdering {
  public:
    ClassOrdering(FiniteAbelianGroup group, std::vector<GroupElement> classes);

    const FiniteAbelianGroup& group() const { return group_; }
    long long size() const { return group_.order(); }

    /// 1-based access: class_at(1) .. class_at(h).
    const GroupElement& class_at(long long position) const { return classes_.at(position - 1); }

    /// 1-based position of an element; throws GroupMismatch on a foreign element.
    long long position_of(const GroupElement& e) const;

    long long identity_position() const { return identity_pos_; }

    const std::vector<GroupElement>& classes() const { return classes_; }

    bool operator==(const ClassOrdering& o) const {
        return group_ == o.group_ && classes_ == o.classes_;
    }

  private:
    FiniteAbelianGroup group_;
    std::vector<GroupElement> classes_;
    std::vector<long long> position_by_index_; // mixed-radix index -> 1-based position
    long long identity_pos_;
};

long long mixed_radix_index(const FiniteAbelianGroup& g, const GroupElement& e);

/// Mixed-radix enumeration (leftmost coordinate most significant) with the
/// identity rotated from the front to position h. For Z/h this is exactly
/// C_i <-> i mod h.
ClassOrdering canonical_ordering(const FiniteAbelianGroup& g);

/// Ordering given by an explicit permutation of canonical positions; used by
/// the permutation-invariance checks.
ClassOrdering permuted_ordering(const FiniteAbelianGroup& g, const std::vector<long long>& permutation);

FiniteAbelianGroup make_group(const std::vector<long long>& invariant_factors);

/// Invariant-factor decompositions of all abelian groups of order n.
std::vector<std::vector<long long>> abelian_groups_of_order(long long n);

} // namespace irred
