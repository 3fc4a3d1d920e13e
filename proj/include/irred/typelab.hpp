#pragma once

#include <optional>
#include <vector>

#include "irred/group.hpp"

namespace irred {

/// A type: an h-tuple of nonnegative integers bound to a class ordering,
/// counting prime-ideal divisors per class. Entry i (0-based here) belongs
/// to ordering position i+1.
using TypeVec = std::vector<long long>;

long long type_length(const TypeVec& t);

enum class TypeSetKind { Irreducible, Maximal, MaximalWrt };

/// A finite set of types over one ordering, sorted lexicographically.
struct TypeSet {
    TypeSetKind kind;
    std::vector<TypeVec> types;
};

struct DavenportResult {
    long long D;
    std::vector<GroupElement> witness; // minimal zero-sum sequence of length D
};

/// Sum_i t_i * C_i in the ordering's group.
GroupElement class_sum(const ClassOrdering& ord, const TypeVec& tau);

/// True iff class_sum(tau) is the identity.
bool is_principal(const ClassOrdering& ord, const TypeVec& tau);

/// Componentwise <=.
bool is_subtype(const TypeVec& tau_prime, const TypeVec& tau);

/// tau is nonzero, principal, and no nonzero proper subtype is principal.
/// The subtype scan is exhaustive over the Pi (t_i + 1) lattice.
bool is_irreducible_type(const ClassOrdering& ord, const TypeVec& tau);

/// True iff no nonzero subtype of tau (tau itself included) is principal.
bool has_principal_subtype(const ClassOrdering& ord, const TypeVec& tau);

/// Davenport constant with witness, by depth-first search over zero-sum-free
/// multisets of nonidentity elements. Capped at |G| by the prefix-sum
/// pigeonhole bound.
DavenportResult davenport(const FiniteAbelianGroup& g);

/// Every irreducible type over this ordering (a finite set; lengths <= D).
TypeSet enumerate_irreducible_types(const ClassOrdering& ord);

/// Irreducible types of length exactly D.
TypeSet maximal_types(const ClassOrdering& ord);

/// One-increment completion: returns tau_prime itself when it is
/// already irreducible, otherwise bumps the position of the inverse class of
/// its class sum (smallest such position). Requires tau_prime to have no
/// nonzero principal subtype.
TypeVec extend_to_irreducible(const ClassOrdering& ord, const TypeVec& tau_prime);

struct MaximalWrtResult {
    TypeSet types; // kind == MaximalWrt
    long long L;   // common length of tau - tau_prime
};

/// Irreducible types containing tau_prime of greatest length, and
/// L = that length - length(tau_prime).
MaximalWrtResult types_maximal_wrt(const ClassOrdering& ord, const TypeVec& tau_prime);

} // namespace irred
