#pragma once

#include <vector>

#include "irred/quadfield.hpp"

namespace irred {
namespace scan {

/// Every kernel here has one code path driven blockwise, so the parallel and
/// serial modes produce bit-identical results: blocks are fixed ahead of
/// time, partial results live per block, and the merge always runs in block
/// order.
enum class Mode { Serial, Parallel };

/// Per-class prime ideal statistics at each grid point: counts of prime
/// ideals with norm <= x and sums of 1/N(p).
struct PrimeCensus {
    std::vector<long long> x_grid;
    std::vector<std::vector<long long>> counts;     // [grid][class]
    std::vector<std::vector<double>> inverse_sums;  // [grid][class]
};

PrimeCensus prime_census(const QuadField& k, const std::vector<long long>& x_grid, Mode mode);

/// Count of ideals (pi) with pi irreducible, 0 < N(pi) <= x, and some
/// associate of pi congruent to alpha mod m. Lattice scan over the coset
/// alpha + m.
long long progression_element_scan(const QuadField& k, long long x, const QIIdeal& m,
                                   const QIInteger& alpha, Mode mode);

/// The same count through the ideal route: ideals j of norm <= x/N(g) whose
/// type completes tau' to an irreducible type and which land in the strict
/// ray class of (alpha) g^{-1} mod m g^{-1}.
long long progression_ideal_scan(const QuadField& k, long long x, const QIIdeal& m,
                                 const QIInteger& alpha, Mode mode);

struct MaxNuResult {
    bool element_scanned = false;
    long long max_nu = 0;
    QIInteger witness{1, 0};
    long long greedy_bound = 0;              // best nu over per-class prefix ideals
    std::vector<long long> greedy_counts;    // primes taken per class by the bound
};

/// Exact maximum of nu over principal ideals of norm <= x (element mode,
/// x <= 1e5), plus the norm-minimal-primes-per-class ideal construction
/// evaluated through the binomial formula (x <= 1e6). Between the two
/// ceilings only the greedy construction runs.
MaxNuResult max_nu_scan(const QuadField& k, long long x, Mode mode);

/// Exact ideal quotient m / g for g | m.
QIIdeal ideal_quotient_exact(const QuadField& k, const QIIdeal& m, const QIIdeal& g);

/// Type of the principal ideal (v) without building the ideal lattice.
TypeVec element_type(const QuadField& k, const QIInteger& v);

} // namespace scan
} // namespace irred
