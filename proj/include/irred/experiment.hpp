#pragma once

#include <map>
#include <string>

#include "irred/extremal.hpp"
#include "irred/progression.hpp"
#include "irred/scan.hpp"

namespace irred {

/// Observed-vs-predicted table for one experiment. Reports are
/// byte-reproducible for fixed inputs and seed, wall time aside.
struct ExperimentReport {
    std::string id;
    std::map<std::string, std::string> params;
    std::vector<long long> x_grid;
    struct Series {
        std::string label;
        std::vector<double> observed;
        std::vector<double> predicted;
        std::vector<double> ratio; // observed / predicted
    };
    std::vector<Series> series;
    double wall_seconds = 0.0;
    uint64_t seed = 0;
};

struct MertensTable {
    std::vector<long long> x_grid;
    std::vector<std::vector<double>> sums;      // [grid][class]
    std::vector<std::vector<double>> residuals; // sums - (1/h) log log x
};

/// Logarithmic integral int_2^x dt/log t by adaptive Simpson quadrature,
/// relative error 1e-10.
double log_integral(double x);

/// Prime ideal counts per ordinary class against Li(x)/h.
ExperimentReport landau_check(const QuadField& k, const std::vector<long long>& x_grid,
                              scan::Mode mode = scan::Mode::Parallel);

MertensTable mertens_by_class(const QuadField& k, const std::vector<long long>& x_grid,
                              scan::Mode mode = scan::Mode::Parallel);

struct ExtremalIdeal {
    QIIdeal ideal;
    std::vector<long long> omega; // distinct prime divisors per class
};

/// The squarefree ideal made of all primes of norm <= gamma_i log X in class
/// C_i (the extremal construction behind the lower bound for max nu).
ExtremalIdeal build_extremal_ideal(const QuadField& k, double big_x, const SimplexPoint& gamma);

/// Observed progression counts (ideal route, element cross-check at the
/// smallest grid point) against the predicted main term.
ExperimentReport progression_experiment(const QuadField& k, const QIIdeal& m,
                                        const QIInteger& alpha,
                                        const std::vector<long long>& x_grid,
                                        scan::Mode mode = scan::Mode::Parallel);

/// Report wrapper around scan::max_nu_scan.
ExperimentReport max_nu_experiment(const QuadField& k, long long x,
                                   scan::Mode mode = scan::Mode::Parallel);

} // namespace irred
