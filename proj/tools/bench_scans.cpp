// Serial vs OpenMP timing for the scan kernels.

#include <chrono>
#include <cstdio>
#include <string>

#include "irred/extremal.hpp"
#include "irred/scan.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace irred;

namespace {

template <typename Fn>
double time_of(const Fn& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-34s %9.3fs %9.3fs %7.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main(int argc, char** argv) {
    long long x = 1'000'000;
    if (argc > 1) x = std::stoll(argv[1]);
#ifdef _OPENMP
    std::printf("threads: %d, x = %lld\n", omp_get_max_threads(), x);
#else
    std::printf("single-threaded build, x = %lld\n", x);
#endif
    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");

    QuadField k(-23);
    std::vector<long long> grid{x};

    row("prime_census",
        time_of([&] { scan::prime_census(k, grid, scan::Mode::Serial); }),
        time_of([&] { scan::prime_census(k, grid, scan::Mode::Parallel); }));

    QIInteger alpha{0, 1};
    QIIdeal m3{3, 0, 3};
    long long xe = std::min<long long>(x, 300'000);
    row("progression_element_scan",
        time_of([&] { scan::progression_element_scan(k, xe, m3, alpha, scan::Mode::Serial); }),
        time_of([&] { scan::progression_element_scan(k, xe, m3, alpha, scan::Mode::Parallel); }));

    row("progression_ideal_scan",
        time_of([&] { scan::progression_ideal_scan(k, xe, m3, alpha, scan::Mode::Serial); }),
        time_of([&] { scan::progression_ideal_scan(k, xe, m3, alpha, scan::Mode::Parallel); }));

    long long xn = std::min<long long>(x, 50'000);
    row("max_nu_scan",
        time_of([&] { scan::max_nu_scan(k, xn, scan::Mode::Serial); }),
        time_of([&] { scan::max_nu_scan(k, xn, scan::Mode::Parallel); }));

    // the optimizer parallelizes over restarts; pin the thread count for the
    // serial column
    PolynomialP p = build_p(maximal_types(canonical_ordering(make_group({2, 4}))));
#ifdef _OPENMP
    int nt = omp_get_max_threads();
    omp_set_num_threads(1);
    double opt_serial = time_of([&] { maximize_on_simplex(p, p.h, 20240913, 400); });
    omp_set_num_threads(nt);
#else
    double opt_serial = time_of([&] { maximize_on_simplex(p, p.h, 20240913, 400); });
#endif
    row("maximize_on_simplex (Z/2 x Z/4)", opt_serial,
        time_of([&] { maximize_on_simplex(p, p.h, 20240913, 400); }));
    return 0;
}
