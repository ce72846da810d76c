// SPDX-License-Identifier: Apache-2.0
//
// Compares the OpenMP enumeration kernels against their serial reference
// implementations and reports timings.

#include <chrono>
#include <cstring>
#include <iomanip>
#include <iostream>

#include "runtx/spartitions.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace runtx;

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double time_ms(Fn&& fn) {
    auto start = Clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
    std::cout << std::left << std::setw(34) << name << std::right << std::fixed
              << std::setprecision(1) << std::setw(10) << serial_ms << " ms" << std::setw(10)
              << parallel_ms << " ms   x" << std::setprecision(2)
              << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0)
              << (equal ? "" : "   MISMATCH") << '\n';
}

void bench_paths(const std::string& name, const PathSpec& spec, int order, MarkOptions marks,
                 int budget) {
    TruncatedSeries serial(0), parallel(0);
    double s = time_ms([&] { serial = path_distribution_serial(spec, order, marks, budget); });
    double p = time_ms([&] { parallel = path_distribution(spec, order, marks, budget); });
    report(name, s, p, serial == parallel);
}

void bench_family(const std::string& name, const FamilyId& fam, int support, RunMode mode,
                  int budget) {
    TruncatedSeries serial(0), parallel(0);
    double s = time_ms([&] { serial = family_distribution_serial(fam, support, mode, budget); });
    double p = time_ms([&] { parallel = family_distribution(fam, support, mode, budget); });
    report(name, s, p, serial == parallel);
}

}  // namespace

int main(int argc, char** argv) {
    bool heavy = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--heavy") == 0) heavy = true;

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n\n";
#else
    std::cout << "built without OpenMP; both columns are serial\n\n";
#endif
    std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(13) << "serial"
              << std::setw(13) << "parallel" << "   speedup\n";

    const int dyck_order = heavy ? 14 : 12;
    bench_paths("dyck distribution, order " + std::to_string(dyck_order),
                PathSpec{1, 0, 0, false, SizeRule::Downs}, dyck_order,
                MarkOptions{AscentMode::All, false}, dyck_order);

    const int j3_order = heavy ? 9 : 8;
    bench_paths("3-upstep distribution, order " + std::to_string(j3_order),
                PathSpec{3, 0, 0, false, SizeRule::DownsOverJ}, j3_order,
                MarkOptions{AscentMode::HeightModJ, false}, j3_order);

    const int schroeder_order = heavy ? 9 : 8;
    bench_paths("flat-step distribution, order " + std::to_string(schroeder_order),
                PathSpec{1, 0, 0, true, SizeRule::FlatsPlusDowns}, schroeder_order,
                MarkOptions{AscentMode::All, true}, schroeder_order);

    const int sp_n = heavy ? 9 : 8;
    bench_family("s-partition distribution, n <= " + std::to_string(sp_n), FamilyId::all(), sp_n,
                 RunMode::Runs, sp_n);
    bench_family("set partitions, n <= " + std::to_string(sp_n), FamilyId::set_partitions(), sp_n,
                 RunMode::Runs, sp_n);
    return 0;
}
