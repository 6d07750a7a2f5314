// Wall-clock comparison of the serial reference path and the OpenMP path for
// the two hot loops: Monte Carlo over DPP draws and cumulant lattice sums.
// Both paths must return bitwise-identical results.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mockgauss/cumulants.hpp"
#include "mockgauss/parallel.hpp"
#include "mockgauss/test_functions.hpp"

using namespace mockgauss;

namespace {

template <class F>
double seconds(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const std::string& name, double serial, double parallel, bool identical) {
    std::printf("%-34s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   identical %s\n", name.c_str(), serial,
                parallel, serial / parallel, identical ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
    configure_threads_from_env();
    const std::uint64_t draws = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 40000;
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP\n");
#endif
    bool all_identical = true;

    {
        const GroupLabel group = GroupLabel::parse("Sp", 24);
        const PeriodizedStatistic stat(BandLimitedFunction(FunctionFamily::Fejer, 1.0 / 3), 24.0);
        const McPlan plan{1, 0, draws};
        auto per_draw = [&](const EigenphaseSample& s, std::span<double> out) {
            const double z = linear_statistic(s, stat);
            out[0] = z;
            out[1] = z * z;
        };
        std::vector<RunningStats> a, b;
        const double ts = seconds([&] { a = monte_carlo(group, SamplerKind::Dpp, plan, 2, per_draw, Execution::Serial); });
        const double tp = seconds([&] { b = monte_carlo(group, SamplerKind::Dpp, plan, 2, per_draw, Execution::Parallel); });
        const bool same = a[0].mean() == b[0].mean() && a[1].mean() == b[1].mean() && a[1].variance() == b[1].variance();
        all_identical = all_identical && same;
        report("Monte Carlo, Sp(24), " + std::to_string(draws) + " draws", ts, tp, same);
    }
    {
        const GroupLabel group = GroupLabel::parse("SO", 25);
        const PeriodizedStatistic stat(BandLimitedFunction(FunctionFamily::RaisedCosine, 0.45), 25.0);
        const auto g = stat.coefficients();
        double a = 0, b = 0;
        const double ts = seconds([&] { a = cumulant_group(5, group, g, Execution::Serial); });
        const double tp = seconds([&] { b = cumulant_group(5, group, g, Execution::Parallel); });
        all_identical = all_identical && a == b;
        report("lattice C_5, SO(25), " + std::to_string(g.support().size()) + " modes", ts, tp, a == b);
    }
    return all_identical ? 0 : 1;
}
