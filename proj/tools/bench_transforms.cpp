// Timing comparison between the serial reference transforms and the
// OpenMP variants, plus the parallel vs serial CV harness loop.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pecr/multiview.hpp"
#include "pecr/powerset.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void bench_transforms(int n, int iterations) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<double> base(std::size_t{1} << n);
    for (auto& v : base) v = dist(rng);

    std::vector<double> buf = base;
    auto t0 = Clock::now();
    for (int i = 0; i < iterations; ++i) {
        pecr::superset_sum_serial(buf, n);
        pecr::superset_mobius_serial(buf, n);
    }
    const double serial = seconds_since(t0);

    std::vector<double> buf2 = base;
    t0 = Clock::now();
    for (int i = 0; i < iterations; ++i) {
        pecr::superset_sum(buf2, n);
        pecr::superset_mobius(buf2, n);
    }
    const double parallel = seconds_since(t0);

    double max_diff = 0.0;
    for (std::size_t i = 0; i < buf.size(); ++i)
        max_diff = std::max(max_diff, std::abs(buf[i] - buf2[i]));
    std::printf("zeta/mobius n=%d x%d: serial %.4fs, parallel %.4fs (x%.2f), max diff %.2e\n", n,
                iterations, serial, parallel, serial / parallel, max_diff);
}

void bench_cv(const char* dataset, const char* protocol) {
    namespace mv = pecr::multiview;
    const auto table = mv::load_csv(dataset);
    const auto proto = mv::protocol_by_name(protocol);
    const std::vector<mv::FusionRule> rules = {mv::FusionRule::parse("product"),
                                               mv::FusionRule::parse("min"),
                                               mv::FusionRule::parse("ccr")};
    mv::CvOptions options;
    options.repeats = 2;

    options.parallel = false;
    auto t0 = Clock::now();
    const auto serial_reports = mv::run_cv(table, proto, rules, options);
    const double serial = seconds_since(t0);

    options.parallel = true;
    t0 = Clock::now();
    const auto parallel_reports = mv::run_cv(table, proto, rules, options);
    const double parallel = seconds_since(t0);

    double max_diff = 0.0;
    for (std::size_t r = 0; r < rules.size(); ++r)
        for (std::size_t i = 0; i < serial_reports[r].fold_accuracies.size(); ++i)
            max_diff = std::max(max_diff, std::abs(serial_reports[r].fold_accuracies[i] -
                                                   parallel_reports[r].fold_accuracies[i]));
    std::printf("cv %s: serial %.3fs, parallel %.3fs (x%.2f), max fold diff %.2e\n", protocol,
                serial, parallel, serial / parallel, max_diff);
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both paths run serially\n");
#endif
    bench_transforms(16, 200);
    bench_transforms(12, 2000);
    if (argc >= 3) bench_cv(argv[1], argv[2]);
    return 0;
}
