// Compares the serial reference paths (jobs == 1) against the parallel
// kernels on the workloads that dominate corpus runs. Run manually; not
// registered with ctest.

#include <cstdio>
#include <string>
#include <vector>

#include "lapmatch/enumerate.hpp"
#include "lapmatch/matching.hpp"
#include "lapmatch/spectra.hpp"
#include "lapmatch/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
static double now() { return omp_get_wtime(); }
static int hardware_jobs() { return omp_get_max_threads(); }
#else
#include <chrono>
static double now() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
}
static int hardware_jobs() { return 1; }
#endif

using namespace lapmatch;

namespace {

void report(const std::string& name, double serial, double parallel, int jobs) {
    std::printf("%-28s serial %8.3fs   jobs=%d %8.3fs   speedup %.2fx\n", name.c_str(), serial,
                jobs, parallel, parallel > 0 ? serial / parallel : 0.0);
}

template <typename Fn> double timed(Fn&& fn) {
    const double start = now();
    fn();
    return now() - start;
}

} // namespace

int main() {
    const int jobs = hardware_jobs();
    std::printf("worker threads available: %d\n", jobs);

    {
        std::vector<std::uint64_t> a, b;
        const double serial = timed([&] { a = enumerate_codes(8, true, 1); });
        const double parallel = timed([&] { b = enumerate_codes(8, true, jobs); });
        if (a != b) {
            std::printf("enumeration mismatch\n");
            return 1;
        }
        report("enumerate connected n=8", serial, parallel, jobs);
    }

    {
        const Graph g = make_random(18, 0.35, 12345);
        SubsetMinimizer a, b;
        const double serial = timed([&] { a = berge_tutte_min_exhaustive(g, 18, 1); });
        const double parallel = timed([&] { b = berge_tutte_min_exhaustive(g, 18, jobs); });
        if (a.value != b.value || a.set != b.set) {
            std::printf("subset-minimizer mismatch\n");
            return 1;
        }
        report("deficiency scan n=18", serial, parallel, jobs);
    }

    {
        const Graph g = make_random(14, 0.4, 777);
        const SpectralSummary spec = spectrum(g);
        TripleSweepStats a, b;
        const double serial = timed([&] { a = sweep_separation_triples(g, spec, 1); });
        const double parallel = timed([&] { b = sweep_separation_triples(g, spec, jobs); });
        if (a.triples != b.triples || a.separation_failures != b.separation_failures) {
            std::printf("triple-sweep mismatch\n");
            return 1;
        }
        report("triple sweep n=14", serial, parallel, jobs);
    }

    {
        const std::vector<Graph> corpus = enumerate_graphs(7, true, jobs);
        HuntParams params;
        params.r_grid = {0.1, 0.2, 0.3, 0.4, 0.5};
        params.k_grid = {3, 4};
        params.t5_max_valid_r = true;
        HuntReport a, b;
        const double serial = timed([&] { a = hunt_counterexamples(corpus, all_theorems(), params, 1); });
        const double parallel =
            timed([&] { b = hunt_counterexamples(corpus, all_theorems(), params, jobs); });
        if (a.counterexample_total != b.counterexample_total || a.graphs != b.graphs) {
            std::printf("hunt mismatch\n");
            return 1;
        }
        report("hunt connected n=7", serial, parallel, jobs);
    }

    return 0;
}
