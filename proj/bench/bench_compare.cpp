// Benchmark: OpenMP kernels against their serial reference implementations.
//
//   obstruction scan   bit-parallel rows + OpenMP  vs  quadruple loops
//   extremal search    pruned parallel counter     vs  unpruned naive-coverage loop

#include <chrono>
#include <cstdio>

#include "tonal/canonical.hpp"
#include "tonal/extremal.hpp"
#include "tonal/graph.hpp"
#include "tonal/reference.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void bench_obstructions() {
    std::printf("obstruction scan (canonical hosts)\n");
    std::printf("%8s %14s %14s %9s\n", "n", "reference [s]", "parallel [s]", "speedup");
    for (long long n : {21, 120}) {
        tonal::ColouredHost host = tonal::canonical_colouring(*tonal::canonical_size_for(n));
        auto t0 = Clock::now();
        auto slow = tonal::verify_obstructions_reference(host);
        double ref = seconds_since(t0);
        t0 = Clock::now();
        auto fast = tonal::verify_obstructions(host);
        double par = seconds_since(t0);
        if (slow.rbr_p4_found != fast.rbr_p4_found ||
            slow.k3_two_red_found != fast.k3_two_red_found) {
            std::printf("MISMATCH at n = %lld\n", n);
            return;
        }
        std::printf("%8lld %14.4f %14.4f %8.1fx\n", n, ref, par, ref / (par > 0 ? par : 1e-9));
    }
}

void bench_extremal() {
    std::printf("\nexhaustive tone search for K_{1,2}\n");
    std::printf("%8s %14s %14s %9s\n", "n", "reference [s]", "parallel [s]", "speedup");
    tonal::Graph star = tonal::star_forest({2});
    for (int n : {6, 7}) {
        auto t0 = Clock::now();
        auto slow = tonal::exhaustive_reference(n, star, tonal::CoverageLevel::Tone);
        double ref = seconds_since(t0);
        t0 = Clock::now();
        auto fast = tonal::ot_exact(n, star, tonal::SearchOptions{false, false, 0});
        double par = seconds_since(t0);
        if (slow.value != fast.value || slow.witness_mask != fast.witness_mask) {
            std::printf("MISMATCH at n = %d\n", n);
            return;
        }
        std::printf("%8d %14.4f %14.4f %8.1fx\n", n, ref, par, ref / (par > 0 ? par : 1e-9));
    }
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled: both columns run serially\n\n");
#endif
    bench_obstructions();
    bench_extremal();
    return 0;
}
