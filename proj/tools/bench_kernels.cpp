#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "quatsq/obstruction.hpp"
#include "quatsq/oracle.hpp"

#ifdef QUATSQ_HAVE_OPENMP
#include <omp.h>
#endif

// Times the two enumeration kernels serially and under OpenMP on fixed
// workloads. Both paths must agree on every result.

namespace {

double seconds(void (*fn)(bool), bool parallel) {
    const auto t0 = std::chrono::steady_clock::now();
    fn(parallel);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void oracle_job(bool parallel) {
    // 9+2j in Q_{4,7} has no three-square representation; the k=3 scan runs
    // through the whole box.
    const quatsq::RingParams ring(4, 7);
    const quatsq::Quaternion nine_2j{ring, 9, 0, 2, 0};
    quatsq::OracleOptions opt;
    opt.parallel = parallel;
    const quatsq::OracleResult r = quatsq::min_squares_oracle(nine_2j, 4, opt);
    if (!r.count || *r.count != 4) {
        std::fprintf(stderr, "oracle benchmark result drifted\n");
        std::exit(1);
    }
}

void obstruction_job(bool parallel) {
    quatsq::ObstructionOptions opt;
    opt.parallel = parallel;
    const auto outcome = quatsq::modular_obstruction(quatsq::witness_query("8+2k"), opt);
    if (!outcome.certified()) {
        std::fprintf(stderr, "obstruction benchmark result drifted\n");
        std::exit(1);
    }
}

}  // namespace

int main() {
#ifdef QUATSQ_HAVE_OPENMP
    if (const char* env = std::getenv("QUATSQ_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0) omp_set_num_threads(t);
    }
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif
    std::printf("%-28s %10s %10s %8s\n", "kernel", "serial", "openmp", "speedup");
    {
        const double s = seconds(oracle_job, false);
        const double p = seconds(oracle_job, true);
        std::printf("%-28s %9.3fs %9.3fs %7.2fx\n", "oracle k<=4, 9+2j, B=4", s, p, s / p);
    }
    {
        const double s = seconds(obstruction_job, false);
        const double p = seconds(obstruction_job, true);
        std::printf("%-28s %9.3fs %9.3fs %7.2fx\n", "obstruction 8+2k", s, p, s / p);
    }
    return 0;
}
