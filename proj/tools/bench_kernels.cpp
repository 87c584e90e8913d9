// Micro-benchmark comparing the serial reference kernels against their
// OpenMP counterparts: decoration sweeps and the Jacobi SVD.

#include <chrono>
#include <cstdio>
#include <random>

#include "wspindex/oracle.hpp"
#include "wspindex/svd.hpp"
#include "wspindex/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace wspindex;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void bench_sweep() {
    auto poly = make_qpoly("x^3*y + y^5");
    auto group = symmetry_group(poly);
    SweepRequest request;
    request.poly = &poly;
    request.group = &group;
    request.genus = 0;
    request.k = 4;
    request.cap = 50625; // the full 15^4 decoration space

    auto t0 = Clock::now();
    auto serial = run_sweep_serial(request);
    double t_serial = seconds_since(t0);

    t0 = Clock::now();
    auto parallel = run_sweep_parallel(request);
    double t_parallel = seconds_since(t0);

    bool same = serial.records.size() == parallel.records.size();
    for (std::size_t i = 0; same && i < serial.records.size(); ++i)
        same = serial.records[i].accepted == parallel.records[i].accepted &&
               serial.records[i].totals == parallel.records[i].totals;

    std::printf("decoration sweep  %zu cases  serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n",
                serial.examined, t_serial, t_parallel,
                t_parallel > 0 ? t_serial / t_parallel : 0.0, same ? "match" : "MISMATCH");
}

void bench_svd() {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss(0.0, 1.0);
    DenseMatrix a(420, 380);
    for (auto& x : a.data) x = gauss(rng);

    auto t0 = Clock::now();
    auto s_serial = singular_values_serial(a);
    double t_serial = seconds_since(t0);

    t0 = Clock::now();
    auto s_parallel = singular_values_parallel(a);
    double t_parallel = seconds_since(t0);

    double max_rel = 0;
    for (std::size_t i = 0; i < s_serial.size(); ++i) {
        double denom = s_serial[i] > 1e-12 ? s_serial[i] : 1.0;
        max_rel = std::max(max_rel, std::fabs(s_serial[i] - s_parallel[i]) / denom);
    }
    std::printf("jacobi svd 420x380  serial %.3fs  parallel %.3fs  speedup %.2fx  max rel diff %.2e\n",
                t_serial, t_parallel, t_parallel > 0 ? t_serial / t_parallel : 0.0, max_rel);
}

void bench_oracle() {
    GridConfig grid;
    auto t0 = Clock::now();
    long long checksum = 0;
    for (long long v = 0; v <= 4; ++v)
        checksum += discrete_index(HalfCylinderProblem::make(v, Rational(1, 2)), grid).index;
    double t = seconds_since(t0);
    std::printf("discretized index, v=0..4 on default grid: %.3fs (checksum %lld)\n", t, checksum);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("openmp disabled; parallel kernels run serially\n");
#endif
    bench_sweep();
    bench_svd();
    bench_oracle();
    return 0;
}
