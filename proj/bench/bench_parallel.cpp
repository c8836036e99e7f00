// Compares the OpenMP kernels against their serial references on the
// exhaustive spark / RIP / l0 searches.  Not a ctest; run by hand:
//   ./build/bench/bench_parallel [n] [k]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mimocs/cs_analysis.hpp"
#include "mimocs/recovery.hpp"
#include "mimocs/sensing.hpp"

using namespace mimocs;
using clock_type = std::chrono::steady_clock;

namespace {

template <typename F>
double time_ms(F&& f) {
  const auto t0 = clock_type::now();
  f();
  const auto t1 = clock_type::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms, bool agree) {
  std::printf("%-18s %10.2f ms %10.2f ms   x%.2f   %s\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms, agree ? "agree" : "DISAGREE");
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 16;
  const int k = argc > 2 ? std::atoi(argv[2]) : 4;
  const Mat g = complex_gaussian(n / 2, n, 1.0 / std::sqrt(n / 2.0), 99);

#ifdef _OPENMP
  std::printf("threads: %d, ", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP disabled), ");
#endif
  std::printf("matrix %dx%d, k = %d\n", n / 2, n, k);

  SparkReport sp_s, sp_p;
  const double t_sp_s = time_ms([&] { sp_s = spark_serial(g); });
  const double t_sp_p = time_ms([&] { sp_p = spark(g); });
  row("spark", t_sp_s, t_sp_p,
      sp_s.spark == sp_p.spark && sp_s.witness == sp_p.witness);

  RipReport rip_s, rip_p;
  const double t_rip_s = time_ms([&] { rip_s = rip_constant_serial(g, k); });
  const double t_rip_p = time_ms([&] { rip_p = rip_constant(g, k); });
  row("rip_constant", t_rip_s, t_rip_p,
      rip_s.delta == rip_p.delta &&
          rip_s.extremal_support == rip_p.extremal_support);

  // l0 parallelizes internally; compare against a single-thread run
  Vec x = Vec::Zero(n);
  for (int j = 0; j < k; ++j) x(2 * j) = cd(1.0, -0.5);
  const Vec y = g * x;
  RecoveryResult rec_p = l0_exhaustive(g, y, k);
  const double t_l0_p = time_ms([&] { rec_p = l0_exhaustive(g, y, k); });
#ifdef _OPENMP
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
#endif
  RecoveryResult rec_s = l0_exhaustive(g, y, k);
  const double t_l0_s = time_ms([&] { rec_s = l0_exhaustive(g, y, k); });
#ifdef _OPENMP
  omp_set_num_threads(saved);
#endif
  row("l0_exhaustive", t_l0_s, t_l0_p, rec_s.support == rec_p.support);

  return 0;
}
