// Serial reference scan against the OpenMP scan over the full b2 range.

#include "betti/feasibility.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

namespace {

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  long lo = argc > 1 ? std::atol(argv[1]) : 3;
  long hi = argc > 2 ? std::atol(argv[2]) : betti::kScanMax;
  int reps = argc > 3 ? std::atoi(argv[3]) : 3;

  std::vector<betti::ScanRow> serial, parallel;
  double t_serial = 1e300, t_parallel = 1e300;
  for (int r = 0; r < reps; ++r) {
    t_serial = std::min(t_serial, seconds([&] { serial = betti::scan_serial(lo, hi); }));
    t_parallel = std::min(t_parallel, seconds([&] { parallel = betti::scan(lo, hi); }));
  }
  bool same = serial == parallel;
  std::printf("scan [%ld, %ld], %d threads, best of %d\n", lo, hi, omp_get_max_threads(), reps);
  std::printf("  serial   %.4f s\n", t_serial);
  std::printf("  parallel %.4f s  (speedup %.2fx)\n", t_parallel, t_serial / t_parallel);
  std::printf("  outputs %s\n", same ? "identical" : "DIFFER");
  return same ? 0 : 1;
}
