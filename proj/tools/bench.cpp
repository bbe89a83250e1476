// Benchmark: serial reference vs OpenMP lane of the batch kernels.
//
// Both lanes derive every trial's RNG stream from the trial index, so the
// reports must match bit for bit; the benchmark verifies that before it
// prints any timing.  Counters are exact integers, which keeps the parallel
// reduction order-insensitive.
//
//   kdirac-bench [--threads N] [--trials N] [--seed S]

#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include <CLI11.hpp>

#include "kdirac/batch.hpp"

namespace {

double now_seconds() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

template <typename Fn>
double time_once(Fn&& fn) {
  const double t0 = now_seconds();
  fn();
  return now_seconds() - t0;
}

void print_row(const std::string& name, double serial_s, double parallel_s) {
  std::cout << std::left << std::setw(26) << name << std::right << std::fixed
            << std::setprecision(3) << std::setw(10) << serial_s << " s" << std::setw(10)
            << parallel_s << " s" << std::setw(9) << std::setprecision(2)
            << (parallel_s > 0 ? serial_s / parallel_s : 0.0) << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"timing comparison of the serial and OpenMP batch kernels"};
  int threads = 0;
  int trials = 0;
  std::uint64_t seed = 42;
  app.add_option("--threads", threads, "OpenMP thread count (0 = runtime default)");
  app.add_option("--trials", trials, "trial count override (0 = per-kernel defaults)");
  app.add_option("--seed", seed, "RNG seed");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
  std::cout << "OpenMP enabled, max threads " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without OpenMP: parallel lane falls back to the serial loop\n";
#endif

  std::cout << std::left << std::setw(26) << "kernel" << std::right << std::setw(12) << "serial"
            << std::setw(12) << "parallel" << std::setw(10) << "speedup" << "\n";

  {
    kdirac::DiracBatchParams p;
    p.k = 3;
    p.max_degree = 5;
    p.n_terms = 10;
    p.trials = (trials > 0) ? trials : 400;
    p.seed = seed;
    kdirac::DiracBatchReport rs, rp;
    const double ts = time_once([&] { rs = kdirac::dirac_property_batch_serial(p); });
    const double tp = time_once([&] { rp = kdirac::dirac_property_batch_parallel(p); });
    if (!(rs == rp)) {
      std::cerr << "MISMATCH: dirac batch reports differ between lanes\n";
      return 1;
    }
    print_row("dirac properties (k=3)", ts, tp);
    if (!rs.all_passed()) {
      std::cerr << "WARNING: dirac property failures in the benchmark run\n";
      return 1;
    }
  }

  {
    kdirac::PathBatchParams p;
    p.k = 40;
    p.trials = (trials > 0) ? trials : 200000;
    p.seed = seed;
    kdirac::PathBatchReport rs, rp;
    const double ts = time_once([&] { rs = kdirac::path_independence_batch_serial(p); });
    const double tp = time_once([&] { rp = kdirac::path_independence_batch_parallel(p); });
    if (!(rs == rp)) {
      std::cerr << "MISMATCH: path batch reports differ between lanes\n";
      return 1;
    }
    print_row("path independence (k=40)", ts, tp);
    if (!rs.all_passed()) {
      std::cerr << "WARNING: path independence failures in the benchmark run\n";
      return 1;
    }
  }

  std::cout << "lanes agree bit for bit\n";
  return 0;
}
