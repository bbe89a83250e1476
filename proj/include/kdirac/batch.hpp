// Batch verification kernels, each in a serial reference version and an
// OpenMP-parallel version that must produce identical results.
//
// Trials are independent: trial n derives its own RNG stream from
// mix(seed, n), so the schedule (serial loop, OpenMP static/dynamic chunks)
// cannot change any outcome.  Counters are exact integers, so parallel
// reduction is order-insensitive.  Tests assert serial == parallel on the
// same parameters; the bench tool times the two against each other.
//
// Kernel 1 (dirac properties): per trial draw a random polynomial spinor
// field and check, component by component,
//   factorization:  Db_l (D_l f) == Lap_ll f,
//   polarization:   Db_l (D_m f) + Db_m (D_l f) == 2 Lap_lm f on a random
//                   pair l != m (skipped when k == 1),
//   annihilation:   every D_m kills the degree-1 monogenic built from a
//                   random direction spinor.
//
// Kernel 2 (path independence): per trial pick a random vertex of the
// Hasse diagram, walk two independently sampled random paths from the top,
// and check both edge-label sums against each other and against the
// inversion-set formula.

#pragma once

#include <cstdint>

namespace kdirac {

enum class BatchMode { Serial, Parallel };

struct DiracBatchParams {
  int k = 1;
  int max_degree = 4;
  int n_terms = 6;      // monomials per random field
  int trials = 100;
  std::uint64_t seed = 1;
};

struct DiracBatchReport {
  std::int64_t factorization_pass = 0;
  std::int64_t factorization_total = 0;
  std::int64_t polarization_pass = 0;
  std::int64_t polarization_total = 0;
  std::int64_t annihilation_pass = 0;
  std::int64_t annihilation_total = 0;
  // Trials whose arithmetic threw (e.g. overflow guard); exceptions cannot
  // cross an OpenMP region, so they are tallied instead of propagated.
  std::int64_t trial_errors = 0;

  bool all_passed() const {
    return trial_errors == 0 && factorization_pass == factorization_total &&
           polarization_pass == polarization_total &&
           annihilation_pass == annihilation_total;
  }
  friend bool operator==(const DiracBatchReport&, const DiracBatchReport&) = default;
};

DiracBatchReport dirac_property_batch_serial(const DiracBatchParams& p);
DiracBatchReport dirac_property_batch_parallel(const DiracBatchParams& p);
DiracBatchReport dirac_property_batch(const DiracBatchParams& p, BatchMode mode);

struct PathBatchParams {
  int k = 4;
  int trials = 1000;  // path pairs
  std::uint64_t seed = 1;
};

struct PathBatchReport {
  std::int64_t pairs_total = 0;
  std::int64_t pairs_ok = 0;
  std::int64_t trial_errors = 0;

  bool all_passed() const { return trial_errors == 0 && pairs_ok == pairs_total; }
  friend bool operator==(const PathBatchReport&, const PathBatchReport&) = default;
};

PathBatchReport path_independence_batch_serial(const PathBatchParams& p);
PathBatchReport path_independence_batch_parallel(const PathBatchParams& p);
PathBatchReport path_independence_batch(const PathBatchParams& p, BatchMode mode);

// True when the library was built with OpenMP enabled.
bool openmp_enabled();

}  // namespace kdirac
