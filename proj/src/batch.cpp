#include "kdirac/batch.hpp"

#include <optional>
#include <vector>

#include "kdirac/bgg.hpp"
#include "kdirac/dirac4.hpp"
#include "kdirac/errors.hpp"
#include "kdirac/hasse.hpp"
#include "kdirac/weights.hpp"

namespace kdirac {

namespace {

// Every trial owns an RNG stream seeded by mixing the batch seed with the
// trial index, so results cannot depend on execution order.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t bounded(std::uint64_t& state, std::uint64_t n) { return splitmix64(state) % n; }

struct DiracTrialOutcome {
  bool factorization = false;
  bool polarization = false;  // meaningful only when k >= 2
  bool annihilation = false;
};

DiracTrialOutcome run_dirac_trial(const DiracBatchParams& p, std::uint64_t trial_seed) {
  std::uint64_t state = trial_seed;
  DiracTrialOutcome out;

  const PolySpinorField f = random_field(p.k, p.max_degree, p.n_terms, splitmix64(state));

  out.factorization = true;
  for (int l = 1; l <= p.k; ++l) {
    if (!(conjugate_dirac_component(dirac_component(f, l), l) == laplacian_component(f, l))) {
      out.factorization = false;
      break;
    }
  }

  if (p.k >= 2) {
    const int l = 1 + static_cast<int>(bounded(state, static_cast<std::uint64_t>(p.k)));
    int m = 1 + static_cast<int>(bounded(state, static_cast<std::uint64_t>(p.k - 1)));
    if (m >= l) ++m;
    // Db_l D_m + Db_m D_l == 2 Lap_lm: the polarized factorization identity.
    PolySpinorField lhs = conjugate_dirac_component(dirac_component(f, m), l);
    lhs += conjugate_dirac_component(dirac_component(f, l), m);
    PolySpinorField rhs = mixed_laplacian(f, l, m);
    rhs += mixed_laplacian(f, l, m);
    out.polarization = lhs == rhs;
  }

  Spinor v{};
  do {
    for (auto& z : v) {
      z.re = Rational(static_cast<std::int64_t>(bounded(state, 7)) - 3);
      z.im = Rational(static_cast<std::int64_t>(bounded(state, 7)) - 3);
    }
  } while (spinor_is_zero(v));
  const int lm = 1 + static_cast<int>(bounded(state, static_cast<std::uint64_t>(p.k)));
  const PolySpinorField g = degree_one_monogenic(p.k, lm, v);
  out.annihilation = true;
  for (const PolySpinorField& dg : dirac_k(g)) {
    if (!dg.is_zero()) {
      out.annihilation = false;
      break;
    }
  }
  return out;
}

// Exceptions must not cross an OpenMP region, so a throwing trial is not
// propagated but recorded; both lanes use this wrapper and therefore agree
// even when something inside a trial breaks.
std::optional<DiracTrialOutcome> run_dirac_trial_safe(const DiracBatchParams& p,
                                                      std::uint64_t trial_seed) {
  try {
    return run_dirac_trial(p, trial_seed);
  } catch (...) {
    return std::nullopt;
  }
}

void check_dirac_params(const DiracBatchParams& p) {
  if (p.k < 1) throw InvalidParameter("dirac batch needs k >= 1");
  if (p.trials < 1) throw InvalidParameter("dirac batch needs trials >= 1");
  if (p.max_degree < 1) throw InvalidParameter("dirac batch needs max_degree >= 1");
  if (p.n_terms < 1) throw InvalidParameter("dirac batch needs n_terms >= 1");
}

// ---- path kernel -----------------------------------------------------------

// Walks one random monotone path (0,0) -> target and returns the sum of the
// edge-label root vectors.
Weight random_path_sum(const HasseVertex& target, int k, std::uint64_t& state) {
  Weight sum(k, std::vector<Coord2>(static_cast<std::size_t>(k + 2), 0));
  HasseVertex at{0, 0};
  while (at != target) {
    const bool can_s = at.s < target.s;
    const bool can_t = at.t < target.t && at.t < at.s;
    bool take_s;
    if (can_s && can_t) {
      take_s = bounded(state, 2) == 0;
    } else if (can_s) {
      take_s = true;
    } else if (can_t) {
      take_s = false;
    } else {
      throw StructuralError("path sampler wedged before reaching its target vertex");
    }
    if (take_s) {
      sum += root_vector(RootLabel{RootKind::Alpha, k - at.s, k + 1}, k);
      at.s += 1;
    } else {
      sum += root_vector(RootLabel{RootKind::Beta, k - at.t, k + 2}, k);
      at.t += 1;
    }
  }
  return sum;
}

bool run_path_trial(int k, std::uint64_t trial_seed) {
  std::uint64_t state = trial_seed;
  // Random vertex below the top: anything except index 0.
  const HasseDiagram hd(k);
  const std::size_t n = hd.vertices().size();
  const HasseVertex v = hd.vertices()[1 + bounded(state, n - 1)];

  const Weight sum1 = random_path_sum(v, k, state);
  const Weight sum2 = random_path_sum(v, k, state);

  Weight inv_sum(k, std::vector<Coord2>(static_cast<std::size_t>(k + 2), 0));
  for (const RootLabel& r : inversion_set(v, k)) inv_sum += root_vector(r, k);

  return sum1 == sum2 && sum1 == inv_sum;
}

std::optional<bool> run_path_trial_safe(int k, std::uint64_t trial_seed) {
  try {
    return run_path_trial(k, trial_seed);
  } catch (...) {
    return std::nullopt;
  }
}

void check_path_params(const PathBatchParams& p) {
  if (p.k < 2) throw InvalidParameter("path batch needs k >= 2");
  if (p.trials < 1) throw InvalidParameter("path batch needs trials >= 1");
}

}  // namespace

DiracBatchReport dirac_property_batch_serial(const DiracBatchParams& p) {
  check_dirac_params(p);
  std::int64_t fp = 0, ft = 0, cp = 0, ct = 0, ap = 0, at = 0, err = 0;
  for (int n = 0; n < p.trials; ++n) {
    const auto o = run_dirac_trial_safe(p, mix_seed(p.seed, static_cast<std::uint64_t>(n)));
    if (!o) {
      err += 1;
      continue;
    }
    ft += 1;
    fp += o->factorization ? 1 : 0;
    if (p.k >= 2) {
      ct += 1;
      cp += o->polarization ? 1 : 0;
    }
    at += 1;
    ap += o->annihilation ? 1 : 0;
  }
  return DiracBatchReport{fp, ft, cp, ct, ap, at, err};
}

DiracBatchReport dirac_property_batch_parallel(const DiracBatchParams& p) {
  check_dirac_params(p);
  std::int64_t fp = 0, ft = 0, cp = 0, ct = 0, ap = 0, at = 0, err = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : fp, ft, cp, ct, ap, at, err)
  for (int n = 0; n < p.trials; ++n) {
    const auto o = run_dirac_trial_safe(p, mix_seed(p.seed, static_cast<std::uint64_t>(n)));
    if (!o) {
      err += 1;
      continue;
    }
    ft += 1;
    fp += o->factorization ? 1 : 0;
    if (p.k >= 2) {
      ct += 1;
      cp += o->polarization ? 1 : 0;
    }
    at += 1;
    ap += o->annihilation ? 1 : 0;
  }
  return DiracBatchReport{fp, ft, cp, ct, ap, at, err};
}

DiracBatchReport dirac_property_batch(const DiracBatchParams& p, BatchMode mode) {
  return mode == BatchMode::Serial ? dirac_property_batch_serial(p)
                                   : dirac_property_batch_parallel(p);
}

PathBatchReport path_independence_batch_serial(const PathBatchParams& p) {
  check_path_params(p);
  std::int64_t total = 0, ok = 0, err = 0;
  for (int n = 0; n < p.trials; ++n) {
    const auto o = run_path_trial_safe(p.k, mix_seed(p.seed, static_cast<std::uint64_t>(n)));
    if (!o) {
      err += 1;
      continue;
    }
    total += 1;
    ok += *o ? 1 : 0;
  }
  return PathBatchReport{total, ok, err};
}

PathBatchReport path_independence_batch_parallel(const PathBatchParams& p) {
  check_path_params(p);
  std::int64_t total = 0, ok = 0, err = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total, ok, err)
  for (int n = 0; n < p.trials; ++n) {
    const auto o = run_path_trial_safe(p.k, mix_seed(p.seed, static_cast<std::uint64_t>(n)));
    if (!o) {
      err += 1;
      continue;
    }
    total += 1;
    ok += *o ? 1 : 0;
  }
  return PathBatchReport{total, ok, err};
}

PathBatchReport path_independence_batch(const PathBatchParams& p, BatchMode mode) {
  return mode == BatchMode::Serial ? path_independence_batch_serial(p)
                                   : path_independence_batch_parallel(p);
}

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace kdirac
