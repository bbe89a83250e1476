// Relative BGG diagram: the Hasse diagram with a weight attached to every
// vertex by the (rho-shifted) relative Weyl action on a seed weight.
//
// For the inversion-set parameterization used here the action collapses to
//   weight(v) = seed - sum of root_vector(r) over r in inversion_set(v),
// which is manifestly path independent.  The seed must be dominant for the
// smaller parabolic marking Q; every assigned weight is then Q-dominant
// again (asserted during construction as a structural invariant).
//
// The canonical seed is the spin-bundle inducing weight
//   (1/2)[-3,...,-3 | -3 | 3]   (doubled: [-3,...,-3,-3,3]),
// whose diagram pushes down to the k-Dirac complex; build_bgg accepts any
// Q-dominant seed (e.g. the de Rham seed 0).

#pragma once

#include <vector>

#include "kdirac/hasse.hpp"
#include "kdirac/weights.hpp"

namespace kdirac {

class BggDiagram {
 public:
  BggDiagram(int k, const Weight& seed);

  int k() const { return diagram_.k(); }
  const Weight& seed() const { return seed_; }
  const HasseDiagram& diagram() const { return diagram_; }

  // Aligned with diagram().vertices().
  const std::vector<Weight>& weights() const { return weights_; }
  const Weight& weight_at(const HasseVertex& v) const;

 private:
  HasseDiagram diagram_;
  Weight seed_;
  std::vector<Weight> weights_;
};

// Doubled [-3,...,-3,3]: the seed whose pushdown is the k-Dirac complex.
Weight canonical_seed(int k);

// Validates Q-dominance of the seed (DominanceViolation otherwise, naming
// the failed inequality) and assigns weights to all vertices.
BggDiagram build_bgg(int k, const Weight& seed);

}  // namespace kdirac
