#include "kdirac/bgg.hpp"

#include <string>

#include "kdirac/errors.hpp"

namespace kdirac {

Weight canonical_seed(int k) {
  std::vector<Coord2> c(static_cast<std::size_t>(k + 2), -3);
  c[static_cast<std::size_t>(k + 1)] = 3;
  return Weight(k, std::move(c));
}

BggDiagram::BggDiagram(int k, const Weight& seed) : diagram_(k), seed_(seed) {
  if (seed.k() != k) {
    throw InvalidParameter("seed has k=" + std::to_string(seed.k()) +
                           ", diagram has k=" + std::to_string(k));
  }
  require_dominant(seed_, ParabolicMarking::Q, "seed weight");
  weights_.reserve(diagram_.vertices().size());
  for (const HasseVertex& v : diagram_.vertices()) {
    Weight w = seed_;
    for (const RootLabel& r : inversion_set(v, k)) w -= root_vector(r, k);
    // Every vertex weight stays Q-dominant for a Q-dominant seed; a failure
    // here means the diagram construction itself is broken.
    if (auto viol = dominance_violation(w, ParabolicMarking::Q)) {
      throw StructuralError("vertex (s=" + std::to_string(v.s) + ",t=" + std::to_string(v.t) +
                            ") received a non-Q-dominant weight: " + *viol);
    }
    weights_.push_back(std::move(w));
  }
}

const Weight& BggDiagram::weight_at(const HasseVertex& v) const {
  return weights_[diagram_.index_of(v)];
}

BggDiagram build_bgg(int k, const Weight& seed) { return BggDiagram(k, seed); }

}  // namespace kdirac
