#include "kdirac/pushdown.hpp"

#include <algorithm>
#include <string>

#include "kdirac/dims.hpp"
#include "kdirac/errors.hpp"

namespace kdirac {

namespace {

// Degree-0/1 payloads are P-dominant by construction; a failure is a broken
// internal invariant, not bad input.
void assert_p_dominant(const Weight& w, const char* where) {
  if (auto viol = dominance_violation(w, ParabolicMarking::P)) {
    throw StructuralError(std::string(where) + ": payload is not P-dominant: " + *viol);
  }
}

Coord2 first_k_sum2(const Weight& w) {
  Coord2 s = 0;
  for (int m = 1; m <= w.k(); ++m) s += w.at2(m);
  return s;
}

}  // namespace

DirectImage direct_image(const Weight& lambda) {
  require_dominant(lambda, ParabolicMarking::Q, "direct_image input");
  const int k = lambda.k();
  // Doubled shifted coordinates: (lambda + delta)_{k+1} = lambda2_{k+1} + 2,
  // (lambda + delta)_{k+2} = lambda2_{k+2}.
  const Coord2 a = lambda.at2(k + 1) + 2;
  const Coord2 b = lambda.at2(k + 2);
  if (((a - b) % 2 + 2) % 2 != 0) {
    throw StructuralError("direct_image: shifted coordinates " + coord2_half_str(a) + ", " +
                          coord2_half_str(b) + " differ in parity; no case applies");
  }
  if (a == b) return DirectImage{std::nullopt, std::nullopt};
  if (a > b) {
    // The shifted weight is already in the P-dominant chamber: degree 0.
    assert_p_dominant(lambda, "direct_image degree 0");
    return DirectImage{ImageDegree::Degree0, lambda};
  }
  Weight phi = affine_swap_last_two(lambda);
  assert_p_dominant(phi, "direct_image degree 1");
  return DirectImage{ImageDegree::Degree1, std::move(phi)};
}

ModuleDescriptor descriptor_from_weight(const Weight& lambda) {
  require_dominant(lambda, ParabolicMarking::P, "descriptor_from_weight input");
  const int k = lambda.k();
  const Coord2 a2 = lambda.at2(k + 1) - lambda.at2(k + 2);
  const Coord2 b2 = lambda.at2(k + 1) + lambda.at2(k + 2);
  if (a2 % 2 != 0 || b2 % 2 != 0) {
    throw InvalidParameter("descriptor_from_weight: so(4) part (" + coord2_half_str(a2) + "," +
                           coord2_half_str(b2) + ") is not an integral dominant weight");
  }
  ModuleDescriptor d;
  d.so4_a = a2 / 2;
  d.so4_b = b2 / 2;
  // sl(k) only sees coordinate differences, so shift the minimal (= last,
  // the coordinates are nonincreasing) entry to 0.  Differences of
  // uniform-parity coordinates are even, hence the halved entries are
  // integers.
  d.slk_hw.reserve(static_cast<std::size_t>(k));
  const Coord2 base = lambda.at2(k);
  for (int m = 1; m <= k; ++m) {
    const Coord2 rel2 = lambda.at2(m) - base;
    if (rel2 % 2 != 0) {
      throw InvalidParameter("descriptor_from_weight: sl(k) entry gap " + coord2_half_str(rel2) +
                             " is not an integer");
    }
    d.slk_hw.push_back(rel2 / 2);
  }
  return d;
}

ModuleDescriptor closed_descriptor(int k, int i, int j) {
  if (k < 2) throw InvalidParameter("closed_descriptor needs k >= 2, got " + std::to_string(k));
  ModuleDescriptor d;
  if (i == 0 || i == 1) {
    // The two spinor-valued sources.  Position 0: trivial sl(k) part with
    // so4 (1,0); position 1: the k-dimensional module labeled [1,...,1,0]
    // (the shift normalization of [-3,...,-3,-5]) with so4 (0,1).
    if (j != i) {
      throw InvalidParameter("closed_descriptor: source term " + std::to_string(i) +
                             " sits in column " + std::to_string(i) + ", not " + std::to_string(j));
    }
    d.slk_hw.assign(static_cast<std::size_t>(k), 0);
    if (i == 1) {
      for (int m = 0; m < k - 1; ++m) d.slk_hw[static_cast<std::size_t>(m)] = 1;
    }
    d.so4_a = (i == 0) ? 1 : 0;
    d.so4_b = (i == 0) ? 0 : 1;
    return d;
  }
  if (i < 3 || i > 2 * k || j < 0 || j > i || (i - j) % 2 != 0 || i + j > 2 * k) {
    throw InvalidParameter("closed_descriptor: (i=" + std::to_string(i) + ",j=" +
                           std::to_string(j) + ") is not a staircase position for k=" +
                           std::to_string(k));
  }
  const int twos = k - (i + j) / 2;
  const int ones = j;
  d.slk_hw.assign(static_cast<std::size_t>(k), 0);
  for (int m = 0; m < twos; ++m) d.slk_hw[static_cast<std::size_t>(m)] = 2;
  for (int m = twos; m < twos + ones; ++m) d.slk_hw[static_cast<std::size_t>(m)] = 1;
  // Shift so the minimum entry is 0 (collapses when the zero block is empty).
  const std::int64_t mn = *std::min_element(d.slk_hw.begin(), d.slk_hw.end());
  for (auto& e : d.slk_hw) e -= mn;
  d.so4_a = i - 3;
  d.so4_b = j;
  return d;
}

int operator_order(const Weight& src, const Weight& dst) {
  if (src.k() != dst.k()) {
    throw InvalidParameter("operator_order: weights have different k (" +
                           std::to_string(src.k()) + " vs " + std::to_string(dst.k()) + ")");
  }
  const Coord2 drop2 = first_k_sum2(src) - first_k_sum2(dst);
  if (drop2 <= 0 || drop2 % 2 != 0) {
    throw StructuralError("operator_order: grading sum does not drop by a positive integer (" +
                          coord2_half_str(drop2) + "); the complex is not decreasing");
  }
  return static_cast<int>(drop2 / 2);
}

namespace {

// One term under assembly: the descriptor data plus a payload representative
// (for the operator-order computation between consecutive terms).
struct TermData {
  ComplexTerm term;
  Weight representative;
  Coord2 sum2;  // first-k doubled sum shared by all payloads of the term
};

}  // namespace

ComplexDescriptor build_complex(int k) {
  const BggDiagram bgg = build_bgg(k, canonical_seed(k));
  const HasseDiagram& hd = bgg.diagram();

  std::vector<TermData> terms;

  auto push_module = [&](TermData& td, const Weight& payload, int pos_i, int pos_j) {
    if (first_k_sum2(payload) != td.sum2) {
      throw StructuralError("complex assembly: grading sum differs inside the term at position " +
                            std::to_string(pos_i));
    }
    ModuleDescriptor got = descriptor_from_weight(payload);
    const ModuleDescriptor want = closed_descriptor(k, pos_i, pos_j);
    if (!(got == want)) {
      throw StructuralError("complex assembly: weight-route descriptor disagrees with the "
                            "closed form at (i=" + std::to_string(pos_i) +
                            ",j=" + std::to_string(pos_j) + ")");
    }
    got.dim = dim_module(got);
    td.term.columns.push_back(pos_j);
    td.term.modules.push_back(std::move(got));
  };

  // Rows 0 and 1 contribute their degree-1 images as the two leading terms;
  // row 2 must die entirely; rows >= 3 keep their weights in degree 0.
  for (int i = 0; i <= 2 * k; ++i) {
    if (i == 2) continue;
    std::optional<TermData> td;
    for (const HasseVertex& v : hd.vertices()) {
      if (v.row() != i) continue;
      const DirectImage im = direct_image(bgg.weight_at(v));
      const ImageDegree expect = (i < 2) ? ImageDegree::Degree1 : ImageDegree::Degree0;
      if (im.empty() || *im.degree != expect) {
        throw StructuralError("complex assembly: vertex (s=" + std::to_string(v.s) +
                              ",t=" + std::to_string(v.t) + ") has the wrong direct image class");
      }
      if (!td) td = TermData{ComplexTerm{i, {}, {}}, *im.weight, first_k_sum2(*im.weight)};
      push_module(*td, *im.weight, i, v.col());
    }
    terms.push_back(std::move(*td));
  }
  for (const HasseVertex& v : hd.vertices()) {
    if (v.row() != 2) continue;
    if (!direct_image(bgg.weight_at(v)).empty()) {
      throw StructuralError("complex assembly: row 2 vertex (s=" + std::to_string(v.s) +
                            ",t=" + std::to_string(v.t) + ") unexpectedly has a direct image");
    }
  }

  ComplexDescriptor out;
  out.k = k;
  out.orders.reserve(terms.size() - 1);
  for (std::size_t n = 0; n + 1 < terms.size(); ++n) {
    out.orders.push_back(operator_order(terms[n].representative, terms[n + 1].representative));
  }
  out.terms.reserve(terms.size());
  for (auto& td : terms) out.terms.push_back(std::move(td.term));
  return out;
}

}  // namespace kdirac
