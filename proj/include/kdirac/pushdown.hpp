// Direct images along the fibration G/Q -> G/P and assembly of the
// pushed-down complex.
//
// The fiber direction contributes one wall, crossed by the affine action
// phi(lambda) = s(lambda + delta) - delta (swap of the last two shifted
// coordinates).  For a Q-dominant lambda exactly one of three cases holds,
// decided by the shifted coordinates A = lambda2_{k+1} + 2, B = lambda2_{k+2}
// (doubled units):
//   A > B : lambda itself is P-dominant        -> degree 0, payload lambda
//   A = B : lambda + delta sits on the wall    -> no direct image
//   A < B : phi(lambda) is P-dominant          -> degree 1, payload phi(lambda)
// The trichotomy is exhaustive only when A and B have equal parity; all
// weights produced by the diagram pipeline do (uniform-parity coordinates),
// and a mixed-parity input trips a defensive StructuralError instead of a
// silent wrong answer.
//
// A P-dominant payload is summarized by a ModuleDescriptor: the sl(k) part
// (first k coordinates, shifted so the minimum entry is 0) and the
// so(4) ~ sl(2)+sl(2) part (a,b) = (lambda_{k+1}-lambda_{k+2},
// lambda_{k+1}+lambda_{k+2}).  For the canonical seed the descriptor at
// staircase position (i,j), i >= 3, also has the closed form
//   slk: [2^(k-(i+j)/2), 1^j, 0^((i-j)/2)] shifted to minimum 0,
//   so4: (i-3, j),
// and rows 0,1 carry the two spinor-valued source modules.  Both routes are
// compared entry-by-entry when assembling the complex.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kdirac/bgg.hpp"
#include "kdirac/weights.hpp"

namespace kdirac {

enum class ImageDegree { Degree0, Degree1 };

// Result of pushing one vertex weight down: which cohomology degree survives
// (if any) and the P-dominant payload weight.
struct DirectImage {
  std::optional<ImageDegree> degree;  // nullopt = no direct image
  std::optional<Weight> weight;       // present iff degree is

  bool empty() const { return !degree.has_value(); }
};

// Classifies a Q-dominant weight (DominanceViolation otherwise).
DirectImage direct_image(const Weight& lambda);

// Finite-dimensional inducing module of the Levi factor sl(k) + so(4) + C.
struct ModuleDescriptor {
  std::vector<std::int64_t> slk_hw;  // nonincreasing, min entry 0
  std::int64_t so4_a = 0;            // both >= 0
  std::int64_t so4_b = 0;
  std::int64_t dim = 0;              // 0 until filled in by the dims module

  friend bool operator==(const ModuleDescriptor& x, const ModuleDescriptor& y) {
    return x.slk_hw == y.slk_hw && x.so4_a == y.so4_a && x.so4_b == y.so4_b;
  }
};

// Reads the descriptor off a P-dominant weight (dim left unfilled).
// Requires integral (a,b); half-integral sl(k) parts are fine since only
// coordinate differences matter there.
ModuleDescriptor descriptor_from_weight(const Weight& lambda);

// Closed form for the canonical-seed complex: position (i,j) with either
// i in {0,1} (the spinor sources, j = i) or 3 <= i <= 2k.  Independent of
// the weight route; used as its cross-check.
ModuleDescriptor closed_descriptor(int k, int i, int j);

// Order of the operator between consecutive terms: half the drop of the
// doubled first-k coordinate sum, src -> dst.  Must be a positive integer
// (StructuralError otherwise: the complex would not be decreasing).
int operator_order(const Weight& src, const Weight& dst);

struct ComplexTerm {
  int position = 0;                       // staircase row index i
  std::vector<int> columns;               // j per module, ascending
  std::vector<ModuleDescriptor> modules;  // aligned with columns, dims filled
};

// The pushed-down complex for the canonical seed: 2k terms at positions
// {0, 1, 3, 4, ..., 2k} (row 2 dies), with operator orders between
// consecutive terms (all 1 except the second arrow, order 2).
struct ComplexDescriptor {
  int k = 0;
  std::vector<ComplexTerm> terms;
  std::vector<int> orders;  // size terms.size() - 1
};

ComplexDescriptor build_complex(int k);

}  // namespace kdirac
