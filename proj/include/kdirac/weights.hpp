// Weight arithmetic for so(2k+4,C) in the orthogonal coordinate basis.
//
// Conventions
//   * The rank is n = k+2; a weight is its coordinate vector [c_1,...,c_n]
//     in the standard epsilon basis.
//   * Spin weights are half-integral, so every coordinate is stored DOUBLED
//     as an integer (coords2).  [-3/2,...,3/2] is stored as [-3,...,3].
//     All arithmetic stays exact; nothing in the library ever touches
//     floating point.
//   * Simple roots: a_{i,i+1} = e_i - e_{i+1} (i = 1..k+1) and
//     b_{k+1,k+2} = e_{k+1} + e_{k+2}.  General labels a(i,j) = e_i - e_j,
//     b(i,j) = e_i + e_j with 1 <= i < j <= k+2.
//   * Parabolic markings select which simple roots are crossed:
//       G : none                 (full group; dominance for all simples)
//       P : a_{k,k+1}            (isotropic k-plane Grassmannian)
//       Q : a_{k,k+1}, a_{k+1,k+2}
//       R : a_{k+1,k+2}
//     Dominance for a marking checks <lambda, alpha^v> >= 0 only for the
//     UNCROSSED simple roots.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kdirac/errors.hpp"

namespace kdirac {

using Coord2 = std::int64_t;  // one doubled coordinate

enum class ParabolicMarking { G, P, Q, R };

enum class RootKind { Alpha, Beta };  // e_i - e_j  /  e_i + e_j

// A positive root of so(2k+4,C), named by its index pair.
struct RootLabel {
  RootKind kind;
  int i = 0;  // 1-based, i < j <= k+2
  int j = 0;

  friend constexpr auto operator<=>(const RootLabel&, const RootLabel&) = default;
};

// A weight of so(2k+4,C), pinned to its rank parameter k.  Coordinates are
// doubled integers; mixing weights of different k throws InvalidParameter.
class Weight {
 public:
  Weight(int k, std::vector<Coord2> coords2);

  int k() const { return k_; }
  int size() const { return k_ + 2; }

  // 1-based doubled coordinate access.
  Coord2 at2(int m) const;
  const std::vector<Coord2>& coords2() const { return coords2_; }

  // True when every doubled coordinate is even (an integral weight).
  bool is_integral() const;
  // True when all doubled coordinates share one parity (integral or
  // strictly half-integral across the board).
  bool has_uniform_parity() const;

  Weight& operator+=(const Weight& rhs);
  Weight& operator-=(const Weight& rhs);
  friend Weight operator+(Weight lhs, const Weight& rhs) { return lhs += rhs; }
  friend Weight operator-(Weight lhs, const Weight& rhs) { return lhs -= rhs; }
  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  int k_;
  std::vector<Coord2> coords2_;
};

// Half the sum of positive roots, delta = [k+1, k, ..., 1, 0].
Weight delta(int k);

// Fundamental weight w_m, m = 1..k+2:
//   m <= k   : [1^m, 0^(k+2-m)]
//   m = k+1  : (1/2)[1,...,1,-1]
//   m = k+2  : (1/2)[1,...,1, 1]
Weight fundamental_weight(int k, int m);

// The root a(i,j) or b(i,j) as a weight vector (doubled coords, so +-2).
Weight root_vector(const RootLabel& r, int k);

// First violated dominance inequality for the marking, or nullopt when
// dominant.  The message names the inequality and both sides, e.g.
//   "lambda_2 >= lambda_3 fails (-3/2 < 1/2)".
std::optional<std::string> dominance_violation(const Weight& w, ParabolicMarking m);

bool is_dominant(const Weight& w, ParabolicMarking m);

// Throws DominanceViolation carrying the violation message when not dominant.
void require_dominant(const Weight& w, ParabolicMarking m, const std::string& context);

// Affine action of the simple reflection in b_{k+1,k+2} (the Weyl group
// element implementing the one-step wall cross):
//   phi(lambda) = s(lambda + delta) - delta,
// where s swaps the last two coordinates of lambda + delta.  An involution.
Weight affine_swap_last_two(const Weight& w);

// Renders a single doubled coordinate as an exact decimal or fraction
// ("-3" doubled -> "-3/2"; "4" doubled -> "2").  Used by error messages and
// the --half output mode.
std::string coord2_half_str(Coord2 c2);

}  // namespace kdirac
