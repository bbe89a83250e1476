// The Hasse diagram of the relative Weyl group W^q_p for the parabolic pair
// q <= p in so(2k+4,C).
//
// Vertices are parameterized by coset invariants (s,t) with 0 <= t <= s <= k:
//   s counts the a-type reflections applied, t the b-type ones.
// Displayed labels follow the staircase grid: row i = s+t (top row 0),
// column j = s-t, printed "A{i}{j}".  The diagram is a ranked poset with
//   (s,t) -> (s+1,t)  labeled a(k-s, k+1)   (down-right in the staircase)
//   (s,t) -> (s,t+1)  labeled b(k-t, k+2)   (down-left, needs t < s)
// so every saturated chain from the top A00 to a vertex has length s+t, and
// the multiset of edge labels along any path to a fixed vertex sums to the
// same root vector (path independence; tested exhaustively).
//
// |vertices| = (k+1)(k+2)/2, |edges| = k(k+1).

#pragma once

#include <cstddef>
#include <vector>

#include "kdirac/weights.hpp"

namespace kdirac {

struct HasseVertex {
  int s = 0;
  int t = 0;

  int row() const { return s + t; }  // i
  int col() const { return s - t; }  // j

  friend constexpr auto operator<=>(const HasseVertex&, const HasseVertex&) = default;
};

struct HasseEdge {
  HasseVertex from;
  HasseVertex to;
  RootLabel label;
};

class HasseDiagram {
 public:
  explicit HasseDiagram(int k);

  int k() const { return k_; }

  // Vertices in canonical order: by row, then by column ascending.
  const std::vector<HasseVertex>& vertices() const { return vertices_; }
  // Edges in canonical order: grouped by source vertex (canonical order),
  // b-edge before a-edge.
  const std::vector<HasseEdge>& edges() const { return edges_; }

  bool contains(const HasseVertex& v) const;
  // Position of v in vertices(); throws InvalidParameter for foreign vertices.
  std::size_t index_of(const HasseVertex& v) const;

  // Number of vertices in row i (0 <= i <= 2k).
  int row_width(int i) const;

  static int vertex_count(int k) { return (k + 1) * (k + 2) / 2; }
  static int edge_count(int k) { return k * (k + 1); }

 private:
  int k_;
  std::vector<HasseVertex> vertices_;
  std::vector<HasseEdge> edges_;
};

// The inversion set of the coset word at (s,t):
//   { a(m, k+1) : k-s+1 <= m <= k }  u  { b(m, k+2) : k-t+1 <= m <= k },
// sorted a-labels first, ascending in m.  Size s+t = row(v).
std::vector<RootLabel> inversion_set(const HasseVertex& v, int k);

}  // namespace kdirac
