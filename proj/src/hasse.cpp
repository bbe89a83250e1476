#include "kdirac/hasse.hpp"

#include <algorithm>
#include <string>

#include "kdirac/errors.hpp"

namespace kdirac {

namespace {

void check_vertex(const HasseVertex& v, int k) {
  if (v.t < 0 || v.t > v.s || v.s > k) {
    throw InvalidParameter("vertex (s=" + std::to_string(v.s) + ",t=" + std::to_string(v.t) +
                           ") outside the triangle 0 <= t <= s <= " + std::to_string(k));
  }
}

}  // namespace

HasseDiagram::HasseDiagram(int k) : k_(k) {
  if (k < 2) {
    throw InvalidParameter("relative Hasse diagram needs k >= 2, got " + std::to_string(k));
  }
  // Rows top-down; within a row, columns ascending means t descending.
  for (int i = 0; i <= 2 * k; ++i) {
    const int t_hi = i / 2;
    const int t_lo = std::max(0, i - k);
    for (int t = t_hi; t >= t_lo; --t) vertices_.push_back(HasseVertex{i - t, t});
  }
  for (const HasseVertex& v : vertices_) {
    if (v.t < v.s) {
      edges_.push_back(HasseEdge{v, HasseVertex{v.s, v.t + 1},
                                 RootLabel{RootKind::Beta, k_ - v.t, k_ + 2}});
    }
    if (v.s < k_) {
      edges_.push_back(HasseEdge{v, HasseVertex{v.s + 1, v.t},
                                 RootLabel{RootKind::Alpha, k_ - v.s, k_ + 1}});
    }
  }
}

bool HasseDiagram::contains(const HasseVertex& v) const {
  return v.t >= 0 && v.t <= v.s && v.s <= k_;
}

std::size_t HasseDiagram::index_of(const HasseVertex& v) const {
  check_vertex(v, k_);
  // Rows 0..row(v)-1 first, then offset of v inside its row (t descending).
  const int i = v.row();
  std::size_t idx = 0;
  for (int r = 0; r < i; ++r) idx += static_cast<std::size_t>(row_width(r));
  idx += static_cast<std::size_t>(i / 2 - v.t);
  return idx;
}

int HasseDiagram::row_width(int i) const {
  if (i < 0 || i > 2 * k_) return 0;
  return i / 2 - std::max(0, i - k_) + 1;
}

std::vector<RootLabel> inversion_set(const HasseVertex& v, int k) {
  if (k < 2) throw InvalidParameter("inversion_set needs k >= 2, got " + std::to_string(k));
  check_vertex(v, k);
  std::vector<RootLabel> inv;
  inv.reserve(static_cast<std::size_t>(v.s + v.t));
  for (int m = k - v.s + 1; m <= k; ++m) inv.push_back(RootLabel{RootKind::Alpha, m, k + 1});
  for (int m = k - v.t + 1; m <= k; ++m) inv.push_back(RootLabel{RootKind::Beta, m, k + 2});
  return inv;
}

}  // namespace kdirac
