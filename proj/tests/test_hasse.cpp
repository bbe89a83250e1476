#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "kdirac/hasse.hpp"
#include "oracles.hpp"

using namespace kdirac;

TEST_CASE("vertex and edge counts") {
  for (int k = 2; k <= 12; ++k) {
    const HasseDiagram hd(k);
    CHECK(hd.vertices().size() == static_cast<std::size_t>((k + 1) * (k + 2) / 2));
    CHECK(hd.edges().size() == static_cast<std::size_t>(k * (k + 1)));
  }
  CHECK_THROWS_AS(HasseDiagram(1), InvalidParameter);
  CHECK_THROWS_AS(HasseDiagram(0), InvalidParameter);
}

TEST_CASE("row widths form the staircase profile") {
  const HasseDiagram hd(3);
  // k=3: 1,1,2,2,2,1,1 over rows 0..6.
  const std::vector<int> expect{1, 1, 2, 2, 2, 1, 1};
  for (int i = 0; i <= 6; ++i) CHECK(hd.row_width(i) == expect[static_cast<std::size_t>(i)]);
  CHECK(hd.row_width(7) == 0);
  CHECK(hd.row_width(-1) == 0);

  const HasseDiagram hd4(4);
  const std::vector<int> expect4{1, 1, 2, 2, 3, 2, 2, 1, 1};
  for (int i = 0; i <= 8; ++i) CHECK(hd4.row_width(i) == expect4[static_cast<std::size_t>(i)]);
}

TEST_CASE("canonical vertex order is row-major with ascending columns") {
  const HasseDiagram hd(3);
  const std::vector<HasseVertex>& vs = hd.vertices();
  REQUIRE(vs.size() == 10);
  CHECK(vs[0] == HasseVertex{0, 0});
  CHECK(vs[1] == HasseVertex{1, 0});
  CHECK(vs[2] == HasseVertex{1, 1});  // A20
  CHECK(vs[3] == HasseVertex{2, 0});  // A22
  CHECK(vs[4] == HasseVertex{2, 1});  // A31
  CHECK(vs[5] == HasseVertex{3, 0});  // A33
  CHECK(vs[9] == HasseVertex{3, 3});  // A60, the sink
  for (std::size_t n = 0; n < vs.size(); ++n) CHECK(hd.index_of(vs[n]) == n);
  CHECK_THROWS_AS(hd.index_of(HasseVertex{4, 0}), InvalidParameter);
  CHECK_THROWS_AS(hd.index_of(HasseVertex{1, 2}), InvalidParameter);
}

TEST_CASE("edge labels for k=3") {
  const HasseDiagram hd(3);
  // Collect edges into a lookup keyed by (from, to).
  std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, RootLabel> by_pair;
  for (const HasseEdge& e : hd.edges()) {
    by_pair[{{e.from.s, e.from.t}, {e.to.s, e.to.t}}] = e.label;
  }
  REQUIRE(by_pair.size() == 12);
  CHECK(by_pair.at({{0, 0}, {1, 0}}) == RootLabel{RootKind::Alpha, 3, 4});
  CHECK(by_pair.at({{1, 0}, {1, 1}}) == RootLabel{RootKind::Beta, 3, 5});
  CHECK(by_pair.at({{1, 0}, {2, 0}}) == RootLabel{RootKind::Alpha, 2, 4});
  CHECK(by_pair.at({{2, 0}, {3, 0}}) == RootLabel{RootKind::Alpha, 1, 4});
  CHECK(by_pair.at({{3, 2}, {3, 3}}) == RootLabel{RootKind::Beta, 1, 5});
  // a-edges keep t, b-edges keep s; no other transitions exist.
  for (const HasseEdge& e : hd.edges()) {
    if (e.label.kind == RootKind::Alpha) {
      CHECK(e.to.s == e.from.s + 1);
      CHECK(e.to.t == e.from.t);
    } else {
      CHECK(e.to.s == e.from.s);
      CHECK(e.to.t == e.from.t + 1);
    }
  }
}

TEST_CASE("inversion sets") {
  CHECK(inversion_set(HasseVertex{0, 0}, 3).empty());
  const auto inv11 = inversion_set(HasseVertex{1, 1}, 3);
  REQUIRE(inv11.size() == 2);
  CHECK(inv11[0] == RootLabel{RootKind::Alpha, 3, 4});
  CHECK(inv11[1] == RootLabel{RootKind::Beta, 3, 5});
  // Sink: all k of each kind.
  const auto sink = inversion_set(HasseVertex{3, 3}, 3);
  REQUIRE(sink.size() == 6);
  CHECK(sink[0] == RootLabel{RootKind::Alpha, 1, 4});
  CHECK(sink[5] == RootLabel{RootKind::Beta, 3, 5});
  CHECK_THROWS_AS(inversion_set(HasseVertex{2, 3}, 3), InvalidParameter);
  CHECK_THROWS_AS(inversion_set(HasseVertex{0, 0}, 1), InvalidParameter);
}

TEST_CASE("inversion set size equals the row index") {
  for (int k = 2; k <= 8; ++k) {
    const HasseDiagram hd(k);
    for (const HasseVertex& v : hd.vertices()) {
      CHECK(inversion_set(v, k).size() == static_cast<std::size_t>(v.row()));
    }
  }
}

TEST_CASE("exhaustive path independence against the inversion formula") {
  for (int k = 2; k <= 6; ++k) {
    // Precompute the inversion-set sums.
    const HasseDiagram hd(k);
    std::map<std::pair<int, int>, Weight> expected;
    for (const HasseVertex& v : hd.vertices()) {
      Weight sum(k, std::vector<Coord2>(static_cast<std::size_t>(k + 2), 0));
      for (const RootLabel& r : inversion_set(v, k)) sum += root_vector(r, k);
      expected.emplace(std::make_pair(v.s, v.t), std::move(sum));
    }
    std::int64_t prefixes = 0;
    const std::int64_t maximal = testing::enumerate_paths(
        k, [&](const HasseVertex& v, const Weight& sum) {
          ++prefixes;
          CHECK(expected.at({v.s, v.t}) == sum);
        });
    CHECK(maximal > 0);
    if (k == 6) CHECK(maximal == 132);  // Catalan number C_6
    if (k == 3) CHECK(maximal == 5);    // C_3
  }
}

TEST_CASE("every vertex is reachable by some enumerated path") {
  const int k = 4;
  std::set<std::pair<int, int>> seen;
  testing::enumerate_paths(k, [&](const HasseVertex& v, const Weight&) {
    seen.insert({v.s, v.t});
  });
  CHECK(seen.size() == static_cast<std::size_t>(HasseDiagram::vertex_count(k)));
}
