#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kdirac/weights.hpp"

using namespace kdirac;

namespace {

Weight w(int k, std::vector<Coord2> c) { return Weight(k, std::move(c)); }

}  // namespace

TEST_CASE("weight construction pins the coordinate count to k+2") {
  CHECK_NOTHROW(w(3, {1, 2, 3, 4, 5}));
  CHECK_THROWS_AS(w(3, {1, 2, 3, 4}), InvalidParameter);
  CHECK_THROWS_AS(w(3, {1, 2, 3, 4, 5, 6}), InvalidParameter);
  CHECK_THROWS_AS(w(0, {1, 2}), InvalidParameter);
}

TEST_CASE("mixing ranks is rejected") {
  Weight a = w(2, {0, 0, 0, 0});
  Weight b = w(3, {0, 0, 0, 0, 0});
  CHECK_THROWS_AS(a += b, InvalidParameter);
}

TEST_CASE("delta") {
  CHECK(delta(3) == w(3, {8, 6, 4, 2, 0}));  // [4,3,2,1,0] doubled
  CHECK(delta(1) == w(1, {4, 2, 0}));
  CHECK(delta(5) == w(5, {12, 10, 8, 6, 4, 2, 0}));
}

TEST_CASE("fundamental weights") {
  CHECK(fundamental_weight(3, 1) == w(3, {2, 0, 0, 0, 0}));
  CHECK(fundamental_weight(3, 3) == w(3, {2, 2, 2, 0, 0}));
  CHECK(fundamental_weight(3, 4) == w(3, {1, 1, 1, 1, -1}));  // (1/2)[1,1,1,1,-1]
  CHECK(fundamental_weight(3, 5) == w(3, {1, 1, 1, 1, 1}));
  CHECK_THROWS_AS(fundamental_weight(3, 0), InvalidParameter);
  CHECK_THROWS_AS(fundamental_weight(3, 6), InvalidParameter);
}

TEST_CASE("sum of fundamental weights equals delta") {
  for (int k = 1; k <= 12; ++k) {
    Weight sum(k, std::vector<Coord2>(static_cast<std::size_t>(k + 2), 0));
    for (int m = 1; m <= k + 2; ++m) sum += fundamental_weight(k, m);
    CHECK(sum == delta(k));
  }
}

TEST_CASE("root vectors") {
  CHECK(root_vector({RootKind::Alpha, 3, 4}, 3) == w(3, {0, 0, 2, -2, 0}));
  CHECK(root_vector({RootKind::Beta, 3, 5}, 3) == w(3, {0, 0, 2, 0, 2}));
  CHECK(root_vector({RootKind::Alpha, 1, 3}, 1) == w(1, {2, 0, -2}));
  CHECK_THROWS_AS(root_vector({RootKind::Alpha, 2, 2}, 3), InvalidParameter);
  CHECK_THROWS_AS(root_vector({RootKind::Beta, 1, 7}, 3), InvalidParameter);
}

TEST_CASE("root vectors are integral and even") {
  for (int k = 2; k <= 6; ++k) {
    for (int i = 1; i <= k + 1; ++i) {
      for (int j = i + 1; j <= k + 2; ++j) {
        for (RootKind kind : {RootKind::Alpha, RootKind::Beta}) {
          CHECK(root_vector({kind, i, j}, k).is_integral());
        }
      }
    }
  }
}

TEST_CASE("dominance per marking") {
  // Q-dominant but not P-dominant: last pair (-3/2, 3/2).
  const Weight spin = w(3, {-3, -3, -3, -3, 3});
  CHECK(is_dominant(spin, ParabolicMarking::Q));
  CHECK_FALSE(is_dominant(spin, ParabolicMarking::P));
  CHECK_FALSE(is_dominant(spin, ParabolicMarking::G));

  // P-dominant: lambda_{k+1} >= |lambda_{k+2}|.
  const Weight deg0 = w(3, {-3, -5, -7, 1, 1});
  CHECK(is_dominant(deg0, ParabolicMarking::P));
  CHECK(is_dominant(deg0, ParabolicMarking::Q));

  const Weight neg_last = w(3, {-3, -7, -7, 1, -1});
  CHECK(is_dominant(neg_last, ParabolicMarking::P));

  // G-dominance needs the full chain.
  CHECK(is_dominant(w(2, {4, 2, 2, 0}), ParabolicMarking::G));
  CHECK_FALSE(is_dominant(w(2, {2, 4, 2, 0}), ParabolicMarking::G));

  // R keeps lambda_k >= lambda_{k+1} but frees the last pair ordering.
  CHECK(is_dominant(w(2, {4, 2, 0, 2}), ParabolicMarking::R));
  CHECK_FALSE(is_dominant(w(2, {4, 2, 0, -2}), ParabolicMarking::R));
  CHECK_FALSE(is_dominant(w(2, {4, 0, 2, 0}), ParabolicMarking::R));
}

TEST_CASE("dominance violations name the failed inequality") {
  const auto v1 = dominance_violation(w(3, {0, 0, 5, 0, 0}), ParabolicMarking::Q);
  REQUIRE(v1.has_value());
  CHECK(v1->find("lambda_2 >= lambda_3") != std::string::npos);

  const auto v2 = dominance_violation(w(3, {5, 4, 3, -3, 1}), ParabolicMarking::Q);
  REQUIRE(v2.has_value());
  CHECK(v2->find("lambda_4 >= -lambda_5") != std::string::npos);
  CHECK(v2->find("-3/2") != std::string::npos);

  CHECK_THROWS_AS(require_dominant(w(3, {0, 0, 5, 0, 0}), ParabolicMarking::Q, "seed"),
                  DominanceViolation);
}

TEST_CASE("affine swap of the last two coordinates") {
  // Doubled: phi adds delta (last two entries 2, 0), swaps, subtracts.
  const Weight spin = w(3, {-3, -3, -3, -3, 3});
  CHECK(affine_swap_last_two(spin) == w(3, {-3, -3, -3, 1, -1}));
  const Weight row1 = w(3, {-3, -3, -5, -1, 3});
  CHECK(affine_swap_last_two(row1) == w(3, {-3, -3, -5, 1, 1}));
}

TEST_CASE("affine swap is an involution") {
  std::mt19937 rng(20240816);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 7);
    std::vector<Coord2> c(static_cast<std::size_t>(k + 2));
    const Coord2 parity = static_cast<Coord2>(rng() % 2);
    for (auto& e : c) e = 2 * (static_cast<Coord2>(rng() % 21) - 10) + parity;
    const Weight x(k, c);
    CHECK(affine_swap_last_two(affine_swap_last_two(x)) == x);
  }
}

TEST_CASE("parity bookkeeping") {
  CHECK(w(3, {-3, -3, -3, -3, 3}).has_uniform_parity());
  CHECK_FALSE(w(3, {-3, -3, -3, -3, 2}).has_uniform_parity());
  CHECK(w(3, {2, 2, 0, 0, 0}).is_integral());
  CHECK_FALSE(w(3, {1, 1, 1, 1, 1}).is_integral());

  // Roots are integral, so adding them preserves the parity pattern.
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 5);
    std::vector<Coord2> c(static_cast<std::size_t>(k + 2));
    for (auto& e : c) e = 2 * (static_cast<Coord2>(rng() % 9) - 4) + 1;
    Weight x(k, c);
    CHECK(x.has_uniform_parity());
    const int i = 1 + static_cast<int>(rng() % (k + 1));
    const int j = i + 1 + static_cast<int>(rng() % (k + 2 - i));
    x -= root_vector({(rng() % 2 == 0) ? RootKind::Alpha : RootKind::Beta, i, j}, k);
    CHECK(x.has_uniform_parity());
  }
}

TEST_CASE("half rendering of doubled coordinates") {
  CHECK(coord2_half_str(-3) == "-3/2");
  CHECK(coord2_half_str(4) == "2");
  CHECK(coord2_half_str(0) == "0");
  CHECK(coord2_half_str(1) == "1/2");
}
