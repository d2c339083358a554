#include <set>
#include <utility>
#include <vector>

#include <doctest.h>

#include "pancyc/cyclic_cycles.hpp"
#include "pancyc/graph.hpp"
#include "pancyc/product_cycles.hpp"

using namespace pancyc;
using product::Coord;

namespace {

// Pair-cycle checker against the Cartesian product of two adjacency oracles.
bool valid_pair_cycle(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& cycle,
    const product::Adjacency& g1_adjacent,
    const product::Adjacency& g2_adjacent) {
  if (cycle.size() < 3) return false;
  std::set<std::pair<std::int64_t, std::int64_t>> seen(cycle.begin(),
                                                       cycle.end());
  if (seen.size() != cycle.size()) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const auto& [a1, a2] = cycle[i];
    const auto& [b1, b2] = cycle[(i + 1) % cycle.size()];
    const bool move_g1 = a2 == b2 && g1_adjacent(a1, b1);
    const bool move_g2 = a1 == b1 && g2_adjacent(a2, b2);
    if (!(move_g1 || move_g2)) return false;
  }
  return true;
}

product::Adjacency ring_adjacency(std::int64_t size) {
  return [size](std::int64_t a, std::int64_t b) {
    const std::int64_t d = ((a - b) % size + size) % size;
    return d == 1 || d == size - 1;
  };
}

product::Adjacency path_adjacency() {
  return [](std::int64_t a, std::int64_t b) { return a - b == 1 || b - a == 1; };
}

}  // namespace

TEST_CASE("snake cycle base cases") {
  CHECK(product::snake_cycle(1, 1, 1) ==
        std::vector<Coord>{{0, 0}, {1, 0}, {2, 0}});

  const auto full = product::snake_cycle(2, 3, 3);
  CHECK(full.size() == 15);
  CHECK(product::check_product_cycle(full, 2, 3, 15).ok);
  // Hamiltonian: every coordinate appears.
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (const auto& v : full) seen.insert({v.c, v.p});
  CHECK(seen.size() == 15);
}

TEST_CASE("snake cycle length is k(2m+1)") {
  for (std::int64_t m = 1; m <= 4; ++m) {
    for (std::int64_t n = 1; n <= 5; ++n) {
      for (std::int64_t k = 1; k <= n; ++k) {
        const auto cycle = product::snake_cycle(m, n, k);
        CHECK(product::check_product_cycle(cycle, m, n, k * (2 * m + 1)).ok);
      }
    }
  }
}

TEST_CASE("odd remainder constructions") {
  const auto c6 = product::cycle_odd_remainder(2, 3, 1, 1);
  CHECK(product::check_product_cycle(c6, 2, 3, 6).ok);

  for (std::int64_t m = 1; m <= 5; ++m) {
    for (std::int64_t n = 2; n <= 6; ++n) {
      for (std::int64_t k = 1; k <= n - 1; ++k) {
        for (std::int64_t x = 1; x <= 2 * m - 1; x += 2) {
          const auto cycle = product::cycle_odd_remainder(m, n, k, x);
          const std::int64_t len = k * (2 * m + 1) + x;
          CHECK(product::check_product_cycle(cycle, m, n, len).ok);
          // Exit column bookkeeping: both published length formulas close.
          const auto plan = product::odd_remainder_plan(m, k, x);
          if (plan.wrap_exit) {
            CHECK(len == (k + 1) * (2 * m + 1) - 2 * (plan.alpha - 1));
          } else {
            CHECK(len == (k + 1) * (2 * m + 1) - 2 * (2 * m - plan.alpha));
          }
        }
      }
    }
  }
}

TEST_CASE("even remainder constructions") {
  const auto c7 = product::cycle_even_remainder(2, 3, 1, 2);
  CHECK(product::check_product_cycle(c7, 2, 3, 7).ok);

  // Sweep m = 3, n = 4 over every even remainder and k.
  for (std::int64_t k = 1; k <= 3; ++k) {
    for (std::int64_t x = 2; x <= 6; x += 2) {
      const auto cycle = product::cycle_even_remainder(3, 4, k, x);
      CHECK(product::check_product_cycle(cycle, 3, 4, k * 7 + x).ok);
    }
  }

  // Boundary alpha = m: the teeth reach the row end exactly.
  for (std::int64_t m = 1; m <= 5; ++m) {
    const auto cycle = product::cycle_even_remainder(m, 3, 1, 2 * m);
    CHECK(product::check_product_cycle(cycle, m, 3, (2 * m + 1) + 2 * m).ok);
  }
}

TEST_CASE("product_cycle covers the whole feasible range") {
  CHECK(product::product_cycle(1, 4, 12).size() == 12);  // Hamiltonian
  CHECK(product::product_cycle(2, 2, 5).size() == 5);    // bottom copy
  CHECK(product::product_cycle(6, 5, 38).size() == 38);  // 38 = 2*13 + 12

  for (std::int64_t m = 1; m <= 5; ++m) {
    for (std::int64_t n = 1; n <= 6; ++n) {
      for (std::int64_t L = 2 * m + 1; L <= n * (2 * m + 1); ++L) {
        const auto cycle = product::product_cycle(m, n, L);
        CHECK(product::check_product_cycle(cycle, m, n, L).ok);
      }
    }
  }
}

TEST_CASE("product_cycle rejects out-of-range lengths") {
  CHECK_THROWS_AS(product::product_cycle(2, 3, 4), std::out_of_range);
  CHECK_THROWS_AS(product::product_cycle(2, 3, 16), std::out_of_range);
}

TEST_CASE("length decomposition invariants") {
  const auto exact = product::LengthDecomposition::of(2, 3, 15);
  CHECK(exact.k == 3);
  CHECK(exact.x == 0);
  for (std::int64_t m = 1; m <= 5; ++m) {
    for (std::int64_t n = 1; n <= 6; ++n) {
      for (std::int64_t L = 2 * m + 1; L <= n * (2 * m + 1); ++L) {
        const auto [k, x] = product::LengthDecomposition::of(m, n, L);
        CHECK(L == k * (2 * m + 1) + x);
        CHECK((0 <= x && x <= 2 * m));
        CHECK((1 <= k && k <= (x == 0 ? n : n - 1)));
      }
    }
  }
  CHECK_THROWS_AS(product::LengthDecomposition::of(2, 3, 4), std::out_of_range);
}

TEST_CASE("identity lift maps coordinates to themselves") {
  const auto coords = product::product_cycle(2, 3, 11);
  std::vector<std::int64_t> cycle{0, 1, 2, 3, 4};
  std::vector<std::int64_t> path{0, 1, 2};
  const auto lifted = product::lift(coords, cycle, ring_adjacency(5), path,
                                    path_adjacency());
  REQUIRE(lifted.size() == coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    CHECK(lifted[i].first == coords[i].c);
    CHECK(lifted[i].second == coords[i].p);
  }
}

TEST_CASE("lift through P(5) produces cycles in P(5) x P3") {
  const auto p5 = graph::paley(5);
  const product::Adjacency g1 = [&](std::int64_t a, std::int64_t b) {
    return p5.adjacent(a, b);
  };
  const std::vector<std::int64_t> ham_cycle{0, 1, 2, 3, 4};
  const std::vector<std::int64_t> path{0, 1, 2};
  for (std::int64_t L = 5; L <= 15; ++L) {
    const auto coords = product::product_cycle(2, 3, L);
    const auto lifted =
        product::lift(coords, ham_cycle, g1, path, path_adjacency());
    CHECK(lifted.size() == static_cast<std::size_t>(L));
    CHECK(valid_pair_cycle(lifted, g1, path_adjacency()));
  }
}

TEST_CASE("lift rejects broken Hamiltonian structures") {
  const auto coords = product::product_cycle(2, 3, 11);
  const std::vector<std::int64_t> path{0, 1, 2};
  // Even length.
  CHECK_THROWS_AS(product::lift(coords, std::vector<std::int64_t>{0, 1, 2, 3},
                                ring_adjacency(4), path, path_adjacency()),
                  std::invalid_argument);
  // A chord that is not a ring edge.
  CHECK_THROWS_WITH_AS(
      product::lift(coords, std::vector<std::int64_t>{0, 2, 4, 1, 3},
                    ring_adjacency(5), path, path_adjacency()),
      doctest::Contains("non-edge"), std::invalid_argument);
  // Path with a gap.
  CHECK_THROWS_AS(product::lift(coords, std::vector<std::int64_t>{0, 1, 2, 3, 4},
                                ring_adjacency(5),
                                std::vector<std::int64_t>{0, 2, 1},
                                path_adjacency()),
                  std::invalid_argument);
}

TEST_CASE("product pancyclicity of the triangular prism") {
  const std::vector<std::vector<std::int64_t>> triangle_cycles{{0, 1, 2}};
  const std::vector<std::int64_t> p2{0, 1};
  const auto cycles = product::product_pancyclic(
      triangle_cycles, ring_adjacency(3), p2, path_adjacency());
  REQUIRE(cycles.size() == 4);  // lengths 3, 4, 5, 6
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    CHECK(cycles[i].size() == i + 3);
    CHECK(valid_pair_cycle(cycles[i], ring_adjacency(3), path_adjacency()));
  }
}

TEST_CASE("the overlap length comes out of both routes") {
  // |G1| = 3 embedded directly, and reconstructed through the product.
  const auto direct = product::product_cycle(1, 2, 3);
  CHECK(product::check_product_cycle(direct, 1, 2, 3).ok);
  const std::vector<std::int64_t> triangle{0, 1, 2};
  const std::vector<std::int64_t> p2{0, 1};
  const auto lifted =
      product::lift(direct, triangle, ring_adjacency(3), p2, path_adjacency());
  CHECK(valid_pair_cycle(lifted, ring_adjacency(3), path_adjacency()));
}

TEST_CASE("product pancyclicity over P(13) x P2") {
  const auto p13 = graph::paley(13);
  const product::Adjacency g1 = [&](std::int64_t a, std::int64_t b) {
    return p13.adjacent(a, b);
  };
  std::vector<std::vector<std::int64_t>> g1_cycles;
  for (const auto& cert : cyclic::pancyclic_certificates(p13)) {
    g1_cycles.push_back(cert.vertices);
  }
  const std::vector<std::int64_t> p2{0, 1};
  const auto cycles =
      product::product_pancyclic(g1_cycles, g1, p2, path_adjacency());
  REQUIRE(cycles.size() == 24);  // lengths 3..26
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    CHECK(cycles[i].size() == i + 3);
    CHECK(valid_pair_cycle(cycles[i], g1, path_adjacency()));
  }
}
