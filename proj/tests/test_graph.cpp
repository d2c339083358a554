#include <random>
#include <sstream>
#include <variant>

#include <doctest.h>

#include "pancyc/graph.hpp"

using namespace pancyc;

TEST_CASE("P(5) is the 5-cycle") {
  const auto g = graph::paley(5);
  CHECK(g.order() == 5);
  CHECK(g.connection_set() == std::vector<std::int64_t>{1, 4});
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(4, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree() == 2);
}

TEST_CASE("P(13) adjacency follows the squares") {
  const auto g = graph::paley(13);
  CHECK(g.neighbors(0) == std::vector<std::int64_t>{1, 3, 4, 9, 10, 12});
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK_FALSE(g.adjacent(5, 5));
}

TEST_CASE("Paley graphs demand q = 1 mod 4") {
  CHECK_THROWS_AS(graph::paley(7), std::invalid_argument);
  CHECK_THROWS_AS(graph::paley(27), std::invalid_argument);
}

TEST_CASE("generalized Paley graphs") {
  const auto p13 = graph::paley(13);
  const auto gp2 = graph::generalized_paley(ff::FieldSpec::make(13, 1), 2);
  CHECK(gp2.connection_set() == p13.connection_set());

  const auto gp3 = graph::generalized_paley(ff::FieldSpec::make(13, 1), 3);
  CHECK(gp3.connection_set() == std::vector<std::int64_t>{1, 5, 8, 12});
  CHECK(gp3.degree() == 4);

  // Fourth powers mod 13 are {1, 3, 9}: not closed under negation.
  CHECK_THROWS_WITH_AS(
      graph::generalized_paley(ff::FieldSpec::make(13, 1), 4),
      doctest::Contains("not closed under negation"), std::invalid_argument);

  // Fourth powers in GF(9) are {1, 2}, which span only the prime field.
  CHECK_THROWS_WITH_AS(graph::generalized_paley(ff::FieldSpec::make(3, 2), 4),
                       doctest::Contains("do not generate"),
                       std::invalid_argument);
}

TEST_CASE("connection set validation") {
  using graph::CayleyGraph;
  using graph::Group;
  CHECK_THROWS_AS(CayleyGraph(Group::cyclic(6), {0, 1, 5}, "bad"),
                  std::invalid_argument);
  CHECK_THROWS_AS(CayleyGraph(Group::cyclic(6), {1, 2}, "asym"),
                  std::invalid_argument);
  CHECK_THROWS_AS(CayleyGraph(Group::cyclic(8), {4}, "subgroup"),
                  std::invalid_argument);
}

TEST_CASE("adjacency is symmetric and irreflexive") {
  std::mt19937 rng(11);
  const auto graphs = {
      graph::paley(13), graph::paley(17),
      graph::generalized_paley(ff::FieldSpec::make(13, 1), 3),
      graph::CayleyGraph(graph::Group::cyclic(6), {1, 5}, "C6")};
  for (const auto& g : graphs) {
    std::uniform_int_distribution<std::int64_t> dist(0, g.order() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const std::int64_t u = dist(rng);
      const std::int64_t v = dist(rng);
      CHECK(g.adjacent(u, v) == g.adjacent(v, u));
      CHECK_FALSE(g.adjacent(u, u));
    }
  }
}

TEST_CASE("common neighbors of named pairs in P(13)") {
  const auto g = graph::paley(13);
  const auto cn05 = g.common_neighbors(0, 5);
  CHECK(cn05 == std::vector<std::int64_t>{1, 4, 9});  // contains 9
  const auto cn06 = g.common_neighbors(0, 6);
  REQUIRE(!cn06.empty());
  CHECK(std::find(cn06.begin(), cn06.end(), 3) != cn06.end());
  CHECK(graph::paley(5).common_neighbors(0, 2).size() == 1);
  CHECK_THROWS_AS(g.common_neighbors(4, 4), std::domain_error);
}

TEST_CASE("strongly regular parameters by exhaustive counting") {
  const auto r13 = graph::verify_srg(graph::paley(13));
  REQUIRE(std::holds_alternative<graph::SrgParams>(r13));
  CHECK(std::get<graph::SrgParams>(r13) == graph::SrgParams{13, 6, 2, 3});

  const auto r9 = graph::verify_srg(graph::paley(9));
  REQUIRE(std::holds_alternative<graph::SrgParams>(r9));
  CHECK(std::get<graph::SrgParams>(r9) == graph::SrgParams{9, 4, 1, 2});

  // The hexagon is not strongly regular: non-adjacent pairs disagree.
  const auto hexagon =
      graph::CayleyGraph(graph::Group::cyclic(6), {1, 5}, "C6");
  CHECK(std::holds_alternative<graph::SrgViolation>(graph::verify_srg(hexagon)));
}

TEST_CASE("Paley SRG formula for every valid q up to 49") {
  for (std::int64_t q : {5LL, 9LL, 13LL, 17LL, 25LL, 29LL, 37LL, 41LL, 49LL}) {
    const auto result = graph::verify_srg(graph::paley(q));
    REQUIRE(std::holds_alternative<graph::SrgParams>(result));
    CHECK(std::get<graph::SrgParams>(result) ==
          graph::SrgParams{q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4});
  }
}

TEST_CASE("common neighbor counts match lambda and mu") {
  for (std::int64_t q : {9LL, 13LL, 17LL, 25LL, 29LL, 37LL, 41LL, 49LL}) {
    const auto g = graph::paley(q);
    for (std::int64_t u = 0; u < q; ++u) {
      for (std::int64_t v = u + 1; v < q; ++v) {
        const auto count =
            static_cast<std::int64_t>(g.common_neighbors(u, v).size());
        CHECK(count == (g.adjacent(u, v) ? (q - 5) / 4 : (q - 1) / 4));
      }
    }
  }
}

TEST_CASE("triple neighborhood condition") {
  CHECK(graph::check_triple_condition(graph::paley(13)).holds);
  CHECK(graph::check_triple_condition(graph::paley(17)).holds);

  const auto gp3 = graph::generalized_paley(ff::FieldSpec::make(13, 1), 3);
  const auto result = graph::check_triple_condition(gp3);
  REQUIRE_FALSE(result.holds);
  REQUIRE(result.witness.has_value());
  const auto [x, y, z] = *result.witness;
  // Recheck the witness: pairwise independent and below the bound.
  CHECK_FALSE(gp3.adjacent(x, y));
  CHECK_FALSE(gp3.adjacent(x, z));
  CHECK_FALSE(gp3.adjacent(y, z));
  const auto common =
      static_cast<std::int64_t>(gp3.common_neighbors(x, y).size());
  CHECK(2 * gp3.degree() - common + gp3.degree() < gp3.order());

  // No independent triple at all: vacuously true.
  const auto k5 =
      graph::CayleyGraph(graph::Group::cyclic(5), {1, 2, 3, 4}, "K5");
  CHECK(graph::check_triple_condition(k5).holds);
}

TEST_CASE("edge list export") {
  std::ostringstream out;
  graph::write_edge_list(graph::paley(5), out);
  CHECK(out.str() == "0 1\n0 4\n1 2\n2 3\n3 4\n");
}
