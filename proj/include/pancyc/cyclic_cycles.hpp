#pragma once

#include <cstdint>
#include <vector>

#include "pancyc/graph.hpp"
#include "pancyc/verify.hpp"

// Constructive cycle engine for Cay(Z/m, S) whose connection set contains a
// generator and meets the common-neighbor hypotheses: an explicit C_k vertex
// sequence for every 3 <= k <= m.

namespace pancyc::cyclic {

// The graph after applying the automorphism v -> v * x^{-1} that moves the
// smallest generator x of S onto 1.
struct NormalizedCyclicCayley {
  std::int64_t m = 0;
  std::vector<std::int64_t> s;        // sorted, contains 1
  std::vector<std::uint8_t> member;   // indexed by group element
  std::int64_t sigma_inverse = 1;     // the generator x; normalized vertex v
                                      // corresponds to original vertex v * x

  bool contains(std::int64_t d) const {
    return d > 0 && d < m && member[static_cast<std::size_t>(d)];
  }
  bool adjacent(std::int64_t u, std::int64_t v) const {
    return contains(((u - v) % m + m) % m);
  }
  std::vector<std::int64_t> common_neighbors(std::int64_t u,
                                             std::int64_t v) const;
  // Normalized label back to the original graph's label.
  std::int64_t to_original(std::int64_t v) const { return v * sigma_inverse % m; }
};

// Requires a cyclic group and at least one unit in S; picks the smallest such
// unit for determinism. Throws std::invalid_argument otherwise.
NormalizedCyclicCayley normalize(const graph::CayleyGraph& g);

// k = 3: [0, 1, b] with b the smallest common neighbor of the edge (0, 1).
// k = 4: [u, b1, v, b2] for the first pair (u, v) in lexicographic order with
// two common neighbors b1 < b2. Throws when the needed pair does not exist.
std::vector<std::int64_t> cycle_small(const NormalizedCyclicCayley& g, int k);

// The alpha-splice: routes the path 0..n-2 through the smallest common
// neighbor alpha of (0, n-2), substituting alpha <- n-3 when alpha = 1.
// Requires 5 <= n <= m.
std::vector<std::int64_t> cycle_alpha_splice(const NormalizedCyclicCayley& g,
                                             std::int64_t n);

// One verified certificate per length k = 3..m, labeled in the original
// graph's vertices. Checks the hypotheses first: a generator in S, every pair
// of vertices with a common neighbor, some pair with two.
std::vector<verify::CycleCertificate> pancyclic_certificates(
    const graph::CayleyGraph& g);

}  // namespace pancyc::cyclic
