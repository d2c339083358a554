#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

// Explicit cycles of every length L in [2m+1, n(2m+1)] inside the Cartesian
// product C_{2m+1} x P_n, and the lifting of those cycles through a
// Hamiltonian cycle of G1 and a Hamiltonian path of G2.

namespace pancyc::product {

// c: position on the odd cycle (the grid's x-axis, 0..2m);
// p: position on the path (the y-axis, 0..n-1).
struct Coord {
  std::int64_t c = 0;
  std::int64_t p = 0;

  bool operator==(const Coord&) const = default;
};

// (c,p) ~ (c',p') iff they differ in exactly one coordinate, by 1 on the path
// or by +-1 mod 2m+1 on the cycle.
bool coords_adjacent(const Coord& a, const Coord& b, std::int64_t m);

struct ProductCheck {
  bool ok = true;
  std::string message;
};

// Distinctness, coordinate ranges, consecutive and closing adjacency, and the
// expected length.
ProductCheck check_product_cycle(std::span<const Coord> cycle, std::int64_t m,
                                 std::int64_t n, std::int64_t expected_len);

// Boustrophedon Hamiltonian cycle of the bottom k rows: column 0 rises to row
// k-1, the top row crosses all of [0, 2m], rows k-2..0 snake within [1, 2m].
// Closes with (1,0)-(0,0) for k even and the wrap edge (2m,0)-(0,0) for k odd.
// Length k(2m+1).
std::vector<Coord> snake_cycle(std::int64_t m, std::int64_t n, std::int64_t k);

// L = k(2m+1) + x with 0 <= x <= 2m; x = 0 permits k up to n, x >= 1 needs
// k <= n-1 (the construction spills into row k).
struct LengthDecomposition {
  std::int64_t k = 0;
  std::int64_t x = 0;

  static LengthDecomposition of(std::int64_t m, std::int64_t n, std::int64_t L);
};

// Exit column for the odd-remainder construction, x = 2i + 1. For odd k row 1
// is entered from the left, stops at alpha = m + i, and row 0 is walked back
// to column 0; for even k row 1 is entered from the right, stops at
// alpha = m + 1 - i, and row 0 is walked out to column 2m and closed by the
// wrap edge.
struct OddRemainderPlan {
  std::int64_t alpha = 0;
  bool wrap_exit = false;
};
OddRemainderPlan odd_remainder_plan(std::int64_t m, std::int64_t k,
                                    std::int64_t x);

// Cycle of length k(2m+1) + x for odd x in [1, 2m-1], 1 <= k <= n-1.
std::vector<Coord> cycle_odd_remainder(std::int64_t m, std::int64_t n,
                                       std::int64_t k, std::int64_t x);

// Cycle of length k(2m+1) + x for even x = 2*alpha in [2, 2m], 1 <= k <= n-1:
// alpha down-up teeth through columns 1..2*alpha-1 of rows k and k-1, the rest
// of row k-1, then the standard snake below.
std::vector<Coord> cycle_even_remainder(std::int64_t m, std::int64_t n,
                                        std::int64_t k, std::int64_t x);

// Dispatches on L = k(2m+1) + x; requires 2m+1 <= L <= n(2m+1).
std::vector<Coord> product_cycle(std::int64_t m, std::int64_t n,
                                 std::int64_t L);

using Adjacency = std::function<bool(std::int64_t, std::int64_t)>;

// Maps (c, p) -> (ham_cycle[c], ham_path[p]). The cycle must have odd length
// 2m+1 and be a cycle of G1, the path must be a path of G2; violations are
// rejected with the failing edge. The input coordinate list is validated as a
// product cycle, so the image is a cycle of the same length in G1 x G2.
std::vector<std::pair<std::int64_t, std::int64_t>> lift(
    std::span<const Coord> cycle_in_product,
    std::span<const std::int64_t> ham_cycle_g1, const Adjacency& g1_adjacent,
    std::span<const std::int64_t> ham_path_g2, const Adjacency& g2_adjacent);

// Pancyclicity of G1 x G2 from a pancyclic G1 of odd order and a
// semi-Hamiltonian G2: lengths 3..|G1| embed G1's own cycles at the path's
// first vertex, lengths |G1|+1..|G1||G2| go through product_cycle + lift.
// g1_cycles[i] must be a cycle of length i + 3; the last one (length |G1|)
// doubles as the Hamiltonian cycle used for lifting.
std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>>
product_pancyclic(std::span<const std::vector<std::int64_t>> g1_cycles,
                  const Adjacency& g1_adjacent,
                  std::span<const std::int64_t> g2_ham_path,
                  const Adjacency& g2_adjacent);

}  // namespace pancyc::product
