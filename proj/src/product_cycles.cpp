#include "pancyc/product_cycles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pancyc::product {

bool coords_adjacent(const Coord& a, const Coord& b, std::int64_t m) {
  const std::int64_t ring = 2 * m + 1;
  if (a.c == b.c) return a.p - b.p == 1 || b.p - a.p == 1;
  if (a.p != b.p) return false;
  const std::int64_t d = ((a.c - b.c) % ring + ring) % ring;
  return d == 1 || d == ring - 1;
}

ProductCheck check_product_cycle(std::span<const Coord> cycle, std::int64_t m,
                                 std::int64_t n, std::int64_t expected_len) {
  if (static_cast<std::int64_t>(cycle.size()) != expected_len) {
    return {false, "expected " + std::to_string(expected_len) +
                       " coordinates, got " + std::to_string(cycle.size())};
  }
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (const auto& v : cycle) {
    if (v.c < 0 || v.c > 2 * m || v.p < 0 || v.p >= n) {
      return {false, "coordinate (" + std::to_string(v.c) + ", " +
                         std::to_string(v.p) + ") out of range"};
    }
    if (!seen.insert({v.c, v.p}).second) {
      return {false, "coordinate (" + std::to_string(v.c) + ", " +
                         std::to_string(v.p) + ") repeated"};
    }
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const auto& a = cycle[i];
    const auto& b = cycle[(i + 1) % cycle.size()];
    if (!coords_adjacent(a, b, m)) {
      return {false, "step (" + std::to_string(a.c) + "," + std::to_string(a.p) +
                         ") -> (" + std::to_string(b.c) + "," +
                         std::to_string(b.p) + ") is not a product edge"};
    }
  }
  return {true, ""};
}

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::out_of_range(what);
}

void emit_row(std::vector<Coord>& seq, std::int64_t row, std::int64_t from,
              std::int64_t to) {
  const std::int64_t step = from <= to ? 1 : -1;
  for (std::int64_t x = from;; x += step) {
    seq.push_back({x, row});
    if (x == to) break;
  }
}

}  // namespace

std::vector<Coord> snake_cycle(std::int64_t m, std::int64_t n, std::int64_t k) {
  require(m >= 1, "m must be >= 1");
  require(n >= 1, "n must be >= 1");
  require(k >= 1 && k <= n, "k must lie in [1, n]");
  std::vector<Coord> seq;
  seq.reserve(static_cast<std::size_t>(k * (2 * m + 1)));
  for (std::int64_t y = 0; y < k; ++y) seq.push_back({0, y});
  emit_row(seq, k - 1, 1, 2 * m);
  bool right_to_left = true;
  for (std::int64_t row = k - 2; row >= 0; --row) {
    if (right_to_left) {
      emit_row(seq, row, 2 * m, 1);
    } else {
      emit_row(seq, row, 1, 2 * m);
    }
    right_to_left = !right_to_left;
  }
  return seq;
}

OddRemainderPlan odd_remainder_plan(std::int64_t m, std::int64_t k,
                                    std::int64_t x) {
  const std::int64_t i = (x - 1) / 2;
  if (k % 2 == 1) return {m + i, false};
  return {m + 1 - i, true};
}

std::vector<Coord> cycle_odd_remainder(std::int64_t m, std::int64_t n,
                                       std::int64_t k, std::int64_t x) {
  require(m >= 1, "m must be >= 1");
  require(k >= 1 && k <= n - 1, "k must lie in [1, n-1]");
  require(x % 2 == 1 && x >= 1 && x <= 2 * m - 1,
          "x must be odd and lie in [1, 2m-1]");
  const auto [alpha, wrap_exit] = odd_remainder_plan(m, k, x);

  std::vector<Coord> seq;
  seq.reserve(static_cast<std::size_t>(k * (2 * m + 1) + x));
  for (std::int64_t y = 0; y <= k; ++y) seq.push_back({0, y});
  if (k == 1) {
    // Row 1 is the top row; cross only as far as the exit column.
    emit_row(seq, 1, 1, alpha);
  } else {
    emit_row(seq, k, 1, 2 * m);
    bool right_to_left = true;
    for (std::int64_t row = k - 1; row >= 2; --row) {
      if (right_to_left) {
        emit_row(seq, row, 2 * m, 1);
      } else {
        emit_row(seq, row, 1, 2 * m);
      }
      right_to_left = !right_to_left;
    }
    // Row 1 stops at the exit column; its entry side is fixed by the snake's
    // parity (left for odd k, right for even k).
    if (wrap_exit) {
      emit_row(seq, 1, 2 * m, alpha);
    } else {
      emit_row(seq, 1, 1, alpha);
    }
  }
  if (wrap_exit) {
    emit_row(seq, 0, alpha, 2 * m);  // closes through the wrap edge
  } else {
    emit_row(seq, 0, alpha, 1);  // closes with (1,0)-(0,0)
  }
  return seq;
}

std::vector<Coord> cycle_even_remainder(std::int64_t m, std::int64_t n,
                                        std::int64_t k, std::int64_t x) {
  require(m >= 1, "m must be >= 1");
  require(k >= 1 && k <= n - 1, "k must lie in [1, n-1]");
  require(x % 2 == 0 && x >= 2 && x <= 2 * m,
          "x must be even and lie in [2, 2m]");
  const std::int64_t alpha = x / 2;

  std::vector<Coord> seq;
  seq.reserve(static_cast<std::size_t>(k * (2 * m + 1) + x));
  for (std::int64_t y = 0; y <= k; ++y) seq.push_back({0, y});
  // Teeth between rows k and k-1 through columns 1..2*alpha-1.
  for (std::int64_t j = 1; j <= alpha; ++j) {
    seq.push_back({2 * j - 1, k});
    seq.push_back({2 * j - 1, k - 1});
    if (j < alpha) {
      seq.push_back({2 * j, k - 1});
      seq.push_back({2 * j, k});
    }
  }
  if (2 * alpha <= 2 * m) emit_row(seq, k - 1, 2 * alpha, 2 * m);
  bool right_to_left = true;
  for (std::int64_t row = k - 2; row >= 0; --row) {
    if (right_to_left) {
      emit_row(seq, row, 2 * m, 1);
    } else {
      emit_row(seq, row, 1, 2 * m);
    }
    right_to_left = !right_to_left;
  }
  return seq;
}

LengthDecomposition LengthDecomposition::of(std::int64_t m, std::int64_t n,
                                            std::int64_t L) {
  require(m >= 1 && n >= 1, "m and n must be >= 1");
  require(L >= 2 * m + 1 && L <= n * (2 * m + 1),
          "L must lie in [2m+1, n(2m+1)]");
  const std::int64_t ring = 2 * m + 1;
  return {L / ring, L % ring};
}

std::vector<Coord> product_cycle(std::int64_t m, std::int64_t n,
                                 std::int64_t L) {
  const auto [k, x] = LengthDecomposition::of(m, n, L);
  std::vector<Coord> seq;
  if (x == 0) {
    seq = snake_cycle(m, n, k);
  } else if (x % 2 == 1) {
    seq = cycle_odd_remainder(m, n, k, x);
  } else {
    seq = cycle_even_remainder(m, n, k, x);
  }
  const auto check = check_product_cycle(seq, m, n, L);
  if (!check.ok) {
    throw std::logic_error("product cycle construction failed: " +
                           check.message);
  }
  return seq;
}

namespace {

void validate_cycle(std::span<const std::int64_t> cycle,
                    const Adjacency& adjacent, const std::string& who,
                    bool require_odd = false) {
  if (cycle.size() < 3) {
    throw std::invalid_argument(who + " must have length >= 3");
  }
  if (require_odd && cycle.size() % 2 == 0) {
    throw std::invalid_argument(who + " must have odd length");
  }
  std::set<std::int64_t> seen(cycle.begin(), cycle.end());
  if (seen.size() != cycle.size()) {
    throw std::invalid_argument(who + " repeats a vertex");
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const std::int64_t a = cycle[i];
    const std::int64_t b = cycle[(i + 1) % cycle.size()];
    if (!adjacent(a, b)) {
      throw std::invalid_argument(who + " has a non-edge (" +
                                  std::to_string(a) + ", " +
                                  std::to_string(b) + ")");
    }
  }
}

void validate_path(std::span<const std::int64_t> path,
                   const Adjacency& adjacent, const std::string& who) {
  if (path.empty()) throw std::invalid_argument(who + " must be non-empty");
  std::set<std::int64_t> seen(path.begin(), path.end());
  if (seen.size() != path.size()) {
    throw std::invalid_argument(who + " repeats a vertex");
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!adjacent(path[i], path[i + 1])) {
      throw std::invalid_argument(who + " has a non-edge (" +
                                  std::to_string(path[i]) + ", " +
                                  std::to_string(path[i + 1]) + ")");
    }
  }
}

}  // namespace

std::vector<std::pair<std::int64_t, std::int64_t>> lift(
    std::span<const Coord> cycle_in_product,
    std::span<const std::int64_t> ham_cycle_g1, const Adjacency& g1_adjacent,
    std::span<const std::int64_t> ham_path_g2, const Adjacency& g2_adjacent) {
  validate_cycle(ham_cycle_g1, g1_adjacent, "G1 Hamiltonian cycle",
                 /*require_odd=*/true);
  validate_path(ham_path_g2, g2_adjacent, "G2 Hamiltonian path");
  const std::int64_t m =
      (static_cast<std::int64_t>(ham_cycle_g1.size()) - 1) / 2;
  const std::int64_t n = static_cast<std::int64_t>(ham_path_g2.size());
  const auto check =
      check_product_cycle(cycle_in_product, m, n,
                          static_cast<std::int64_t>(cycle_in_product.size()));
  if (!check.ok) {
    throw std::invalid_argument("input is not a product cycle: " +
                                check.message);
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  out.reserve(cycle_in_product.size());
  for (const auto& v : cycle_in_product) {
    out.emplace_back(ham_cycle_g1[static_cast<std::size_t>(v.c)],
                     ham_path_g2[static_cast<std::size_t>(v.p)]);
  }
  return out;
}

std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>>
product_pancyclic(std::span<const std::vector<std::int64_t>> g1_cycles,
                  const Adjacency& g1_adjacent,
                  std::span<const std::int64_t> g2_ham_path,
                  const Adjacency& g2_adjacent) {
  if (g1_cycles.empty()) {
    throw std::invalid_argument("G1 cycle certificates missing");
  }
  const std::int64_t n1 = static_cast<std::int64_t>(g1_cycles.back().size());
  if (n1 % 2 == 0) {
    throw std::invalid_argument("G1 must have odd order");
  }
  if (static_cast<std::int64_t>(g1_cycles.size()) != n1 - 2) {
    throw std::invalid_argument("G1 cycles must cover every length in [3, |G1|]");
  }
  for (std::size_t i = 0; i < g1_cycles.size(); ++i) {
    if (static_cast<std::int64_t>(g1_cycles[i].size()) !=
        static_cast<std::int64_t>(i) + 3) {
      throw std::invalid_argument("G1 cycle list out of order at length " +
                                  std::to_string(i + 3));
    }
  }
  validate_path(g2_ham_path, g2_adjacent, "G2 Hamiltonian path");
  const std::int64_t n2 = static_cast<std::int64_t>(g2_ham_path.size());
  const std::int64_t m = (n1 - 1) / 2;

  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> out;
  out.reserve(static_cast<std::size_t>(n1 * n2 - 2));
  const std::int64_t base = g2_ham_path.front();
  for (const auto& cycle : g1_cycles) {
    validate_cycle(cycle, g1_adjacent, "G1 cycle");
    std::vector<std::pair<std::int64_t, std::int64_t>> embedded;
    embedded.reserve(cycle.size());
    for (auto v : cycle) embedded.emplace_back(v, base);
    out.push_back(std::move(embedded));
  }
  for (std::int64_t L = n1 + 1; L <= n1 * n2; ++L) {
    const auto coords = product_cycle(m, n2, L);
    out.push_back(
        lift(coords, g1_cycles.back(), g1_adjacent, g2_ham_path, g2_adjacent));
  }
  return out;
}

}  // namespace pancyc::product
