#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pancyc/ff.hpp"

// Cayley graphs over additive groups (Z/m and GF(p^n)), with adjacency
// computed from the connection set rather than materialized. Vertices are
// exposed as canonical integer encodings.

namespace pancyc::graph {

// Additive group of vertex encodings: either Z/m, or the additive group of
// GF(p^n) (encodings combine coefficient-wise mod p).
struct Group {
  enum class Kind { cyclic, field };

  Kind kind = Kind::cyclic;
  std::int64_t m = 0;        // group order
  ff::FieldSpec field_spec;  // set when kind == field

  static Group cyclic(std::int64_t m);
  static Group field_additive(ff::FieldSpec spec);

  std::int64_t order() const { return m; }
  std::int64_t add(std::int64_t u, std::int64_t v) const;
  std::int64_t sub(std::int64_t u, std::int64_t v) const;
  std::int64_t neg(std::int64_t u) const;

  bool operator==(const Group&) const = default;
};

class CayleyGraph {
 public:
  // Checks 0 not in S, S = -S, and that S generates the group; throws
  // std::invalid_argument naming the violated condition.
  CayleyGraph(Group group, std::vector<std::int64_t> connection_set,
              std::string label);

  const Group& group() const { return group_; }
  std::int64_t order() const { return group_.order(); }
  std::int64_t degree() const {
    return static_cast<std::int64_t>(connection_set_.size());
  }
  const std::vector<std::int64_t>& connection_set() const {
    return connection_set_;
  }
  const std::string& label() const { return label_; }

  bool in_connection_set(std::int64_t d) const;
  bool adjacent(std::int64_t u, std::int64_t v) const;
  std::vector<std::int64_t> neighbors(std::int64_t u) const;  // sorted
  // Sorted by canonical encoding; throws std::domain_error when u == v.
  std::vector<std::int64_t> common_neighbors(std::int64_t u,
                                             std::int64_t v) const;

  // Group order when the group is cyclic (Z/m, or GF(p) with n == 1).
  std::optional<std::int64_t> cyclic_order() const;

  // Set when constructed by paley(); lets certificates carry the compact
  // "reconstruct squares from the modulus" descriptor.
  const std::optional<ff::FieldSpec>& paley_spec() const { return paley_spec_; }

 private:
  Group group_;
  std::vector<std::int64_t> connection_set_;  // sorted
  std::vector<std::uint8_t> member_;          // indexed by encoding
  std::string label_;
  std::optional<ff::FieldSpec> paley_spec_;

  friend CayleyGraph paley(const ff::FieldSpec&);
};

// P(q) = Cay(F_q, squares); requires q = p^n congruent 1 mod 4.
CayleyGraph paley(const ff::FieldSpec& spec);
CayleyGraph paley(std::int64_t q);

// Cay(F_q, (F_q^*)^k); the k-th powers must be closed under negation and must
// generate F_q.
CayleyGraph generalized_paley(const ff::FieldSpec& spec, std::int64_t k);

struct SrgParams {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;

  bool operator==(const SrgParams&) const = default;
};

struct SrgViolation {
  std::int64_t u = 0;
  std::int64_t v = 0;
  std::string reason;
};

// Exhaustive O(v^2 k) common-neighbor count over all pairs.
std::variant<SrgParams, SrgViolation> verify_srg(const CayleyGraph& g);

struct TripleWitness {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;
};

struct TripleCondition {
  bool holds = true;
  std::optional<TripleWitness> witness;
};

// Checks |N(x) u N(y)| + d(z) >= |G| over every independent triple x, y, z;
// on failure reports a violating triple.
TripleCondition check_triple_condition(const CayleyGraph& g);

// One "u v" pair per line, canonical integer encodings, u < v.
void write_edge_list(const CayleyGraph& g, std::ostream& out);

}  // namespace pancyc::graph
