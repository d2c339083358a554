#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pancyc/graph.hpp"

// Independent certificate checking and small-instance brute-force ground
// truth. Adjacency is always recomputed from the serialized descriptor, so a
// certificate file is checkable on its own; nothing here shares code with the
// cycle constructors.

namespace pancyc::verify {

struct MalformedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enough to rebuild the host graph from scratch: either a Paley graph given by
// its field spec (squares are recomputed from the modulus), or an explicit
// Cayley graph.
struct GraphDescriptor {
  enum class Kind { paley, cayley };

  Kind kind = Kind::paley;
  ff::FieldSpec field_spec;                   // paley
  graph::Group group;                         // cayley
  std::vector<std::int64_t> connection_set;   // cayley
  std::string label;                          // cayley

  static GraphDescriptor paley(ff::FieldSpec spec);
  // Paley descriptor when g carries a Paley spec, explicit one otherwise.
  static GraphDescriptor of_graph(const graph::CayleyGraph& g);

  graph::CayleyGraph reconstruct() const;  // throws MalformedInput

  nlohmann::json to_json() const;
  static GraphDescriptor from_json(const nlohmann::json& j);
};

struct CycleCertificate {
  GraphDescriptor graph;
  std::int64_t k = 0;
  std::vector<std::int64_t> vertices;
  std::string construction;

  nlohmann::json to_json() const;
  static CycleCertificate from_json(const nlohmann::json& j);
};

enum class Failure { duplicate_vertex, non_edge, wrong_length };

struct VerifyReport {
  bool ok = true;
  std::optional<Failure> failure;
  // For duplicate_vertex: index of the repeated vertex. For non_edge: index i
  // of the pair (vertices[i], vertices[(i+1) % k]).
  std::int64_t index = -1;
  std::string message;

  static VerifyReport good() { return {}; }
  static VerifyReport bad(Failure f, std::int64_t index, std::string message);
};

const char* failure_name(Failure f);

// ok iff the vertices are distinct, every consecutive pair is adjacent, and
// the closing pair is adjacent. The host graph is rebuilt from the descriptor.
VerifyReport check_cycle(const CycleCertificate& cert);
VerifyReport check_cycle(const graph::CayleyGraph& g,
                         std::span<const std::int64_t> vertices,
                         std::int64_t claimed_k);
// Same without the closing edge; a single vertex is a valid path.
VerifyReport check_path(const graph::CayleyGraph& g,
                        std::span<const std::int64_t> vertices);

enum class Presence { present, absent, unknown };

struct CycleSpectrum {
  std::int64_t max_len = 0;
  std::vector<Presence> status;  // status[k - 3] for k in [3, max_len]

  Presence at(std::int64_t k) const;
  std::vector<std::int64_t> lengths(Presence p) const;
};

// Backtracking search with canonical-start symmetry breaking (each cycle is
// sought with its smallest vertex first and its second vertex below its last).
// Each length gets its own node budget; exhausting the budget marks the length
// unknown, never absent.
CycleSpectrum cycle_spectrum_bruteforce(const graph::CayleyGraph& g,
                                        std::int64_t max_len,
                                        std::uint64_t node_budget = 10'000'000);

}  // namespace pancyc::verify
