#include "pancyc/verify.hpp"

#include <algorithm>
#include <unordered_set>

namespace pancyc::verify {

namespace {

nlohmann::json group_to_json(const graph::Group& g) {
  if (g.kind == graph::Group::Kind::cyclic) {
    return {{"type", "cyclic"}, {"m", g.m}};
  }
  return {{"type", "field"},
          {"p", g.field_spec.p},
          {"n", g.field_spec.n},
          {"modulus", g.field_spec.modulus}};
}

graph::Group group_from_json(const nlohmann::json& j) {
  const auto type = j.at("type").get<std::string>();
  if (type == "cyclic") {
    return graph::Group::cyclic(j.at("m").get<std::int64_t>());
  }
  if (type == "field") {
    auto spec = ff::FieldSpec::with_modulus(j.at("p").get<std::int64_t>(),
                                            j.at("n").get<int>(),
                                            j.at("modulus").get<ff::Poly>());
    return graph::Group::field_additive(std::move(spec));
  }
  throw MalformedInput("unknown group type: " + type);
}

}  // namespace

GraphDescriptor GraphDescriptor::paley(ff::FieldSpec spec) {
  GraphDescriptor d;
  d.kind = Kind::paley;
  d.field_spec = std::move(spec);
  return d;
}

GraphDescriptor GraphDescriptor::of_graph(const graph::CayleyGraph& g) {
  if (g.paley_spec()) return paley(*g.paley_spec());
  GraphDescriptor d;
  d.kind = Kind::cayley;
  d.group = g.group();
  d.connection_set = g.connection_set();
  d.label = g.label();
  return d;
}

graph::CayleyGraph GraphDescriptor::reconstruct() const {
  try {
    if (kind == Kind::paley) return graph::paley(field_spec);
    return graph::CayleyGraph(group, connection_set, label);
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(std::string("bad graph descriptor: ") + e.what());
  }
}

nlohmann::json GraphDescriptor::to_json() const {
  if (kind == Kind::paley) {
    return {{"kind", "paley"},
            {"p", field_spec.p},
            {"n", field_spec.n},
            {"modulus", field_spec.modulus}};
  }
  return {{"kind", "cayley"},
          {"group", group_to_json(group)},
          {"connection_set", connection_set},
          {"label", label}};
}

GraphDescriptor GraphDescriptor::from_json(const nlohmann::json& j) {
  try {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "paley") {
      return paley(ff::FieldSpec::with_modulus(j.at("p").get<std::int64_t>(),
                                               j.at("n").get<int>(),
                                               j.at("modulus").get<ff::Poly>()));
    }
    if (kind == "cayley") {
      GraphDescriptor d;
      d.kind = Kind::cayley;
      d.group = group_from_json(j.at("group"));
      d.connection_set = j.at("connection_set").get<std::vector<std::int64_t>>();
      d.label = j.value("label", "");
      return d;
    }
    throw MalformedInput("unknown graph descriptor kind: " + kind);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("bad graph descriptor JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(std::string("bad graph descriptor: ") + e.what());
  }
}

nlohmann::json CycleCertificate::to_json() const {
  return {{"graph", graph.to_json()},
          {"k", k},
          {"vertices", vertices},
          {"construction", construction}};
}

CycleCertificate CycleCertificate::from_json(const nlohmann::json& j) {
  try {
    CycleCertificate cert;
    cert.graph = GraphDescriptor::from_json(j.at("graph"));
    cert.k = j.at("k").get<std::int64_t>();
    cert.vertices = j.at("vertices").get<std::vector<std::int64_t>>();
    cert.construction = j.value("construction", "");
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("bad certificate JSON: ") + e.what());
  }
}

VerifyReport VerifyReport::bad(Failure f, std::int64_t index,
                               std::string message) {
  VerifyReport r;
  r.ok = false;
  r.failure = f;
  r.index = index;
  r.message = std::move(message);
  return r;
}

const char* failure_name(Failure f) {
  switch (f) {
    case Failure::duplicate_vertex:
      return "duplicate-vertex";
    case Failure::non_edge:
      return "non-edge";
    case Failure::wrong_length:
      return "wrong-length";
  }
  return "?";
}

namespace {

void check_vertex_range(const graph::CayleyGraph& g,
                        std::span<const std::int64_t> vertices) {
  for (auto v : vertices) {
    if (v < 0 || v >= g.order()) {
      throw MalformedInput("vertex encoding " + std::to_string(v) +
                           " outside [0, " + std::to_string(g.order()) + ")");
    }
  }
}

std::optional<VerifyReport> find_duplicate(
    std::span<const std::int64_t> vertices) {
  std::unordered_set<std::int64_t> seen;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!seen.insert(vertices[i]).second) {
      return VerifyReport::bad(
          Failure::duplicate_vertex, static_cast<std::int64_t>(i),
          "vertex " + std::to_string(vertices[i]) + " repeated at index " +
              std::to_string(i));
    }
  }
  return std::nullopt;
}

}  // namespace

VerifyReport check_cycle(const graph::CayleyGraph& g,
                         std::span<const std::int64_t> vertices,
                         std::int64_t claimed_k) {
  check_vertex_range(g, vertices);
  if (claimed_k < 3 || static_cast<std::int64_t>(vertices.size()) != claimed_k) {
    return VerifyReport::bad(
        Failure::wrong_length, static_cast<std::int64_t>(vertices.size()),
        "claimed k = " + std::to_string(claimed_k) + " but " +
            std::to_string(vertices.size()) + " vertices listed");
  }
  if (auto dup = find_duplicate(vertices)) return *dup;
  const auto k = static_cast<std::int64_t>(vertices.size());
  for (std::int64_t i = 0; i < k; ++i) {
    const std::int64_t a = vertices[static_cast<std::size_t>(i)];
    const std::int64_t b = vertices[static_cast<std::size_t>((i + 1) % k)];
    if (!g.adjacent(a, b)) {
      return VerifyReport::bad(Failure::non_edge, i,
                               "pair (" + std::to_string(a) + ", " +
                                   std::to_string(b) + ") at index " +
                                   std::to_string(i) + " is not an edge");
    }
  }
  return VerifyReport::good();
}

VerifyReport check_cycle(const CycleCertificate& cert) {
  const graph::CayleyGraph host = cert.graph.reconstruct();
  return check_cycle(host, cert.vertices, cert.k);
}

VerifyReport check_path(const graph::CayleyGraph& g,
                        std::span<const std::int64_t> vertices) {
  check_vertex_range(g, vertices);
  if (auto dup = find_duplicate(vertices)) return *dup;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    if (!g.adjacent(vertices[i], vertices[i + 1])) {
      return VerifyReport::bad(
          Failure::non_edge, static_cast<std::int64_t>(i),
          "pair (" + std::to_string(vertices[i]) + ", " +
              std::to_string(vertices[i + 1]) + ") at index " +
              std::to_string(i) + " is not an edge");
    }
  }
  return VerifyReport::good();
}

Presence CycleSpectrum::at(std::int64_t k) const {
  if (k < 3 || k > max_len) throw std::out_of_range("length out of range");
  return status[static_cast<std::size_t>(k - 3)];
}

std::vector<std::int64_t> CycleSpectrum::lengths(Presence p) const {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 3; k <= max_len; ++k) {
    if (at(k) == p) out.push_back(k);
  }
  return out;
}

namespace {

struct CycleSearch {
  const graph::CayleyGraph& g;
  std::int64_t target_len;
  std::uint64_t budget;
  bool found = false;
  bool exhausted = false;
  std::vector<std::int64_t> path;
  std::vector<std::uint8_t> visited;

  CycleSearch(const graph::CayleyGraph& graph, std::int64_t len,
              std::uint64_t node_budget)
      : g(graph),
        target_len(len),
        budget(node_budget),
        visited(static_cast<std::size_t>(graph.order()), 0) {}

  void dfs() {
    if (found) return;
    if (budget == 0) {
      exhausted = true;
      return;
    }
    --budget;
    const std::int64_t last = path.back();
    if (static_cast<std::int64_t>(path.size()) == target_len) {
      // Reflection breaking: second vertex below the last one.
      if (path[1] < path.back() && g.adjacent(last, path.front())) {
        found = true;
      }
      return;
    }
    for (auto w : g.neighbors(last)) {
      if (w <= path.front()) continue;  // smallest vertex starts the cycle
      if (visited[static_cast<std::size_t>(w)]) continue;
      visited[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      dfs();
      path.pop_back();
      visited[static_cast<std::size_t>(w)] = 0;
      if (found || exhausted) return;
    }
  }

  Presence run() {
    for (std::int64_t start = 0; start + target_len <= g.order(); ++start) {
      std::fill(visited.begin(), visited.end(), 0);
      visited[static_cast<std::size_t>(start)] = 1;
      path.assign(1, start);
      dfs();
      if (found) return Presence::present;
      if (exhausted) return Presence::unknown;
    }
    return Presence::absent;
  }
};

}  // namespace

CycleSpectrum cycle_spectrum_bruteforce(const graph::CayleyGraph& g,
                                        std::int64_t max_len,
                                        std::uint64_t node_budget) {
  max_len = std::min(max_len, g.order());
  CycleSpectrum spectrum;
  spectrum.max_len = max_len;
  for (std::int64_t k = 3; k <= max_len; ++k) {
    CycleSearch search(g, k, node_budget);
    spectrum.status.push_back(search.run());
  }
  return spectrum;
}

}  // namespace pancyc::verify
