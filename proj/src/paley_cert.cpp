#include "pancyc/paley_cert.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "pancyc/cyclic_cycles.hpp"
#include "pancyc/product_cycles.hpp"

namespace pancyc::paley {

namespace {

// Verifies against a host graph the caller reconstructed once from the
// descriptor; check_cycle(cert) would rebuild it per certificate.
verify::CycleCertificate make_verified(const verify::GraphDescriptor& host,
                                       const graph::CayleyGraph& host_graph,
                                       std::vector<std::int64_t> vertices,
                                       std::string tag) {
  verify::CycleCertificate cert{host,
                                static_cast<std::int64_t>(vertices.size()),
                                std::move(vertices), std::move(tag)};
  const auto report = verify::check_cycle(host_graph, cert.vertices, cert.k);
  if (!report.ok) {
    throw std::logic_error("constructed C_" + std::to_string(cert.k) +
                           " failed verification: " + report.message);
  }
  return cert;
}

}  // namespace

SquareBasis square_basis(const ff::Field& field) {
  const std::int64_t q = field.order();
  const std::int64_t q0 = field.p();
  const int n = field.n();

  SquareBasis basis;
  // span[code] = element with the current partial basis coordinates "code".
  std::vector<std::int64_t> span{0};
  std::unordered_set<std::int64_t> in_span{0};
  for (std::int64_t a = 1; a < q && static_cast<int>(basis.f.size()) < n; ++a) {
    if (in_span.contains(a) || !field.is_square(a)) continue;
    basis.f.push_back(a);
    std::vector<std::int64_t> grown;
    grown.reserve(span.size() * static_cast<std::size_t>(q0));
    for (std::int64_t c = 0; c < q0; ++c) {
      const std::int64_t ca = field.scalar_mul(c, a);
      for (auto e : span) {
        const std::int64_t sum = field.add(e, ca);
        grown.push_back(sum);
        in_span.insert(sum);
      }
    }
    span = std::move(grown);
  }
  if (static_cast<int>(basis.f.size()) != n) {
    throw std::logic_error("square basis incomplete");  // squares generate F_q
  }
  return basis;
}

Subspace span_of(const ff::Field& field, std::span<const std::int64_t> basis) {
  Subspace w;
  w.basis.assign(basis.begin(), basis.end());
  w.elements.assign(1, 0);
  for (auto b : basis) {
    std::vector<std::int64_t> grown;
    grown.reserve(w.elements.size() * static_cast<std::size_t>(field.p()));
    // Coordinate code ordering: earlier basis vectors vary fastest.
    for (std::int64_t c = 0; c < field.p(); ++c) {
      const std::int64_t cb = field.scalar_mul(c, b);
      for (auto e : w.elements) grown.push_back(field.add(e, cb));
    }
    w.elements = std::move(grown);
  }
  return w;
}

graph::CayleyGraph induced_subgraph(const graph::CayleyGraph& paley_graph,
                                    const Subspace& w) {
  if (!paley_graph.paley_spec()) {
    throw std::invalid_argument("induced_subgraph expects a Paley graph");
  }
  const auto& spec = *paley_graph.paley_spec();
  const auto d = static_cast<int>(w.basis.size());
  std::vector<std::int64_t> connection;
  for (std::size_t code = 1; code < w.elements.size(); ++code) {
    if (paley_graph.in_connection_set(w.elements[code])) {
      connection.push_back(static_cast<std::int64_t>(code));
    }
  }
  auto group =
      graph::Group::field_additive(ff::FieldSpec::make(spec.p, d));
  return graph::CayleyGraph(std::move(group), std::move(connection),
                            paley_graph.label() + " on subspace of dim " +
                                std::to_string(d));
}

std::vector<std::int64_t> semi_hamiltonian_path_wstar(const ff::Field& field,
                                                      const SquareBasis& basis,
                                                      int i) {
  if (i < 1 || i > field.n() - 1) {
    throw std::out_of_range("W* level must lie in [1, n-1]");
  }
  const std::int64_t q0 = field.p();
  const std::int64_t m = (q0 - 1) / 2;

  const product::Adjacency square_adjacent = [&field](std::int64_t a,
                                                      std::int64_t b) {
    return a != b && field.is_kth_power(field.sub(a, b), 2);
  };

  // Base level: the f_1 line, a q0-cycle with its closing edge dropped.
  std::vector<std::int64_t> path;
  path.reserve(static_cast<std::size_t>(q0));
  for (std::int64_t c = 0; c < q0; ++c) {
    path.push_back(field.scalar_mul(c, basis.f[1]));
  }
  for (int level = 2; level <= i; ++level) {
    std::vector<std::int64_t> line;
    line.reserve(static_cast<std::size_t>(q0));
    for (std::int64_t c = 0; c < q0; ++c) {
      line.push_back(field.scalar_mul(c, basis.f[level]));
    }
    // Lift the full snake through (line cycle) x (previous path); the sums
    // are the vertices of the next level because the field splits as a direct
    // sum of the basis lines. Dropping the closing edge leaves the path.
    const auto snake = product::snake_cycle(
        m, static_cast<std::int64_t>(path.size()),
        static_cast<std::int64_t>(path.size()));
    const auto lifted =
        product::lift(snake, line, square_adjacent, path, square_adjacent);
    path.clear();
    path.reserve(lifted.size());
    for (const auto& [line_vertex, path_vertex] : lifted) {
      path.push_back(field.add(line_vertex, path_vertex));
    }
  }
  return path;
}

std::vector<verify::CycleCertificate> w0_pancyclic_certificates(
    const ff::Field& field, const SquareBasis& basis) {
  const std::int64_t q0 = field.p();
  if (q0 == 5) {
    throw std::invalid_argument("q0 = 5 is handled by the P(5^n) case");
  }
  const auto host = verify::GraphDescriptor::paley(field.spec());
  const auto host_graph = graph::paley(field.spec());
  std::vector<verify::CycleCertificate> certs;
  if (q0 % 4 == 1) {
    // W0 contains a copy of the prime Paley graph P(q0).
    const auto inner = cyclic::pancyclic_certificates(graph::paley(q0));
    for (const auto& cert : inner) {
      std::vector<std::int64_t> mapped;
      mapped.reserve(cert.vertices.size());
      for (auto v : cert.vertices) {
        mapped.push_back(field.scalar_mul(v, basis.f[0]));
      }
      certs.push_back(make_verified(host, host_graph, std::move(mapped),
                                    "w0-" + cert.construction));
    }
  } else {
    // q0 = 3 mod 4: every nonzero prime-field element is a square in GF(q),
    // so W0 induces a complete graph and consecutive cycles suffice.
    for (std::int64_t k = 3; k <= q0; ++k) {
      std::vector<std::int64_t> cycle;
      cycle.reserve(static_cast<std::size_t>(k));
      for (std::int64_t c = 0; c < k; ++c) {
        cycle.push_back(field.scalar_mul(c, basis.f[0]));
      }
      certs.push_back(
          make_verified(host, host_graph, std::move(cycle), "w0-complete"));
    }
  }
  return certs;
}

std::vector<verify::CycleCertificate> paley_pancyclic(
    const ff::FieldSpec& spec) {
  const std::int64_t q = spec.order();
  if (q % 4 != 1) {
    throw std::invalid_argument("P(q) requires q congruent 1 mod 4, got q = " +
                                std::to_string(q));
  }
  if (q == 5) {
    throw std::invalid_argument("P(5) is the 5-cycle and is not pancyclic");
  }

  if (spec.n == 1) {
    return cyclic::pancyclic_certificates(graph::paley(spec));
  }

  const ff::Field field(spec);
  const std::int64_t q0 = field.p();
  const auto host = verify::GraphDescriptor::paley(spec);
  const auto host_graph = graph::paley(spec);
  const auto basis = square_basis(field);
  const auto wstar_path =
      semi_hamiltonian_path_wstar(field, basis, field.n() - 1);

  std::vector<verify::CycleCertificate> certs;
  std::vector<std::int64_t> w0_cycle;
  std::int64_t lifted_from = 0;  // first length produced by the product route
  if (q0 == 5) {
    // W0 only guarantees its Hamiltonian 5-cycle here; C_3 and C_4 come from
    // common neighbors (lambda = (5^n - 5)/4 >= 5 for n >= 2).
    std::int64_t a = -1, b = -1;
    for (std::int64_t v = 1; v < q && a == -1; ++v) {
      if (host_graph.adjacent(0, v) &&
          !host_graph.common_neighbors(0, v).empty()) {
        a = v;
        b = host_graph.common_neighbors(0, v).front();
      }
    }
    certs.push_back(
        make_verified(host, host_graph, {0, a, b}, "common-neighbor-c3"));
    bool found_c4 = false;
    for (std::int64_t u = 0; u < q && !found_c4; ++u) {
      for (std::int64_t v = u + 1; v < q && !found_c4; ++v) {
        const auto common = host_graph.common_neighbors(u, v);
        if (common.size() >= 2) {
          certs.push_back(make_verified(host, host_graph,
                                        {u, common[0], v, common[1]},
                                        "common-neighbor-c4"));
          found_c4 = true;
        }
      }
    }
    for (std::int64_t c = 0; c < 5; ++c) {
      w0_cycle.push_back(field.scalar_mul(c, basis.f[0]));
    }
    lifted_from = 5;
  } else {
    auto w0 = w0_pancyclic_certificates(field, basis);
    w0_cycle = w0.back().vertices;
    lifted_from = q0 + 1;
    for (auto& cert : w0) certs.push_back(std::move(cert));
  }

  const std::int64_t m = (q0 - 1) / 2;
  const auto path_len = static_cast<std::int64_t>(wstar_path.size());
  for (std::int64_t L = lifted_from; L <= q; ++L) {
    const auto coords = product::product_cycle(m, path_len, L);
    std::vector<std::int64_t> vertices;
    vertices.reserve(coords.size());
    for (const auto& v : coords) {
      vertices.push_back(
          field.add(w0_cycle[static_cast<std::size_t>(v.c)],
                    wstar_path[static_cast<std::size_t>(v.p)]));
    }
    certs.push_back(
        make_verified(host, host_graph, std::move(vertices), "product-lift"));
  }

  std::sort(certs.begin(), certs.end(),
            [](const auto& a, const auto& b) { return a.k < b.k; });
  if (static_cast<std::int64_t>(certs.size()) != q - 2) {
    throw std::logic_error("certificate lengths do not cover 3..q");
  }
  return certs;
}

std::vector<verify::CycleCertificate> paley_pancyclic(std::int64_t q) {
  return paley_pancyclic(ff::FieldSpec::from_order(q));
}

std::int64_t ceil_F(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("ceil_F requires n >= 1");
  for (std::int64_t q = std::max<std::int64_t>(n, 2);; ++q) {
    if (q % 4 == 1 && ff::is_prime_power(q)) return q;
  }
}

PaleyIndexResult paley_index_of_cycle(std::int64_t n) {
  if (n < 3) {
    throw std::invalid_argument("the Paley index is computed for C_n, n >= 3");
  }
  const std::int64_t rho = n < 5 ? 9 : ceil_F(n);
  verify::CycleCertificate witness;
  if (rho == 5) {
    // P(5) is itself the 5-cycle.
    witness.graph = verify::GraphDescriptor::paley(ff::FieldSpec::make(5, 1));
    witness.k = 5;
    witness.vertices = {0, 1, 2, 3, 4};
    witness.construction = "paley-5-cycle";
    const auto report = verify::check_cycle(witness);
    if (!report.ok) throw std::logic_error("P(5) witness failed verification");
  } else {
    auto certs = paley_pancyclic(rho);
    witness = std::move(certs[static_cast<std::size_t>(n - 3)]);
  }
  return PaleyIndexResult{n, rho, std::move(witness)};
}

}  // namespace pancyc::paley
