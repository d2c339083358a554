#include "pancyc/cyclic_cycles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pancyc::cyclic {

namespace {

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = m, new_r = a % m;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::invalid_argument("element is not a unit");
  return ((t % m) + m) % m;
}

}  // namespace

std::vector<std::int64_t> NormalizedCyclicCayley::common_neighbors(
    std::int64_t u, std::int64_t v) const {
  std::vector<std::int64_t> out;
  for (auto d : s) {
    const std::int64_t w = (u + d) % m;
    if (adjacent(w, v)) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

NormalizedCyclicCayley normalize(const graph::CayleyGraph& g) {
  const auto m_opt = g.cyclic_order();
  if (!m_opt) {
    throw std::invalid_argument("normalize requires a cyclic group");
  }
  const std::int64_t m = *m_opt;

  std::int64_t x = 0;
  for (auto sElem : g.connection_set()) {
    if (std::gcd(sElem, m) == 1) {
      x = sElem;
      break;
    }
  }
  if (x == 0) {
    throw std::invalid_argument(
        "connection set contains no generator of Z/" + std::to_string(m));
  }

  NormalizedCyclicCayley norm;
  norm.m = m;
  norm.sigma_inverse = x;
  const std::int64_t xinv = mod_inverse(x, m);
  norm.member.assign(static_cast<std::size_t>(m), 0);
  for (auto sElem : g.connection_set()) {
    const std::int64_t mapped = sElem % m * xinv % m;
    norm.member[static_cast<std::size_t>(mapped)] = 1;
    norm.s.push_back(mapped);
  }
  std::sort(norm.s.begin(), norm.s.end());
  return norm;
}

std::vector<std::int64_t> cycle_small(const NormalizedCyclicCayley& g, int k) {
  if (k == 3) {
    const auto common = g.common_neighbors(0, 1);
    if (common.empty()) {
      throw std::invalid_argument(
          "pair (0, 1) has no common neighbor; C_3 hypothesis fails");
    }
    return {0, 1, common.front()};
  }
  if (k == 4) {
    for (std::int64_t u = 0; u < g.m; ++u) {
      for (std::int64_t v = u + 1; v < g.m; ++v) {
        const auto common = g.common_neighbors(u, v);
        if (common.size() >= 2) return {u, common[0], v, common[1]};
      }
    }
    throw std::invalid_argument(
        "no pair with two common neighbors; C_4 hypothesis fails");
  }
  throw std::invalid_argument("cycle_small handles only k = 3 or 4");
}

std::vector<std::int64_t> cycle_alpha_splice(const NormalizedCyclicCayley& g,
                                             std::int64_t n) {
  if (n < 5 || n > g.m) {
    throw std::out_of_range("cycle length must lie in [5, m]");
  }
  const auto common = g.common_neighbors(0, n - 2);
  if (common.empty()) {
    throw std::invalid_argument("pair (0, " + std::to_string(n - 2) +
                                ") has no common neighbor");
  }
  std::int64_t alpha = common.front();
  if (alpha == 1) {
    // 1 adjacent to n-2 forces n-3 into S, so n-3 is also a common neighbor,
    // and it lies strictly between 1 and n-2 once n >= 5.
    alpha = n - 3;
  }

  std::vector<std::int64_t> seq;
  seq.reserve(static_cast<std::size_t>(n));
  if (alpha > n - 2) {
    for (std::int64_t v = 0; v <= n - 2; ++v) seq.push_back(v);
    seq.push_back(alpha);
    return seq;
  }
  // 1 < alpha < n-2: descend alpha..2, jump the alpha-chord to alpha+2, climb
  // to n-1, and return through alpha+1 and 1.
  seq.push_back(0);
  for (std::int64_t v = alpha; v >= 2; --v) seq.push_back(v);
  for (std::int64_t v = alpha + 2; v <= n - 1; ++v) seq.push_back(v);
  seq.push_back(alpha + 1);
  seq.push_back(1);
  return seq;
}

std::vector<verify::CycleCertificate> pancyclic_certificates(
    const graph::CayleyGraph& g) {
  const NormalizedCyclicCayley norm = normalize(g);
  const std::int64_t m = norm.m;

  std::int64_t min_common = m;
  std::int64_t max_common = 0;
  for (std::int64_t d = 1; d < m; ++d) {  // vertex-transitive: pairs (0, d)
    const auto c = static_cast<std::int64_t>(norm.common_neighbors(0, d).size());
    min_common = std::min(min_common, c);
    max_common = std::max(max_common, c);
  }
  if (min_common < 1) {
    throw std::invalid_argument(
        "hypothesis fails: some pair of vertices has no common neighbor");
  }
  if (max_common < 2) {
    throw std::invalid_argument(
        "hypothesis fails: no pair of vertices has two common neighbors");
  }

  const auto descriptor = verify::GraphDescriptor::of_graph(g);
  std::vector<verify::CycleCertificate> certs;
  for (std::int64_t k = 3; k <= m; ++k) {
    std::vector<std::int64_t> seq;
    std::string tag;
    if (k == 3 || k == 4) {
      seq = cycle_small(norm, static_cast<int>(k));
      tag = k == 3 ? "common-neighbor-c3" : "common-neighbor-c4";
    } else {
      seq = cycle_alpha_splice(norm, k);
      tag = "alpha-splice";
    }
    for (auto& v : seq) v = norm.to_original(v);
    verify::CycleCertificate cert{descriptor, k, std::move(seq), tag};
    const auto report = verify::check_cycle(g, cert.vertices, cert.k);
    if (!report.ok) {
      throw std::logic_error("constructed C_" + std::to_string(k) +
                             " failed verification: " + report.message);
    }
    certs.push_back(std::move(cert));
  }
  return certs;
}

}  // namespace pancyc::cyclic
