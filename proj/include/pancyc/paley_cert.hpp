#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pancyc/ff.hpp"
#include "pancyc/graph.hpp"
#include "pancyc/verify.hpp"

// Certificate pipeline for P(q), q = q0^n congruent 1 mod 4, q != 5: a
// square basis splits the field into W0 (the prime subfield line) and the
// complementary W*, W* gets an inductive Hamiltonian path, W0 gets its own
// cycles, and the spanning product W0 x W* lifts every remaining length.
// Also the Paley-index calculator for cycles.

namespace pancyc::paley {

struct SquareBasis {
  // Basis of GF(q0^n) over GF(q0); every entry is a nonzero square, f[0] = 1.
  std::vector<std::int64_t> f;
};

// Greedy scan in canonical encoding order, keeping squares that are linearly
// independent of those kept so far. Deterministic for a fixed spec.
SquareBasis square_basis(const ff::Field& field);

struct Subspace {
  std::vector<std::int64_t> basis;  // field encodings
  // elements[code] is the member with coordinate vector code (base-q0 digits
  // of code give the coefficients of the basis vectors).
  std::vector<std::int64_t> elements;
};

Subspace span_of(const ff::Field& field, std::span<const std::int64_t> basis);

// Induced subgraph of the Paley graph on a subspace, as a Cayley graph over
// the subspace's additive group in coordinate encoding; the connection set is
// (w \ {0}) intersected with the squares of the ambient field.
graph::CayleyGraph induced_subgraph(const graph::CayleyGraph& paley_graph,
                                    const Subspace& w);

// Hamiltonian path of G_{W*_i} (the subspace spanned by f_1..f_i), built by
// induction: the f_1 line is a q0-cycle minus an edge; each further level
// lifts the f_{i+1} line cycle against the previous path through the full
// snake and drops the closing edge. Returns q0^i field encodings starting
// at 0. Requires 1 <= i <= n-1.
std::vector<std::int64_t> semi_hamiltonian_path_wstar(const ff::Field& field,
                                                      const SquareBasis& basis,
                                                      int i);

// Cycles of lengths 3..q0 inside W0, valid in P(q): for q0 = 1 mod 4 they come
// from the prime Paley graph P(q0); for q0 = 3 mod 4 the induced graph
// contains K_{q0} and consecutive cycles suffice. q0 = 5 is handled by the
// P(5^n) special case, not here.
std::vector<verify::CycleCertificate> w0_pancyclic_certificates(
    const ff::Field& field, const SquareBasis& basis);

// Verified certificates for every k = 3..q. Throws std::invalid_argument for
// q = 5 or q not congruent 1 mod 4.
std::vector<verify::CycleCertificate> paley_pancyclic(const ff::FieldSpec& spec);
std::vector<verify::CycleCertificate> paley_pancyclic(std::int64_t q);

// Smallest prime power >= max(n, 1) congruent 1 mod 4.
std::int64_t ceil_F(std::int64_t n);

struct PaleyIndexResult {
  std::int64_t n = 0;
  std::int64_t rho = 0;
  verify::CycleCertificate witness;
};

// rho_{C_n}: ceil_F(n) for n >= 5, and 9 for n in {3, 4}, with a verified
// witness cycle in P(rho). Rejects n < 3.
PaleyIndexResult paley_index_of_cycle(std::int64_t n);

}  // namespace pancyc::paley
