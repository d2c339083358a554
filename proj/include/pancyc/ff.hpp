#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

// Exact arithmetic in GF(p) and GF(p^n).
//
// Field elements are handled as canonical integer encodings: the element with
// coefficient vector (c0, c1, ..., c_{n-1}) relative to the basis
// 1, t, ..., t^{n-1} is encoded as sum c_i * p^i, a bijection onto [0, p^n).
// All "smallest element" tie-breaks elsewhere in the project refer to this
// order.

namespace pancyc::ff {

// Polynomial over GF(p), coefficients with the constant term first.
using Poly = std::vector<std::int64_t>;

bool is_prime(std::int64_t x);

// Factors q = p^n with p prime, n >= 1. Throws std::invalid_argument if q is
// not a prime power.
std::pair<std::int64_t, int> factor_prime_power(std::int64_t q);

bool is_prime_power(std::int64_t q);

// Trial division by all monic polynomials of degree <= deg(f)/2.
// f must be monic of degree >= 1 with coefficients reduced mod p.
bool is_irreducible(const Poly& f, std::int64_t p);

// The first monic irreducible polynomial of degree n over GF(p), scanning
// candidates in ascending order of the base-p encoding of (c0, ..., c_{n-1}).
// Deterministic; existence is guaranteed for every prime p and n >= 1.
Poly find_irreducible(std::int64_t p, int n);

struct FieldSpec {
  std::int64_t p = 0;  // prime characteristic
  int n = 0;           // extension degree >= 1
  Poly modulus;        // monic irreducible of degree n, length n + 1

  std::int64_t order() const;

  bool operator==(const FieldSpec&) const = default;

  // Canonical spec: modulus chosen by find_irreducible.
  static FieldSpec make(std::int64_t p, int n);
  static FieldSpec from_order(std::int64_t q);
  // Validates p prime, degree, monicity, reduced coefficients, irreducibility.
  static FieldSpec with_modulus(std::int64_t p, int n, Poly modulus);
};

class Field {
 public:
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  std::int64_t p() const { return spec_.p; }
  int n() const { return spec_.n; }
  std::int64_t order() const { return q_; }

  std::int64_t encode(std::span<const std::int64_t> coeffs) const;
  std::vector<std::int64_t> decode(std::int64_t a) const;

  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t sub(std::int64_t a, std::int64_t b) const;
  std::int64_t neg(std::int64_t a) const;
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  // Multiplication by a scalar c in GF(p).
  std::int64_t scalar_mul(std::int64_t c, std::int64_t a) const;
  std::int64_t pow(std::int64_t a, std::int64_t e) const;
  // Throws std::domain_error on a == 0.
  std::int64_t inv(std::int64_t a) const;

  // Euler-style test: a in (F_q^*)^k iff a^((q-1)/g) = 1 with g = gcd(k, q-1).
  // Total for any k >= 2; throws std::domain_error on a == 0.
  bool is_kth_power(std::int64_t a, std::int64_t k) const;
  bool is_square(std::int64_t a) const { return is_kth_power(a, 2); }

  // {x^2 : x in F_q^*}, sorted; computed by enumeration, independently of
  // is_kth_power.
  std::vector<std::int64_t> squares() const;
  std::vector<std::int64_t> kth_powers(std::int64_t k) const;

 private:
  void check_element(std::int64_t a) const;

  FieldSpec spec_;
  std::int64_t q_;
  std::vector<std::int64_t> t_to_n_;  // t^n reduced mod modulus, n coefficients
};

}  // namespace pancyc::ff
