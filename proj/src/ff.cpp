#include "pancyc/ff.hpp"

#include <numeric>
#include <stdexcept>

namespace pancyc::ff {

namespace {

std::int64_t checked_pow(std::int64_t p, int n) {
  std::int64_t r = 1;
  for (int i = 0; i < n; ++i) {
    if (r > (1LL << 42) / p) {
      throw std::invalid_argument("field order p^n too large");
    }
    r *= p;
  }
  return r;
}

// Remainder of a modulo g over GF(p); both with constant term first,
// g monic of degree >= 1.
Poly poly_mod(Poly a, const Poly& g, std::int64_t p) {
  const auto dg = static_cast<std::int64_t>(g.size()) - 1;
  while (static_cast<std::int64_t>(a.size()) > dg) {
    const std::int64_t lead = a.back();
    const auto da = static_cast<std::int64_t>(a.size()) - 1;
    if (lead != 0) {
      for (std::int64_t i = 0; i < dg; ++i) {
        auto& c = a[da - dg + i];
        c = ((c - lead * g[i]) % p + p) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

bool poly_is_zero(const Poly& a) {
  for (auto c : a) {
    if (c != 0) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::int64_t x) {
  if (x < 2) return false;
  if (x % 2 == 0) return x == 2;
  for (std::int64_t d = 3; d * d <= x; d += 2) {
    if (x % d == 0) return false;
  }
  return true;
}

std::pair<std::int64_t, int> factor_prime_power(std::int64_t q) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  std::int64_t p = q;
  for (std::int64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  int n = 0;
  std::int64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++n;
  }
  if (rest != 1) {
    throw std::invalid_argument("q = " + std::to_string(q) +
                                " is not a prime power");
  }
  return {p, n};
}

bool is_prime_power(std::int64_t q) {
  if (q < 2) return false;
  try {
    factor_prime_power(q);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool is_irreducible(const Poly& f, std::int64_t p) {
  const auto n = static_cast<std::int64_t>(f.size()) - 1;
  if (n < 1 || f.back() != 1) {
    throw std::invalid_argument("is_irreducible expects a monic polynomial");
  }
  if (n == 1) return true;
  // Any factorization has a monic factor of degree <= n/2.
  for (std::int64_t d = 1; 2 * d <= n; ++d) {
    std::int64_t count = 1;
    for (std::int64_t i = 0; i < d; ++i) count *= p;
    Poly g(static_cast<std::size_t>(d) + 1, 0);
    g.back() = 1;
    for (std::int64_t v = 0; v < count; ++v) {
      std::int64_t rest = v;
      for (std::int64_t i = 0; i < d; ++i) {
        g[i] = rest % p;
        rest /= p;
      }
      if (poly_is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

Poly find_irreducible(std::int64_t p, int n) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  const std::int64_t count = checked_pow(p, n);
  Poly f(static_cast<std::size_t>(n) + 1, 0);
  f.back() = 1;
  for (std::int64_t v = 0; v < count; ++v) {
    std::int64_t rest = v;
    for (int i = 0; i < n; ++i) {
      f[i] = rest % p;
      rest /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::int64_t FieldSpec::order() const { return checked_pow(p, n); }

FieldSpec FieldSpec::make(std::int64_t p, int n) {
  return FieldSpec{p, n, find_irreducible(p, n)};
}

FieldSpec FieldSpec::from_order(std::int64_t q) {
  const auto [p, n] = factor_prime_power(q);
  return make(p, n);
}

FieldSpec FieldSpec::with_modulus(std::int64_t p, int n, Poly modulus) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  if (static_cast<int>(modulus.size()) != n + 1 || modulus.back() != 1) {
    throw std::invalid_argument("modulus must be monic of degree n");
  }
  for (auto c : modulus) {
    if (c < 0 || c >= p) {
      throw std::invalid_argument("modulus coefficients must lie in [0, p)");
    }
  }
  if (!is_irreducible(modulus, p)) {
    throw std::invalid_argument("modulus is reducible over GF(p)");
  }
  return FieldSpec{p, n, std::move(modulus)};
}

Field::Field(FieldSpec spec)
    : spec_(FieldSpec::with_modulus(spec.p, spec.n, spec.modulus)),
      q_(spec_.order()) {
  // t^n = -(c0 + c1 t + ... + c_{n-1} t^{n-1})
  t_to_n_.resize(spec_.n);
  for (int i = 0; i < spec_.n; ++i) {
    t_to_n_[i] = (spec_.p - spec_.modulus[i]) % spec_.p;
  }
}

void Field::check_element(std::int64_t a) const {
  if (a < 0 || a >= q_) {
    throw std::invalid_argument("element encoding out of range [0, q)");
  }
}

std::int64_t Field::encode(std::span<const std::int64_t> coeffs) const {
  if (static_cast<int>(coeffs.size()) != spec_.n) {
    throw std::invalid_argument("coefficient vector has wrong length");
  }
  std::int64_t r = 0;
  for (int i = spec_.n - 1; i >= 0; --i) {
    if (coeffs[i] < 0 || coeffs[i] >= spec_.p) {
      throw std::invalid_argument("coefficient not reduced mod p");
    }
    r = r * spec_.p + coeffs[i];
  }
  return r;
}

std::vector<std::int64_t> Field::decode(std::int64_t a) const {
  check_element(a);
  std::vector<std::int64_t> coeffs(spec_.n);
  for (int i = 0; i < spec_.n; ++i) {
    coeffs[i] = a % spec_.p;
    a /= spec_.p;
  }
  return coeffs;
}

std::int64_t Field::add(std::int64_t a, std::int64_t b) const {
  check_element(a);
  check_element(b);
  std::int64_t r = 0;
  std::int64_t mult = 1;
  for (int i = 0; i < spec_.n; ++i) {
    r += ((a % spec_.p + b % spec_.p) % spec_.p) * mult;
    a /= spec_.p;
    b /= spec_.p;
    mult *= spec_.p;
  }
  return r;
}

std::int64_t Field::sub(std::int64_t a, std::int64_t b) const {
  return add(a, neg(b));
}

std::int64_t Field::neg(std::int64_t a) const {
  check_element(a);
  std::int64_t r = 0;
  std::int64_t mult = 1;
  for (int i = 0; i < spec_.n; ++i) {
    r += ((spec_.p - a % spec_.p) % spec_.p) * mult;
    a /= spec_.p;
    mult *= spec_.p;
  }
  return r;
}

std::int64_t Field::mul(std::int64_t a, std::int64_t b) const {
  check_element(a);
  check_element(b);
  const int n = spec_.n;
  const std::int64_t p = spec_.p;
  if (n == 1) return (a * b) % p;

  const auto ca = decode(a);
  const auto cb = decode(b);
  std::vector<std::int64_t> prod(2 * n - 1, 0);
  for (int i = 0; i < n; ++i) {
    if (ca[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
    }
  }
  // Fold degrees >= n down using t^n = t_to_n_.
  for (int d = 2 * n - 2; d >= n; --d) {
    const std::int64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < n; ++i) {
      prod[d - n + i] = (prod[d - n + i] + c * t_to_n_[i]) % p;
    }
  }
  prod.resize(n);
  return encode(prod);
}

std::int64_t Field::scalar_mul(std::int64_t c, std::int64_t a) const {
  if (c < 0 || c >= spec_.p) {
    throw std::invalid_argument("scalar not reduced mod p");
  }
  check_element(a);
  std::int64_t r = 0;
  std::int64_t mult = 1;
  for (int i = 0; i < spec_.n; ++i) {
    r += ((a % spec_.p) * c % spec_.p) * mult;
    a /= spec_.p;
    mult *= spec_.p;
  }
  return r;
}

std::int64_t Field::pow(std::int64_t a, std::int64_t e) const {
  check_element(a);
  if (e < 0) throw std::invalid_argument("negative exponent");
  std::int64_t base = a;
  std::int64_t r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::int64_t Field::inv(std::int64_t a) const {
  check_element(a);
  if (a == 0) throw std::domain_error("inverse of zero");
  return pow(a, q_ - 2);
}

bool Field::is_kth_power(std::int64_t a, std::int64_t k) const {
  check_element(a);
  if (a == 0) throw std::domain_error("0 is not in the multiplicative group");
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  const std::int64_t g = std::gcd(k, q_ - 1);
  return pow(a, (q_ - 1) / g) == 1;
}

std::vector<std::int64_t> Field::squares() const { return kth_powers(2); }

std::vector<std::int64_t> Field::kth_powers(std::int64_t k) const {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  std::vector<bool> seen(static_cast<std::size_t>(q_), false);
  for (std::int64_t x = 1; x < q_; ++x) {
    seen[static_cast<std::size_t>(pow(x, k))] = true;
  }
  std::vector<std::int64_t> out;
  for (std::int64_t a = 1; a < q_; ++a) {
    if (seen[static_cast<std::size_t>(a)]) out.push_back(a);
  }
  return out;
}

}  // namespace pancyc::ff
