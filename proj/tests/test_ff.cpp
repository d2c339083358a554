#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <doctest.h>

#include "pancyc/ff.hpp"

using namespace pancyc;

namespace {

// Test-side irreducibility oracle, independent of the library's trial
// division: multiply out every monic factor pair and look for f.
ff::Poly poly_multiply(const ff::Poly& a, const ff::Poly& b, std::int64_t p) {
  ff::Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  return prod;
}

std::vector<ff::Poly> all_monic(std::int64_t p, int degree) {
  std::int64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= p;
  std::vector<ff::Poly> out;
  for (std::int64_t v = 0; v < count; ++v) {
    ff::Poly f(static_cast<std::size_t>(degree) + 1, 0);
    f.back() = 1;
    std::int64_t rest = v;
    for (int i = 0; i < degree; ++i) {
      f[static_cast<std::size_t>(i)] = rest % p;
      rest /= p;
    }
    out.push_back(std::move(f));
  }
  return out;
}

bool oracle_irreducible(const ff::Poly& f, std::int64_t p) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == 1) return true;
  for (int d = 1; d <= n / 2; ++d) {
    for (const auto& g : all_monic(p, d)) {
      for (const auto& h : all_monic(p, n - d)) {
        if (poly_multiply(g, h, p) == f) return false;
      }
    }
  }
  return true;
}

// Plain integer modular exponentiation, independent of the Field class.
std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  std::int64_t r = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

}  // namespace

TEST_CASE("find_irreducible returns the known minimal moduli") {
  CHECK(ff::find_irreducible(3, 1) == ff::Poly{0, 1});  // plain GF(3)
  CHECK(ff::find_irreducible(3, 2) == ff::Poly{1, 0, 1});  // t^2 + 1
  CHECK(ff::find_irreducible(5, 2) == ff::Poly{2, 0, 1});  // t^2 + 2
}

TEST_CASE("find_irreducible agrees with the factor-pair oracle") {
  // Exhaustive cross-check over every monic quadratic over GF(3).
  for (const auto& f : all_monic(3, 2)) {
    CHECK(ff::is_irreducible(f, 3) == oracle_irreducible(f, 3));
  }
  for (const auto& [p, n] :
       std::vector<std::pair<std::int64_t, int>>{{3, 2}, {5, 2}, {7, 2},
                                                 {13, 2}, {3, 4}, {5, 3}}) {
    const auto f = ff::find_irreducible(p, n);
    CHECK(oracle_irreducible(f, p));
    // Nothing smaller in encoding order is irreducible.
    for (const auto& g : all_monic(p, n)) {
      if (g == f) break;
      CHECK_FALSE(oracle_irreducible(g, p));
    }
  }
}

TEST_CASE("field spec validation") {
  CHECK_THROWS_AS(ff::FieldSpec::with_modulus(4, 1, {0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ff::FieldSpec::with_modulus(5, 2, {4, 0, 1}),
                  std::invalid_argument);  // t^2 + 4 = (t+1)(t+4)
  CHECK_THROWS_AS(ff::FieldSpec::with_modulus(5, 2, {2, 0, 2}),
                  std::invalid_argument);  // not monic
  CHECK_THROWS_AS(ff::FieldSpec::from_order(12), std::invalid_argument);
  CHECK(ff::FieldSpec::from_order(125).p == 5);
  CHECK(ff::FieldSpec::from_order(125).n == 3);
}

TEST_CASE("prime field arithmetic") {
  const ff::Field f13(ff::FieldSpec::make(13, 1));
  CHECK(f13.add(9, 5) == 1);
  CHECK(f13.sub(3, 7) == 9);
  CHECK(f13.mul(5, 8) == 1);
  CHECK(f13.neg(1) == 12);
  CHECK(f13.inv(5) == 8);
  CHECK_THROWS_AS(f13.inv(0), std::domain_error);
}

TEST_CASE("GF(9) multiplication reduces by the modulus") {
  const ff::Field f9(ff::FieldSpec::make(3, 2));
  // t * t = -1 = 2 under t^2 + 1.
  const std::int64_t t = f9.encode(std::vector<std::int64_t>{0, 1});
  CHECK(t == 3);
  CHECK(f9.mul(t, t) == 2);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(20240901);
  for (std::int64_t q : {9LL, 13LL, 25LL, 27LL, 49LL}) {
    const ff::Field field(ff::FieldSpec::from_order(q));
    std::uniform_int_distribution<std::int64_t> dist(0, q - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const std::int64_t a = dist(rng);
      const std::int64_t b = dist(rng);
      const std::int64_t c = dist(rng);
      CHECK(field.add(a, b) == field.add(b, a));
      CHECK(field.mul(a, b) == field.mul(b, a));
      CHECK(field.mul(a, field.add(b, c)) ==
            field.add(field.mul(a, b), field.mul(a, c)));
      CHECK(field.add(a, field.neg(a)) == 0);
      if (a != 0) {
        CHECK(field.mul(a, field.inv(a)) == 1);
        CHECK(field.pow(a, q - 1) == 1);
      }
    }
  }
}

TEST_CASE("encode and decode are inverse bijections") {
  const ff::Field f27(ff::FieldSpec::make(3, 3));
  for (std::int64_t a = 0; a < 27; ++a) {
    const auto coeffs = f27.decode(a);
    REQUIRE(coeffs.size() == 3);
    for (auto c : coeffs) CHECK((0 <= c && c < 3));
    CHECK(f27.encode(coeffs) == a);
  }
}

TEST_CASE("Euler criterion against direct exponentiation") {
  const ff::Field f13(ff::FieldSpec::make(13, 1));
  CHECK(f13.is_kth_power(3, 2));        // 3^6 = 729 = 1 mod 13
  CHECK_FALSE(f13.is_kth_power(2, 2));  // 2^6 = 64 = 12 mod 13
  CHECK(powmod(3, 6, 13) == 1);
  CHECK(powmod(2, 6, 13) == 12);
  CHECK_THROWS_AS(f13.is_kth_power(0, 2), std::domain_error);
  CHECK_THROWS_AS(f13.is_kth_power(3, 1), std::invalid_argument);
}

TEST_CASE("-1 is a square exactly when q = 1 mod 4") {
  for (std::int64_t q : {5LL, 9LL, 13LL, 17LL, 25LL, 29LL}) {
    const ff::Field field(ff::FieldSpec::from_order(q));
    CHECK(field.is_square(field.neg(1)));
  }
  for (std::int64_t q : {3LL, 7LL, 11LL, 19LL, 23LL, 27LL}) {
    const ff::Field field(ff::FieldSpec::from_order(q));
    CHECK_FALSE(field.is_square(field.neg(1)));
  }
}

TEST_CASE("squares by enumeration") {
  const ff::Field f13(ff::FieldSpec::make(13, 1));
  std::set<std::int64_t> direct;  // square all twelve nonzero residues
  for (std::int64_t i = 1; i < 13; ++i) direct.insert(i * i % 13);
  CHECK(direct == std::set<std::int64_t>{1, 3, 4, 9, 10, 12});
  const auto squares = f13.squares();
  CHECK(std::vector<std::int64_t>(direct.begin(), direct.end()) == squares);

  const ff::Field f5(ff::FieldSpec::make(5, 1));
  CHECK(f5.squares() == std::vector<std::int64_t>{1, 4});
}

TEST_CASE("squares agree with the Euler test and have size (q-1)/2") {
  for (std::int64_t q : {5LL, 9LL, 13LL, 25LL, 49LL, 81LL}) {
    const ff::Field field(ff::FieldSpec::from_order(q));
    const auto squares = field.squares();
    CHECK(static_cast<std::int64_t>(squares.size()) == (q - 1) / 2);
    std::vector<std::int64_t> by_euler;
    for (std::int64_t a = 1; a < q; ++a) {
      if (field.is_kth_power(a, 2)) by_euler.push_back(a);
    }
    CHECK(by_euler == squares);
  }
}

TEST_CASE("square products: closure of the residue classes") {
  std::mt19937 rng(7);
  for (std::int64_t q : {13LL, 25LL, 49LL}) {
    const ff::Field field(ff::FieldSpec::from_order(q));
    std::uniform_int_distribution<std::int64_t> dist(1, q - 1);
    for (int trial = 0; trial < 300; ++trial) {
      const std::int64_t a = dist(rng);
      const std::int64_t b = dist(rng);
      const bool sa = field.is_square(a);
      const bool sb = field.is_square(b);
      const bool sab = field.is_square(field.mul(a, b));
      CHECK(sab == (sa == sb));
    }
  }
}

TEST_CASE("k-th powers for k > 2") {
  const ff::Field f13(ff::FieldSpec::make(13, 1));
  CHECK(f13.kth_powers(3) == std::vector<std::int64_t>{1, 5, 8, 12});
  CHECK(f13.kth_powers(4) == std::vector<std::int64_t>{1, 3, 9});
  for (std::int64_t a = 1; a < 13; ++a) {
    const auto& cubes = f13.kth_powers(3);
    const bool in_set = std::find(cubes.begin(), cubes.end(), a) != cubes.end();
    CHECK(f13.is_kth_power(a, 3) == in_set);
  }
}
