/* SPDX-License-Identifier: Apache-2.0 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hitchin/polymatrix.hpp"
#include "hitchin/resultant.hpp"
#include "support.hpp"

using namespace hitchin;

namespace {

// Brute-force elementary symmetric polynomial of rational values.
Rational elementary_symmetric(const std::vector<Rational>& vals, std::size_t k) {
  std::vector<std::size_t> idx(k);
  Rational sum(0);
  struct Rec {
    static void go(const std::vector<Rational>& vals, std::size_t k, std::size_t start,
                   Rational prod, Rational& sum) {
      if (k == 0) {
        sum += prod;
        return;
      }
      for (std::size_t i = start; i + k <= vals.size() + 0; ++i)
        go(vals, k - 1, i + 1, prod * vals[i], sum);
    }
  };
  Rec::go(vals, k, 0, Rational(1), sum);
  return sum;
}

}  // namespace

TEST_CASE("char_poly examples") {
  auto ctx = make_context({});
  SUBCASE("diag(1,2)") {
    PolyMatrix m = PolyMatrix::from_rationals(ctx, {{Rational(1), Rational(0)},
                                                    {Rational(0), Rational(2)}});
    auto a = char_poly(m);
    REQUIRE(a.size() == 2);
    CHECK(a[0].constant_value() == Rational(-3));
    CHECK(a[1].constant_value() == Rational(2));
  }
  SUBCASE("zero matrix") {
    for (std::size_t n = 1; n <= 4; ++n) {
      PolyMatrix z(n, n, ctx);
      for (const auto& c : char_poly(z)) CHECK(c.is_zero());
    }
  }
  SUBCASE("companion round-trip with symbolic coefficients") {
    auto actx = make_context({"a1", "a2"});
    MultiPoly a1 = MultiPoly::variable(actx, "a1"), a2 = MultiPoly::variable(actx, "a2");
    PolyMatrix m(2, 2, actx);
    m.at(0, 1) = -a2;
    m.at(1, 0) = MultiPoly::constant(actx, Rational(1));
    m.at(1, 1) = -a1;
    auto a = char_poly(m);
    CHECK(a[0] == a1);
    CHECK(a[1] == a2);
  }
  SUBCASE("non-square input") {
    PolyMatrix m(2, 3, ctx);
    CHECK_THROWS_AS(char_poly(m), Error);
  }
}

TEST_CASE("char_poly of diagonal equals signed elementary symmetric (oracle)") {
  testing::Rng rng(41);
  auto ctx = make_context({});
  for (int rep = 0; rep < 20; ++rep) {
    std::size_t n = static_cast<std::size_t>(rng.range(1, 6));
    std::vector<Rational> d;
    PolyMatrix m(n, n, ctx);
    for (std::size_t i = 0; i < n; ++i) {
      d.push_back(rng.rational(4));
      m.at(i, i) = MultiPoly::constant(ctx, d.back());
    }
    auto a = char_poly(m);
    for (std::size_t k = 1; k <= n; ++k) {
      Rational expect = elementary_symmetric(d, k);
      if (k % 2 == 1) expect = -expect;
      CHECK(a[k - 1].constant_value() == expect);
    }
  }
}

TEST_CASE("char_poly conjugation invariance") {
  testing::Rng rng(43);
  auto ctx = make_context({});
  int done = 0;
  while (done < 15) {
    std::size_t n = static_cast<std::size_t>(rng.range(2, 6));
    PolyMatrix m = rng.rational_matrix(ctx, n, 3);
    PolyMatrix p = rng.rational_matrix(ctx, n, 3);
    if (det(p).is_zero()) continue;
    PolyMatrix conj = p * m * inverse_constant(p);
    CHECK(char_poly(conj) == char_poly(m));
    ++done;
  }
}

TEST_CASE("det via Bareiss agrees with char_poly") {
  testing::Rng rng(47);
  auto ctx = make_context({"x", "y"});
  for (int rep = 0; rep < 15; ++rep) {
    std::size_t n = static_cast<std::size_t>(rng.range(1, 4));
    PolyMatrix m(n, n, ctx);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.at(r, c) = rng.poly(ctx, 2, 2);
    MultiPoly d = det(m);
    MultiPoly an = char_poly(m).back();
    CHECK(d == (n % 2 == 0 ? an : -an));
  }
}

TEST_CASE("inverse_constant") {
  testing::Rng rng(53);
  auto ctx = make_context({});
  int done = 0;
  while (done < 10) {
    std::size_t n = static_cast<std::size_t>(rng.range(1, 5));
    PolyMatrix m = rng.rational_matrix(ctx, n, 4);
    if (det(m).is_zero()) continue;
    CHECK(m * inverse_constant(m) == PolyMatrix::identity(n, ctx));
    ++done;
  }
}

TEST_CASE("discriminant examples") {
  auto ctx = make_context({"x", "b", "c"});
  MultiPoly x = MultiPoly::variable(ctx, "x");
  MultiPoly b = MultiPoly::variable(ctx, "b");
  MultiPoly c = MultiPoly::variable(ctx, "c");

  SUBCASE("x^2 + bx + c -> b^2 - 4c") {
    MultiPoly p = x * x + b * x + c;
    CHECK(discriminant(p, "x") == b * b - c.scaled(Rational(4)));
  }
  SUBCASE("repeated root -> 0") {
    MultiPoly p = (x - MultiPoly::constant(ctx, Rational(1))).pow(2);
    CHECK(discriminant(p, "x").is_zero());
  }
  SUBCASE("x^2 + 1 -> -4") {
    MultiPoly p = x * x + MultiPoly::constant(ctx, Rational(1));
    MultiPoly d = discriminant(p, "x");
    CHECK(d.is_constant());
    CHECK(d.constant_value() == Rational(-4));
  }
  SUBCASE("degree zero is degenerate") {
    CHECK_THROWS_AS(discriminant(b, "x"), Error);
  }
}

namespace {

// Division-free pseudo-remainder of a modulo b in the variable.
MultiPoly prem(MultiPoly a, const MultiPoly& b, std::size_t var) {
  const int db = b.degree_in(var);
  MultiPoly lcb = b.leading_coefficient_in(var);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    int da = a.degree_in(var);
    MultiPoly lca = a.leading_coefficient_in(var);
    ExpVec shift(a.context()->size(), 0);
    shift[var] = da - db;
    MultiPoly mono = MultiPoly::monomial(a.context(), shift, Rational(1));
    a = a * lcb - mono * lca * b;
  }
  return a;
}

// Test-only Euclid oracle: true iff gcd(p, p') is non-constant in the
// variable, i.e. p has a repeated root.
bool gcd_detects_repeated_root(const MultiPoly& p, std::size_t var) {
  MultiPoly a = p, b = p.derivative(var);
  while (!b.is_zero() && b.degree_in(var) > 0) {
    if (a.degree_in(var) < b.degree_in(var)) {
      std::swap(a, b);
      continue;
    }
    MultiPoly r = prem(a, b, var);
    a = b;
    b = r;
  }
  if (b.is_zero()) return a.degree_in(var) > 0;
  return false;
}

}  // namespace

TEST_CASE("discriminant vanishes iff gcd(p, p') non-constant (oracle, degree <= 6)") {
  testing::Rng rng(59);
  auto ctx = make_context({"x"});
  MultiPoly x = MultiPoly::variable(ctx, "x");
  int done = 0;
  while (done < 40) {
    int deg = static_cast<int>(rng.range(1, 6));
    MultiPoly p(ctx);
    for (int k = 0; k <= deg; ++k)
      p += x.pow(k).scaled(rng.rational(3));
    // Half the time force a repeated root by squaring a factor.
    if (rng.range(0, 1) == 0) {
      MultiPoly lin = x - MultiPoly::constant(ctx, rng.rational(2));
      p = p * lin * lin;
    }
    if (p.degree_in(0u) <= 0) continue;
    bool disc_zero = discriminant(p, 0u).is_zero();
    bool gcd_nonconstant = gcd_detects_repeated_root(p, 0);
    CHECK(disc_zero == gcd_nonconstant);
    ++done;
  }
}
