/* SPDX-License-Identifier: Apache-2.0 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hitchin/groebner.hpp"
#include "support.hpp"

using namespace hitchin;

TEST_CASE("monomial orders") {
  // x > y > z.
  ExpVec x2yz{2, 1, 1}, xy3{1, 3, 0}, x{1, 0, 0}, y{0, 1, 0};
  SUBCASE("lex") {
    CHECK(compare_monomials(x, y, MonomialOrder::lex) > 0);
    CHECK(compare_monomials(x2yz, xy3, MonomialOrder::lex) > 0);
  }
  SUBCASE("grevlex") {
    CHECK(compare_monomials(x, y, MonomialOrder::grevlex) > 0);
    // Same total degree; smaller last exponent wins.
    CHECK(compare_monomials(xy3, x2yz, MonomialOrder::grevlex) > 0);
    ExpVec a{0, 2, 0}, b{1, 0, 1};
    CHECK(compare_monomials(a, b, MonomialOrder::grevlex) > 0);
  }
}

TEST_CASE("membership examples") {
  auto ctx = make_context({"x", "y"});
  MultiPoly x = MultiPoly::variable(ctx, "x");
  MultiPoly y = MultiPoly::variable(ctx, "y");
  MultiPoly one = MultiPoly::constant(ctx, Rational(1));

  SUBCASE("unit ideal (x, 1-x)") {
    IdealPresentation I{{x, one - x}, MonomialOrder::grevlex};
    CHECK(ideal_membership(one, I));
  }
  SUBCASE("(x, y) is proper") {
    IdealPresentation I{{x, y}, MonomialOrder::grevlex};
    CHECK_FALSE(ideal_membership(one, I));
  }
  SUBCASE("x^2 in (x)") {
    IdealPresentation I{{x}, MonomialOrder::grevlex};
    CHECK(ideal_membership(x * x, I));
  }
  SUBCASE("lex order also works") {
    IdealPresentation I{{x * y - one, y * y - one}, MonomialOrder::lex};
    CHECK(ideal_membership((x - y) * (x * y + x), I));
  }
}

TEST_CASE("normal form of generators and random combinations is zero") {
  testing::Rng rng(61);
  auto ctx = make_context({"x", "y", "z"});
  for (int rep = 0; rep < 12; ++rep) {
    std::vector<MultiPoly> gens;
    int k = static_cast<int>(rng.range(1, 3));
    for (int i = 0; i < k; ++i) {
      MultiPoly g = rng.poly(ctx, 2, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    for (auto order : {MonomialOrder::grevlex, MonomialOrder::lex}) {
      IdealPresentation I{gens, order};
      GroebnerBasis gb = buchberger(I);
      for (const auto& g : gens) CHECK(normal_form(g, gb).is_zero());
      // Random combination sum q_i g_i.
      MultiPoly comb(ctx);
      for (const auto& g : gens) comb += rng.poly(ctx, 2, 2) * g;
      CHECK(normal_form(comb, gb).is_zero());
    }
  }
}

TEST_CASE("pair budget raises resource error") {
  auto ctx = make_context({"x", "y", "z"});
  MultiPoly x = MultiPoly::variable(ctx, "x");
  MultiPoly y = MultiPoly::variable(ctx, "y");
  MultiPoly z = MultiPoly::variable(ctx, "z");
  // Non-trivial basis computation with an absurdly small budget.
  IdealPresentation I{{x * x * y - z * z, y * y * z - x, z * z * x - y},
                      MonomialOrder::grevlex};
  GroebnerOptions opts;
  opts.pair_budget = 1;
  CHECK_THROWS_AS(buchberger(I, opts), Error);
}

TEST_CASE("groebner basis is deterministic and reduced") {
  auto ctx = make_context({"x", "y"});
  MultiPoly x = MultiPoly::variable(ctx, "x");
  MultiPoly y = MultiPoly::variable(ctx, "y");
  IdealPresentation I{{x * x + y, x * y + x}, MonomialOrder::grevlex};
  GroebnerBasis a = buchberger(I);
  GroebnerBasis b = buchberger(I);
  CHECK(a.elements == b.elements);
  for (const auto& g : a.elements) {
    auto [e, c] = leading_term(g, a.order);
    CHECK(c == Rational(1));
  }
}
