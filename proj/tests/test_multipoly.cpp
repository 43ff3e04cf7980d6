/* SPDX-License-Identifier: Apache-2.0 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hitchin/multipoly.hpp"
#include "support.hpp"

using namespace hitchin;

namespace {
VarContext xy() { return make_context({"x", "y"}); }

MultiPoly var(const VarContext& c, const char* n) { return MultiPoly::variable(c, n); }
MultiPoly con(const VarContext& c, long k) { return MultiPoly::constant(c, Rational(k)); }
}  // namespace

TEST_CASE("ring arithmetic examples") {
  auto ctx = xy();
  MultiPoly x = var(ctx, "x"), y = var(ctx, "y");

  CHECK((x + con(ctx, 1)) + (x - con(ctx, 1)) == x.scaled(Rational(2)));
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x + con(ctx, 1)).pow(0) == con(ctx, 1));
  CHECK((x + y).pow(2) == x * x + x * y.scaled(Rational(2)) + y * y);
}

TEST_CASE("context mismatch is an error") {
  auto a = make_context({"x"});
  auto b = make_context({"y"});
  MultiPoly p = MultiPoly::variable(a, "x");
  MultiPoly q = MultiPoly::variable(b, "y");
  CHECK_THROWS_AS(p + q, Error);
  CHECK_THROWS_AS(p * q, Error);
}

TEST_CASE("no stored zero coefficients") {
  auto ctx = xy();
  MultiPoly x = var(ctx, "x");
  MultiPoly z = x - x;
  CHECK(z.is_zero());
  CHECK(z.terms().empty());
}

TEST_CASE("eval") {
  auto ctx = xy();
  MultiPoly x = var(ctx, "x"), y = var(ctx, "y");
  MultiPoly p = x * x + y;

  SUBCASE("rational specialization") {
    MultiPoly v = p.eval_rational({{"x", Rational(2)}, {"y", Rational(3)}});
    CHECK(v.is_constant());
    CHECK(v.constant_value() == Rational(7));
  }
  SUBCASE("identity substitution") {
    MultiPoly v = x.eval({{"x", x}, {"y", y}});
    CHECK(v == x);
  }
  SUBCASE("polynomial substitution") {
    auto tctx = make_context({"t"});
    MultiPoly t = MultiPoly::variable(tctx, "t");
    MultiPoly v = p.eval({{"x", t}, {"y", t.pow(3)}});
    CHECK(v == t * t + t.pow(3));
  }
  SUBCASE("incomplete assignment") {
    CHECK_THROWS_AS(p.eval({{"x", x}}), Error);
  }
  SUBCASE("composition equals composed assignment") {
    testing::Rng rng(5);
    auto uctx = make_context({"u", "v"});
    MultiPoly u = MultiPoly::variable(uctx, "u"), v = MultiPoly::variable(uctx, "v");
    for (int i = 0; i < 20; ++i) {
      MultiPoly f = rng.poly(ctx, 3, 4);
      MultiPoly gx = rng.poly(uctx, 2, 3), gy = rng.poly(uctx, 2, 3);
      std::map<std::string, Rational> point{{"u", rng.rational()}, {"v", rng.rational()}};
      MultiPoly lhs = f.eval({{"x", gx}, {"y", gy}}).eval_rational(point);
      MultiPoly rhs = f.eval({{"x", gx.eval_rational(point)}, {"y", gy.eval_rational(point)}});
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("partial derivative") {
  auto ctx = make_context({"x", "a2"});
  MultiPoly x = var(ctx, "x"), a2 = var(ctx, "a2");
  MultiPoly p = x.pow(3) + a2 * x;

  CHECK(p.derivative("x") == x.pow(2).scaled(Rational(3)) + a2);
  CHECK(p.derivative("a2") == x);
  CHECK(con(ctx, 9).derivative("x").is_zero());
  CHECK_THROWS_AS(p.derivative("zz"), Error);
}

TEST_CASE("Leibniz rule on random samples") {
  testing::Rng rng(11);
  auto ctx = make_context({"x", "y", "z"});
  for (int i = 0; i < 30; ++i) {
    MultiPoly f = rng.poly(ctx, 3, 4), g = rng.poly(ctx, 3, 4);
    for (std::size_t v = 0; v < 3; ++v) {
      CHECK((f * g).derivative(v) == f.derivative(v) * g + g.derivative(v) * f);
    }
  }
}

TEST_CASE("ring axioms on random triples") {
  testing::Rng rng(13);
  auto ctx = xy();
  for (int i = 0; i < 40; ++i) {
    MultiPoly a = rng.poly(ctx, 3, 3), b = rng.poly(ctx, 3, 3), c = rng.poly(ctx, 3, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("lift and restrict") {
  auto small = make_context({"x"});
  auto big = make_context({"y", "x", "z"});
  MultiPoly p = MultiPoly::variable(small, "x").pow(2);
  MultiPoly lifted = p.lift(big);
  CHECK(lifted.degree_in("x") == 2);
  CHECK(lifted.restrict_to(small) == p);
  MultiPoly y = MultiPoly::variable(big, "y");
  CHECK_THROWS_AS((lifted + y).restrict_to(small), Error);
}

TEST_CASE("split and homogeneity") {
  auto ctx = make_context({"b1", "b2", "t"});
  MultiPoly b1 = var(ctx, "b1"), b2 = var(ctx, "b2"), t = var(ctx, "t");
  MultiPoly p = b1 * b1 + b1 * b2 * t.scaled(Rational(4)) + b2 * b2 * t * t;
  std::vector<std::size_t> bvars{0, 1};
  auto groups = p.split_by(bvars);
  CHECK(groups.size() == 3);
  CHECK(groups.at(ExpVec{1, 1}) == t.scaled(Rational(4)));

  std::vector<int> w{1, 1, 0};
  CHECK(p.homogeneous_degree(w) == 2);
  std::vector<int> w2{1, 1, 1};
  CHECK_FALSE(p.homogeneous_degree(w2).has_value());
}

TEST_CASE("divide_exact") {
  testing::Rng rng(31);
  auto ctx = xy();
  for (int i = 0; i < 30; ++i) {
    MultiPoly q = rng.poly(ctx, 3, 3);
    if (q.is_zero()) continue;
    MultiPoly h = rng.poly(ctx, 3, 3);
    CHECK(divide_exact(q * h, q) == h);
  }
  MultiPoly x = var(ctx, "x"), y = var(ctx, "y");
  CHECK_THROWS_AS(divide_exact(x, y), Error);
}
