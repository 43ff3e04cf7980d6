/* SPDX-License-Identifier: Apache-2.0 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hitchin/polarization.hpp"
#include "support.hpp"

using namespace hitchin;
using hitchin::testing::Rng;

namespace {

PolyMatrix diag(const VarContext& ctx, std::initializer_list<long> vals) {
  PolyMatrix m(vals.size(), vals.size(), ctx);
  std::size_t i = 0;
  for (long v : vals) {
    m.at(i, i) = MultiPoly::constant(ctx, Rational(v));
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("weak compositions") {
  auto parts = [](const std::vector<WeakComposition>& cs) {
    std::vector<std::vector<int>> out;
    for (const auto& c : cs) out.push_back(c.parts);
    return out;
  };
  CHECK(parts(weak_compositions(2, 2)) ==
        std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(parts(weak_compositions(0, 3)) == std::vector<std::vector<int>>{{0, 0, 0}});
  CHECK(parts(weak_compositions(3, 2)) ==
        std::vector<std::vector<int>>{{3, 0}, {2, 1}, {1, 2}, {0, 3}});
  // C(e+d-1, d-1) count and no duplicates.
  auto cs = weak_compositions(4, 3);
  CHECK(cs.size() == 15);
  for (std::size_t i = 0; i + 1 < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) CHECK_FALSE(cs[i] == cs[j]);
  for (const auto& c : cs) CHECK(c.total() == 4);
}

TEST_CASE("commuting tuple validation") {
  auto ctx = make_context({});
  GroupTag gl = GroupTag::make(GroupFamily::GL, 2);
  PolyMatrix a = diag(ctx, {1, 2});
  PolyMatrix b = PolyMatrix::from_rationals(ctx, {{Rational(0), Rational(1)},
                                                  {Rational(0), Rational(0)}});
  CHECK_NOTHROW(CommutingTuple::make(gl, {a, a}));
  CHECK_THROWS_AS(CommutingTuple::make(gl, {a, b}), Error);  // [diag, nilpotent] != 0
  GroupTag sl = GroupTag::make(GroupFamily::SL, 1);
  CHECK_THROWS_AS(CommutingTuple::make(sl, {a, a}), Error);  // not traceless
}

TEST_CASE("spectral data of the diag(1,2)/diag(3,4) pair") {
  auto ctx = make_context({});
  GroupTag gl = GroupTag::make(GroupFamily::GL, 2);
  auto t = CommutingTuple::make(gl, {diag(ctx, {1, 2}), diag(ctx, {3, 4})});
  SpectralDatum d = spectral_data(t);

  CHECK(d.at(1, {1, 0}).constant_value() == Rational(-3));
  CHECK(d.at(1, {0, 1}).constant_value() == Rational(-7));
  CHECK(d.at(2, {2, 0}).constant_value() == Rational(2));
  CHECK(d.at(2, {1, 1}).constant_value() == Rational(10));
  CHECK(d.at(2, {0, 2}).constant_value() == Rational(12));

  SUBCASE("diagonal restriction recovers theta^1 + theta^2 = diag(4,6)") {
    auto sums = diagonal_restriction(d);
    CHECK(sums[0].constant_value() == Rational(-10));
    CHECK(sums[1].constant_value() == Rational(24));
  }
}

TEST_CASE("zero second component collapses to d=1 data") {
  Rng rng(83);
  auto ctx = make_context({});
  for (const auto& fam : {GroupFamily::GL, GroupFamily::SL, GroupFamily::Sp}) {
    GroupTag g = GroupTag::make(fam, 2);
    PolyMatrix theta = testing::random_algebra_element(rng, g, ctx);
    PolyMatrix zero(theta.rows(), theta.cols(), ctx);
    auto t = CommutingTuple::make(g, {theta, zero});
    SpectralDatum d = spectral_data(t);
    auto single = spectral_data(CommutingTuple::make(g, {theta}));
    const auto sys = invariant_system(g);
    for (std::size_t j = 0; j < sys.generators.size(); ++j) {
      int e = sys.generators[j].degree;
      for (const auto& comp : weak_compositions(e, 2)) {
        const MultiPoly& entry = d.at(static_cast<int>(j + 1), comp.parts);
        if (comp.parts[1] > 0) {
          CHECK(entry.is_zero());
        } else {
          CHECK(entry == single.at(static_cast<int>(j + 1), {e}));
        }
      }
    }
  }
}

TEST_CASE("equal components scale by binomials (homogeneity)") {
  auto ctx = make_context({});
  GroupTag gl = GroupTag::make(GroupFamily::GL, 2);
  PolyMatrix theta = diag(ctx, {2, 5});
  auto t = CommutingTuple::make(gl, {theta, theta});
  SpectralDatum d = spectral_data(t);
  auto single = spectral_data(CommutingTuple::make(gl, {theta}));
  const auto sys = invariant_system(gl);
  for (std::size_t j = 0; j < sys.generators.size(); ++j) {
    int e = sys.generators[j].degree;
    const MultiPoly& cj = single.at(static_cast<int>(j + 1), {e});
    for (const auto& comp : weak_compositions(e, 2)) {
      // binomial(e; i1)
      long binom = 1;
      for (int k = 0; k < comp.parts[0]; ++k)
        binom = binom * (e - k) / (k + 1);
      CHECK(d.at(static_cast<int>(j + 1), comp.parts) == cj.scaled(Rational(binom)));
    }
  }
}

TEST_CASE("gld_act") {
  auto ctx = make_context({});
  GroupTag gl = GroupTag::make(GroupFamily::GL, 2);
  PolyMatrix t1 = diag(ctx, {1, 2}), t2 = diag(ctx, {3, 4});
  auto t = CommutingTuple::make(gl, {t1, t2});

  SUBCASE("identity") {
    PolyMatrix id = PolyMatrix::identity(2, ctx);
    auto r = gld_act(id, t);
    CHECK(r.matrix(0) == t1);
    CHECK(r.matrix(1) == t2);
  }
  SUBCASE("swap") {
    PolyMatrix sw(2, 2, ctx);
    sw.at(0, 1) = MultiPoly::constant(ctx, Rational(1));
    sw.at(1, 0) = MultiPoly::constant(ctx, Rational(1));
    auto r = gld_act(sw, t);
    CHECK(r.matrix(0) == t2);
    CHECK(r.matrix(1) == t1);
  }
  SUBCASE("shear [[1,1],[0,1]]") {
    PolyMatrix sh = PolyMatrix::identity(2, ctx);
    sh.at(0, 1) = MultiPoly::constant(ctx, Rational(1));
    auto r = gld_act(sh, t);
    CHECK(r.matrix(0) == t1 + t2);
    CHECK(r.matrix(1) == t2);
  }
  SUBCASE("singular action is rejected") {
    PolyMatrix z(2, 2, ctx);
    CHECK_THROWS_AS(gld_act(z, t), Error);
  }
}

TEST_CASE("equivariance") {
  Rng rng(89);
  auto ctx = make_context({});

  SUBCASE("identity passes trivially") {
    GroupTag gl = GroupTag::make(GroupFamily::GL, 2);
    auto t = CommutingTuple::make(gl, {diag(ctx, {1, 2}), diag(ctx, {3, 4})});
    CHECK(equivariance_check(PolyMatrix::identity(2, ctx), t).pass);
  }

  SUBCASE("symbolic scaling x = diag(s, 1) scales entry (j,(i1,i2)) by s^i1") {
    auto sctx = make_context({"s"});
    MultiPoly s = MultiPoly::variable(sctx, "s");
    GroupTag gl = GroupTag::make(GroupFamily::GL, 2);
    auto t = CommutingTuple::make(gl, {diag(ctx, {1, 2}), diag(ctx, {3, 4})});
    PolyMatrix x(2, 2, sctx);
    x.at(0, 0) = s;
    x.at(1, 1) = MultiPoly::constant(sctx, Rational(1));
    SpectralDatum base = spectral_data(t);
    SpectralDatum scaled = spectral_data(gld_act(x, t));
    for (const auto& [key, val] : scaled.entries) {
      MultiPoly expect =
          base.at(key.first, key.second).lift(val.context()) *
          s.lift(val.context()).pow(key.second[0]);
      CHECK(val == expect);
    }
    CHECK(equivariance_check(x, t).pass);
  }

  SUBCASE("random rational x on random commuting pairs, sizes <= 4") {
    int done = 0;
    while (done < 10) {
      std::size_t n = static_cast<std::size_t>(rng.range(2, 4));
      GroupTag gl = GroupTag::make(GroupFamily::GL, static_cast<int>(n));
      auto pair = testing::commuting_pair_gl(rng, n, ctx);
      auto t = CommutingTuple::make(gl, pair);
      PolyMatrix x = rng.rational_matrix(ctx, 2, 3);
      if (det(x).is_zero()) continue;
      CHECK(equivariance_check(x, t).pass);
      ++done;
    }
  }
}

TEST_CASE("conjugation invariance of spectral data") {
  Rng rng(97);
  auto ctx = make_context({});
  for (const auto& fam :
       {GroupFamily::GL, GroupFamily::SL, GroupFamily::SO_odd, GroupFamily::Sp,
        GroupFamily::SO_even}) {
    int n = fam == GroupFamily::SO_even ? 2 : (fam == GroupFamily::SO_odd ? 1 : 2);
    GroupTag g = GroupTag::make(fam, n);
    if (g.rep_dim() > 4) continue;
    for (int rep = 0; rep < 3; ++rep) {
      // Cartan pairs commute and are in-algebra.
      PolyMatrix h1 = cartan_element(g);
      PolyMatrix h2 = cartan_element(g);
      std::map<std::string, MultiPoly> a1, a2;
      auto c0 = make_context({});
      for (const auto& name : *h1.context()) {
        a1.emplace(name, MultiPoly::constant(c0, rng.rational(3)));
        a2.emplace(name, MultiPoly::constant(c0, rng.rational(3)));
      }
      auto t = CommutingTuple::make(g, {h1.eval(a1), h2.eval(a2)});
      PolyMatrix x = testing::random_group_element(rng, g, c0);
      PolyMatrix xi = inverse_constant(x);
      std::vector<PolyMatrix> conj;
      for (const auto& m : t.matrices()) conj.push_back(x * m * xi);
      auto tc = CommutingTuple::make(g, conj);
      SpectralDatum d0 = spectral_data(t), d1 = spectral_data(tc);
      CHECK(d0.entries == d1.entries);
    }
  }
}

TEST_CASE("completeness: entries reconstruct c_j(b1 theta1 + b2 theta2)") {
  Rng rng(101);
  auto ctx = make_context({});
  GroupTag gl = GroupTag::make(GroupFamily::GL, 3);
  auto pair = testing::commuting_pair_gl(rng, 3, ctx);
  auto t = CommutingTuple::make(gl, pair);
  SpectralDatum d = spectral_data(t);

  auto bctx = make_context({"b1", "b2"});
  MultiPoly b1 = MultiPoly::variable(bctx, "b1"), b2 = MultiPoly::variable(bctx, "b2");
  PolyMatrix theta = pair[0].lift(bctx).scaled(b1) + pair[1].lift(bctx).scaled(b2);
  auto direct = evaluate_invariants(gl, theta);
  const auto sys = invariant_system(gl);
  for (std::size_t j = 0; j < sys.generators.size(); ++j) {
    MultiPoly sum(bctx);
    for (const auto& comp : weak_compositions(sys.generators[j].degree, 2)) {
      MultiPoly mono = b1.pow(comp.parts[0]) * b2.pow(comp.parts[1]);
      sum += mono * d.at(static_cast<int>(j + 1), comp.parts).lift(bctx);
    }
    CHECK(sum == direct[j]);
  }
}

TEST_CASE("joint eigenvalue oracle for the top layer") {
  Rng rng(103);
  auto ctx = make_context({});
  for (int rep = 0; rep < 6; ++rep) {
    std::size_t n = static_cast<std::size_t>(rng.range(2, 4));
    GroupTag gl = GroupTag::make(GroupFamily::GL, static_cast<int>(n));
    std::vector<Rational> lam, mu;
    PolyMatrix t1(n, n, ctx), t2(n, n, ctx);
    for (std::size_t i = 0; i < n; ++i) {
      lam.push_back(rng.rational(3));
      mu.push_back(rng.rational(3));
      t1.at(i, i) = MultiPoly::constant(ctx, lam.back());
      t2.at(i, i) = MultiPoly::constant(ctx, mu.back());
    }
    // Conjugate both by one invertible g: still commuting, same datum.
    PolyMatrix g = rng.rational_matrix(ctx, n, 2);
    if (det(g).is_zero()) continue;
    PolyMatrix gi = inverse_constant(g);
    auto t = CommutingTuple::make(gl, {g * t1 * gi, g * t2 * gi});
    SpectralDatum d = spectral_data(t);

    // Oracle over eigen-data: prod_k (b1 lam_k + b2 mu_k).
    auto bctx = make_context({"b1", "b2"});
    MultiPoly b1 = MultiPoly::variable(bctx, "b1"), b2 = MultiPoly::variable(bctx, "b2");
    MultiPoly prod = MultiPoly::constant(bctx, Rational(1));
    for (std::size_t k = 0; k < n; ++k)
      prod = prod * (b1.scaled(lam[k]) + b2.scaled(mu[k]));
    for (const auto& comp : weak_compositions(static_cast<int>(n), 2)) {
      ExpVec e{comp.parts[0], comp.parts[1]};
      Rational coeff = prod.coefficient(e);
      if (n % 2 == 1) coeff = -coeff;  // (-1)^N
      CHECK(d.at(static_cast<int>(n), comp.parts).constant_value() == coeff);
    }
  }
}
