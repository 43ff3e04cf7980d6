/* SPDX-License-Identifier: Apache-2.0 */
#ifndef HITCHIN_TESTS_SUPPORT_HPP
#define HITCHIN_TESTS_SUPPORT_HPP

#include <cstdint>
#include <vector>

#include "hitchin/polarization.hpp"

namespace hitchin::testing {

// Deterministic xorshift generator; all test randomness is seeded.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }

  // Uniform in [lo, hi] inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(long max_abs = 5, long max_den = 3) {
    long num = range(-max_abs, max_abs);
    long den = range(1, max_den);
    return Rational(num, den);
  }

  Rational nonzero_rational(long max_abs = 5) {
    Rational r = rational(max_abs);
    while (r.is_zero()) r = rational(max_abs);
    return r;
  }

  MultiPoly poly(const VarContext& ctx, int max_degree, int terms, long max_abs = 4) {
    MultiPoly p(ctx);
    for (int t = 0; t < terms; ++t) {
      ExpVec e(ctx->size(), 0);
      int budget = static_cast<int>(range(0, max_degree));
      for (int k = 0; k < budget; ++k) {
        if (ctx->empty()) break;
        e[static_cast<std::size_t>(range(0, static_cast<long>(ctx->size()) - 1))]++;
      }
      p += MultiPoly::monomial(ctx, e, rational(max_abs));
    }
    return p;
  }

  PolyMatrix rational_matrix(const VarContext& ctx, std::size_t n, long max_abs = 4) {
    PolyMatrix m(n, n, ctx);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        m.at(r, c) = MultiPoly::constant(ctx, rational(max_abs));
    return m;
  }

 private:
  std::uint64_t state_;
};

// Random element of the Lie algebra of g with rational constant entries.
inline PolyMatrix random_algebra_element(Rng& rng, const GroupTag& g,
                                         const VarContext& ctx, long max_abs = 3) {
  const auto N = static_cast<std::size_t>(g.rep_dim());
  switch (g.family) {
    case GroupFamily::GL:
      return rng.rational_matrix(ctx, N, max_abs);
    case GroupFamily::SL: {
      PolyMatrix m = rng.rational_matrix(ctx, N, max_abs);
      MultiPoly tr = m.trace();
      m.at(N - 1, N - 1) -= tr;
      return m;
    }
    case GroupFamily::SO_odd:
    case GroupFamily::SO_even: {
      // so(S) = S . skew for the antidiagonal split form S (S^2 = Id).
      PolyMatrix k(N, N, ctx);
      for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = r + 1; c < N; ++c) {
          Rational v = rng.rational(max_abs);
          k.at(r, c) = MultiPoly::constant(ctx, v);
          k.at(c, r) = MultiPoly::constant(ctx, -v);
        }
      auto form = standard_form(g, ctx);
      return form->gram * k;
    }
    case GroupFamily::Sp: {
      // sp(J) = J^{-1} . symmetric = -J . symmetric for J = [[0,I],[-I,0]].
      PolyMatrix s(N, N, ctx);
      for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = r; c < N; ++c) {
          Rational v = rng.rational(max_abs);
          s.at(r, c) = MultiPoly::constant(ctx, v);
          s.at(c, r) = MultiPoly::constant(ctx, v);
        }
      auto form = standard_form(g, ctx);
      return -(form->gram * s);
    }
  }
  fail(ErrKind::domain, "unknown family");
}

// Commuting pair (p(M), q(M)) for a random rational M and random polynomials
// p, q of degree <= 3.  Hits non-semisimple cases when M is not
// diagonalizable.  Only valid verbatim for GL; other groups use Cartan or
// conjugated-Cartan pairs.
inline std::vector<PolyMatrix> commuting_pair_gl(Rng& rng, std::size_t n,
                                                 const VarContext& ctx) {
  PolyMatrix m = rng.rational_matrix(ctx, n, 2);
  auto poly_of = [&](const PolyMatrix& base) {
    PolyMatrix acc(n, n, ctx);
    PolyMatrix power = PolyMatrix::identity(n, ctx);
    for (int k = 0; k <= 3; ++k) {
      acc = acc + power.scaled(rng.rational(2));
      power = power * base;
    }
    return acc;
  };
  return {poly_of(m), poly_of(m)};
}

// Commuting in-algebra pair for any family: polynomials of one random
// element (odd polynomials for the form-preserving families, trace-corrected
// for SL).  Non-diagonalizable base elements give non-semisimple pairs.
inline std::vector<PolyMatrix> commuting_pair(Rng& rng, const GroupTag& g,
                                              const VarContext& ctx) {
  const auto N = static_cast<std::size_t>(g.rep_dim());
  switch (g.family) {
    case GroupFamily::GL:
      return commuting_pair_gl(rng, N, ctx);
    case GroupFamily::SL: {
      auto pair = commuting_pair_gl(rng, N, ctx);
      for (auto& m : pair) {
        MultiPoly tr = m.trace().scaled(Rational(1, static_cast<long>(N)));
        for (std::size_t i = 0; i < N; ++i) m.at(i, i) -= tr;
      }
      return pair;
    }
    case GroupFamily::SO_odd:
    case GroupFamily::Sp:
    case GroupFamily::SO_even: {
      PolyMatrix m = random_algebra_element(rng, g, ctx, 2);
      PolyMatrix m3 = m * m * m;
      auto odd_poly = [&]() {
        return m.scaled(rng.rational(2)) + m3.scaled(rng.rational(2));
      };
      return {odd_poly(), odd_poly()};
    }
  }
  fail(ErrKind::domain, "unknown family");
}

// Exact exponential of a nilpotent matrix.
inline PolyMatrix exp_nilpotent(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  PolyMatrix acc = PolyMatrix::identity(n, m.context());
  PolyMatrix power = PolyMatrix::identity(n, m.context());
  Rational factorial(1);
  for (std::size_t k = 1; k <= 2 * n; ++k) {
    power = power * m;
    if (power.is_zero()) break;
    factorial *= Rational(static_cast<long>(k));
    acc = acc + power.scaled(Rational(1) / factorial);
  }
  return acc;
}

// Random rational point of G via exact exponentials of nilpotent algebra
// elements and a rational torus element.
inline PolyMatrix random_group_element(Rng& rng, const GroupTag& g,
                                       const VarContext& ctx) {
  const auto N = static_cast<std::size_t>(g.rep_dim());
  auto nilpotent_upper = [&]() {
    PolyMatrix m(N, N, ctx);
    switch (g.family) {
      case GroupFamily::GL:
      case GroupFamily::SL:
        for (std::size_t r = 0; r < N; ++r)
          for (std::size_t c = r + 1; c < N; ++c)
            m.at(r, c) = MultiPoly::constant(ctx, rng.rational(2));
        break;
      case GroupFamily::SO_odd:
      case GroupFamily::SO_even: {
        // S . (skew supported strictly below the antidiagonal) is strictly
        // upper triangular and in so(S).
        PolyMatrix k(N, N, ctx);
        for (std::size_t r = 0; r < N; ++r)
          for (std::size_t c = r + 1; c < N; ++c) {
            if (r + c <= N - 1) continue;  // keep a + b > N + 1 (1-based)
            Rational v = rng.rational(2);
            k.at(r, c) = MultiPoly::constant(ctx, v);
            k.at(c, r) = MultiPoly::constant(ctx, -v);
          }
        m = standard_form(g, ctx)->gram * k;
        break;
      }
      case GroupFamily::Sp: {
        // [[A, B], [0, -A^T]] with A strictly upper, B symmetric.
        const std::size_t n = N / 2;
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = r + 1; c < n; ++c) {
            Rational v = rng.rational(2);
            m.at(r, c) = MultiPoly::constant(ctx, v);
            m.at(n + c, n + r) = MultiPoly::constant(ctx, -v);
          }
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = r; c < n; ++c) {
            Rational v = rng.rational(2);
            m.at(r, n + c) = MultiPoly::constant(ctx, v);
            m.at(c, n + r) = MultiPoly::constant(ctx, v);
          }
        break;
      }
    }
    return m;
  };

  PolyMatrix torus = PolyMatrix::identity(N, ctx);
  switch (g.family) {
    case GroupFamily::GL: {
      for (std::size_t i = 0; i < N; ++i)
        torus.at(i, i) = MultiPoly::constant(ctx, rng.nonzero_rational(3));
      break;
    }
    case GroupFamily::SL: {
      Rational prod(1);
      for (std::size_t i = 0; i + 1 < N; ++i) {
        Rational v = rng.nonzero_rational(3);
        torus.at(i, i) = MultiPoly::constant(ctx, v);
        prod *= v;
      }
      torus.at(N - 1, N - 1) = MultiPoly::constant(ctx, Rational(1) / prod);
      break;
    }
    case GroupFamily::SO_odd:
    case GroupFamily::SO_even: {
      const std::size_t n = static_cast<std::size_t>(g.n);
      for (std::size_t i = 0; i < n; ++i) {
        Rational v = rng.nonzero_rational(3);
        torus.at(i, i) = MultiPoly::constant(ctx, v);
        torus.at(N - 1 - i, N - 1 - i) = MultiPoly::constant(ctx, Rational(1) / v);
      }
      break;
    }
    case GroupFamily::Sp: {
      const std::size_t n = N / 2;
      for (std::size_t i = 0; i < n; ++i) {
        Rational v = rng.nonzero_rational(3);
        torus.at(i, i) = MultiPoly::constant(ctx, v);
        torus.at(n + i, n + i) = MultiPoly::constant(ctx, Rational(1) / v);
      }
      break;
    }
  }
  return exp_nilpotent(nilpotent_upper()) * torus * exp_nilpotent(nilpotent_upper());
}

}  // namespace hitchin::testing

#endif
