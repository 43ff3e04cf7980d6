/* SPDX-License-Identifier: Apache-2.0 */
#include "hitchin/companion.hpp"

namespace hitchin {

ChartSection ChartSection::make(const GroupTag& g, std::string coordinate,
                                std::vector<MultiPoly> values) {
  std::vector<int> weights;
  switch (g.family) {
    case GroupFamily::GL:
      for (int i = 1; i <= g.n; ++i) weights.push_back(i);
      break;
    case GroupFamily::SL:
      for (int i = 2; i <= g.n + 1; ++i) weights.push_back(i);
      break;
    case GroupFamily::SO_odd:
    case GroupFamily::Sp:
      for (int i = 1; i <= g.n; ++i) weights.push_back(2 * i);
      break;
    case GroupFamily::SO_even:
      for (int i = 1; i < g.n; ++i) weights.push_back(2 * i);
      weights.push_back(g.n);
      break;
  }
  if (values.size() != weights.size())
    fail(ErrKind::domain, "invalid section: expected " + std::to_string(weights.size()) +
                              " coefficients for " + g.str());
  VarContext ctx;
  for (const auto& v : values) ctx = merge_contexts(ctx, v.context());
  if (!ctx) ctx = make_context({std::string("t")});
  std::vector<MultiPoly> lifted;
  for (const auto& v : values) lifted.push_back(v.lift(ctx));
  return ChartSection{std::move(coordinate), std::move(lifted), std::move(weights)};
}

PolyMatrix companion_matrix(const ChartSection& a) {
  const auto n = a.values.size();
  if (n == 0) fail(ErrKind::domain, "companion of an empty section");
  const VarContext& ctx = a.values.front().context();
  PolyMatrix m(n, n, ctx);
  for (std::size_t i = 0; i + 1 < n; ++i)
    m.at(i + 1, i) = MultiPoly::constant(ctx, Rational(1));
  // Last column (-a_n, -a_{n-1}, ..., -a_1) top to bottom.
  for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1) = -a.values[n - 1 - i];
  return m;
}

namespace {

std::map<std::string, MultiPoly> section_assignment(const SpectralAlgebra& symbolic,
                                                    const ChartSection& a) {
  std::map<std::string, MultiPoly> out;
  for (std::size_t i = 0; i < symbolic.base_symbols.size(); ++i)
    out.emplace(symbolic.base_symbols[i], a.values[i]);
  return out;
}

}  // namespace

CompanionBundle classical_companion(const GroupTag& g, const ChartSection& a) {
  if (g.family == GroupFamily::GL) {
    // The untwisted companion with weights (0, -1, ..., -(n-1)); GL carries
    // no determinant-trivialization constraint.
    CompanionBundle b{g, companion_matrix(a), {}, Rational(0), std::nullopt,
                      build_cover_algebra(g, section_assignment(build_cover_algebra(g), a))};
    for (int i = 0; i < g.n; ++i) b.summand_weights.push_back(Rational(-i));
    for (const auto& w : b.summand_weights) b.det_weight += w;
    return b;
  }

  SpectralAlgebra symbolic = build_cover_algebra(g);
  if (a.values.size() != symbolic.base_symbols.size())
    fail(ErrKind::domain, "invalid section for " + g.str());
  SpectralAlgebra alg = build_cover_algebra(g, section_assignment(symbolic, a));

  CompanionBundle b{g, alg.mult_x, {}, Rational(0), std::nullopt, alg};

  // Twist exponent per family: SL and Sp use the formal square root (shift
  // N-1 halves), SO_odd shifts by n, SO_even by n-1.
  Rational shift;
  switch (g.family) {
    case GroupFamily::SL:
      shift = Rational(g.n, 2);
      break;
    case GroupFamily::Sp:
      shift = Rational(2 * g.n - 1, 2);
      break;
    case GroupFamily::SO_odd:
      shift = Rational(g.n);
      break;
    case GroupFamily::SO_even:
      shift = Rational(g.n - 1);
      break;
    default:
      break;
  }
  for (const auto& e : alg.basis)
    b.summand_weights.push_back(shift - Rational(e.degree));
  for (const auto& w : b.summand_weights) b.det_weight += w;

  // (i) Trivial determinant line.
  if (!b.det_weight.is_zero())
    fail(ErrKind::construction, "companion determinant weight is not zero");

  // (ii) SL: the trace layer of the spectral data vanishes.
  if (g.family == GroupFamily::SL && !b.theta.trace().is_zero())
    fail(ErrKind::construction, "SL companion has a nonzero trace layer");

  // (iii) SO/Sp: anti-self-adjointness for the specialized pairing.
  if (g.family != GroupFamily::SL) {
    PairingGram pg = pairing_gram(alg);
    PolyMatrix obstruction =
        b.theta.transpose() * pg.gram + pg.gram * b.theta;
    if (!obstruction.is_zero())
      fail(ErrKind::construction,
           "companion field is not anti-self-adjoint for the pairing");
    b.pairing = std::move(pg);
  }

  // (iv) Weight bookkeeping on the unspecialized multiplication matrix:
  // entry (r, s) is homogeneous of Gm degree 1 + deg(basis_s) - deg(basis_r),
  // which matches the twist exponent 1 + w_r - w_s.
  for (std::size_t r = 0; r < symbolic.mult_x.rows(); ++r) {
    for (std::size_t s = 0; s < symbolic.mult_x.cols(); ++s) {
      const MultiPoly& entry = symbolic.mult_x.at(r, s);
      if (entry.is_zero()) continue;
      auto deg = entry.homogeneous_degree(symbolic.base_weights);
      if (!deg || *deg != 1 + symbolic.basis[s].degree - symbolic.basis[r].degree)
        fail(ErrKind::construction, "companion weight bookkeeping violated");
    }
  }

  return b;
}

CheckReport verify_spectral_recovery(const CompanionBundle& bundle, const ChartSection& a) {
  const GroupTag& g = bundle.group;
  CheckReport rep;

  std::vector<MultiPoly> values;
  if (g.family == GroupFamily::GL || g.family == GroupFamily::SL) {
    values = evaluate_invariants(g, bundle.theta);
  } else {
    // Membership and the SO_even Pfaffian are taken with respect to the
    // bundle's own pairing.
    const PairingGram& pg = bundle.pairing.value();
    BilinearFormSpec form = BilinearFormSpec::make(pg.kind, pg.gram);
    values = evaluate_invariants(g, bundle.theta, form);
  }

  const VarContext& ctx = bundle.theta.context();
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] != a.values[j].lift(ctx)) {
      rep.pass = false;
      rep.detail = "spectral data mismatch at generator " + std::to_string(j + 1) +
                   ": " + values[j].str() + " vs " + a.values[j].str();
      return rep;
    }
  }
  return rep;
}

std::vector<MultiPoly> so_odd_kernel_vector(const CompanionBundle& bundle) {
  if (bundle.group.family != GroupFamily::SO_odd)
    fail(ErrKind::domain, "kernel vector applies to the SO_odd companion");
  const SpectralAlgebra& alg = bundle.algebra;
  // v = inner factor x^{2n} + a_2 x^{2n-2} + ... + a_{2n} written in the
  // basis; x * v reduces to the defining relation, i.e. zero.
  const int n = bundle.group.n;
  const VarContext& ctx = alg.base_ctx;
  std::vector<MultiPoly> v(static_cast<std::size_t>(alg.module_rank), MultiPoly(ctx));
  v[static_cast<std::size_t>(2 * n)] = MultiPoly::constant(ctx, Rational(1));
  // Coefficient of x^{2n-2i} of v is the specialized a_{2i}, read off the
  // relation x^{2n+1} + a_2 x^{2n-1} + ... + a_{2n} x.
  for (int i = 1; i <= n; ++i) {
    v[static_cast<std::size_t>(2 * n - 2 * i)] =
        alg.relations[0].coefficient_of(alg.x_index, 2 * n + 1 - 2 * i).restrict_to(ctx);
  }
  // Exact check: theta . v = 0.
  const auto rank = static_cast<std::size_t>(alg.module_rank);
  for (std::size_t r = 0; r < rank; ++r) {
    MultiPoly acc(ctx);
    for (std::size_t c = 0; c < rank; ++c) acc += bundle.theta.at(r, c) * v[c];
    if (!acc.is_zero())
      fail(ErrKind::construction, "kernel vector is not annihilated by theta");
  }
  return v;
}

SlopeReport slope_inequalities(int n, const Rational& kappa) {
  if (n < 1) fail(ErrKind::domain, "n must be positive");
  if (kappa.sign() < 0) fail(ErrKind::domain, "kappa must be non-negative");
  SlopeReport rep;
  rep.mu = Rational(-n) * kappa;
  rep.bound_half = Rational(-(2 * n - 1), 2) * kappa;
  rep.pass = rep.mu <= Rational(0) && rep.mu <= rep.bound_half;
  return rep;
}

}  // namespace hitchin
