/* SPDX-License-Identifier: Apache-2.0 */
#include "hitchin/spectral_cover.hpp"

#include <algorithm>

#include "hitchin/resultant.hpp"

namespace hitchin {

namespace {

struct BaseLayout {
  std::vector<std::string> names;
  std::vector<int> weights;
};

BaseLayout base_layout(const GroupTag& g) {
  BaseLayout out;
  switch (g.family) {
    case GroupFamily::GL:
      for (int i = 1; i <= g.n; ++i) {
        out.names.push_back("a" + std::to_string(i));
        out.weights.push_back(i);
      }
      break;
    case GroupFamily::SL:
      for (int i = 2; i <= g.n + 1; ++i) {
        out.names.push_back("a" + std::to_string(i));
        out.weights.push_back(i);
      }
      break;
    case GroupFamily::SO_odd:
    case GroupFamily::Sp:
      for (int i = 1; i <= g.n; ++i) {
        out.names.push_back("a" + std::to_string(2 * i));
        out.weights.push_back(2 * i);
      }
      break;
    case GroupFamily::SO_even:
      for (int i = 1; i < g.n; ++i) {
        out.names.push_back("a" + std::to_string(2 * i));
        out.weights.push_back(2 * i);
      }
      out.names.push_back("p" + std::to_string(g.n));
      out.weights.push_back(g.n);
      break;
  }
  return out;
}

MultiPoly var(const VarContext& ctx, const std::string& name) {
  return MultiPoly::variable(ctx, name);
}

// x^k over full_ctx.
MultiPoly xpow(const SpectralAlgebra& alg, int k) {
  ExpVec e(alg.full_ctx->size(), 0);
  e[alg.x_index] = k;
  return MultiPoly::monomial(alg.full_ctx, e, Rational(1));
}

void build_reduction_data(SpectralAlgebra& alg) {
  const GroupTag& g = alg.group;
  const VarContext& ctx = alg.full_ctx;
  auto base_var = [&](const std::string& n) { return var(ctx, n); };

  if (g.family != GroupFamily::SO_even) {
    // Single relation x^N + lower terms; rewrite the top power.
    alg.x_top = alg.module_rank;
    alg.x_reduction = xpow(alg, alg.x_top) - alg.relations[0];
    return;
  }

  const int n = g.n;
  // q(x) = x^{2n-2} + a_2 x^{2n-4} + ... + a_{2n-2}
  MultiPoly q = xpow(alg, 2 * n - 2);
  for (int i = 1; i < n; ++i)
    q += base_var("a" + std::to_string(2 * i)) * xpow(alg, 2 * n - 2 - 2 * i);
  MultiPoly pn = base_var("p" + std::to_string(n));
  MultiPoly pprime = MultiPoly::variable(ctx, alg.p_index.value());

  alg.x_top = 2 * n - 1;
  // x q(x) = -p_n p'  gives  x^{2n-1} = -(q - x^{2n-2}) x - p_n p'.
  alg.x_reduction = -(q - xpow(alg, 2 * n - 2)) * xpow(alg, 1) - pn * pprime;
  // x p' = p_n
  alg.xp_reduction = pn;
  // p'^2 = -q(x)
  alg.psq_reduction = -q;
}

// Gram matrix of omega(b_i, b_j) = lambda(b_i sigma(b_j)) in the oriented
// basis.
PolyMatrix compute_pairing_gram(const SpectralAlgebra& alg) {
  const auto rank = static_cast<std::size_t>(alg.module_rank);
  PolyMatrix gram(rank, rank, alg.base_ctx);
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rank; ++j) {
      ExpVec e(alg.full_ctx->size(), 0);
      e[alg.x_index] = alg.basis[i].x_exp + alg.basis[j].x_exp;
      if (alg.p_index) e[*alg.p_index] = alg.basis[i].p_exp + alg.basis[j].p_exp;
      auto coords = reduce_to_basis(alg, MultiPoly::monomial(alg.full_ctx, e, Rational(1)));
      MultiPoly val = coords[alg.lambda_index];
      if (alg.basis[j].involution_sign < 0) val = -val;
      if (alg.basis[i].sign * alg.basis[j].sign < 0) val = -val;
      gram.at(i, j) = val;
    }
  }
  return gram;
}

// Fully reduces an element of the ambient polynomial ring into the span of
// the basis monomials using the rewrite rules.
MultiPoly reduce_element(const SpectralAlgebra& alg, MultiPoly p) {
  const std::size_t xi = alg.x_index;
  const bool has_p = alg.p_index.has_value();
  const std::size_t pi = has_p ? *alg.p_index : 0;

  for (;;) {
    bool changed = false;
    for (const auto& [e, c] : p.terms()) {
      if (has_p && e[pi] >= 2) {
        ExpVec rest = e;
        rest[pi] -= 2;
        MultiPoly m = MultiPoly::monomial(alg.full_ctx, rest, c);
        p -= MultiPoly::monomial(alg.full_ctx, e, c);
        p += m * alg.psq_reduction;
        changed = true;
        break;
      }
      if (has_p && e[pi] == 1 && e[xi] >= 1) {
        ExpVec rest = e;
        rest[pi] = 0;
        rest[xi] -= 1;
        MultiPoly m = MultiPoly::monomial(alg.full_ctx, rest, c);
        p -= MultiPoly::monomial(alg.full_ctx, e, c);
        p += m * alg.xp_reduction;
        changed = true;
        break;
      }
      if (e[xi] >= alg.x_top) {
        ExpVec rest = e;
        rest[xi] -= alg.x_top;
        MultiPoly m = MultiPoly::monomial(alg.full_ctx, rest, c);
        p -= MultiPoly::monomial(alg.full_ctx, e, c);
        p += m * alg.x_reduction;
        changed = true;
        break;
      }
    }
    if (!changed) return p;
  }
}

}  // namespace

std::vector<MultiPoly> reduce_to_basis(const SpectralAlgebra& alg, const MultiPoly& element) {
  MultiPoly p = element.lift(alg.full_ctx);
  p = reduce_element(alg, p);

  std::vector<MultiPoly> coords(static_cast<std::size_t>(alg.module_rank),
                                MultiPoly(alg.full_ctx));
  for (const auto& [e, c] : p.terms()) {
    bool placed = false;
    for (std::size_t k = 0; k < alg.basis.size(); ++k) {
      const auto& b = alg.basis[k];
      if (e[alg.x_index] == b.x_exp &&
          (!alg.p_index || e[*alg.p_index] == b.p_exp)) {
        ExpVec rest = e;
        rest[alg.x_index] = 0;
        if (alg.p_index) rest[*alg.p_index] = 0;
        coords[k] += MultiPoly::monomial(alg.full_ctx, rest, c);
        placed = true;
        break;
      }
    }
    if (!placed)
      fail(ErrKind::construction, "reduction left a monomial outside the basis span");
  }
  std::vector<MultiPoly> out;
  out.reserve(coords.size());
  for (std::size_t k = 0; k < coords.size(); ++k) {
    MultiPoly c = coords[k].restrict_to(alg.base_ctx);
    out.push_back(alg.basis[k].sign < 0 ? -c : c);
  }
  return out;
}

PolyMatrix multiplication_matrix(const SpectralAlgebra& alg, const MultiPoly& element) {
  MultiPoly elt = element.lift(alg.full_ctx);
  const auto rank = static_cast<std::size_t>(alg.module_rank);
  PolyMatrix out(rank, rank, alg.base_ctx);
  for (std::size_t j = 0; j < rank; ++j) {
    const auto& b = alg.basis[j];
    ExpVec e(alg.full_ctx->size(), 0);
    e[alg.x_index] = b.x_exp;
    if (alg.p_index) e[*alg.p_index] = b.p_exp;
    MultiPoly bj = MultiPoly::monomial(alg.full_ctx, e, Rational(b.sign));
    auto coords = reduce_to_basis(alg, elt * bj);
    for (std::size_t i = 0; i < rank; ++i) out.at(i, j) = coords[i];
  }
  return out;
}

SpectralAlgebra build_cover_algebra(
    const GroupTag& group,
    const std::optional<std::map<std::string, MultiPoly>>& specialization) {
  SpectralAlgebra alg;
  alg.group = group;

  BaseLayout layout = base_layout(group);
  alg.base_symbols = layout.names;
  alg.base_weights = layout.weights;
  alg.base_ctx = make_context(layout.names);

  std::vector<std::string> full_names = layout.names;
  full_names.push_back("x");
  if (group.family == GroupFamily::SO_even)
    full_names.push_back("p" + std::to_string(group.n - 1));
  alg.full_ctx = make_context(full_names);
  alg.x_index = *context_index(alg.full_ctx, "x");
  if (group.family == GroupFamily::SO_even)
    alg.p_index = *context_index(alg.full_ctx, "p" + std::to_string(group.n - 1));

  const int N = group.rep_dim();
  auto base_var = [&](const std::string& n) { return var(alg.full_ctx, n); };

  // Relations.
  switch (group.family) {
    case GroupFamily::GL: {
      alg.module_rank = N;
      MultiPoly rel = xpow(alg, N);
      for (int i = 1; i <= N; ++i)
        rel += base_var("a" + std::to_string(i)) * xpow(alg, N - i);
      alg.relations.push_back(rel);
      break;
    }
    case GroupFamily::SL: {
      alg.module_rank = N;
      MultiPoly rel = xpow(alg, N);
      for (int i = 2; i <= N; ++i)
        rel += base_var("a" + std::to_string(i)) * xpow(alg, N - i);
      alg.relations.push_back(rel);
      break;
    }
    case GroupFamily::SO_odd:
    case GroupFamily::Sp: {
      alg.module_rank = N;
      MultiPoly rel = xpow(alg, N);
      for (int i = 1; i <= group.n; ++i)
        rel += base_var("a" + std::to_string(2 * i)) * xpow(alg, N - 2 * i);
      alg.relations.push_back(rel);
      break;
    }
    case GroupFamily::SO_even: {
      const int n = group.n;
      alg.module_rank = 2 * n;
      MultiPoly pprime = MultiPoly::variable(alg.full_ctx, *alg.p_index);
      MultiPoly rel1 = base_var("p" + std::to_string(n)) - xpow(alg, 1) * pprime;
      MultiPoly rel2 = xpow(alg, 2 * n - 2) + pprime * pprime;
      for (int i = 1; i < n; ++i)
        rel2 += base_var("a" + std::to_string(2 * i)) * xpow(alg, 2 * n - 2 - 2 * i);
      alg.relations.push_back(rel1);
      alg.relations.push_back(rel2);
      break;
    }
  }

  // Basis.
  if (group.family == GroupFamily::SO_even) {
    for (int k = 0; k <= 2 * group.n - 2; ++k)
      alg.basis.push_back({k, 0, k, (k % 2 == 0) ? 1 : -1});
    alg.basis.push_back({0, 1, group.n - 1, -1});
    alg.lambda_index = static_cast<std::size_t>(2 * group.n - 2);
  } else {
    for (int k = 0; k < alg.module_rank; ++k)
      alg.basis.push_back({k, 0, k, (k % 2 == 0) ? 1 : -1});
    alg.lambda_index = static_cast<std::size_t>(alg.module_rank - 1);
  }

  build_reduction_data(alg);

  // Multiplication by x.
  alg.mult_x = multiplication_matrix(alg, xpow(alg, 1));

  // Freeness certificate: determinant of the trace-form gram tau(b_i, b_j) =
  // tr(M(b_i b_j)).  Power bases are free by construction; B~ mixes x powers
  // with p', so its basis gets certified.
  if (group.family == GroupFamily::SO_even) {
    const auto rank = static_cast<std::size_t>(alg.module_rank);
    std::vector<MultiPoly> basis_traces;
    for (std::size_t k = 0; k < rank; ++k) {
      ExpVec e(alg.full_ctx->size(), 0);
      e[alg.x_index] = alg.basis[k].x_exp;
      e[*alg.p_index] = alg.basis[k].p_exp;
      basis_traces.push_back(
          multiplication_matrix(alg, MultiPoly::monomial(alg.full_ctx, e, Rational(1)))
              .trace());
    }
    PolyMatrix tau(rank, rank, alg.base_ctx);
    for (std::size_t i = 0; i < rank; ++i) {
      for (std::size_t j = i; j < rank; ++j) {
        ExpVec e(alg.full_ctx->size(), 0);
        e[alg.x_index] = alg.basis[i].x_exp + alg.basis[j].x_exp;
        e[*alg.p_index] = alg.basis[i].p_exp + alg.basis[j].p_exp;
        auto coords = reduce_to_basis(
            alg, MultiPoly::monomial(alg.full_ctx, e, Rational(1)));
        MultiPoly t(alg.base_ctx);
        for (std::size_t k = 0; k < rank; ++k) t += coords[k] * basis_traces[k];
        tau.at(i, j) = t;
        tau.at(j, i) = t;
      }
    }
    MultiPoly cert = det(tau);
    if (cert.is_zero())
      fail(ErrKind::construction, "basis of B~ failed the freeness certificate");
    alg.freeness_certificate = cert;

    // Orient the p' basis vector so that pf(gram . mult_x) = p_n.
    MultiPoly pf = pfaffian(compute_pairing_gram(alg) * alg.mult_x);
    MultiPoly pn = MultiPoly::variable(alg.base_ctx, "p" + std::to_string(group.n));
    if (pf == -pn) {
      alg.basis.back().sign = -1;
      alg.mult_x = multiplication_matrix(alg, xpow(alg, 1));
    } else if (pf != pn) {
      fail(ErrKind::construction, "pairing pfaffian is not +-p_n: " + pf.str());
    }
  } else {
    alg.freeness_certificate = MultiPoly::constant(alg.base_ctx, Rational(1));
  }

  if (!specialization) return alg;

  // Specialize every base symbol into the chart ring.
  const auto& values = *specialization;
  VarContext chart;
  for (const auto& name : alg.base_symbols) {
    auto it = values.find(name);
    if (it == values.end())
      fail(ErrKind::specialization,
           "specialization misses base symbol '" + name + "'");
    chart = merge_contexts(chart, it->second.context());
  }
  if (!chart) chart = make_context({});

  SpectralAlgebra out = alg;
  out.specialized = true;
  out.base_ctx = chart;
  out.freeness_certificate.reset();

  std::vector<std::string> chart_full = *chart;
  std::string xname = fresh_name(chart, "x");
  chart_full.push_back(xname);
  std::string pname;
  if (group.family == GroupFamily::SO_even) {
    auto tmp = make_context(chart_full);
    pname = fresh_name(tmp, "p" + std::to_string(group.n - 1));
    chart_full.push_back(pname);
  }
  out.full_ctx = make_context(chart_full);
  out.x_index = *context_index(out.full_ctx, xname);
  if (group.family == GroupFamily::SO_even)
    out.p_index = *context_index(out.full_ctx, pname);

  // Assignment over the new full context: base symbols to their values, x
  // and p' to themselves.
  std::map<std::string, MultiPoly> assign;
  for (const auto& name : alg.base_symbols)
    assign.emplace(name, values.at(name).lift(out.full_ctx));
  assign.emplace("x", MultiPoly::variable(out.full_ctx, out.x_index));
  if (alg.p_index)
    assign.emplace((*alg.full_ctx)[*alg.p_index],
                   MultiPoly::variable(out.full_ctx, *out.p_index));

  out.relations.clear();
  for (const auto& rel : alg.relations) out.relations.push_back(rel.eval(assign));
  out.x_reduction = alg.x_reduction.eval(assign);
  if (alg.p_index) {
    out.xp_reduction = alg.xp_reduction.eval(assign);
    out.psq_reduction = alg.psq_reduction.eval(assign);
  }

  std::map<std::string, MultiPoly> base_assign;
  for (const auto& name : alg.base_symbols)
    base_assign.emplace(name, values.at(name).lift(chart));
  out.mult_x = alg.mult_x.eval(base_assign);
  return out;
}

PairingGram pairing_gram(const SpectralAlgebra& alg) {
  switch (alg.group.family) {
    case GroupFamily::SO_odd:
    case GroupFamily::Sp:
    case GroupFamily::SO_even:
      break;
    default:
      fail(ErrKind::domain, "pairing is defined for SO_odd, Sp, SO_even only");
  }
  PolyMatrix gram = compute_pairing_gram(alg);

  MultiPoly d = det(gram);
  if (!d.is_constant() || d.is_zero())
    fail(ErrKind::construction,
         "pairing gram determinant is not a nonzero rational: " + d.str());

  BilinearFormSpec::Kind expected = alg.group.family == GroupFamily::Sp
                                        ? BilinearFormSpec::Kind::alternating
                                        : BilinearFormSpec::Kind::symmetric;
  PolyMatrix t = gram.transpose();
  if (expected == BilinearFormSpec::Kind::symmetric && t != gram)
    fail(ErrKind::construction, "pairing gram is not symmetric");
  if (expected == BilinearFormSpec::Kind::alternating && t != -gram)
    fail(ErrKind::construction, "pairing gram is not alternating");

  PolyMatrix obstruction = alg.mult_x.transpose() * gram + gram * alg.mult_x;
  if (!obstruction.is_zero())
    fail(ErrKind::construction, "multiplication by x is not anti-self-adjoint");

  return PairingGram{std::move(gram), expected};
}

int gm_weight_check(const SpectralAlgebra& alg) {
  if (alg.specialized)
    fail(ErrKind::domain, "Gm weights are checked on the unspecialized algebra");
  PairingGram pg = pairing_gram(alg);
  std::optional<int> weight;
  for (std::size_t r = 0; r < pg.gram.rows(); ++r) {
    for (std::size_t s = 0; s < pg.gram.cols(); ++s) {
      const MultiPoly& entry = pg.gram.at(r, s);
      if (entry.is_zero()) continue;
      auto deg = entry.homogeneous_degree(alg.base_weights);
      if (!deg)
        fail(ErrKind::construction, "grading violation: inhomogeneous pairing entry");
      int w = alg.basis[r].degree + alg.basis[s].degree - *deg;
      if (!weight) weight = w;
      else if (*weight != w)
        fail(ErrKind::construction, "grading violation: non-uniform pairing weight");
    }
  }
  if (!weight) fail(ErrKind::construction, "pairing gram is identically zero");
  return *weight;
}

SmoothnessVerdict jacobian_smoothness(const SpectralAlgebra& alg,
                                      const GroebnerOptions& opts) {
  if (alg.specialized)
    fail(ErrKind::domain, "smoothness is decided over the generic base");
  const VarContext& ctx = alg.full_ctx;
  const std::size_t nvars = ctx->size();
  std::vector<MultiPoly> gens = alg.relations;

  if (alg.relations.size() == 1) {
    for (std::size_t v = 0; v < nvars; ++v) {
      MultiPoly d = alg.relations[0].derivative(v);
      if (!d.is_zero()) gens.push_back(d);
    }
  } else {
    // 2 x 2 minors of the Jacobian of the two relations.
    std::vector<MultiPoly> j0, j1;
    for (std::size_t v = 0; v < nvars; ++v) {
      j0.push_back(alg.relations[0].derivative(v));
      j1.push_back(alg.relations[1].derivative(v));
    }
    for (std::size_t a = 0; a < nvars; ++a)
      for (std::size_t b = a + 1; b < nvars; ++b) {
        MultiPoly minor = j0[a] * j1[b] - j0[b] * j1[a];
        if (!minor.is_zero()) gens.push_back(minor);
      }
  }

  IdealPresentation ideal{gens, MonomialOrder::grevlex};
  MultiPoly one = MultiPoly::constant(ctx, Rational(1));
  if (ideal_membership(one, ideal, opts)) return SmoothnessVerdict{true, {}};

  // Singular: find a rational witness.  The origin handles the x = 0 stratum
  // (all generators of the singular families vanish there); fall back to a
  // small one-variable sweep.
  auto vanishes_at = [&](const std::map<std::string, Rational>& point) {
    for (const auto& g : gens)
      if (!g.eval_rational(point).is_zero()) return false;
    return true;
  };
  std::map<std::string, Rational> origin;
  for (const auto& name : *ctx) origin.emplace(name, Rational(0));
  if (vanishes_at(origin)) return SmoothnessVerdict{false, origin};
  for (const auto& name : *ctx) {
    for (long v : {1L, -1L}) {
      auto point = origin;
      point[name] = Rational(v);
      if (vanishes_at(point)) return SmoothnessVerdict{false, point};
    }
  }
  fail(ErrKind::construction, "singular verdict without a verified witness");
}

bool is_multiplicity_free(const CommutingTuple& tuple) {
  if (tuple.d() != 2) fail(ErrKind::domain, "multiplicity-free test needs d = 2");
  for (const auto& m : tuple.matrices())
    if (!m.is_constant())
      fail(ErrKind::domain, "multiplicity-free test needs rational matrices");

  auto ctx = make_context({"b1", "b2", "x"});
  MultiPoly b1 = MultiPoly::variable(ctx, "b1");
  MultiPoly b2 = MultiPoly::variable(ctx, "b2");
  MultiPoly x = MultiPoly::variable(ctx, "x");
  PolyMatrix theta =
      tuple.matrix(0).lift(ctx).scaled(b1) + tuple.matrix(1).lift(ctx).scaled(b2);
  auto coeffs = char_poly(theta);
  const int N = static_cast<int>(theta.rows());
  if (N == 1) return true;  // a single point is always multiplicity-free
  MultiPoly p = x.pow(N);
  for (int i = 1; i <= N; ++i)
    p += coeffs[static_cast<std::size_t>(i - 1)] * x.pow(N - i);
  return !discriminant(p, "x").is_zero();
}

GrssReport grss_check(const GroupTag& group, const std::vector<MultiPoly>& a) {
  if (group.family != GroupFamily::SO_odd)
    fail(ErrKind::domain, "grss check applies to SO_odd");
  const int n = group.n;
  if (a.size() != static_cast<std::size_t>(n))
    fail(ErrKind::domain, "expected coefficients (a_2, a_4, ..., a_2n)");
  VarContext chart;
  for (const auto& v : a) chart = merge_contexts(chart, v.context());
  if (!chart) chart = make_context({});

  const MultiPoly& top = a.back();
  if (top.is_zero()) return GrssReport{false, "a_2n vanishes identically"};

  std::string xname = fresh_name(chart, "x");
  std::vector<std::string> names = *chart;
  names.push_back(xname);
  VarContext ctx = make_context(names);
  MultiPoly x = MultiPoly::variable(ctx, xname);
  MultiPoly inner = x.pow(2 * n);
  for (int i = 1; i <= n; ++i)
    inner += a[static_cast<std::size_t>(i - 1)].lift(ctx) * x.pow(2 * n - 2 * i);
  if (discriminant(inner, xname).is_zero())
    return GrssReport{false, "inner spectral factor has identically vanishing discriminant"};
  return GrssReport{true, ""};
}

}  // namespace hitchin
