/* SPDX-License-Identifier: Apache-2.0 */
#include "hitchin/charts.hpp"

#include <sstream>

namespace hitchin {

LocalizedPoly LocalizedPoly::of(MultiPoly p) {
  MultiPoly one = MultiPoly::constant(p.context(), Rational(1));
  return LocalizedPoly{std::move(p), std::move(one)};
}

LocalizedPoly LocalizedPoly::frac(MultiPoly num, MultiPoly den) {
  if (den.is_zero()) fail(ErrKind::domain, "localized fraction with zero denominator");
  if (!same_context(num.context(), den.context()))
    fail(ErrKind::context, "fraction numerator and denominator contexts differ");
  return LocalizedPoly{std::move(num), std::move(den)};
}

LocalizedPoly operator+(const LocalizedPoly& a, const LocalizedPoly& b) {
  return LocalizedPoly{a.num * b.den + b.num * a.den, a.den * b.den};
}

LocalizedPoly operator-(const LocalizedPoly& a, const LocalizedPoly& b) {
  return LocalizedPoly{a.num * b.den - b.num * a.den, a.den * b.den};
}

LocalizedPoly operator*(const LocalizedPoly& a, const LocalizedPoly& b) {
  return LocalizedPoly{a.num * b.num, a.den * b.den};
}

bool LocalizedPoly::same_as(const LocalizedPoly& o) const {
  return num * o.den == o.num * den;
}

LocalizedMatrix localized_identity(std::size_t n, const VarContext& ctx) {
  LocalizedMatrix m(n, std::vector<LocalizedPoly>(
                           n, LocalizedPoly::of(MultiPoly(ctx))));
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = LocalizedPoly::of(MultiPoly::constant(ctx, Rational(1)));
  return m;
}

LocalizedMatrix to_localized(const PolyMatrix& m) {
  LocalizedMatrix out(m.rows(), std::vector<LocalizedPoly>(
                                    m.cols(), LocalizedPoly::of(MultiPoly(m.context()))));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out[r][c] = LocalizedPoly::of(m.at(r, c));
  return out;
}

LocalizedMatrix localized_product(const LocalizedMatrix& a, const LocalizedMatrix& b) {
  if (a.empty() || b.empty() || a[0].size() != b.size())
    fail(ErrKind::shape, "localized matrix product shape mismatch");
  const std::size_t rows = a.size(), cols = b[0].size(), inner = b.size();
  const VarContext& ctx = a[0][0].num.context();
  LocalizedMatrix out(rows,
                      std::vector<LocalizedPoly>(cols, LocalizedPoly::of(MultiPoly(ctx))));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      LocalizedPoly acc = LocalizedPoly::of(MultiPoly(ctx));
      for (std::size_t k = 0; k < inner; ++k) acc = acc + a[r][k] * b[k][c];
      out[r][c] = acc;
    }
  return out;
}

bool localized_equal(const LocalizedMatrix& a, const LocalizedMatrix& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r].size() != b[r].size()) return false;
    for (std::size_t c = 0; c < a[r].size(); ++c)
      if (!a[r][c].same_as(b[r][c])) return false;
  }
  return true;
}

namespace {

// Every denominator must clear against the overlap's declared ones.
bool clears_against(const MultiPoly& den, const std::vector<MultiPoly>& declared) {
  MultiPoly rest = den;
  if (rest.is_zero()) return false;
  bool progress = true;
  while (!rest.is_constant() && progress) {
    progress = false;
    for (const auto& d : declared) {
      if (d.is_constant()) continue;
      try {
        rest = divide_exact(rest, d);
        progress = true;
        break;
      } catch (const Error&) {
      }
    }
  }
  return rest.is_constant() && !rest.is_zero();
}

void check_overlap_localization(const ChartAtlas::Overlap& ov) {
  auto check = [&](const LocalizedPoly& p, const char* what) {
    if (!clears_against(p.den, ov.denominators)) {
      std::ostringstream os;
      os << "overlap (" << ov.alpha << "," << ov.beta << "): " << what
         << " needs an undeclared denominator " << p.den.str();
      fail(ErrKind::localization, os.str());
    }
  };
  if (ov.h) check(*ov.h, "h");
  for (const auto& row : ov.g)
    for (const auto& e : row) check(e, "g entry");
  for (const auto& row : ov.gprime)
    for (const auto& e : row) check(e, "g' entry");
}

const ChartAtlas::Overlap* find_overlap(const ChartAtlas& atlas, int a, int b) {
  for (const auto& ov : atlas.overlaps)
    if (ov.alpha == a && ov.beta == b) return &ov;
  return nullptr;
}

}  // namespace

AtlasReport validate_atlas(const ChartAtlas& atlas) {
  AtlasReport report;
  const std::size_t phi_cols =
      atlas.mode == ChartAtlas::Mode::fibered_surface ? 1 : 2;

  if (atlas.phi.size() != atlas.chart_coords.size())
    fail(ErrKind::domain, "atlas needs one phi per chart");
  for (const auto& p : atlas.phi)
    if (p.rows() != 2 || p.cols() != phi_cols)
      fail(ErrKind::shape, "phi has the wrong shape for the atlas mode");

  auto note = [&](Violation v) {
    report.valid = false;
    report.violations.push_back(std::move(v));
  };

  // Per-overlap: declared localization and the compatibility equation.
  for (const auto& ov : atlas.overlaps) {
    if (ov.alpha < 0 || ov.beta < 0 ||
        ov.alpha >= static_cast<int>(atlas.phi.size()) ||
        ov.beta >= static_cast<int>(atlas.phi.size()))
      fail(ErrKind::domain, "overlap references an unknown chart");
    check_overlap_localization(ov);
    if (ov.g.size() != 2 || ov.g[0].size() != 2)
      fail(ErrKind::shape, "transition g must be 2x2");

    const PolyMatrix& phi_a = atlas.phi[static_cast<std::size_t>(ov.alpha)];
    const PolyMatrix& phi_b = atlas.phi[static_cast<std::size_t>(ov.beta)];

    if (atlas.mode == ChartAtlas::Mode::fibered_surface) {
      if (!ov.h)
        fail(ErrKind::domain, "fibered-surface overlap needs an h transition");
      for (std::size_t i = 0; i < 2; ++i) {
        LocalizedPoly lhs = *ov.h * LocalizedPoly::of(phi_a.at(i, 0));
        LocalizedPoly rhs = LocalizedPoly::of(MultiPoly(atlas.ctx));
        for (std::size_t j = 0; j < 2; ++j)
          rhs = rhs + ov.g[i][j] * LocalizedPoly::of(phi_b.at(j, 0));
        if (!lhs.same_as(rhs)) {
          note(Violation{"compatibility", ov.alpha, ov.beta, -1,
                         static_cast<int>(i), -1,
                         "h phi_a^i != g^i_j phi_b^j"});
        }
      }
    } else {
      if (ov.gprime.size() != 2 || ov.gprime[0].size() != 2)
        fail(ErrKind::shape, "transition g' must be 2x2");
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t k = 0; k < 2; ++k) {
          LocalizedPoly lhs = LocalizedPoly::of(MultiPoly(atlas.ctx));
          LocalizedPoly rhs = lhs;
          for (std::size_t j = 0; j < 2; ++j) {
            lhs = lhs + ov.g[i][j] * LocalizedPoly::of(phi_b.at(j, k));
            rhs = rhs + LocalizedPoly::of(phi_a.at(i, j)) * ov.gprime[j][k];
          }
          if (!lhs.same_as(rhs)) {
            note(Violation{"compatibility", ov.alpha, ov.beta, -1,
                           static_cast<int>(i), static_cast<int>(k),
                           "g^i_j (phi_b)^j_k != (phi_a)^i_j g'^j_k"});
          }
        }
      }
    }
  }

  // Cocycles over every composable triple, with implicit identities on
  // (a, a).
  auto g_of = [&](int a, int b) -> std::optional<LocalizedMatrix> {
    if (a == b) return localized_identity(2, atlas.ctx);
    const auto* ov = find_overlap(atlas, a, b);
    if (!ov) return std::nullopt;
    return ov->g;
  };
  auto gp_of = [&](int a, int b) -> std::optional<LocalizedMatrix> {
    if (a == b) return localized_identity(2, atlas.ctx);
    const auto* ov = find_overlap(atlas, a, b);
    if (!ov) return std::nullopt;
    return ov->gprime;
  };
  auto h_of = [&](int a, int b) -> std::optional<LocalizedPoly> {
    if (a == b) return LocalizedPoly::of(MultiPoly::constant(atlas.ctx, Rational(1)));
    const auto* ov = find_overlap(atlas, a, b);
    if (!ov || !ov->h) return std::nullopt;
    return *ov->h;
  };

  const int ncharts = static_cast<int>(atlas.chart_coords.size());
  for (int a = 0; a < ncharts; ++a) {
    for (int b = 0; b < ncharts; ++b) {
      if (a == b || !find_overlap(atlas, a, b)) continue;
      for (int c = 0; c < ncharts; ++c) {
        if (b == c || (a != c && !find_overlap(atlas, b, c))) continue;
        auto gab = g_of(a, b), gbc = g_of(b, c), gac = g_of(a, c);
        if (gab && gbc && gac) {
          LocalizedMatrix prod = localized_product(*gab, *gbc);
          for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
              if (!prod[i][j].same_as((*gac)[i][j]))
                note(Violation{"cocycle-g", a, b, c, static_cast<int>(i),
                               static_cast<int>(j), "g_ab g_bc != g_ac"});
        }
        if (atlas.mode == ChartAtlas::Mode::fibered_surface) {
          auto hab = h_of(a, b), hbc = h_of(b, c), hac = h_of(a, c);
          if (hab && hbc && hac && !(*hab * *hbc).same_as(*hac))
            note(Violation{"cocycle-h", a, b, c, -1, -1, "h_ab h_bc != h_ac"});
        } else {
          auto pab = gp_of(a, b), pbc = gp_of(b, c), pac = gp_of(a, c);
          if (pab && pbc && pac) {
            LocalizedMatrix prod = localized_product(*pab, *pbc);
            for (std::size_t i = 0; i < 2; ++i)
              for (std::size_t j = 0; j < 2; ++j)
                if (!prod[i][j].same_as((*pac)[i][j]))
                  note(Violation{"cocycle-gprime", a, b, c, static_cast<int>(i),
                                 static_cast<int>(j), "g'_ab g'_bc != g'_ac"});
          }
        }
      }
    }
  }
  return report;
}

const LocalizedMatrix* HiggsChartData::transition(int alpha, int beta) const {
  for (const auto& tr : transitions)
    if (tr.alpha == alpha && tr.beta == beta) return &tr.t;
  return nullptr;
}

CheckReport validate_higgs(const ChartAtlas& atlas, const HiggsChartData& higgs) {
  CheckReport rep;
  if (higgs.theta.size() != atlas.chart_coords.size()) {
    rep.pass = false;
    rep.detail = "higgs data must cover every chart";
    return rep;
  }
  // Integrability per chart.
  for (std::size_t a = 0; a < higgs.theta.size(); ++a) {
    const auto& comps = higgs.theta[a];
    if (static_cast<int>(comps.size()) != higgs.d) {
      rep.pass = false;
      rep.detail = "chart " + std::to_string(a) + " has the wrong number of components";
      return rep;
    }
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (std::size_t j = i + 1; j < comps.size(); ++j)
        if (!bracket(comps[i], comps[j]).is_zero()) {
          rep.pass = false;
          rep.detail = "integrability fails on chart " + std::to_string(a);
          return rep;
        }
  }

  // Glue consistency on every declared overlap:
  //   d=1: theta_a = h_ab t_ab theta_b t_ba
  //   d=2: theta^i_a = g^i_j t_ab theta^j_b t_ba
  for (const auto& ov : atlas.overlaps) {
    const auto* t_ab = higgs.transition(ov.alpha, ov.beta);
    const auto* t_ba = higgs.transition(ov.beta, ov.alpha);
    if (!t_ab || !t_ba) {
      rep.pass = false;
      rep.detail = "missing bundle transition on overlap (" +
                   std::to_string(ov.alpha) + "," + std::to_string(ov.beta) + ")";
      return rep;
    }
    // Bundle transitions must be mutually inverse on the overlap.
    LocalizedMatrix prod = localized_product(*t_ab, *t_ba);
    if (!localized_equal(prod, localized_identity(prod.size(), atlas.ctx))) {
      rep.pass = false;
      rep.detail = "bundle transitions are not mutually inverse on overlap (" +
                   std::to_string(ov.alpha) + "," + std::to_string(ov.beta) + ")";
      return rep;
    }

    const auto& theta_a = higgs.theta[static_cast<std::size_t>(ov.alpha)];
    const auto& theta_b = higgs.theta[static_cast<std::size_t>(ov.beta)];
    auto adjoint = [&](const PolyMatrix& th) {
      return localized_product(localized_product(*t_ab, to_localized(th)), *t_ba);
    };

    if (higgs.d == 1) {
      if (!ov.h) {
        rep.pass = false;
        rep.detail = "fibered-surface glue needs h";
        return rep;
      }
      LocalizedMatrix rhs = adjoint(theta_b[0]);
      for (auto& row : rhs)
        for (auto& e : row) e = *ov.h * e;
      if (!localized_equal(to_localized(theta_a[0]), rhs)) {
        rep.pass = false;
        rep.detail = "glue fails on overlap (" + std::to_string(ov.alpha) + "," +
                     std::to_string(ov.beta) + ")";
        return rep;
      }
    } else {
      for (std::size_t i = 0; i < 2; ++i) {
        LocalizedMatrix rhs;
        for (std::size_t j = 0; j < 2; ++j) {
          LocalizedMatrix term = adjoint(theta_b[j]);
          for (auto& row : term)
            for (auto& e : row) e = ov.g[i][j] * e;
          if (rhs.empty()) {
            rhs = term;
          } else {
            for (std::size_t r = 0; r < rhs.size(); ++r)
              for (std::size_t c = 0; c < rhs[r].size(); ++c)
                rhs[r][c] = rhs[r][c] + term[r][c];
          }
        }
        if (!localized_equal(to_localized(theta_a[i]), rhs)) {
          rep.pass = false;
          rep.detail = "d=2 glue fails on overlap (" + std::to_string(ov.alpha) +
                       "," + std::to_string(ov.beta) + ") component " +
                       std::to_string(i + 1);
          return rep;
        }
      }
    }
  }
  return rep;
}

HiggsChartData pullback_higgs(const ChartAtlas& atlas, const HiggsChartData& higgs) {
  if (atlas.mode != ChartAtlas::Mode::fibered_surface)
    fail(ErrKind::domain, "pullback needs a fibered-surface atlas");
  if (higgs.d != 1) fail(ErrKind::domain, "pullback consumes d = 1 Higgs data");
  AtlasReport areport = validate_atlas(atlas);
  if (!areport.valid) fail(ErrKind::domain, "refusing to pull back over an invalid atlas");
  CheckReport hreport = validate_higgs(atlas, higgs);
  if (!hreport.pass)
    fail(ErrKind::domain, "refusing to pull back inconsistent Higgs data: " + hreport.detail);

  HiggsChartData out;
  out.d = 2;
  out.group = higgs.group;
  out.transitions = higgs.transitions;
  for (std::size_t a = 0; a < higgs.theta.size(); ++a) {
    const PolyMatrix& th = higgs.theta[a][0];
    const PolyMatrix& phi = atlas.phi[a];
    PolyMatrix t1 = th.scaled(phi.at(0, 0));
    PolyMatrix t2 = th.scaled(phi.at(1, 0));
    if (!bracket(t1, t2).is_zero())
      fail(ErrKind::construction, "pullback bracket does not vanish");
    out.theta.push_back({std::move(t1), std::move(t2)});
  }

  CheckReport glued = validate_higgs(atlas, out);
  if (!glued.pass)
    fail(ErrKind::construction, "pullback output is not glue-consistent: " + glued.detail);
  return out;
}

CheckReport pullback_spectral_compat(const PolyMatrix& theta,
                                     const std::pair<MultiPoly, MultiPoly>& phi,
                                     const GroupTag& group) {
  VarContext ctx = merge_contexts(theta.context(),
                                  merge_contexts(phi.first.context(), phi.second.context()));
  PolyMatrix th = theta.lift(ctx);
  MultiPoly p1 = phi.first.lift(ctx), p2 = phi.second.lift(ctx);
  auto tuple = CommutingTuple::make(group, {th.scaled(p1), th.scaled(p2)});
  SpectralDatum datum = spectral_data(tuple);
  std::vector<MultiPoly> cvals = evaluate_invariants(group, th);

  const auto sys = invariant_system(group);
  CheckReport rep;
  for (std::size_t j = 0; j < sys.generators.size(); ++j) {
    const int e = sys.generators[j].degree;
    for (const auto& comp : weak_compositions(e, 2)) {
      // binomial(e, i1)
      Rational binom(1);
      for (int k = 0; k < comp.parts[0]; ++k)
        binom = binom * Rational(e - k) / Rational(k + 1);
      MultiPoly expect =
          (p1.pow(comp.parts[0]) * p2.pow(comp.parts[1]) * cvals[j]).scaled(binom);
      if (datum.at(static_cast<int>(j + 1), comp.parts) != expect) {
        rep.pass = false;
        rep.detail = "pullback spectral data mismatch at generator " +
                     std::to_string(j + 1);
        return rep;
      }
    }
  }
  return rep;
}

CheckReport change_of_group_compat(const CommutingTuple& tuple) {
  const GroupTag& g = tuple.group();
  if (g.family == GroupFamily::GL)
    fail(ErrKind::domain, "change of group applies to the classical groups");
  if (tuple.d() != 2) fail(ErrKind::domain, "change of group needs d = 2");

  const int N = g.rep_dim();
  GroupTag gl = GroupTag::make(GroupFamily::GL, N);
  auto gl_tuple = CommutingTuple::make(gl, tuple.matrices());
  SpectralDatum gl_datum = spectral_data(gl_tuple);
  SpectralDatum g_datum = spectral_data(tuple);

  // Push the G-datum through the polarizations of the restriction
  // polynomials: substitute c_m -> sum_l b^l c_{m,l} into f_j and compare
  // b-coefficients with the GL_N layers.
  const auto sys = invariant_system(g);
  std::vector<std::string> base = *tuple.context();
  VarContext bctx = [&] {
    std::vector<std::string> names = base;
    auto taken = [&](const std::string& s) {
      return std::find(names.begin(), names.end(), s) != names.end();
    };
    for (const char* stem : {"b1", "b2"}) {
      std::string n = stem;
      while (taken(n)) n += "_";
      names.push_back(n);
    }
    return make_context(names);
  }();
  const std::size_t b1i = bctx->size() - 2, b2i = bctx->size() - 1;
  MultiPoly b1 = MultiPoly::variable(bctx, b1i);
  MultiPoly b2 = MultiPoly::variable(bctx, b2i);

  std::map<std::string, MultiPoly> assign;
  for (std::size_t m = 0; m < sys.generators.size(); ++m) {
    MultiPoly expansion(bctx);
    for (const auto& comp : weak_compositions(sys.generators[m].degree, 2)) {
      expansion += b1.pow(comp.parts[0]) * b2.pow(comp.parts[1]) *
                   g_datum.at(static_cast<int>(m + 1), comp.parts).lift(bctx);
    }
    assign.emplace(sys.generators[m].name, std::move(expansion));
  }

  auto f = restriction_polynomials(g);
  CheckReport rep;
  std::vector<std::size_t> bvars{b1i, b2i};
  for (int j = 1; j <= N; ++j) {
    MultiPoly fj = f[static_cast<std::size_t>(j - 1)].eval(assign);
    auto groups = fj.split_by(bvars);
    for (const auto& comp : weak_compositions(j, 2)) {
      ExpVec key{comp.parts[0], comp.parts[1]};
      MultiPoly expect(tuple.context());
      auto it = groups.find(key);
      if (it != groups.end()) expect = it->second.restrict_to(tuple.context());
      if (gl_datum.at(j, comp.parts) != expect) {
        rep.pass = false;
        rep.detail = "change-of-group mismatch at a_" + std::to_string(j) +
                     " layer (" + std::to_string(comp.parts[0]) + "," +
                     std::to_string(comp.parts[1]) + ")";
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace hitchin
