/* SPDX-License-Identifier: Apache-2.0 */
#include "hitchin/serialization.hpp"

namespace hitchin {

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
  fail(ErrKind::parse, path + ": " + what);
}

const Json& expect_field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key))
    parse_fail(path, std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json term;
    term["exp"] = e;
    term["coef"] = c.str();
    terms.push_back(std::move(term));
  }
  Json out;
  out["vars"] = p.context() ? *p.context() : std::vector<std::string>{};
  out["terms"] = std::move(terms);
  return out;
}

Json to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const GroupTag& g) {
  Json out;
  out["family"] = family_name(g.family);
  out["n"] = g.n;
  return out;
}

Json to_json(const SpectralDatum& d) {
  Json entries = Json::array();
  for (const auto& [key, value] : d.entries) {
    Json e;
    e["j"] = key.first;
    e["comp"] = key.second;
    e["value"] = to_json(value);
    entries.push_back(std::move(e));
  }
  Json out;
  out["group"] = to_json(d.group);
  out["d"] = d.d;
  out["entries"] = std::move(entries);
  return out;
}

Json to_json(const MembershipReport& r) {
  Json witnesses = Json::array();
  for (const auto& [name, poly] : r.witnesses) {
    Json w;
    w["name"] = name;
    w["value"] = to_json(poly);
    witnesses.push_back(std::move(w));
  }
  Json out;
  out["member"] = r.member;
  out["witnesses"] = std::move(witnesses);
  return out;
}

Json to_json(const LocalizedPoly& p) {
  if (p.den.is_constant() && p.den.constant_value().is_one()) return to_json(p.num);
  Json out;
  out["num"] = to_json(p.num);
  out["den"] = to_json(p.den);
  return out;
}

Json to_json(const ChartAtlas& atlas) {
  Json charts = Json::array();
  for (const auto& c : atlas.chart_coords) {
    Json chart;
    chart["coord"] = c;
    charts.push_back(std::move(chart));
  }
  Json phi = Json::array();
  for (const auto& p : atlas.phi) phi.push_back(to_json(p));
  Json overlaps = Json::array();
  for (const auto& ov : atlas.overlaps) {
    Json o;
    o["pair"] = std::vector<int>{ov.alpha, ov.beta};
    Json dens = Json::array();
    for (const auto& d : ov.denominators) dens.push_back(to_json(d));
    o["denominators"] = std::move(dens);
    if (ov.h) o["h"] = to_json(*ov.h);
    auto mat = [](const LocalizedMatrix& m) {
      Json rows = Json::array();
      for (const auto& r : m) {
        Json row = Json::array();
        for (const auto& e : r) row.push_back(to_json(e));
        rows.push_back(std::move(row));
      }
      return rows;
    };
    o["g"] = mat(ov.g);
    if (!ov.gprime.empty()) o["gprime"] = mat(ov.gprime);
    overlaps.push_back(std::move(o));
  }
  Json out;
  out["mode"] = atlas.mode == ChartAtlas::Mode::fibered_surface ? "fibered-surface"
                                                                : "surface-morphism";
  out["vars"] = *atlas.ctx;
  out["charts"] = std::move(charts);
  out["phi"] = std::move(phi);
  out["overlaps"] = std::move(overlaps);
  return out;
}

Json to_json(const AtlasReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json o;
    o["kind"] = v.kind;
    o["alpha"] = v.alpha;
    o["beta"] = v.beta;
    if (v.gamma >= 0) o["gamma"] = v.gamma;
    if (v.i >= 0) o["i"] = v.i;
    if (v.j >= 0) o["j"] = v.j;
    o["detail"] = v.detail;
    violations.push_back(std::move(o));
  }
  Json out;
  out["valid"] = r.valid;
  out["violations"] = std::move(violations);
  return out;
}

Json to_json(const CompanionBundle& b) {
  Json weights = Json::array();
  for (const auto& w : b.summand_weights) weights.push_back(w.str());
  Json out;
  out["group"] = to_json(b.group);
  out["theta"] = to_json(b.theta);
  out["summand_weights"] = std::move(weights);
  out["det_weight"] = b.det_weight.str();
  if (b.pairing) {
    Json p;
    p["kind"] = b.pairing->kind == BilinearFormSpec::Kind::symmetric ? "symmetric"
                                                                     : "alternating";
    p["gram"] = to_json(b.pairing->gram);
    out["pairing"] = std::move(p);
  }
  return out;
}

Json to_json(const SlopeReport& r) {
  Json out;
  out["pass"] = r.pass;
  out["mu"] = r.mu.str();
  out["bound_zero"] = "0";
  out["bound_half"] = r.bound_half.str();
  return out;
}

Json cover_report(const SpectralAlgebra& alg, const SmoothnessVerdict& verdict,
                  const std::optional<PairingGram>& pairing,
                  std::optional<int> gm_weight) {
  Json out;
  out["group"] = to_json(alg.group);
  out["rank"] = alg.module_rank;
  Json rels = Json::array();
  for (const auto& r : alg.relations) rels.push_back(to_json(r));
  out["relations"] = std::move(rels);
  out["smooth"] = verdict.smooth;
  if (!verdict.smooth) {
    Json w;
    for (const auto& [name, value] : verdict.witness) w[name] = value.str();
    out["witness"] = std::move(w);
  }
  if (pairing) {
    Json p;
    p["kind"] = pairing->kind == BilinearFormSpec::Kind::symmetric ? "symmetric"
                                                                   : "alternating";
    p["gram"] = to_json(pairing->gram);
    out["pairing"] = std::move(p);
  }
  if (gm_weight) out["gm_weight"] = *gm_weight;
  return out;
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) parse_fail(path, "expected a rational string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    parse_fail(path, e.what());
  }
}

MultiPoly poly_from_json(const Json& j, const std::string& path) {
  const Json& vars = expect_field(j, "vars", path);
  if (!vars.is_array()) parse_fail(path + ".vars", "expected an array");
  std::vector<std::string> names;
  for (const auto& v : vars) {
    if (!v.is_string()) parse_fail(path + ".vars", "expected variable names");
    names.push_back(v.get<std::string>());
  }
  VarContext ctx;
  try {
    ctx = make_context(names);
  } catch (const Error& e) {
    parse_fail(path + ".vars", e.what());
  }
  const Json& terms = expect_field(j, "terms", path);
  if (!terms.is_array()) parse_fail(path + ".terms", "expected an array");
  MultiPoly out(ctx);
  std::size_t idx = 0;
  for (const auto& term : terms) {
    std::string tpath = path + ".terms[" + std::to_string(idx++) + "]";
    const Json& exp = expect_field(term, "exp", tpath);
    if (!exp.is_array() || exp.size() != names.size())
      parse_fail(tpath + ".exp", "expected one exponent per variable");
    ExpVec e;
    for (const auto& k : exp) {
      if (!k.is_number_integer() || k.get<long>() < 0)
        parse_fail(tpath + ".exp", "expected non-negative integers");
      e.push_back(static_cast<int>(k.get<long>()));
    }
    Rational coef = rational_from_json(expect_field(term, "coef", tpath), tpath + ".coef");
    out += MultiPoly::monomial(ctx, std::move(e), coef);
  }
  return out;
}

PolyMatrix matrix_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) parse_fail(path, "expected a non-empty array of rows");
  std::vector<MultiPoly> entries;
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = j.at(r);
    std::string rpath = path + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.empty()) parse_fail(rpath, "expected a non-empty row");
    if (r == 0) cols = row.size();
    if (row.size() != cols) parse_fail(rpath, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c)
      entries.push_back(poly_from_json(row.at(c), rpath + "[" + std::to_string(c) + "]"));
  }
  // Align all entries into one shared context.
  VarContext ctx;
  for (const auto& e : entries) ctx = merge_contexts(ctx, e.context());
  for (auto& e : entries) e = e.lift(ctx);
  try {
    return PolyMatrix::from_entries(rows, cols, std::move(entries));
  } catch (const Error& e) {
    parse_fail(path, e.what());
  }
}

GroupTag group_from_json(const Json& j, const std::string& path) {
  const Json& fam = expect_field(j, "family", path);
  if (!fam.is_string()) parse_fail(path + ".family", "expected a family name");
  auto family = family_from_name(fam.get<std::string>());
  if (!family)
    parse_fail(path + ".family", "unknown family '" + fam.get<std::string>() + "'");
  const Json& n = expect_field(j, "n", path);
  if (!n.is_number_integer()) parse_fail(path + ".n", "expected an integer");
  try {
    return GroupTag::make(*family, static_cast<int>(n.get<long>()));
  } catch (const Error& e) {
    parse_fail(path, e.what());
  }
}

LocalizedPoly localized_from_json(const Json& j, const VarContext& ctx,
                                  const std::string& path) {
  if (j.is_object() && j.contains("num")) {
    MultiPoly num = poly_from_json(j.at("num"), path + ".num").lift(ctx);
    MultiPoly den = poly_from_json(expect_field(j, "den", path), path + ".den").lift(ctx);
    if (den.is_zero()) parse_fail(path + ".den", "zero denominator");
    return LocalizedPoly::frac(std::move(num), std::move(den));
  }
  return LocalizedPoly::of(poly_from_json(j, path).lift(ctx));
}

ChartAtlas atlas_from_json(const Json& j, const std::string& path) {
  ChartAtlas atlas;
  const Json& mode = expect_field(j, "mode", path);
  if (!mode.is_string()) parse_fail(path + ".mode", "expected a string");
  std::string m = mode.get<std::string>();
  if (m == "fibered-surface")
    atlas.mode = ChartAtlas::Mode::fibered_surface;
  else if (m == "surface-morphism")
    atlas.mode = ChartAtlas::Mode::surface_morphism;
  else
    parse_fail(path + ".mode", "unknown mode '" + m + "'");

  const Json& vars = expect_field(j, "vars", path);
  std::vector<std::string> names;
  for (const auto& v : vars) names.push_back(v.get<std::string>());
  try {
    atlas.ctx = make_context(names);
  } catch (const Error& e) {
    parse_fail(path + ".vars", e.what());
  }

  const Json& charts = expect_field(j, "charts", path);
  if (!charts.is_array() || charts.empty())
    parse_fail(path + ".charts", "expected a non-empty array");
  std::size_t idx = 0;
  for (const auto& chart : charts) {
    std::string cpath = path + ".charts[" + std::to_string(idx++) + "]";
    atlas.chart_coords.push_back(
        expect_field(chart, "coord", cpath).get<std::string>());
  }

  const Json& phis = expect_field(j, "phi", path);
  if (!phis.is_array() || phis.size() != atlas.chart_coords.size())
    parse_fail(path + ".phi", "expected one phi per chart");
  idx = 0;
  for (const auto& p : phis) {
    std::string ppath = path + ".phi[" + std::to_string(idx++) + "]";
    atlas.phi.push_back(matrix_from_json(p, ppath).lift(atlas.ctx));
  }

  const Json& overlaps = expect_field(j, "overlaps", path);
  if (!overlaps.is_array()) parse_fail(path + ".overlaps", "expected an array");
  idx = 0;
  for (const auto& o : overlaps) {
    std::string opath = path + ".overlaps[" + std::to_string(idx++) + "]";
    ChartAtlas::Overlap ov;
    const Json& pair = expect_field(o, "pair", opath);
    if (!pair.is_array() || pair.size() != 2)
      parse_fail(opath + ".pair", "expected [alpha, beta]");
    ov.alpha = static_cast<int>(pair.at(0).get<long>());
    ov.beta = static_cast<int>(pair.at(1).get<long>());
    if (o.contains("denominators"))
      for (std::size_t d = 0; d < o.at("denominators").size(); ++d)
        ov.denominators.push_back(
            poly_from_json(o.at("denominators").at(d),
                           opath + ".denominators[" + std::to_string(d) + "]")
                .lift(atlas.ctx));
    if (o.contains("h")) ov.h = localized_from_json(o.at("h"), atlas.ctx, opath + ".h");
    auto mat = [&](const Json& mj, const std::string& mpath) {
      LocalizedMatrix out;
      if (!mj.is_array()) parse_fail(mpath, "expected rows");
      for (std::size_t r = 0; r < mj.size(); ++r) {
        std::vector<LocalizedPoly> row;
        for (std::size_t c = 0; c < mj.at(r).size(); ++c)
          row.push_back(localized_from_json(
              mj.at(r).at(c), atlas.ctx,
              mpath + "[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
        out.push_back(std::move(row));
      }
      return out;
    };
    ov.g = mat(expect_field(o, "g", opath), opath + ".g");
    if (o.contains("gprime")) ov.gprime = mat(o.at("gprime"), opath + ".gprime");
    atlas.overlaps.push_back(std::move(ov));
  }
  return atlas;
}

}  // namespace hitchin
