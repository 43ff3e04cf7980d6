/* SPDX-License-Identifier: Apache-2.0 */
//
// hitchin-spectra: JSON in, verification reports and exit codes out.
//
// Exit status: 0 pass/success, 1 mathematical check failure, 2 input or
// schema error, 3 resource (budget) error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hitchin/serialization.hpp"

namespace {

using namespace hitchin;

constexpr int kExitPass = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrKind::resource:
      return kExitResource;
    case ErrKind::membership:
    case ErrKind::not_commuting:
    case ErrKind::construction:
      return kExitMathFail;
    default:
      return kExitInput;
  }
}

Json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    text = os.str();
  } else {
    std::ifstream in(path);
    if (!in) fail(ErrKind::parse, "cannot open input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    text = os.str();
  }
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrKind::parse, "$: malformed JSON");
  return j;
}

GroebnerOptions groebner_options_from_env() {
  GroebnerOptions opts;
  if (const char* env = std::getenv("HITCHIN_SPECTRA_GROEBNER_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) opts.pair_budget = static_cast<std::size_t>(v);
  }
  return opts;
}

struct Output {
  std::string format = "json";

  void emit(const Json& report, const std::string& text_summary) const {
    if (format == "json")
      std::cout << report.dump(2) << "\n";
    else
      std::cout << text_summary << "\n";
  }
};

CommutingTuple tuple_from_input(const Json& j) {
  GroupTag group = group_from_json(j.contains("group") ? j.at("group") : Json(), "$.group");
  if (!j.contains("matrices") || !j.at("matrices").is_array() ||
      j.at("matrices").empty())
    fail(ErrKind::parse, "$.matrices: expected a non-empty array of matrices");
  std::vector<PolyMatrix> mats;
  VarContext ctx;
  for (std::size_t i = 0; i < j.at("matrices").size(); ++i) {
    mats.push_back(matrix_from_json(j.at("matrices").at(i),
                                    "$.matrices[" + std::to_string(i) + "]"));
    ctx = merge_contexts(ctx, mats.back().context());
  }
  for (auto& m : mats) m = m.lift(ctx);
  return CommutingTuple::make(group, std::move(mats));
}

int run_spectral_data(const std::string& input, const Output& out) {
  Json j = read_input(input);
  auto tuple = tuple_from_input(j);
  SpectralDatum datum = spectral_data(tuple);
  Json report = to_json(datum);
  std::ostringstream text;
  text << "spectral data for " << tuple.group().str() << ", d = " << tuple.d() << ":";
  for (const auto& [key, value] : datum.entries) {
    text << "\n  c_" << key.first << " (";
    for (std::size_t i = 0; i < key.second.size(); ++i)
      text << (i ? "," : "") << key.second[i];
    text << ") = " << value.str();
  }
  out.emit(report, text.str());
  return kExitPass;
}

int run_companion(const std::string& input, const Output& out) {
  Json j = read_input(input);
  GroupTag group = group_from_json(j.contains("group") ? j.at("group") : Json(), "$.group");
  if (!j.contains("a") || !j.at("a").is_array())
    fail(ErrKind::parse, "$.a: expected an array of chart polynomials");
  std::vector<MultiPoly> values;
  for (std::size_t i = 0; i < j.at("a").size(); ++i)
    values.push_back(poly_from_json(j.at("a").at(i), "$.a[" + std::to_string(i) + "]"));
  std::string coord = j.contains("coordinate") ? j.at("coordinate").get<std::string>() : "t";
  ChartSection section = ChartSection::make(group, coord, values);

  if (group.family == GroupFamily::GL) {
    PolyMatrix theta = companion_matrix(section);
    auto coeffs = char_poly(theta);
    bool pass = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != section.values[i].lift(theta.context())) pass = false;
    Json report;
    report["theta"] = to_json(theta);
    report["round_trip"] = pass;
    out.emit(report, std::string("companion round-trip: ") + (pass ? "pass" : "fail"));
    return pass ? kExitPass : kExitMathFail;
  }

  CompanionBundle bundle = classical_companion(group, section);
  CheckReport check = verify_spectral_recovery(bundle, section);
  Json report = to_json(bundle);
  report["spectral_recovery"] = check.pass;
  if (!check.pass) report["detail"] = check.detail;
  std::ostringstream text;
  text << "companion bundle for " << group.str()
       << ": det weight " << bundle.det_weight.str() << ", spectral recovery "
       << (check.pass ? "pass" : ("fail (" + check.detail + ")"));
  out.emit(report, text.str());
  return check.pass ? kExitPass : kExitMathFail;
}

int run_cover(const GroupTag& group, const Output& out) {
  GroebnerOptions opts = groebner_options_from_env();
  SpectralAlgebra alg = build_cover_algebra(group);
  SmoothnessVerdict verdict = jacobian_smoothness(alg, opts);
  std::optional<PairingGram> pairing;
  std::optional<int> weight;
  if (group.family == GroupFamily::SO_odd || group.family == GroupFamily::Sp ||
      group.family == GroupFamily::SO_even) {
    pairing = pairing_gram(alg);
    weight = gm_weight_check(alg);
  }
  Json report = cover_report(alg, verdict, pairing, weight);
  std::ostringstream text;
  text << "cover algebra for " << group.str() << ": rank " << alg.module_rank
       << ", " << (verdict.smooth ? "smooth" : "singular");
  if (weight) text << ", gm weight " << *weight;
  out.emit(report, text.str());
  return kExitPass;
}

int run_pullback_check(const std::string& input, const Output& out) {
  Json j = read_input(input);
  GroupTag group = group_from_json(j.contains("group") ? j.at("group") : Json(), "$.group");
  PolyMatrix theta =
      matrix_from_json(j.contains("theta") ? j.at("theta") : Json(), "$.theta");
  if (!j.contains("phi") || !j.at("phi").is_array() || j.at("phi").size() != 2)
    fail(ErrKind::parse, "$.phi: expected [phi1, phi2]");
  MultiPoly p1 = poly_from_json(j.at("phi").at(0), "$.phi[0]");
  MultiPoly p2 = poly_from_json(j.at("phi").at(1), "$.phi[1]");
  VarContext ctx = merge_contexts(theta.context(),
                                  merge_contexts(p1.context(), p2.context()));
  CheckReport rep = pullback_spectral_compat(theta.lift(ctx),
                                             {p1.lift(ctx), p2.lift(ctx)}, group);
  Json report;
  report["pass"] = rep.pass;
  if (!rep.pass) report["detail"] = rep.detail;
  out.emit(report, std::string("pullback compatibility: ") +
                       (rep.pass ? "pass" : ("fail (" + rep.detail + ")")));
  return rep.pass ? kExitPass : kExitMathFail;
}

int run_change_of_group(const std::string& input, const Output& out) {
  Json j = read_input(input);
  auto tuple = tuple_from_input(j);
  CheckReport rep = change_of_group_compat(tuple);
  Json report;
  report["pass"] = rep.pass;
  if (!rep.pass) report["detail"] = rep.detail;
  out.emit(report, std::string("change-of-group compatibility: ") +
                       (rep.pass ? "pass" : ("fail (" + rep.detail + ")")));
  return rep.pass ? kExitPass : kExitMathFail;
}

int run_atlas_validate(const std::string& input, const Output& out) {
  Json j = read_input(input);
  ChartAtlas atlas = atlas_from_json(j, "$");
  AtlasReport rep = validate_atlas(atlas);
  Json report = to_json(rep);
  std::ostringstream text;
  text << "atlas: " << (rep.valid ? "valid" : "invalid");
  for (const auto& v : rep.violations)
    text << "\n  " << v.kind << " at (" << v.alpha << "," << v.beta
         << (v.gamma >= 0 ? "," + std::to_string(v.gamma) : "") << ")"
         << (v.i >= 0 ? " entry " + std::to_string(v.i) : "")
         << (v.j >= 0 ? "," + std::to_string(v.j) : "");
  out.emit(report, text.str());
  return rep.valid ? kExitPass : kExitMathFail;
}

int run_slope(const std::string& input, const Output& out) {
  Json j = read_input(input);
  if (!j.contains("n") || !j.at("n").is_number_integer())
    fail(ErrKind::parse, "$.n: expected an integer");
  Rational kappa = rational_from_json(j.contains("kappa") ? j.at("kappa") : Json(),
                                      "$.kappa");
  SlopeReport rep = slope_inequalities(static_cast<int>(j.at("n").get<long>()), kappa);
  out.emit(to_json(rep), std::string("slope inequalities: ") +
                             (rep.pass ? "pass" : "fail") + " (mu = " + rep.mu.str() + ")");
  return rep.pass ? kExitPass : kExitMathFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spectral-data computations for Higgs fields over chart rings"};
  app.require_subcommand(1);

  std::string input = "-";
  Output out;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", input, "input JSON file, or - for stdin");
    sub->add_option("--output-format", out.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* sd = app.add_subcommand("spectral-data",
                                "spectral datum of a commuting matrix tuple");
  add_common(sd);
  auto* comp = app.add_subcommand("companion",
                                  "companion Higgs field of a chart section");
  add_common(comp);
  auto* cover = app.add_subcommand("cover", "spectral-cover algebra report");
  std::string cover_group;
  int cover_n = 0;
  cover->add_option("--group", cover_group, "GL, SL, SO_odd, Sp, or SO_even");
  cover->add_option("--n", cover_n, "rank parameter");
  add_common(cover);
  auto* pb = app.add_subcommand("pullback-check",
                                "pullback spectral-data compatibility");
  add_common(pb);
  auto* cog = app.add_subcommand("change-of-group",
                                 "classical-group vs GL_N spectral data");
  add_common(cog);
  auto* av = app.add_subcommand("atlas-validate",
                                "cocycle and compatibility equations of an atlas");
  add_common(av);
  auto* slope = app.add_subcommand("slope", "slope inequality check");
  add_common(slope);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sd->parsed()) return run_spectral_data(input, out);
    if (comp->parsed()) return run_companion(input, out);
    if (cover->parsed()) {
      GroupTag group = [&] {
        if (!cover_group.empty()) {
          auto fam = family_from_name(cover_group);
          if (!fam) fail(ErrKind::parse, "--group: unknown family '" + cover_group + "'");
          if (cover_n < 1) fail(ErrKind::parse, "--n: expected a positive rank");
          return GroupTag::make(*fam, cover_n);
        }
        Json j = read_input(input);
        return group_from_json(j.contains("group") ? j.at("group") : Json(), "$.group");
      }();
      return run_cover(group, out);
    }
    if (pb->parsed()) return run_pullback_check(input, out);
    if (cog->parsed()) return run_change_of_group(input, out);
    if (av->parsed()) return run_atlas_validate(input, out);
    if (slope->parsed()) return run_slope(input, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
