/* SPDX-License-Identifier: Apache-2.0 */
#ifndef HITCHIN_SERIALIZATION_HPP
#define HITCHIN_SERIALIZATION_HPP

#include <json.hpp>

#include "hitchin/charts.hpp"
#include "hitchin/companion.hpp"
#include "hitchin/spectral_cover.hpp"

namespace hitchin {

// Plain nlohmann json keeps object keys sorted, which makes dumps
// byte-deterministic for golden-file testing.
using Json = nlohmann::json;

// Wire formats (stable key order, canonical term order):
//   Rational          "p/q" with "/q" omitted when q = 1
//   MultiPoly         {"vars": [...], "terms": [{"exp": [...], "coef": "p/q"}]}
//   PolyMatrix        nested arrays of polynomial objects
//   GroupTag          {"family": "Sp", "n": 2}
//   SpectralDatum     {"group": ..., "d": 2,
//                      "entries": [{"j": 2, "comp": [1, 1], "value": poly}]}
//   LocalizedPoly     poly, or {"num": poly, "den": poly}
//   ChartAtlas        {"mode": ..., "charts": [{"coord": "t"}], "phi": [...],
//                      "overlaps": [{"pair": [0, 1], "h": ..., "g": [[...]],
//                                    "gprime": [[...]], "denominators": [...]}]}

Json to_json(const Rational& r);
Json to_json(const MultiPoly& p);
Json to_json(const PolyMatrix& m);
Json to_json(const GroupTag& g);
Json to_json(const SpectralDatum& d);
Json to_json(const MembershipReport& r);
Json to_json(const LocalizedPoly& p);
Json to_json(const ChartAtlas& atlas);
Json to_json(const AtlasReport& r);
Json to_json(const CompanionBundle& b);
Json to_json(const SlopeReport& r);

// Spectral-cover report for the CLI:
//   {"group": ..., "rank": N, "relations": [...], "smooth": bool,
//    "witness": ..., "pairing": {"kind": ..., "gram": ...}, "gm_weight": w}
Json cover_report(const SpectralAlgebra& alg, const SmoothnessVerdict& verdict,
                  const std::optional<PairingGram>& pairing,
                  std::optional<int> gm_weight);

// Parsers throw parse errors naming the offending JSON path.
Rational rational_from_json(const Json& j, const std::string& path);
MultiPoly poly_from_json(const Json& j, const std::string& path);
PolyMatrix matrix_from_json(const Json& j, const std::string& path);
GroupTag group_from_json(const Json& j, const std::string& path);
LocalizedPoly localized_from_json(const Json& j, const VarContext& ctx,
                                  const std::string& path);
ChartAtlas atlas_from_json(const Json& j, const std::string& path);

}  // namespace hitchin

#endif
