/* SPDX-License-Identifier: Apache-2.0 */
#ifndef HITCHIN_CHARTS_HPP
#define HITCHIN_CHARTS_HPP

#include "hitchin/polarization.hpp"

namespace hitchin {

// Fraction num/den over the atlas context.  Denominators must be products of
// the overlap's declared denominators (checked during validation); equality
// is decided by cross-multiplication, i.e. after clearing denominators.
struct LocalizedPoly {
  MultiPoly num;
  MultiPoly den;  // nonzero; 1 for honest polynomials

  static LocalizedPoly of(MultiPoly p);
  static LocalizedPoly frac(MultiPoly num, MultiPoly den);

  friend LocalizedPoly operator+(const LocalizedPoly& a, const LocalizedPoly& b);
  friend LocalizedPoly operator-(const LocalizedPoly& a, const LocalizedPoly& b);
  friend LocalizedPoly operator*(const LocalizedPoly& a, const LocalizedPoly& b);
  // Equality in the localization (cross-multiplied).
  bool same_as(const LocalizedPoly& o) const;
  bool is_zero() const { return num.is_zero(); }
};

using LocalizedMatrix = std::vector<std::vector<LocalizedPoly>>;

LocalizedMatrix localized_identity(std::size_t n, const VarContext& ctx);
LocalizedMatrix localized_product(const LocalizedMatrix& a, const LocalizedMatrix& b);
LocalizedMatrix to_localized(const PolyMatrix& m);
bool localized_equal(const LocalizedMatrix& a, const LocalizedMatrix& b);

// Finite chart cover with transition data.  All charts share one ambient
// polynomial context; overlaps are modeled as declared localizations.
//
// fibered-surface mode: per overlap a unit h (transition of f*Omega^1_C) and
// a 2x2 g (transition of Omega^1_X); per chart a column vector phi = (phi^1,
// phi^2) subject to h_ab phi_a^i = (g_ab)^i_j phi_b^j.
//
// surface-morphism mode: per overlap 2x2 g and g'; per chart a 2x2 phi
// subject to (g_ab)^i_j (phi_b)^j_k = (phi_a)^i_j (g'_ab)^j_k.
struct ChartAtlas {
  enum class Mode { fibered_surface, surface_morphism };

  struct Overlap {
    int alpha = 0, beta = 0;
    std::vector<MultiPoly> denominators;
    std::optional<LocalizedPoly> h;  // fibered-surface mode
    LocalizedMatrix g;               // 2x2
    LocalizedMatrix gprime;          // 2x2, surface-morphism mode
  };

  Mode mode = Mode::fibered_surface;
  VarContext ctx;
  std::vector<std::string> chart_coords;  // coordinate label per chart
  std::vector<PolyMatrix> phi;            // per chart: 2x1 (fibered) or 2x2 (morphism)
  std::vector<Overlap> overlaps;
};

struct Violation {
  std::string kind;  // "compatibility" | "cocycle-g" | "cocycle-h" | "cocycle-gprime"
  int alpha = -1, beta = -1, gamma = -1;
  int i = -1, j = -1;  // entry indices where applicable
  std::string detail;
};

struct AtlasReport {
  bool valid = true;
  std::vector<Violation> violations;
};

// Checks every cocycle identity instantiable from the declared overlaps
// (with implicit identity transitions on (a, a)) and the per-overlap
// compatibility equation, all as exact polynomial identities after clearing
// the declared denominators.  Undeclared denominators raise a localization
// error.
AtlasReport validate_atlas(const ChartAtlas& atlas);

// Higgs data over the atlas: per chart one matrix (d = 1) or a commuting
// pair (d = 2), glued by the bundle transitions (adjoint action) twisted by
// h (d = 1) or g (d = 2).
struct HiggsChartData {
  int d = 1;
  GroupTag group;
  std::vector<std::vector<PolyMatrix>> theta;  // [chart][component]
  struct Transition {
    int alpha = 0, beta = 0;
    LocalizedMatrix t;  // N x N bundle transition
  };
  std::vector<Transition> transitions;

  const LocalizedMatrix* transition(int alpha, int beta) const;
};

// Glue consistency (exact, after localization) plus per-chart integrability.
CheckReport validate_higgs(const ChartAtlas& atlas, const HiggsChartData& higgs);

// Chart-level pullback along the fibration: theta_a goes to the pair
// (phi^1_a theta_a, phi^2_a theta_a).  Refuses invalid atlases; the output
// is bracket-free by construction and glue-consistent against the atlas
// (both asserted).
HiggsChartData pullback_higgs(const ChartAtlas& atlas, const HiggsChartData& higgs);

// Verifies entry (j, (i1, i2)) of spectral_data((phi1 theta, phi2 theta)) ==
// binom(e_j, i1) phi1^{i1} phi2^{i2} c_j(theta) -- the closed form forced by
// homogeneity, realizing the embedding of the curve Hitchin base into the
// surface spectral data at the level of values.
CheckReport pullback_spectral_compat(const PolyMatrix& theta,
                                     const std::pair<MultiPoly, MultiPoly>& phi,
                                     const GroupTag& group);

// Change of group: the GL_N spectral datum of the tuple through the standard
// representation must equal the G-datum pushed through the polarized
// restriction polynomials.
CheckReport change_of_group_compat(const CommutingTuple& tuple);

}  // namespace hitchin

#endif
