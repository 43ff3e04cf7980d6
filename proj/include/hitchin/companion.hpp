/* SPDX-License-Identifier: Apache-2.0 */
#ifndef HITCHIN_COMPANION_HPP
#define HITCHIN_COMPANION_HPP

#include "hitchin/spectral_cover.hpp"

namespace hitchin {

// Coefficient sections restricted to one chart: values[i] is a polynomial in
// the chart coordinate, a section of (Omega^1)^{weights[i]}.
struct ChartSection {
  std::string chart_coordinate;
  std::vector<MultiPoly> values;
  std::vector<int> weights;

  // The group's coefficient pattern: GL (a_1..a_n), SL (a_2..a_{n+1}),
  // SO_odd/Sp (a_2, a_4, ..., a_2n), SO_even (a_2, ..., a_{2n-2}, p_n).
  static ChartSection make(const GroupTag& g, std::string coordinate,
                           std::vector<MultiPoly> values);
};

// Companion Higgs field over one chart together with the line-bundle twist
// bookkeeping: summand_weights[i] is the exponent of each direct summand in
// powers of Omega^1 (half-integers for the formal square root).
struct CompanionBundle {
  GroupTag group;
  PolyMatrix theta;                      // over the chart ring
  std::vector<Rational> summand_weights;
  Rational det_weight;                   // = sum of summand weights
  std::optional<PairingGram> pairing;    // specialized at the section
  SpectralAlgebra algebra;               // the specialized cover algebra
};

// The GL_n companion matrix: subdiagonal identity, last column
// (-a_n, ..., -a_1) top to bottom; char_poly(result) = (a_1, ..., a_n).
PolyMatrix companion_matrix(const ChartSection& a);

// Classical-group companion: theta is the multiplication-by-x matrix of the
// group's cover algebra specialized at a, with the twist that makes the
// determinant weight zero.  Verifies: det_weight = 0; SL trace layer
// vanishes; SO/Sp anti-self-adjointness for the specialized pairing; the
// entrywise weight bookkeeping.
CompanionBundle classical_companion(const GroupTag& g, const ChartSection& a);

// evaluate_invariants(group, theta) must reproduce the section values
// (identically in the chart coordinate); for SO_even the Pfaffian is taken
// with respect to the bundle's own pairing.
CheckReport verify_spectral_recovery(const CompanionBundle& bundle, const ChartSection& a);

// Kernel vector of the SO_odd companion: theta * v = 0 exactly, where v
// reduces to the inner spectral factor (top component the x^{2n} summand of
// weight -n after the twist).
std::vector<MultiPoly> so_odd_kernel_vector(const CompanionBundle& bundle);

struct SlopeReport {
  bool pass = false;
  Rational mu;          // slope -n kappa
  Rational bound_half;  // -(2n-1)/2 kappa
};

// The two slope chains for SO_{2n+1}: mu = -n kappa <= 0 and
// mu <= -(2n-1)/2 kappa, for kappa = c1(f* Omega^1_C) . L >= 0.
SlopeReport slope_inequalities(int n, const Rational& kappa);

}  // namespace hitchin

#endif
