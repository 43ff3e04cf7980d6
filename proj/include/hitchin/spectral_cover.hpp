/* SPDX-License-Identifier: Apache-2.0 */
#ifndef HITCHIN_SPECTRAL_COVER_HPP
#define HITCHIN_SPECTRAL_COVER_HPP

#include <optional>

#include "hitchin/groebner.hpp"
#include "hitchin/polarization.hpp"

namespace hitchin {

// Presentation of the spectral-cover algebra B (or B~ for SO_even) as a free
// module over the coefficient ring A, with the multiplication-by-x matrix in
// a fixed monomial basis.
//
//   GL_N:     B = A[x]/(x^N + a_1 x^{N-1} + ... + a_N),  A = Q[a_1..a_N]
//   SL_{n+1}: B = A[x]/(x^{n+1} + a_2 x^{n-1} + ... + a_{n+1})
//   SO_2n+1:  B = A[x]/(x (x^{2n} + a_2 x^{2n-2} + ... + a_{2n}))
//   Sp_2n:    B = A[x]/(x^{2n} + a_2 x^{2n-2} + ... + a_{2n})
//   SO_2n:    B~ = A[x,p']/(p_n - x p', x^{2n-2} + a_2 x^{2n-4} + ... + a_{2n-2} + p'^2)
//             with A = Q[a_2,...,a_{2n-2},p_n] and p' of degree n-1
//
// Basis: powers 1, x, ..., x^{rank-1}; for B~ the powers 1, ..., x^{2n-2}
// together with p'.  The grading is deg(x) = 1, deg(a_i) = i, deg(p_n) = n.
struct SpectralAlgebra {
  GroupTag group;
  bool specialized = false;

  VarContext base_ctx;   // coefficient symbols of A (or the chart ring)
  VarContext full_ctx;   // base_ctx followed by x (and p' for SO_even)
  std::vector<std::string> base_symbols;
  std::vector<int> base_weights;  // Gm degree per base context variable

  std::size_t x_index = 0;                   // position of x in full_ctx
  std::optional<std::size_t> p_index;        // position of p' (SO_even)

  int module_rank = 0;
  std::vector<MultiPoly> relations;          // over full_ctx

  struct BasisElement {
    int x_exp = 0;
    int p_exp = 0;
    int degree = 0;          // Gm degree
    int involution_sign = 1; // sign of sigma (x -> -x, p' -> -p')
    // Orientation: the basis vector is sign * (monomial).  Fixed at build
    // time so that pf(pairing gram . mult_x) equals the Pfaffian generator
    // p_n for SO_even (a change-of-basis of determinant -1 flips the
    // Pfaffian; every other pairing postcondition holds for both signs).
    int sign = 1;
  };
  std::vector<BasisElement> basis;
  std::size_t lambda_index = 0;  // basis index of the top power functional

  PolyMatrix mult_x;  // over base_ctx

  // Rewrite data used by reduce_to_basis:
  //   x^{top} -> x_reduction                     (single-generator algebras)
  //   x^{2n-1} -> x_reduction, x p' -> xp_reduction, p'^2 -> psq_reduction
  int x_top = 0;
  MultiPoly x_reduction;
  MultiPoly xp_reduction;
  MultiPoly psq_reduction;

  // Nonzero element of A certifying linear independence of the basis (the
  // determinant of the trace-form gram); constant 1 when the basis is a
  // power basis, unset on specialized algebras.
  std::optional<MultiPoly> freeness_certificate;
};

// Builds the cover algebra, optionally specializing every base symbol.
SpectralAlgebra build_cover_algebra(
    const GroupTag& group,
    const std::optional<std::map<std::string, MultiPoly>>& specialization = std::nullopt);

// Coordinates of an element of B in the fixed basis (length module_rank,
// entries over base_ctx).  The element may be given over full_ctx or any
// context liftable into it.
std::vector<MultiPoly> reduce_to_basis(const SpectralAlgebra& alg, const MultiPoly& element);

// Matrix of multiplication by the element in the fixed basis.
PolyMatrix multiplication_matrix(const SpectralAlgebra& alg, const MultiPoly& element);

struct PairingGram {
  PolyMatrix gram;  // over base_ctx, size module_rank
  BilinearFormSpec::Kind kind;
};

// The pairing omega(f, g) = lambda(f sigma(g)) with sigma(x) = -x,
// sigma(p') = -p', and lambda the top-power coefficient functional.
// Postconditions (verified, construction error on failure): det(gram) is a
// nonzero rational, the kind matches the group (symmetric for SO,
// alternating for Sp), and mult_x is anti-self-adjoint for it.
PairingGram pairing_gram(const SpectralAlgebra& alg);

// The uniform Gm weight w with omega(b_r, b_s) homogeneous of degree
// deg(r) + deg(s) - w; must be 2n (SO_odd), 2n-1 (Sp), 2n-2 (SO_even).
int gm_weight_check(const SpectralAlgebra& alg);

struct SmoothnessVerdict {
  bool smooth = false;
  // Rational point where the relations and all Jacobian minors vanish.
  std::map<std::string, Rational> witness;
};

// Jacobian criterion over the generic base: the ideal generated by the
// relations and the c x c minors of their Jacobian (c = number of
// relations) must contain 1.
SmoothnessVerdict jacobian_smoothness(const SpectralAlgebra& alg,
                                      const GroebnerOptions& opts = {});

// True iff the characteristic polynomial of b1 theta^1 + b2 theta^2 has a
// discriminant (in x) that is not identically zero in (b1, b2) -- i.e. the
// N joint eigenvalues are distinct.  Matrices must be rational constants.
bool is_multiplicity_free(const CommutingTuple& tuple);

struct GrssReport {
  bool grss = false;
  std::string reason;
};

// SO_{2n+1} chart-level genericity: a = (a_2, a_4, ..., a_{2n}) polynomials
// in one chart coordinate.  grss iff a_{2n} is not identically zero and the
// inner factor x^{2n} + a_2 x^{2n-2} + ... + a_{2n} has nonzero discriminant.
GrssReport grss_check(const GroupTag& group, const std::vector<MultiPoly>& a);

}  // namespace hitchin

#endif
