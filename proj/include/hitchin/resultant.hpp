/* SPDX-License-Identifier: Apache-2.0 */
#ifndef HITCHIN_RESULTANT_HPP
#define HITCHIN_RESULTANT_HPP

#include "hitchin/polymatrix.hpp"

namespace hitchin {

// Coefficients of p viewed as univariate in `var`, highest degree first.
// Each coefficient is a polynomial in the remaining variables.
std::vector<MultiPoly> univariate_coefficients(const MultiPoly& p, std::size_t var);

// Sylvester resultant of p and q with respect to `var`.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::size_t var);
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var);

// Discriminant with the convention
//   disc(p) = (-1)^(d(d-1)/2) Res(p, dp/dvar) / lc(p),    d = deg_var(p),
// so disc(x^2+bx+c) = b^2-4c and disc(x^2+1) = -4.  Vanishes exactly when p
// has a repeated root in `var` over the algebraic closure of the remaining
// coefficient field.  Degree 0 in `var` is a degenerate input.
MultiPoly discriminant(const MultiPoly& p, std::size_t var);
MultiPoly discriminant(const MultiPoly& p, const std::string& var);

}  // namespace hitchin

#endif
