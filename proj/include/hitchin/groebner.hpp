/* SPDX-License-Identifier: Apache-2.0 */
#ifndef HITCHIN_GROEBNER_HPP
#define HITCHIN_GROEBNER_HPP

#include <cstddef>
#include <vector>

#include "hitchin/multipoly.hpp"

namespace hitchin {

enum class MonomialOrder { grevlex, lex };

// Three-way monomial comparison under the chosen order: negative if a < b.
int compare_monomials(const ExpVec& a, const ExpVec& b, MonomialOrder order);

// Leading term (exponents, coefficient) of a nonzero polynomial.
std::pair<ExpVec, Rational> leading_term(const MultiPoly& p, MonomialOrder order);

struct IdealPresentation {
  std::vector<MultiPoly> generators;
  MonomialOrder order = MonomialOrder::grevlex;
};

struct GroebnerOptions {
  // Cap on the Buchberger pair queue; exceeding it raises a resource error.
  std::size_t pair_budget = 10000;
};

struct GroebnerBasis {
  std::vector<MultiPoly> elements;  // reduced, monic, sorted by leading monomial
  MonomialOrder order = MonomialOrder::grevlex;
};

// Remainder of p under multivariate division by the basis.
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                      MonomialOrder order);
MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& g);

// Buchberger completion to a reduced Groebner basis.
GroebnerBasis buchberger(const IdealPresentation& ideal, const GroebnerOptions& opts = {});

// Member iff the normal form of p modulo a Groebner basis of I is zero.
bool ideal_membership(const MultiPoly& p, const IdealPresentation& ideal,
                      const GroebnerOptions& opts = {});

}  // namespace hitchin

#endif
