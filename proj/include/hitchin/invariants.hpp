/* SPDX-License-Identifier: Apache-2.0 */
#ifndef HITCHIN_INVARIANTS_HPP
#define HITCHIN_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hitchin/polymatrix.hpp"

namespace hitchin {

enum class GroupFamily { GL, SL, SO_odd, Sp, SO_even };

std::string family_name(GroupFamily f);
std::optional<GroupFamily> family_from_name(const std::string& name);

// A classical group given by family and rank parameter n.  The dimension N
// of the standard representation is GL: n, SL: n+1, SO_odd: 2n+1, Sp: 2n,
// SO_even: 2n.  SO_even needs n >= 2 (the rank-2n cover presentation
// degenerates at n = 1).
struct GroupTag {
  GroupFamily family;
  int n;

  int rank() const { return n; }
  int rep_dim() const;

  static GroupTag make(GroupFamily f, int n);
  friend bool operator==(const GroupTag& a, const GroupTag& b) {
    return a.family == b.family && a.n == b.n;
  }
  std::string str() const;
};

struct InvariantGenerator {
  std::string name;
  int degree;
  enum class Rule { char_coeff, pfaffian } rule;
  // For char_coeff: 1-based index into the characteristic coefficients.
  int char_index = 0;
};

struct InvariantSystem {
  GroupTag group;
  std::vector<InvariantGenerator> generators;
};

struct BilinearFormSpec {
  enum class Kind { symmetric, alternating };
  Kind kind;
  // Invertible, symmetric or skew per kind.  The standard group forms have
  // rational constant entries; specialized spectral-cover pairings may carry
  // chart polynomials.
  PolyMatrix gram;

  static BilinearFormSpec make(Kind kind, PolyMatrix gram);
};

// The module's fixed split forms: Sp_{2n} uses [[0, I], [-I, 0]]; SO_N uses
// the antidiagonal identity, so the Cartan subalgebra is diagonal.  GL and
// SL carry no form.
std::optional<BilinearFormSpec> standard_form(const GroupTag& g, const VarContext& ctx);

// Generators of k[g]^G with their degrees: GL_n 1..n, SL_{n+1} 2..n+1,
// SO_{2n+1} and Sp_{2n} 2,4,...,2n, SO_{2n} 2,4,...,2n-2 plus the degree-n
// Pfaffian.
InvariantSystem invariant_system(const GroupTag& g);

struct MembershipReport {
  bool member = true;
  // Named witnesses of failure (e.g. the trace, or entries of M^T S + S M).
  std::vector<std::pair<std::string, MultiPoly>> witnesses;
};

MembershipReport lie_membership(const GroupTag& g, const PolyMatrix& m);
MembershipReport lie_membership(const GroupTag& g, const PolyMatrix& m,
                                const BilinearFormSpec& form);

// Pfaffian of a skew-symmetric even-size matrix by expansion along the first
// row; pf(blockdiag([[0,1],[-1,0]], ...)) = 1 and pf(M)^2 = det(M).
MultiPoly pfaffian(const PolyMatrix& m);

// Values (c_1(M), ..., c_n(M)) of the invariant generators.  Throws a
// membership error (with witnesses in the message) if M is not in the Lie
// algebra.  The overload with an explicit form uses it both for the
// membership test and for the Pfaffian generator of SO_even.
std::vector<MultiPoly> evaluate_invariants(const GroupTag& g, const PolyMatrix& m);
std::vector<MultiPoly> evaluate_invariants(const GroupTag& g, const PolyMatrix& m,
                                           const BilinearFormSpec& form);

// Restriction polynomials f_1, ..., f_N expressing the characteristic
// coefficients of the standard representation in the group's generators
// c_1, ..., c_n.  Context: the generator names.  For SO_even the top layer
// is f_{2n} = (-1)^n c_n^2 over Q with the split form (det of the split
// gram is (-1)^n), which is c_n^2 for even n.
std::vector<MultiPoly> restriction_polynomials(const GroupTag& g);

// Symbolic Cartan element: diagonal matrix over context {t1, ..., tn} in the
// split-form convention (GL diag(t); SL diag(t, -sum t); SO_odd
// diag(t, 0, -t reversed); SO_even diag(t, -t reversed); Sp diag(t, -t)).
PolyMatrix cartan_element(const GroupTag& g);

}  // namespace hitchin

#endif
