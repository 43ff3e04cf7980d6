/* SPDX-License-Identifier: Apache-2.0 */
#ifndef HITCHIN_MULTIPOLY_HPP
#define HITCHIN_MULTIPOLY_HPP

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hitchin/rational.hpp"

namespace hitchin {

// Ordered list of distinct symbol names shared by the polynomials of one
// computation.  Contexts compare by content, not identity.
using VarContext = std::shared_ptr<const std::vector<std::string>>;

VarContext make_context(std::vector<std::string> names);
bool same_context(const VarContext& a, const VarContext& b);
// Ordered union: all of `a`, then the names of `b` not already present.
VarContext merge_contexts(const VarContext& a, const VarContext& b);
// Index of `name` in `ctx`, or nullopt.
std::optional<std::size_t> context_index(const VarContext& ctx, const std::string& name);
// First name of the form `stem`, `stem_`, `stem__`, ... not present in ctx.
std::string fresh_name(const VarContext& ctx, const std::string& stem);

using ExpVec = std::vector<int>;

// Exact multivariate polynomial over Q.  Terms are held in a map keyed by
// dense exponent vectors, so the representation is canonical: no zero
// coefficients are stored and term order is fixed by the key order.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(VarContext ctx) : ctx_(std::move(ctx)) {}

  static MultiPoly zero(VarContext ctx) { return MultiPoly(std::move(ctx)); }
  static MultiPoly constant(VarContext ctx, const Rational& c);
  static MultiPoly variable(const VarContext& ctx, const std::string& name);
  static MultiPoly variable(VarContext ctx, std::size_t index);
  static MultiPoly monomial(VarContext ctx, ExpVec exps, const Rational& c);

  const VarContext& context() const { return ctx_; }
  std::size_t nvars() const { return ctx_ ? ctx_->size() : 0; }
  const std::map<ExpVec, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (the coefficient of the all-zero monomial).
  Rational constant_value() const;
  // -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  int degree_in(const std::string& name) const;
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }
  Rational coefficient(const ExpVec& exps) const;

  // Leading coefficient viewing the polynomial as univariate in `var`; the
  // result is a polynomial in the remaining variables (same context).
  MultiPoly leading_coefficient_in(std::size_t var) const;
  // Coefficient of var^k, as a polynomial in the same context.
  MultiPoly coefficient_of(std::size_t var, int k) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(long e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // Exact substitution.  Every variable occurring in *this must be assigned;
  // all assigned values must share one target context.
  MultiPoly eval(const std::map<std::string, MultiPoly>& assignment) const;
  // Convenience: rational values.
  MultiPoly eval_rational(const std::map<std::string, Rational>& assignment) const;

  MultiPoly derivative(std::size_t var) const;
  MultiPoly derivative(const std::string& name) const;

  // Re-embeds into a larger context containing all of this context's names.
  MultiPoly lift(const VarContext& target) const;
  // Drops variables this polynomial does not depend on, keeping only the
  // names in `target` (which must cover everything that occurs).
  MultiPoly restrict_to(const VarContext& target) const;

  // Splits by the exponents of the selected variables: for each pattern of
  // exponents on `vars`, the coefficient polynomial (with those variables
  // zeroed out of the key but kept in the context).
  std::map<ExpVec, MultiPoly> split_by(std::span<const std::size_t> vars) const;

  // Weighted degree if homogeneous, nullopt otherwise.  Zero is homogeneous
  // of degree 0 by convention.
  std::optional<int> homogeneous_degree(std::span<const int> weights) const;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

 private:
  void add_term(const ExpVec& e, const Rational& c);
  void check_same_context(const MultiPoly& o, const char* op) const;

  VarContext ctx_;
  std::map<ExpVec, Rational> terms_;
};

// Exact quotient p / q; the caller must guarantee divisibility (used by
// fraction-free elimination).  Throws a construction error otherwise.
MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& q);

}  // namespace hitchin

#endif
