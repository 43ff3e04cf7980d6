/* SPDX-License-Identifier: Apache-2.0 */
#include "hitchin/resultant.hpp"

namespace hitchin {

std::vector<MultiPoly> univariate_coefficients(const MultiPoly& p, std::size_t var) {
  int d = p.degree_in(var);
  std::vector<MultiPoly> coeffs;
  coeffs.reserve(static_cast<std::size_t>(d) + 1);
  for (int k = d; k >= 0; --k) coeffs.push_back(p.coefficient_of(var, k));
  return coeffs;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::size_t var) {
  if (!same_context(p.context(), q.context()))
    fail(ErrKind::context, "mismatched contexts in resultant");
  const VarContext& ctx = p.context();
  int dp = p.degree_in(var), dq = q.degree_in(var);
  if (p.is_zero() || q.is_zero()) return MultiPoly(ctx);
  if (dp == 0 && dq == 0) return MultiPoly::constant(ctx, Rational(1));
  if (dp == 0) return p.pow(dq);
  if (dq == 0) return q.pow(dp);
  auto pc = univariate_coefficients(p, var);
  auto qc = univariate_coefficients(q, var);
  const std::size_t n = static_cast<std::size_t>(dp + dq);
  PolyMatrix syl(n, n, ctx);
  for (std::size_t r = 0; r < static_cast<std::size_t>(dq); ++r)
    for (std::size_t k = 0; k < pc.size(); ++k) syl.at(r, r + k) = pc[k];
  for (std::size_t r = 0; r < static_cast<std::size_t>(dp); ++r)
    for (std::size_t k = 0; k < qc.size(); ++k)
      syl.at(static_cast<std::size_t>(dq) + r, r + k) = qc[k];
  return det(syl);
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
  auto idx = context_index(p.context(), var);
  if (!idx) fail(ErrKind::context, "variable '" + var + "' not in context");
  return resultant(p, q, *idx);
}

MultiPoly discriminant(const MultiPoly& p, std::size_t var) {
  int d = p.degree_in(var);
  if (d <= 0)
    fail(ErrKind::domain, "discriminant needs positive degree in the variable");
  MultiPoly res = resultant(p, p.derivative(var), var);
  MultiPoly lc = p.leading_coefficient_in(var);
  MultiPoly out = divide_exact(res, lc);
  long shift = static_cast<long>(d) * (d - 1) / 2;
  return (shift % 2 == 0) ? out : -out;
}

MultiPoly discriminant(const MultiPoly& p, const std::string& var) {
  auto idx = context_index(p.context(), var);
  if (!idx) fail(ErrKind::context, "variable '" + var + "' not in context");
  return discriminant(p, *idx);
}

}  // namespace hitchin
