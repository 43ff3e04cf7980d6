/* SPDX-License-Identifier: Apache-2.0 */
#include "hitchin/groebner.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace hitchin {

int compare_monomials(const ExpVec& a, const ExpVec& b, MonomialOrder order) {
  if (a.size() != b.size()) fail(ErrKind::context, "exponent length mismatch");
  switch (order) {
    case MonomialOrder::lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case MonomialOrder::grevlex: {
      int da = std::accumulate(a.begin(), a.end(), 0);
      int db = std::accumulate(b.begin(), b.end(), 0);
      if (da != db) return da < db ? -1 : 1;
      // Equal total degree: the monomial whose last differing exponent is
      // smaller is the larger one.
      for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      }
      return 0;
    }
  }
  fail(ErrKind::domain, "unknown monomial order");
}

std::pair<ExpVec, Rational> leading_term(const MultiPoly& p, MonomialOrder order) {
  if (p.is_zero()) fail(ErrKind::domain, "leading term of zero polynomial");
  const ExpVec* best = nullptr;
  const Rational* coef = nullptr;
  for (const auto& [e, c] : p.terms()) {
    if (!best || compare_monomials(e, *best, order) > 0) {
      best = &e;
      coef = &c;
    }
  }
  return {*best, *coef};
}

static bool divides(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

static ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
  ExpVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

static ExpVec exp_lcm(const ExpVec& a, const ExpVec& b) {
  ExpVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                      MonomialOrder order) {
  struct Lead {
    ExpVec exps;
    Rational coef;
  };
  std::vector<Lead> leads;
  leads.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.is_zero()) fail(ErrKind::domain, "zero generator in division basis");
    auto [e, c] = leading_term(g, order);
    leads.push_back({std::move(e), std::move(c)});
  }

  MultiPoly rem(p.context());
  MultiPoly work = p;
  while (!work.is_zero()) {
    auto [le, lc] = leading_term(work, order);
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!divides(leads[i].exps, le)) continue;
      MultiPoly factor = MultiPoly::monomial(p.context(), exp_sub(le, leads[i].exps),
                                             lc / leads[i].coef);
      work -= factor * basis[i];
      reduced = true;
      break;
    }
    if (!reduced) {
      MultiPoly mono = MultiPoly::monomial(p.context(), le, lc);
      rem += mono;
      work -= mono;
    }
  }
  return rem;
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& g) {
  return normal_form(p, g.elements, g.order);
}

GroebnerBasis buchberger(const IdealPresentation& ideal, const GroebnerOptions& opts) {
  if (ideal.generators.empty())
    fail(ErrKind::domain, "ideal presentation needs at least one generator");
  const VarContext& ctx = ideal.generators.front().context();
  for (const auto& g : ideal.generators)
    if (!same_context(g.context(), ctx))
      fail(ErrKind::context, "ideal generators use different contexts");

  const MonomialOrder order = ideal.order;
  std::vector<MultiPoly> basis;
  for (const auto& g : ideal.generators)
    if (!g.is_zero()) basis.push_back(g);
  if (basis.empty())
    fail(ErrKind::domain, "ideal presentation has only zero generators");

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  auto lead_of = [&](std::size_t i) { return leading_term(basis[i], order); };

  while (!pairs.empty()) {
    if (pairs.size() > opts.pair_budget)
      fail(ErrKind::resource, "Groebner pair queue exceeded budget (basis size " +
                                  std::to_string(basis.size()) + ")");
    auto [i, j] = pairs.front();
    pairs.pop_front();
    auto [ei, ci] = lead_of(i);
    auto [ej, cj] = lead_of(j);
    // Buchberger's first criterion: coprime leading monomials reduce to zero.
    bool coprime = true;
    for (std::size_t v = 0; v < ei.size(); ++v)
      if (ei[v] > 0 && ej[v] > 0) { coprime = false; break; }
    if (coprime) continue;
    ExpVec l = exp_lcm(ei, ej);
    MultiPoly s = MultiPoly::monomial(ctx, exp_sub(l, ei), Rational(1) / ci) * basis[i] -
                  MultiPoly::monomial(ctx, exp_sub(l, ej), Rational(1) / cj) * basis[j];
    MultiPoly r = normal_form(s, basis, order);
    if (r.is_zero()) continue;
    basis.push_back(r);
    for (std::size_t k = 0; k + 1 < basis.size(); ++k)
      pairs.emplace_back(k, basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto [ei, ci] = leading_term(basis[i], order);
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      auto [ej, cj] = leading_term(basis[j], order);
      if (divides(ej, ei) && (ej != ei || j < i)) { redundant = true; break; }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Reduce: each element's tail reduced against the others; normalize monic.
  std::vector<MultiPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MultiPoly r = others.empty() ? minimal[i] : normal_form(minimal[i], others, order);
    if (r.is_zero()) continue;
    auto [e, c] = leading_term(r, order);
    reduced.push_back(r.scaled(Rational(1) / c));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return compare_monomials(leading_term(a, order).first,
                             leading_term(b, order).first, order) < 0;
  });
  return GroebnerBasis{std::move(reduced), order};
}

bool ideal_membership(const MultiPoly& p, const IdealPresentation& ideal,
                      const GroebnerOptions& opts) {
  if (!same_context(p.context(), ideal.generators.front().context()))
    fail(ErrKind::context, "polynomial and ideal use different contexts");
  GroebnerBasis g = buchberger(ideal, opts);
  return normal_form(p, g).is_zero();
}

}  // namespace hitchin
