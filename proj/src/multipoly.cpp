/* SPDX-License-Identifier: Apache-2.0 */
#include "hitchin/multipoly.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

namespace hitchin {

VarContext make_context(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) fail(ErrKind::context, "empty variable name");
    if (!seen.insert(n).second)
      fail(ErrKind::context, "duplicate variable name '" + n + "'");
  }
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_context(const VarContext& a, const VarContext& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

VarContext merge_contexts(const VarContext& a, const VarContext& b) {
  if (!a) return b;
  if (!b) return a;
  std::vector<std::string> names = *a;
  std::set<std::string> seen(names.begin(), names.end());
  for (const auto& n : *b)
    if (seen.insert(n).second) names.push_back(n);
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> context_index(const VarContext& ctx, const std::string& name) {
  if (!ctx) return std::nullopt;
  auto it = std::find(ctx->begin(), ctx->end(), name);
  if (it == ctx->end()) return std::nullopt;
  return static_cast<std::size_t>(it - ctx->begin());
}

std::string fresh_name(const VarContext& ctx, const std::string& stem) {
  std::string name = stem;
  while (context_index(ctx, name)) name += "_";
  return name;
}

MultiPoly MultiPoly::constant(VarContext ctx, const Rational& c) {
  MultiPoly p(std::move(ctx));
  if (!c.is_zero()) p.terms_.emplace(ExpVec(p.nvars(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const VarContext& ctx, const std::string& name) {
  auto idx = context_index(ctx, name);
  if (!idx) fail(ErrKind::context, "variable '" + name + "' not in context");
  return variable(ctx, *idx);
}

MultiPoly MultiPoly::variable(VarContext ctx, std::size_t index) {
  MultiPoly p(std::move(ctx));
  if (index >= p.nvars()) fail(ErrKind::context, "variable index out of range");
  ExpVec e(p.nvars(), 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(VarContext ctx, ExpVec exps, const Rational& c) {
  MultiPoly p(std::move(ctx));
  if (exps.size() != p.nvars())
    fail(ErrKind::context, "exponent vector length mismatch");
  for (int e : exps)
    if (e < 0) fail(ErrKind::domain, "negative exponent");
  if (!c.is_zero()) p.terms_.emplace(std::move(exps), c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const ExpVec& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Rational MultiPoly::constant_value() const {
  ExpVec zero(nvars(), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int k : e) d += k;
    deg = std::max(deg, d);
  }
  return deg;
}

int MultiPoly::degree_in(std::size_t var) const {
  int deg = 0;
  if (var >= nvars()) fail(ErrKind::context, "variable index out of range");
  for (const auto& [e, c] : terms_) deg = std::max(deg, e[var]);
  return terms_.empty() ? 0 : deg;
}

int MultiPoly::degree_in(const std::string& name) const {
  auto idx = context_index(ctx_, name);
  if (!idx) fail(ErrKind::context, "variable '" + name + "' not in context");
  return degree_in(*idx);
}

Rational MultiPoly::coefficient(const ExpVec& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::leading_coefficient_in(std::size_t var) const {
  return coefficient_of(var, degree_in(var));
}

MultiPoly MultiPoly::coefficient_of(std::size_t var, int k) const {
  if (var >= nvars()) fail(ErrKind::context, "variable index out of range");
  MultiPoly out(ctx_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    ExpVec f = e;
    f[var] = 0;
    out.add_term(f, c);
  }
  return out;
}

void MultiPoly::add_term(const ExpVec& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_same_context(const MultiPoly& o, const char* op) const {
  if (!same_context(ctx_, o.ctx_))
    fail(ErrKind::context, std::string("mismatched variable contexts in ") + op);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(ctx_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same_context(o, "add");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same_context(o, "sub");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_context(b, "mul");
  MultiPoly out(a.ctx_);
  if (a.is_zero() || b.is_zero()) return out;
  ExpVec e(a.nvars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly out(ctx_);
  if (c.is_zero()) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
  return out;
}

MultiPoly MultiPoly::pow(long e) const {
  if (e < 0) fail(ErrKind::domain, "negative polynomial power");
  MultiPoly out = constant(ctx_, Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!same_context(a.ctx_, b.ctx_)) return false;
  return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::eval(const std::map<std::string, MultiPoly>& assignment) const {
  // Resolve the target context from the assigned values.
  VarContext target;
  for (const auto& [name, value] : assignment) {
    if (!target) {
      target = value.context();
    } else if (!same_context(target, value.context())) {
      fail(ErrKind::context, "assigned values use different target contexts");
    }
  }
  std::vector<const MultiPoly*> values(nvars(), nullptr);
  for (std::size_t i = 0; i < nvars(); ++i) {
    auto it = assignment.find((*ctx_)[i]);
    if (it != assignment.end()) values[i] = &it->second;
  }
  if (!target) target = ctx_;

  MultiPoly out(target);
  // Power cache per variable.
  std::vector<std::vector<MultiPoly>> powers(nvars());
  auto power_of = [&](std::size_t var, int k) -> const MultiPoly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, Rational(1)));
    while (static_cast<int>(cache.size()) <= k)
      cache.push_back(cache.back() * *values[var]);
    return cache[static_cast<std::size_t>(k)];
  };

  for (const auto& [e, c] : terms_) {
    MultiPoly term = MultiPoly::constant(target, c);
    for (std::size_t v = 0; v < nvars(); ++v) {
      if (e[v] == 0) continue;
      if (!values[v])
        fail(ErrKind::context,
             "incomplete assignment: variable '" + (*ctx_)[v] + "' occurs but has no value");
      term = term * power_of(v, e[v]);
    }
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::eval_rational(const std::map<std::string, Rational>& assignment) const {
  std::map<std::string, MultiPoly> polys;
  VarContext scalar = make_context({});
  for (const auto& [name, value] : assignment)
    polys.emplace(name, MultiPoly::constant(scalar, value));
  return eval(polys);
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= nvars()) fail(ErrKind::context, "variable index out of range");
  MultiPoly out(ctx_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    ExpVec f = e;
    f[var] -= 1;
    out.add_term(f, c * Rational(e[var]));
  }
  return out;
}

MultiPoly MultiPoly::derivative(const std::string& name) const {
  auto idx = context_index(ctx_, name);
  if (!idx) fail(ErrKind::context, "variable '" + name + "' not in context");
  return derivative(*idx);
}

MultiPoly MultiPoly::lift(const VarContext& target) const {
  if (same_context(ctx_, target)) return *this;
  std::vector<std::size_t> where(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    auto idx = context_index(target, (*ctx_)[i]);
    if (!idx)
      fail(ErrKind::context, "lift target misses variable '" + (*ctx_)[i] + "'");
    where[i] = *idx;
  }
  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    ExpVec f(target->size(), 0);
    for (std::size_t i = 0; i < nvars(); ++i) f[where[i]] = e[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

MultiPoly MultiPoly::restrict_to(const VarContext& target) const {
  std::vector<std::optional<std::size_t>> where(nvars());
  for (std::size_t i = 0; i < nvars(); ++i)
    where[i] = context_index(target, (*ctx_)[i]);
  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    ExpVec f(target->size(), 0);
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (e[i] == 0) continue;
      if (!where[i])
        fail(ErrKind::context,
             "cannot restrict: polynomial depends on '" + (*ctx_)[i] + "'");
      f[*where[i]] = e[i];
    }
    out.add_term(f, c);
  }
  return out;
}

std::map<ExpVec, MultiPoly> MultiPoly::split_by(std::span<const std::size_t> vars) const {
  std::map<ExpVec, MultiPoly> out;
  for (const auto& [e, c] : terms_) {
    ExpVec key(vars.size());
    ExpVec rest = e;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      key[i] = e[vars[i]];
      rest[vars[i]] = 0;
    }
    auto it = out.find(key);
    if (it == out.end()) it = out.emplace(std::move(key), MultiPoly(ctx_)).first;
    it->second.add_term(rest, c);
  }
  return out;
}

std::optional<int> MultiPoly::homogeneous_degree(std::span<const int> weights) const {
  if (weights.size() != nvars())
    fail(ErrKind::context, "weight vector length mismatch");
  if (terms_.empty()) return 0;
  std::optional<int> deg;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * weights[i];
    if (!deg) deg = d;
    else if (*deg != d) return std::nullopt;
  }
  return deg;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational coef = c;
    if (first) {
      if (coef.sign() < 0) {
        os << "-";
        coef = -coef;
      }
    } else {
      os << (coef.sign() < 0 ? " - " : " + ");
      coef = coef.abs();
    }
    first = false;
    bool has_vars = std::any_of(e.begin(), e.end(), [](int k) { return k > 0; });
    if (!coef.is_one() || !has_vars) os << coef.str();
    bool emitted = !coef.is_one() || !has_vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (emitted) os << "*";
      os << (*ctx_)[i];
      if (e[i] > 1) os << "^" << e[i];
      emitted = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
  return os << p.str();
}

MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) fail(ErrKind::domain, "exact division by zero polynomial");
  if (!same_context(p.context(), q.context()))
    fail(ErrKind::context, "mismatched variable contexts in divide_exact");
  // Leading term under the map's key order (grading-free lexicographic on
  // exponent vectors); any fixed order works for exact division.
  MultiPoly rem = p;
  MultiPoly quo(p.context());
  const auto& qlead = *q.terms().rbegin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms().rbegin();
    ExpVec diff(rlead.first.size());
    for (std::size_t i = 0; i < diff.size(); ++i) {
      diff[i] = rlead.first[i] - qlead.first[i];
      if (diff[i] < 0)
        fail(ErrKind::construction, "divide_exact: not exactly divisible");
    }
    MultiPoly m = MultiPoly::monomial(p.context(), diff, rlead.second / qlead.second);
    quo += m;
    rem -= m * q;
  }
  return quo;
}

}  // namespace hitchin
