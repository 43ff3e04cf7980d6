/* SPDX-License-Identifier: Apache-2.0 */
#include "hitchin/invariants.hpp"

#include <sstream>

namespace hitchin {

std::string family_name(GroupFamily f) {
  switch (f) {
    case GroupFamily::GL: return "GL";
    case GroupFamily::SL: return "SL";
    case GroupFamily::SO_odd: return "SO_odd";
    case GroupFamily::Sp: return "Sp";
    case GroupFamily::SO_even: return "SO_even";
  }
  return "?";
}

std::optional<GroupFamily> family_from_name(const std::string& name) {
  if (name == "GL") return GroupFamily::GL;
  if (name == "SL") return GroupFamily::SL;
  if (name == "SO_odd") return GroupFamily::SO_odd;
  if (name == "Sp") return GroupFamily::Sp;
  if (name == "SO_even") return GroupFamily::SO_even;
  return std::nullopt;
}

int GroupTag::rep_dim() const {
  switch (family) {
    case GroupFamily::GL: return n;
    case GroupFamily::SL: return n + 1;
    case GroupFamily::SO_odd: return 2 * n + 1;
    case GroupFamily::Sp: return 2 * n;
    case GroupFamily::SO_even: return 2 * n;
  }
  fail(ErrKind::domain, "unknown group family");
}

GroupTag GroupTag::make(GroupFamily f, int n) {
  if (n < 1) fail(ErrKind::domain, "group rank must be at least 1");
  if (f == GroupFamily::SO_even && n < 2)
    fail(ErrKind::domain, "SO_even needs n >= 2");
  return GroupTag{f, n};
}

std::string GroupTag::str() const {
  std::ostringstream os;
  os << family_name(family) << "(n=" << n << ", N=" << rep_dim() << ")";
  return os.str();
}

BilinearFormSpec BilinearFormSpec::make(Kind kind, PolyMatrix gram) {
  if (!gram.is_square()) fail(ErrKind::shape, "gram matrix must be square");
  PolyMatrix t = gram.transpose();
  if (kind == Kind::symmetric && t != gram)
    fail(ErrKind::construction, "symmetric form with non-symmetric gram");
  if (kind == Kind::alternating && t != -gram)
    fail(ErrKind::construction, "alternating form with non-skew gram");
  if (det(gram).is_zero()) fail(ErrKind::construction, "degenerate gram matrix");
  return BilinearFormSpec{kind, std::move(gram)};
}

std::optional<BilinearFormSpec> standard_form(const GroupTag& g, const VarContext& ctx) {
  const int N = g.rep_dim();
  switch (g.family) {
    case GroupFamily::GL:
    case GroupFamily::SL:
      return std::nullopt;
    case GroupFamily::SO_odd:
    case GroupFamily::SO_even: {
      PolyMatrix s(static_cast<std::size_t>(N), static_cast<std::size_t>(N), ctx);
      for (int i = 0; i < N; ++i)
        s.at(static_cast<std::size_t>(i), static_cast<std::size_t>(N - 1 - i)) =
            MultiPoly::constant(ctx, Rational(1));
      return BilinearFormSpec::make(BilinearFormSpec::Kind::symmetric, std::move(s));
    }
    case GroupFamily::Sp: {
      PolyMatrix s(static_cast<std::size_t>(N), static_cast<std::size_t>(N), ctx);
      const int n = g.n;
      for (int i = 0; i < n; ++i) {
        s.at(static_cast<std::size_t>(i), static_cast<std::size_t>(n + i)) =
            MultiPoly::constant(ctx, Rational(1));
        s.at(static_cast<std::size_t>(n + i), static_cast<std::size_t>(i)) =
            MultiPoly::constant(ctx, Rational(-1));
      }
      return BilinearFormSpec::make(BilinearFormSpec::Kind::alternating, std::move(s));
    }
  }
  fail(ErrKind::domain, "unknown group family");
}

InvariantSystem invariant_system(const GroupTag& g) {
  InvariantSystem sys{g, {}};
  auto& gens = sys.generators;
  switch (g.family) {
    case GroupFamily::GL:
      for (int j = 1; j <= g.n; ++j)
        gens.push_back({"a" + std::to_string(j), j,
                        InvariantGenerator::Rule::char_coeff, j});
      break;
    case GroupFamily::SL:
      for (int j = 1; j <= g.n; ++j)
        gens.push_back({"c" + std::to_string(j), j + 1,
                        InvariantGenerator::Rule::char_coeff, j + 1});
      break;
    case GroupFamily::SO_odd:
    case GroupFamily::Sp:
      for (int j = 1; j <= g.n; ++j)
        gens.push_back({"c" + std::to_string(j), 2 * j,
                        InvariantGenerator::Rule::char_coeff, 2 * j});
      break;
    case GroupFamily::SO_even:
      for (int j = 1; j < g.n; ++j)
        gens.push_back({"c" + std::to_string(j), 2 * j,
                        InvariantGenerator::Rule::char_coeff, 2 * j});
      gens.push_back({"p" + std::to_string(g.n), g.n,
                      InvariantGenerator::Rule::pfaffian, 0});
      break;
  }
  return sys;
}

static void check_rep_shape(const GroupTag& g, const PolyMatrix& m) {
  const auto N = static_cast<std::size_t>(g.rep_dim());
  if (m.rows() != N || m.cols() != N)
    fail(ErrKind::shape, "matrix size does not match " + g.str());
}

MembershipReport lie_membership(const GroupTag& g, const PolyMatrix& m) {
  auto form = standard_form(g, m.context());
  if (form) return lie_membership(g, m, *form);
  check_rep_shape(g, m);
  MembershipReport rep;
  if (g.family == GroupFamily::SL) {
    MultiPoly tr = m.trace();
    if (!tr.is_zero()) {
      rep.member = false;
      rep.witnesses.emplace_back("trace", tr);
    }
  }
  return rep;  // GL: always member
}

MembershipReport lie_membership(const GroupTag& g, const PolyMatrix& m,
                                const BilinearFormSpec& form) {
  check_rep_shape(g, m);
  if (g.family == GroupFamily::GL || g.family == GroupFamily::SL)
    return lie_membership(g, m);
  PolyMatrix gram = form.gram.lift(m.context());
  PolyMatrix obstruction = m.transpose() * gram + gram * m;
  MembershipReport rep;
  if (!obstruction.is_zero()) {
    rep.member = false;
    for (std::size_t r = 0; r < obstruction.rows(); ++r)
      for (std::size_t c = 0; c < obstruction.cols(); ++c)
        if (!obstruction.at(r, c).is_zero())
          rep.witnesses.emplace_back(
              "(M^T S + S M)[" + std::to_string(r) + "][" + std::to_string(c) + "]",
              obstruction.at(r, c));
  }
  return rep;
}

MultiPoly pfaffian(const PolyMatrix& m) {
  if (!m.is_square()) fail(ErrKind::shape, "pfaffian of non-square matrix");
  const std::size_t n = m.rows();
  if (n % 2 != 0) fail(ErrKind::shape, "pfaffian needs even size");
  if (m.transpose() != -m) fail(ErrKind::shape, "pfaffian needs a skew-symmetric matrix");
  const VarContext& ctx = m.context();

  // pf(M) = sum_{j>=2} (-1)^j M[0][j-1] pf(M without rows/cols {0, j-1}).
  struct Rec {
    static MultiPoly go(const PolyMatrix& a) {
      if (a.rows() == 2) return a.at(0, 1);
      MultiPoly out(a.context());
      for (std::size_t j = 1; j < a.cols(); ++j) {
        if (a.at(0, j).is_zero()) continue;
        // Drop original rows/cols {0, j}.
        PolyMatrix sub = a.submatrix_without(0, j).submatrix_without(j - 1, 0);
        MultiPoly term = a.at(0, j) * go(sub);
        if (j % 2 == 0) out -= term;  // (-1)^(j+1) with 0-based j
        else out += term;
      }
      return out;
    }
  };
  return Rec::go(m);
}

std::vector<MultiPoly> evaluate_invariants(const GroupTag& g, const PolyMatrix& m) {
  auto form = standard_form(g, m.context());
  if (form) return evaluate_invariants(g, m, *form);
  check_rep_shape(g, m);
  MembershipReport rep = lie_membership(g, m);
  if (!rep.member) {
    std::string msg = "matrix is not in the Lie algebra of " + g.str();
    for (const auto& [name, w] : rep.witnesses)
      msg += "; " + name + " = " + w.str();
    fail(ErrKind::membership, msg);
  }
  auto coeffs = char_poly(m);
  std::vector<MultiPoly> out;
  for (const auto& gen : invariant_system(g).generators)
    out.push_back(coeffs[static_cast<std::size_t>(gen.char_index - 1)]);
  return out;
}

std::vector<MultiPoly> evaluate_invariants(const GroupTag& g, const PolyMatrix& m,
                                           const BilinearFormSpec& form) {
  if (g.family == GroupFamily::GL || g.family == GroupFamily::SL)
    return evaluate_invariants(g, m);
  check_rep_shape(g, m);
  MembershipReport rep = lie_membership(g, m, form);
  if (!rep.member) {
    std::string msg = "matrix is not in the Lie algebra of " + g.str();
    for (const auto& [name, w] : rep.witnesses)
      msg += "; " + name + " = " + w.str();
    fail(ErrKind::membership, msg);
  }
  auto coeffs = char_poly(m);
  std::vector<MultiPoly> out;
  for (const auto& gen : invariant_system(g).generators) {
    if (gen.rule == InvariantGenerator::Rule::char_coeff) {
      out.push_back(coeffs[static_cast<std::size_t>(gen.char_index - 1)]);
    } else {
      PolyMatrix gram = form.gram.lift(m.context());
      out.push_back(pfaffian(gram * m));
    }
  }
  return out;
}

std::vector<MultiPoly> restriction_polynomials(const GroupTag& g) {
  if (g.family == GroupFamily::GL)
    fail(ErrKind::domain, "restriction for GL is the identity map");
  const auto sys = invariant_system(g);
  std::vector<std::string> names;
  for (const auto& gen : sys.generators) names.push_back(gen.name);
  VarContext ctx = make_context(names);
  const int N = g.rep_dim();
  std::vector<MultiPoly> f(static_cast<std::size_t>(N), MultiPoly(ctx));

  switch (g.family) {
    case GroupFamily::SL:
      for (int j = 2; j <= N; ++j)
        f[static_cast<std::size_t>(j - 1)] =
            MultiPoly::variable(ctx, static_cast<std::size_t>(j - 2));
      break;
    case GroupFamily::SO_odd:
    case GroupFamily::Sp:
      for (int i = 1; i <= g.n; ++i)
        f[static_cast<std::size_t>(2 * i - 1)] =
            MultiPoly::variable(ctx, static_cast<std::size_t>(i - 1));
      break;
    case GroupFamily::SO_even: {
      for (int i = 1; i < g.n; ++i)
        f[static_cast<std::size_t>(2 * i - 1)] =
            MultiPoly::variable(ctx, static_cast<std::size_t>(i - 1));
      MultiPoly pn = MultiPoly::variable(ctx, static_cast<std::size_t>(g.n - 1));
      MultiPoly sq = pn * pn;
      f[static_cast<std::size_t>(2 * g.n - 1)] = (g.n % 2 == 0) ? sq : -sq;
      break;
    }
    case GroupFamily::GL:
      break;
  }
  return f;
}

PolyMatrix cartan_element(const GroupTag& g) {
  std::vector<std::string> names;
  for (int i = 1; i <= g.n; ++i) names.push_back("t" + std::to_string(i));
  VarContext ctx = make_context(names);
  const auto N = static_cast<std::size_t>(g.rep_dim());
  PolyMatrix h(N, N, ctx);
  auto t = [&](int i) { return MultiPoly::variable(ctx, static_cast<std::size_t>(i)); };
  switch (g.family) {
    case GroupFamily::GL:
      for (int i = 0; i < g.n; ++i) h.at(i, i) = t(i);
      break;
    case GroupFamily::SL: {
      MultiPoly sum(ctx);
      for (int i = 0; i < g.n; ++i) {
        h.at(i, i) = t(i);
        sum += t(i);
      }
      h.at(static_cast<std::size_t>(g.n), static_cast<std::size_t>(g.n)) = -sum;
      break;
    }
    case GroupFamily::SO_odd:
      for (int i = 0; i < g.n; ++i) {
        h.at(i, i) = t(i);
        h.at(N - 1 - i, N - 1 - i) = -t(i);
      }
      break;
    case GroupFamily::SO_even:
      for (int i = 0; i < g.n; ++i) {
        h.at(i, i) = t(i);
        h.at(N - 1 - i, N - 1 - i) = -t(i);
      }
      break;
    case GroupFamily::Sp:
      for (int i = 0; i < g.n; ++i) {
        h.at(i, i) = t(i);
        h.at(static_cast<std::size_t>(g.n + i), static_cast<std::size_t>(g.n + i)) = -t(i);
      }
      break;
  }
  return h;
}

}  // namespace hitchin
