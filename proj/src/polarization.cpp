/* SPDX-License-Identifier: Apache-2.0 */
#include "hitchin/polarization.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hitchin {

int WeakComposition::total() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::vector<WeakComposition> weak_compositions(int e, int d) {
  if (e < 0) fail(ErrKind::domain, "weak composition of a negative total");
  if (d < 1) fail(ErrKind::domain, "weak composition of non-positive length");
  std::vector<WeakComposition> out;
  std::vector<int> parts(static_cast<std::size_t>(d), 0);
  struct Rec {
    static void go(int rest, int pos, std::vector<int>& parts,
                   std::vector<WeakComposition>& out) {
      if (pos + 1 == static_cast<int>(parts.size())) {
        parts[static_cast<std::size_t>(pos)] = rest;
        out.push_back(WeakComposition{parts});
        return;
      }
      for (int k = rest; k >= 0; --k) {
        parts[static_cast<std::size_t>(pos)] = k;
        go(rest - k, pos + 1, parts, out);
      }
    }
  };
  Rec::go(e, 0, parts, out);
  return out;
}

CommutingTuple CommutingTuple::make(GroupTag group, std::vector<PolyMatrix> matrices) {
  if (matrices.empty()) fail(ErrKind::domain, "commuting tuple needs d >= 1");
  const auto N = static_cast<std::size_t>(group.rep_dim());
  const VarContext& ctx = matrices.front().context();
  for (const auto& m : matrices) {
    if (m.rows() != N || m.cols() != N)
      fail(ErrKind::shape, "tuple matrix size does not match " + group.str());
    if (!same_context(m.context(), ctx))
      fail(ErrKind::context, "tuple matrices use different contexts");
    MembershipReport rep = lie_membership(group, m);
    if (!rep.member) {
      std::string msg = "tuple matrix not in the Lie algebra of " + group.str();
      for (const auto& [name, w] : rep.witnesses) msg += "; " + name + " = " + w.str();
      fail(ErrKind::membership, msg);
    }
  }
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    for (std::size_t j = i + 1; j < matrices.size(); ++j) {
      if (!bracket(matrices[i], matrices[j]).is_zero()) {
        std::ostringstream os;
        os << "bracket [theta^" << (i + 1) << ", theta^" << (j + 1)
           << "] does not vanish";
        fail(ErrKind::not_commuting, os.str());
      }
    }
  }
  return CommutingTuple(group, std::move(matrices));
}

const MultiPoly& SpectralDatum::at(int j, const std::vector<int>& comp) const {
  auto it = entries.find({j, comp});
  if (it == entries.end())
    fail(ErrKind::domain, "spectral datum has no such entry");
  return it->second;
}

namespace {

// Fresh b-symbols appended to the tuple's context, plus their indices.
struct BContext {
  VarContext extended;
  std::vector<std::size_t> b_indices;
  std::vector<std::string> b_names;
};

BContext extend_with_b(const VarContext& ctx, int d) {
  std::vector<std::string> names = ctx ? *ctx : std::vector<std::string>{};
  std::vector<std::string> b_names;
  for (int i = 1; i <= d; ++i) {
    std::string stem = "b" + std::to_string(i);
    std::string name = stem;
    auto taken = [&](const std::string& s) {
      return std::find(names.begin(), names.end(), s) != names.end();
    };
    while (taken(name)) name += "_";
    names.push_back(name);
    b_names.push_back(name);
  }
  BContext out;
  out.extended = make_context(std::move(names));
  out.b_names = std::move(b_names);
  for (const auto& n : out.b_names)
    out.b_indices.push_back(*context_index(out.extended, n));
  return out;
}

}  // namespace

SpectralDatum spectral_data(const CommutingTuple& tuple) {
  const GroupTag& g = tuple.group();
  const int d = tuple.d();
  BContext bc = extend_with_b(tuple.context(), d);

  // Theta = sum_i b_i theta^i over the extended context.
  const auto N = static_cast<std::size_t>(g.rep_dim());
  PolyMatrix theta(N, N, bc.extended);
  for (int i = 0; i < d; ++i) {
    MultiPoly bi = MultiPoly::variable(bc.extended, bc.b_indices[static_cast<std::size_t>(i)]);
    theta = theta + tuple.matrix(static_cast<std::size_t>(i)).lift(bc.extended).scaled(bi);
  }

  std::vector<MultiPoly> values = evaluate_invariants(g, theta);
  const auto sys = invariant_system(g);

  SpectralDatum out;
  out.group = g;
  out.d = d;
  for (std::size_t j = 0; j < values.size(); ++j) {
    const int e = sys.generators[j].degree;
    auto groups = values[j].split_by(bc.b_indices);
    for (const auto& comp : weak_compositions(e, d)) {
      ExpVec key(comp.parts.begin(), comp.parts.end());
      MultiPoly coeff(tuple.context());
      auto it = groups.find(key);
      if (it != groups.end()) coeff = it->second.restrict_to(tuple.context());
      out.entries.emplace(std::make_pair(static_cast<int>(j + 1), comp.parts),
                          std::move(coeff));
    }
    // Every term of c_j(Theta) is homogeneous of degree e_j in b, so the
    // extraction above is exhaustive.
    for (const auto& [key, val] : groups) {
      int tot = std::accumulate(key.begin(), key.end(), 0);
      if (tot != e && !val.is_zero())
        fail(ErrKind::construction, "polarization layer with unexpected b-degree");
    }
  }
  return out;
}

CommutingTuple gld_act(const PolyMatrix& x, const CommutingTuple& tuple) {
  const int d = tuple.d();
  if (x.rows() != static_cast<std::size_t>(d) || x.cols() != static_cast<std::size_t>(d))
    fail(ErrKind::shape, "action matrix must be d x d");
  if (det(x).is_zero()) fail(ErrKind::domain, "invalid action: singular matrix");
  VarContext ctx = merge_contexts(tuple.context(), x.context());
  const auto N = static_cast<std::size_t>(tuple.group().rep_dim());
  std::vector<PolyMatrix> out;
  for (int i = 0; i < d; ++i) {
    PolyMatrix acc(N, N, ctx);
    for (int j = 0; j < d; ++j) {
      const MultiPoly& xij = x.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (xij.is_zero()) continue;
      acc = acc + tuple.matrix(static_cast<std::size_t>(j)).lift(ctx).scaled(xij.lift(ctx));
    }
    out.push_back(std::move(acc));
  }
  return CommutingTuple::make(tuple.group(), std::move(out));
}

SpectralDatum spectral_coaction(const PolyMatrix& x, const SpectralDatum& datum) {
  const int d = datum.d;
  if (x.rows() != static_cast<std::size_t>(d) || x.cols() != static_cast<std::size_t>(d))
    fail(ErrKind::shape, "coaction matrix must be d x d");

  // Work over (datum context) + (x context) + fresh b's.
  VarContext base;
  for (const auto& [key, val] : datum.entries) {
    base = val.context();
    break;
  }
  VarContext merged = merge_contexts(base, x.context());
  BContext bc = extend_with_b(merged, d);

  // Column linear forms L_k = sum_p b_p x^p_k.
  std::vector<MultiPoly> column_form;
  for (int k = 0; k < d; ++k) {
    MultiPoly form(bc.extended);
    for (int p = 0; p < d; ++p) {
      MultiPoly bp = MultiPoly::variable(bc.extended, bc.b_indices[static_cast<std::size_t>(p)]);
      form += bp * x.at(static_cast<std::size_t>(p), static_cast<std::size_t>(k)).lift(bc.extended);
    }
    column_form.push_back(std::move(form));
  }

  const auto sys = invariant_system(datum.group);
  SpectralDatum out;
  out.group = datum.group;
  out.d = d;
  for (std::size_t j = 0; j < sys.generators.size(); ++j) {
    const int e = sys.generators[j].degree;
    // sum over l of prod_k L_k^{l_k} D(j, l), then re-expand in b.
    MultiPoly total(bc.extended);
    for (const auto& l : weak_compositions(e, d)) {
      MultiPoly prod = MultiPoly::constant(bc.extended, Rational(1));
      for (int k = 0; k < d; ++k)
        if (l.parts[static_cast<std::size_t>(k)] > 0)
          prod = prod * column_form[static_cast<std::size_t>(k)].pow(l.parts[static_cast<std::size_t>(k)]);
      total += prod * datum.at(static_cast<int>(j + 1), l.parts).lift(bc.extended);
    }
    auto groups = total.split_by(bc.b_indices);
    for (const auto& comp : weak_compositions(e, d)) {
      ExpVec key(comp.parts.begin(), comp.parts.end());
      MultiPoly coeff(merged);
      auto it = groups.find(key);
      if (it != groups.end()) coeff = it->second.restrict_to(merged);
      out.entries.emplace(std::make_pair(static_cast<int>(j + 1), comp.parts),
                          std::move(coeff));
    }
  }
  return out;
}

CheckReport equivariance_check(const PolyMatrix& x, const CommutingTuple& tuple) {
  SpectralDatum direct = spectral_data(gld_act(x, tuple));
  SpectralDatum coacted = spectral_coaction(x, spectral_data(tuple));
  CheckReport rep;
  for (const auto& [key, val] : direct.entries) {
    const MultiPoly& other = coacted.at(key.first, key.second);
    // Both live over possibly different-but-compatible contexts; compare in a
    // merged context.
    VarContext ctx = merge_contexts(val.context(), other.context());
    if (val.lift(ctx) != other.lift(ctx)) {
      rep.pass = false;
      std::ostringstream os;
      os << "equivariance fails at generator " << key.first << ", composition (";
      for (std::size_t i = 0; i < key.second.size(); ++i)
        os << (i ? "," : "") << key.second[i];
      os << ")";
      rep.detail = os.str();
      return rep;
    }
  }
  return rep;
}

std::vector<MultiPoly> diagonal_restriction(const SpectralDatum& datum) {
  if (datum.d != 2) fail(ErrKind::domain, "diagonal restriction needs d = 2");
  const auto sys = invariant_system(datum.group);
  std::vector<MultiPoly> out;
  for (std::size_t j = 0; j < sys.generators.size(); ++j) {
    MultiPoly sum;
    bool first = true;
    for (const auto& comp : weak_compositions(sys.generators[j].degree, 2)) {
      const MultiPoly& entry = datum.at(static_cast<int>(j + 1), comp.parts);
      if (first) {
        sum = entry;
        first = false;
      } else {
        sum += entry;
      }
    }
    out.push_back(std::move(sum));
  }
  return out;
}

}  // namespace hitchin
