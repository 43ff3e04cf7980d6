/* SPDX-License-Identifier: Apache-2.0 */
#ifndef HITCHIN_POLARIZATION_HPP
#define HITCHIN_POLARIZATION_HPP

#include <map>
#include <utility>

#include "hitchin/invariants.hpp"

namespace hitchin {

// Ordered tuple of non-negative integers with a prescribed sum.
struct WeakComposition {
  std::vector<int> parts;
  int total() const;
  friend bool operator==(const WeakComposition& a, const WeakComposition& b) {
    return a.parts == b.parts;
  }
  friend bool operator<(const WeakComposition& a, const WeakComposition& b) {
    return a.parts < b.parts;
  }
};

// All C(e+d-1, d-1) weak compositions of e of length d, first part
// descending: (e,0,...), ..., (0,...,0,e).
std::vector<WeakComposition> weak_compositions(int e, int d);

// d square matrices over one context with pairwise-vanishing brackets, each
// in the Lie algebra of the group.
class CommutingTuple {
 public:
  static CommutingTuple make(GroupTag group, std::vector<PolyMatrix> matrices);

  const GroupTag& group() const { return group_; }
  int d() const { return static_cast<int>(matrices_.size()); }
  const std::vector<PolyMatrix>& matrices() const { return matrices_; }
  const PolyMatrix& matrix(std::size_t i) const { return matrices_.at(i); }
  const VarContext& context() const { return matrices_.front().context(); }

 private:
  CommutingTuple(GroupTag g, std::vector<PolyMatrix> m)
      : group_(g), matrices_(std::move(m)) {}
  GroupTag group_;
  std::vector<PolyMatrix> matrices_;
};

// Values of the polarizations c_{j,i}: entry (j, i) is the coefficient of
// b^i in c_j(b_1 theta^1 + ... + b_d theta^d).  Keys run over exactly the
// weak compositions of e_j of length d, for each generator j (1-based).
struct SpectralDatum {
  GroupTag group;
  int d = 0;
  std::map<std::pair<int, std::vector<int>>, MultiPoly> entries;

  const MultiPoly& at(int j, const std::vector<int>& comp) const;
};

SpectralDatum spectral_data(const CommutingTuple& tuple);

// The GL_d action (x^i_j) . (theta^1, ..., theta^d) = (x^i_j theta^j)_i.
// x must be square of size d with nonzero determinant; rational entries are
// the geometric case, polynomial entries are accepted for coaction checks.
CommutingTuple gld_act(const PolyMatrix& x, const CommutingTuple& tuple);

// Pushes a datum through the coaction of x: entry (m, i) of the result is
// the coefficient of b^i in sum_l prod_k (sum_p b_p x^p_k)^{l_k} D(m, l).
SpectralDatum spectral_coaction(const PolyMatrix& x, const SpectralDatum& datum);

struct CheckReport {
  bool pass = true;
  std::string detail;
};

// spectral_data(gld_act(x, T)) must match spectral_coaction(x, spectral_data(T)).
CheckReport equivariance_check(const PolyMatrix& x, const CommutingTuple& tuple);

// For d = 2: per generator j the sum of all entries, i.e. the value of c_j
// on theta^1 + theta^2.
std::vector<MultiPoly> diagonal_restriction(const SpectralDatum& datum);

}  // namespace hitchin

#endif
