/* SPDX-License-Identifier: Apache-2.0 */
#ifndef HITCHIN_POLYMATRIX_HPP
#define HITCHIN_POLYMATRIX_HPP

#include <initializer_list>
#include <vector>

#include "hitchin/multipoly.hpp"

namespace hitchin {

// Matrix of polynomials over a shared variable context, row-major.
class PolyMatrix {
 public:
  PolyMatrix() : rows_(0), cols_(0) {}
  PolyMatrix(std::size_t rows, std::size_t cols, VarContext ctx);

  static PolyMatrix identity(std::size_t n, const VarContext& ctx);
  // Builds a constant matrix from rationals.
  static PolyMatrix from_rationals(const VarContext& ctx,
                                   const std::vector<std::vector<Rational>>& rows);
  static PolyMatrix from_entries(std::size_t rows, std::size_t cols,
                                 std::vector<MultiPoly> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const VarContext& context() const { return ctx_; }

  const MultiPoly& at(std::size_t r, std::size_t c) const;
  MultiPoly& at(std::size_t r, std::size_t c);

  bool is_zero() const;
  bool is_constant() const;

  PolyMatrix operator-() const;
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

  PolyMatrix scaled(const MultiPoly& c) const;
  PolyMatrix scaled(const Rational& c) const;
  PolyMatrix transpose() const;
  MultiPoly trace() const;
  PolyMatrix lift(const VarContext& target) const;
  PolyMatrix eval(const std::map<std::string, MultiPoly>& assignment) const;
  PolyMatrix submatrix_without(std::size_t row, std::size_t col) const;

 private:
  std::size_t rows_, cols_;
  VarContext ctx_;
  std::vector<MultiPoly> entries_;
};

// Coefficients [a_1, ..., a_N] with det(x Id - M) = x^N + a_1 x^{N-1} + ... + a_N.
// a_1 = -tr(M), a_N = (-1)^N det(M).  Faddeev-LeVerrier; divisions are by
// integer scalars only, so everything stays exact.
std::vector<MultiPoly> char_poly(const PolyMatrix& m);

// Fraction-free (Bareiss) determinant.
MultiPoly det(const PolyMatrix& m);

// Exact inverse of a constant (rational-entry) square matrix.
PolyMatrix inverse_constant(const PolyMatrix& m);

// Bracket [a, b] = ab - ba.
PolyMatrix bracket(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace hitchin

#endif
