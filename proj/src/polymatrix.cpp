/* SPDX-License-Identifier: Apache-2.0 */
#include "hitchin/polymatrix.hpp"

#include <algorithm>

namespace hitchin {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, VarContext ctx)
    : rows_(rows), cols_(cols), ctx_(std::move(ctx)) {
  if (rows_ == 0 || cols_ == 0) fail(ErrKind::shape, "matrix with zero dimension");
  entries_.assign(rows_ * cols_, MultiPoly(ctx_));
}

PolyMatrix PolyMatrix::identity(std::size_t n, const VarContext& ctx) {
  PolyMatrix m(n, n, ctx);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = MultiPoly::constant(ctx, Rational(1));
  return m;
}

PolyMatrix PolyMatrix::from_rationals(const VarContext& ctx,
                                      const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty() || rows[0].empty()) fail(ErrKind::shape, "empty matrix literal");
  PolyMatrix m(rows.size(), rows[0].size(), ctx);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size())
      fail(ErrKind::shape, "ragged matrix literal");
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      m.at(r, c) = MultiPoly::constant(ctx, rows[r][c]);
  }
  return m;
}

PolyMatrix PolyMatrix::from_entries(std::size_t rows, std::size_t cols,
                                    std::vector<MultiPoly> entries) {
  if (entries.size() != rows * cols)
    fail(ErrKind::shape, "entry count does not match matrix shape");
  PolyMatrix m(rows, cols, entries[0].context());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!same_context(entries[i].context(), m.ctx_))
      fail(ErrKind::context, "matrix entries use different contexts");
    m.entries_[i] = std::move(entries[i]);
  }
  return m;
}

const MultiPoly& PolyMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) fail(ErrKind::shape, "matrix index out of range");
  return entries_[r * cols_ + c];
}

MultiPoly& PolyMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) fail(ErrKind::shape, "matrix index out of range");
  return entries_[r * cols_ + c];
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const MultiPoly& p) { return p.is_zero(); });
}

bool PolyMatrix::is_constant() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const MultiPoly& p) { return p.is_constant(); });
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

static void check_same_shape(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrKind::shape, "matrix shape mismatch");
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  check_same_shape(a, b);
  PolyMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) += b.at(r, c);
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  check_same_shape(a, b);
  PolyMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) -= b.at(r, c);
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrKind::shape, "matrix product shape mismatch");
  PolyMatrix out(a.rows(), b.cols(), a.ctx_);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const MultiPoly& ark = a.at(r, k);
      if (ark.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        const MultiPoly& bkc = b.at(k, c);
        if (bkc.is_zero()) continue;
        out.at(r, c) += ark * bkc;
      }
    }
  }
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return a.entries_ == b.entries_;
}

PolyMatrix PolyMatrix::scaled(const MultiPoly& c) const {
  PolyMatrix out = *this;
  for (auto& e : out.entries_) e = e * c;
  return out;
}

PolyMatrix PolyMatrix::scaled(const Rational& c) const {
  PolyMatrix out = *this;
  for (auto& e : out.entries_) e = e.scaled(c);
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(cols_, rows_, ctx_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

MultiPoly PolyMatrix::trace() const {
  if (!is_square()) fail(ErrKind::shape, "trace of non-square matrix");
  MultiPoly t(ctx_);
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

PolyMatrix PolyMatrix::lift(const VarContext& target) const {
  PolyMatrix out(rows_, cols_, target);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i].lift(target);
  return out;
}

PolyMatrix PolyMatrix::eval(const std::map<std::string, MultiPoly>& assignment) const {
  std::vector<MultiPoly> entries;
  entries.reserve(entries_.size());
  for (const auto& e : entries_) entries.push_back(e.eval(assignment));
  return from_entries(rows_, cols_, std::move(entries));
}

PolyMatrix PolyMatrix::submatrix_without(std::size_t row, std::size_t col) const {
  if (rows_ < 2 || cols_ < 2) fail(ErrKind::shape, "submatrix of tiny matrix");
  PolyMatrix out(rows_ - 1, cols_ - 1, ctx_);
  for (std::size_t r = 0, ro = 0; r < rows_; ++r) {
    if (r == row) continue;
    for (std::size_t c = 0, co = 0; c < cols_; ++c) {
      if (c == col) continue;
      out.at(ro, co) = at(r, c);
      ++co;
    }
    ++ro;
  }
  return out;
}

std::vector<MultiPoly> char_poly(const PolyMatrix& m) {
  if (!m.is_square()) fail(ErrKind::shape, "char_poly of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<MultiPoly> coeffs;
  coeffs.reserve(n);
  PolyMatrix mk = m;
  for (std::size_t k = 1; k <= n; ++k) {
    MultiPoly ck = mk.trace().scaled(Rational(-1, static_cast<long>(k)));
    coeffs.push_back(ck);
    if (k == n) break;
    PolyMatrix shifted = mk;
    for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += ck;
    mk = m * shifted;
  }
  return coeffs;
}

MultiPoly det(const PolyMatrix& m) {
  if (!m.is_square()) fail(ErrKind::shape, "det of non-square matrix");
  const std::size_t n = m.rows();
  const VarContext& ctx = m.context();
  if (n == 1) return m.at(0, 0);
  // Bareiss fraction-free elimination with row pivoting.
  std::vector<std::vector<MultiPoly>> a(n, std::vector<MultiPoly>(n, MultiPoly(ctx)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m.at(r, c);
  MultiPoly prev = MultiPoly::constant(ctx, Rational(1));
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return MultiPoly(ctx);  // singular
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = divide_exact(num, prev);
      }
      a[i][k] = MultiPoly(ctx);
    }
    prev = a[k][k];
  }
  MultiPoly d = a[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

PolyMatrix inverse_constant(const PolyMatrix& m) {
  if (!m.is_square()) fail(ErrKind::shape, "inverse of non-square matrix");
  if (!m.is_constant()) fail(ErrKind::domain, "inverse_constant needs rational entries");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m.at(r, c).constant_value();
    a[r][n + r] = Rational(1);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k].is_zero()) ++p;
    if (p == n) fail(ErrKind::domain, "singular matrix has no inverse");
    std::swap(a[k], a[p]);
    Rational inv = Rational(1) / a[k][k];
    for (std::size_t c = 0; c < 2 * n; ++c) a[k][c] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || a[r][k].is_zero()) continue;
      Rational f = a[r][k];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[k][c];
    }
  }
  PolyMatrix out(n, n, m.context());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      out.at(r, c) = MultiPoly::constant(m.context(), a[r][n + c]);
  return out;
}

PolyMatrix bracket(const PolyMatrix& a, const PolyMatrix& b) {
  return a * b - b * a;
}

}  // namespace hitchin
