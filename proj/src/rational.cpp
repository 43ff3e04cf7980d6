/* SPDX-License-Identifier: Apache-2.0 */
#include "hitchin/rational.hpp"

#include <cctype>
#include <ostream>

namespace hitchin {

Rational::Rational(long n, long d) {
  if (d == 0) fail(ErrKind::domain, "rational with zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (sgn(d) == 0) fail(ErrKind::domain, "rational with zero denominator");
  q_ = mpq_class(n) / mpq_class(d);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrKind::domain, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) fail(ErrKind::domain, "negative power of zero");
    return Rational(0);
  }
  mpq_class base = e > 0 ? q_ : mpq_class(1 / q_);
  unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
  mpq_class out(num, den);
  out.canonicalize();
  return Rational(out);
}

Rational Rational::parse(const std::string& s) {
  auto bad = [&]() { fail(ErrKind::parse, "malformed rational '" + s + "'"); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  auto check_int = [&](const std::string& part) {
    if (part.empty()) bad();
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) bad();
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) bad();
  };
  if (slash == std::string::npos) {
    check_int(s);
    return Rational(mpq_class(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  mpz_class d(den);
  if (sgn(d) == 0) fail(ErrKind::parse, "zero denominator in '" + s + "'");
  return Rational(mpz_class(num), d);
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace hitchin
