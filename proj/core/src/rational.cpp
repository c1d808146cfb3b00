#include "lgr/rational.hpp"

#include <cctype>
#include <ostream>

namespace lgr {

Rational::Rational(long num, long den) {
  if (den == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
  if (sgn(v_.get_den()) == 0)
    fail(ErrorKind::DivisionByZero, "rational with zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string& text) {
  // Strict shape check first: mpq_class::set_str is lenient about spaces.
  std::size_t i = 0;
  auto bad = [&]() {
    fail(ErrorKind::SyntaxError, "malformed rational '" + text + "'", i);
  };
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) bad();
  if (i < text.size()) {
    if (text[i] != '/') bad();
    ++i;
    digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++digits;
    }
    if (digits == 0 || i != text.size()) bad();
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0) bad();
  if (sgn(q.get_den()) == 0)
    fail(ErrorKind::ZeroDenominator, "zero denominator in '" + text + "'");
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  return v_.get_str();
}

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), exponent);
  return Rational(mpq_class(n, d));
}

Rational inverse(const Rational& x) {
  if (x.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  return Rational(1) / x;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace lgr
