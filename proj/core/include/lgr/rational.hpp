#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

#include "lgr/error.hpp"

namespace lgr {

// Arbitrary-precision rational. Always canonical: reduced, denominator > 0,
// zero stored as 0/1. Equality is therefore structural.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long num, long den);
  explicit Rational(mpz_class z) : v_(std::move(z)) {}
  explicit Rational(mpq_class q);

  // Accepts "a" or "a/b", optional leading '-', no whitespace.
  static Rational parse(const std::string& text);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  std::string str() const;

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
  mpq_class v_;
};

Rational pow(const Rational& base, unsigned exponent);
Rational inverse(const Rational& x);
inline bool is_unit(const Rational& x) { return !x.is_zero(); }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace lgr
