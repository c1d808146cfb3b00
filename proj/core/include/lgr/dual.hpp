#pragma once

#include "lgr/rational.hpp"

namespace lgr {

// First-order jet a + b*eps with eps^2 = 0. Running a computation on lifted
// inputs yields the exact value together with the exact directional derivative,
// with no truncation error: the ring multiplication is the product rule.
class DualRational {
public:
  DualRational() = default;
  DualRational(Rational value) : value_(std::move(value)) {}
  DualRational(int value) : value_(value) {}
  DualRational(Rational value, Rational slope)
      : value_(std::move(value)), slope_(std::move(slope)) {}

  const Rational& value() const { return value_; }
  const Rational& slope() const { return slope_; }
  bool is_zero() const { return value_.is_zero() && slope_.is_zero(); }

  DualRational operator-() const { return {-value_, -slope_}; }
  DualRational& operator+=(const DualRational& o) {
    value_ += o.value_;
    slope_ += o.slope_;
    return *this;
  }
  DualRational& operator-=(const DualRational& o) {
    value_ -= o.value_;
    slope_ -= o.slope_;
    return *this;
  }
  DualRational& operator*=(const DualRational& o) {
    slope_ = value_ * o.slope_ + slope_ * o.value_;
    value_ *= o.value_;
    return *this;
  }
  // (a+b eps)/(c+d eps) = a/c + (bc - ad)/c^2 eps, requires c != 0.
  DualRational& operator/=(const DualRational& o) {
    if (o.value_.is_zero())
      fail(ErrorKind::DivisionByZero, "dual divisor has zero value part");
    slope_ = (slope_ * o.value_ - value_ * o.slope_) / (o.value_ * o.value_);
    value_ /= o.value_;
    return *this;
  }

  friend DualRational operator+(DualRational a, const DualRational& b) { return a += b; }
  friend DualRational operator-(DualRational a, const DualRational& b) { return a -= b; }
  friend DualRational operator*(DualRational a, const DualRational& b) { return a *= b; }
  friend DualRational operator/(DualRational a, const DualRational& b) { return a /= b; }
  friend bool operator==(const DualRational& a, const DualRational& b) {
    return a.value_ == b.value_ && a.slope_ == b.slope_;
  }
  friend bool operator!=(const DualRational& a, const DualRational& b) { return !(a == b); }

private:
  Rational value_;
  Rational slope_;
};

// Lifts x with the given derivative seed; dual_lift(x, 1) is "the variable at x".
inline DualRational dual_lift(const Rational& x, const Rational& seed) {
  return {x, seed};
}

inline DualRational pow(const DualRational& base, unsigned exponent) {
  DualRational acc(Rational(1));
  for (unsigned k = 0; k < exponent; ++k) acc *= base;
  return acc;
}

inline DualRational inverse(const DualRational& x) {
  return DualRational(Rational(1)) / x;
}

inline bool is_unit(const DualRational& x) { return !x.value().is_zero(); }

}  // namespace lgr
