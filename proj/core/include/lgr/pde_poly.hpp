#pragma once

#include <map>
#include <string>
#include <vector>

#include "lgr/dual.hpp"
#include "lgr/grassmann.hpp"
#include "lgr/matrix.hpp"

namespace lgr {

// Hard cap on total degree; products beyond it raise LimitsExceeded.
inline constexpr int kDegreeCap = 12;

// Dense univariate polynomial in t, used for line restrictions.
class UniPoly {
public:
  UniPoly() = default;
  UniPoly(Rational constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
  }
  UniPoly(int constant) : UniPoly(Rational(constant)) {}
  static UniPoly t() { return from_coeffs({Rational(0), Rational(1)}); }
  static UniPoly from_coeffs(std::vector<Rational> c);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Rational coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
  }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational eval_at(const Rational& t0) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
  void trim();
  std::vector<Rational> c_;  // c_[k] is the t^k coefficient; no trailing zeros
};

// Exponent vector over a flattened variable grid; ordered graded-lex with the
// highest degree first so map iteration matches canonical printing.
struct Monomial {
  std::vector<int> exps;

  int degree() const {
    int s = 0;
    for (int e : exps) s += e;
    return s;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exps > b.exps;
  }
};

// Polynomial in the big-cell derivative coordinates. Internally it lives on
// the full n x n grid of formally independent variables q_ij; the user-facing
// variable p_ij (i <= j) enters as q_ii or (q_ij + q_ji)/2, which keeps every
// polynomial invariant under q_ij <-> q_ji and makes symbols symmetric.
class PdePolynomial {
public:
  explicit PdePolynomial(int n);
  static PdePolynomial constant(int n, const Rational& c);
  // The canonical image of p_ij; requires 1 <= i <= j <= n.
  static PdePolynomial p_var(int n, int i, int j);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  PdePolynomial operator-() const;
  PdePolynomial& operator+=(const PdePolynomial& o);
  PdePolynomial& operator-=(const PdePolynomial& o);
  PdePolynomial& operator*=(const PdePolynomial& o);
  PdePolynomial& operator*=(const Rational& s);
  friend PdePolynomial operator+(PdePolynomial a, const PdePolynomial& b) { return a += b; }
  friend PdePolynomial operator-(PdePolynomial a, const PdePolynomial& b) { return a -= b; }
  friend PdePolynomial operator*(PdePolynomial a, const PdePolynomial& b) { return a *= b; }
  friend PdePolynomial operator*(const Rational& s, PdePolynomial a) { return a *= s; }
  friend bool operator==(const PdePolynomial&, const PdePolynomial&) = default;

  // Substitutes q_ij := grid(i,j) over any exact ring.
  template <class T>
  T eval_ring(const MatrixT<T>& grid) const {
    if (grid.rows() != n_ || grid.cols() != n_)
      fail(ErrorKind::DimensionMismatch, "evaluation grid size does not match");
    T sum = T();
    for (const auto& [mono, coeff] : terms_) {
      T prod = T(coeff);
      for (int v = 0; v < n_ * n_; ++v) {
        const T& x = grid.at(v / n_, v % n_);
        for (int e = 0; e < mono.exps[v]; ++e) prod = prod * x;
      }
      sum += prod;
    }
    return sum;
  }

  // Low-level accumulate; callers are responsible for keeping q-symmetry.
  void add_term(Monomial m, Rational c);

private:
  int n_;
  std::map<Monomial, Rational> terms_;
};

// d/dq_ij with 1-based indices, each running over 1..n independently.
PdePolynomial diff(const PdePolynomial& f, int i, int j);

Rational eval(const PdePolynomial& f, const SymMatrix& h);

// Evaluation over dual numbers: value plus exact directional derivative.
DualRational eval_dual(const PdePolynomial& f, const MatrixT<DualRational>& grid);

// t -> f(h + t a a^t); ZeroCovector when a = 0.
UniPoly restrict_line(const PdePolynomial& f, const SymMatrix& h,
                      const std::vector<Rational>& a);

PdePolynomial pow(const PdePolynomial& f, int k);

// Composition q_ij := grid[i][j]; all entries must share one target grid.
// Feeding canonical entries (built from p_var) keeps the result canonical.
PdePolynomial substituted(const PdePolynomial& f,
                          const std::vector<std::vector<PdePolynomial>>& grid);

// Determinant of a square array of polynomials by Leibniz expansion.
PdePolynomial det_of(const std::vector<std::vector<PdePolynomial>>& a);

// minor(p; I, J) as a polynomial; subsets follow the Pluecker conventions.
PdePolynomial minor_poly(int n, const std::vector<int>& I, const std::vector<int>& J);

PdePolynomial det_poly(int n);

// Canonical text form in p-variables: graded-lex term order, explicit * and ^.
std::string to_string(const PdePolynomial& f);

}  // namespace lgr
