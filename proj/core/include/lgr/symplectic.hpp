#pragma once

#include <vector>

#include "lgr/grassmann.hpp"
#include "lgr/matrix.hpp"

namespace lgr {

// The 2n x 2n matrix of omega = eps^i ^ e_i on V + V*: blocks ((0,-Id),(Id,0)).
Matrix standard_symplectic_matrix(int n);

// Exact test of M^t I M = I for an even-sized square matrix.
bool is_symplectic(const Matrix& m);

// omega(v, w) = v^t I w for coordinate vectors of length 2n.
Rational omega_eval(const std::vector<Rational>& v, const std::vector<Rational>& w);

// Validating wrapper for a symplectic transformation in block form (A,B;C,D).
class SymplecticMatrix {
public:
  SymplecticMatrix(Matrix a, Matrix b, Matrix c, Matrix d);

  static SymplecticMatrix identity(int n);
  // Block-diagonal (D^-1, 0; 0, D^t); acts on the big cell by h -> D^t h D.
  static SymplecticMatrix gl(const Matrix& d);
  // Lower-unipotent (1, 0; C, 1); acts by h -> h + C.
  static SymplecticMatrix translate(const Matrix& c);
  // Upper-unipotent (1, B; 0, 1); acts by h -> h (1 + B h)^-1.
  static SymplecticMatrix shear(const Matrix& b);

  int n() const { return a_.rows(); }
  const Matrix& A() const { return a_; }
  const Matrix& B() const { return b_; }
  const Matrix& C() const { return c_; }
  const Matrix& D() const { return d_; }
  Matrix assemble() const;

  friend SymplecticMatrix operator*(const SymplecticMatrix& l, const SymplecticMatrix& r);
  friend bool operator==(const SymplecticMatrix&, const SymplecticMatrix&) = default;

private:
  Matrix a_, b_, c_, d_;
};

// Element of the symplectic algebra, assembled as (-Ddot^t, Bdot; Cdot, Ddot).
class SpAlgebraElement {
public:
  SpAlgebraElement(Matrix bdot, Matrix cdot, Matrix ddot);

  int n() const { return bdot_.rows(); }
  const Matrix& Bdot() const { return bdot_; }
  const Matrix& Cdot() const { return cdot_; }
  const Matrix& Ddot() const { return ddot_; }
  Matrix assemble() const;

  friend bool operator==(const SpAlgebraElement&, const SpAlgebraElement&) = default;

private:
  Matrix bdot_, cdot_, ddot_;
};

// Fractional-linear action (C + D h)(A + B h)^-1 on the big cell. The image of
// a symplectic matrix is symmetric; this is asserted, never symmetrized.
SymMatrix action(const SymplecticMatrix& m, const SymMatrix& h);

// Cdot + Ddot h + h Ddot^t - h Bdot h, the derivative of the action at t = 0.
SymMatrix infinitesimal_action(const SpAlgebraElement& x, const SymMatrix& h);

// The raw chart formula over any exact field: splits the 2n x 2n matrix into
// blocks and returns (C + D h)(A + B h)^-1. No symplectic or symmetry checks,
// so it also serves counterexample searches and dual-number differentiation.
template <class T>
MatrixT<T> fractional_linear_image(const MatrixT<T>& m, const MatrixT<T>& h) {
  if (!m.is_square() || m.rows() % 2 != 0)
    fail(ErrorKind::BadShape, "transformation matrix must be 2n x 2n");
  const int n = m.rows() / 2;
  if (h.rows() != n || h.cols() != n)
    fail(ErrorKind::DimensionMismatch, "chart point size does not match");
  MatrixT<T> denom(n, n), numer(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      T s = m.at(i, j);
      T t = m.at(n + i, j);
      for (int k = 0; k < n; ++k) {
        s += m.at(i, n + k) * h.at(k, j);
        t += m.at(n + i, n + k) * h.at(k, j);
      }
      denom.at(i, j) = std::move(s);
      numer.at(i, j) = std::move(t);
    }
  return numer * inverse_t(denom);
}

}  // namespace lgr
