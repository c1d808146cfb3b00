#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "lgr/error.hpp"
#include "lgr/rational.hpp"

// glibc historically leaks a minor() macro via <sys/sysmacros.h>.
#ifdef minor
#undef minor
#endif

namespace lgr {

// Dense row-major matrix over an exact scalar ring. The T = Rational instance
// is the library workhorse; T = DualRational reuses the same arithmetic for
// exact first-order derivative checks.
template <class T>
class MatrixT {
public:
  MatrixT() : rows_(0), cols_(0) {}
  MatrixT(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) fail(ErrorKind::BadShape, "negative matrix dimension");
    a_.assign(static_cast<std::size_t>(rows) * cols, T());
  }
  MatrixT(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_)
        fail(ErrorKind::BadShape, "ragged initializer rows");
      for (const auto& x : r) a_.push_back(x);
    }
  }

  static MatrixT identity(int n) {
    MatrixT m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  MatrixT transpose() const {
    MatrixT m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  MatrixT operator-() const {
    MatrixT m(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
    return m;
  }

  MatrixT& operator+=(const MatrixT& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  MatrixT& operator-=(const MatrixT& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  friend MatrixT operator+(MatrixT a, const MatrixT& b) { return a += b; }
  friend MatrixT operator-(MatrixT a, const MatrixT& b) { return a -= b; }

  friend MatrixT operator*(const MatrixT& a, const MatrixT& b) {
    if (a.cols_ != b.rows_)
      fail(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    MatrixT m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a.at(i, k);
        if (aik == T()) continue;
        for (int j = 0; j < b.cols_; ++j) m.at(i, j) += aik * b.at(k, j);
      }
    return m;
  }
  friend MatrixT operator*(const T& s, MatrixT m) {
    for (auto& x : m.a_) x = s * x;
    return m;
  }

  friend bool operator==(const MatrixT& a, const MatrixT& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const MatrixT& a, const MatrixT& b) { return !(a == b); }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!(x == T())) return false;
    return true;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if (!(at(i, j) == at(j, i))) return false;
    return true;
  }

private:
  void require_same_shape(const MatrixT& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      fail(ErrorKind::DimensionMismatch, "matrix shape mismatch");
  }

  int rows_, cols_;
  std::vector<T> a_;
};

using Matrix = MatrixT<Rational>;

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Exact determinant by fraction-free two-step Bareiss elimination on the
// denominator-cleared integer matrix.
Rational det(const Matrix& m);

// Determinant of the submatrix with 1-based row subset I and column subset J,
// both strictly increasing; minor(m, {}, {}) = 1. Orders <= 2 use closed forms.
Rational minor(const Matrix& m, const std::vector<int>& I, const std::vector<int>& J);

// Satisfies m * adjugate(m) = det(m) * identity, including singular m.
Matrix adjugate(const Matrix& m);

// Sylvester inertia of a symmetric matrix via exact congruence diagonalization.
Signature signature(const Matrix& s);

// Canonical right-kernel basis (one vector per free column of the RREF, free
// coordinate set to 1); empty iff full column rank.
std::vector<std::vector<Rational>> kernel_basis(const Matrix& m);

int rank(const Matrix& m);

Matrix inverse(const Matrix& m);

// Solves a.x = b choosing pivots in ascending column order and zeroing every
// free variable; nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve_canonical(const Matrix& a,
                                                     const std::vector<Rational>& b);

// Gauss-Jordan inverse over any exact ring with unit test is_unit(T); pivots
// must have invertible entries (always true over a field).
template <class T>
MatrixT<T> inverse_t(const MatrixT<T>& m) {
  if (!m.is_square()) fail(ErrorKind::NotSquare, "inverse of non-square matrix");
  const int n = m.rows();
  MatrixT<T> a = m;
  MatrixT<T> inv = MatrixT<T>::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (is_unit(a.at(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) fail(ErrorKind::NotInvertible, "matrix is not invertible");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    T p = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) = a.at(col, j) / p;
      inv.at(col, j) = inv.at(col, j) / p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      T f = a.at(r, col);
      if (f == T()) continue;
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

}  // namespace lgr
