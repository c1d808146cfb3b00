#include "lgr/symplectic.hpp"

namespace lgr {

Matrix standard_symplectic_matrix(int n) {
  if (n < 1) fail(ErrorKind::WrongDimension, "symplectic form needs n >= 1");
  Matrix form(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    form.at(i, n + i) = Rational(-1);
    form.at(n + i, i) = Rational(1);
  }
  return form;
}

bool is_symplectic(const Matrix& m) {
  if (!m.is_square() || m.rows() % 2 != 0 || m.rows() == 0)
    fail(ErrorKind::BadShape, "symplectic test needs a 2n x 2n matrix");
  const Matrix form = standard_symplectic_matrix(m.rows() / 2);
  return m.transpose() * form * m == form;
}

Rational omega_eval(const std::vector<Rational>& v, const std::vector<Rational>& w) {
  if (v.size() != w.size() || v.size() % 2 != 0 || v.empty())
    fail(ErrorKind::BadShape, "omega takes two vectors of equal even length");
  const std::size_t n = v.size() / 2;
  Rational sum(0);
  for (std::size_t i = 0; i < n; ++i) sum += v[n + i] * w[i] - v[i] * w[n + i];
  return sum;
}

namespace {

void require_block(const Matrix& m, int n, const char* what) {
  if (m.rows() != n || m.cols() != n)
    fail(ErrorKind::BadShape, std::string("block ") + what + " must be n x n");
}

}  // namespace

SymplecticMatrix::SymplecticMatrix(Matrix a, Matrix b, Matrix c, Matrix d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (!a_.is_square() || a_.rows() < 1)
    fail(ErrorKind::BadShape, "block A must be n x n");
  const int n = a_.rows();
  require_block(b_, n, "B");
  require_block(c_, n, "C");
  require_block(d_, n, "D");
  if (!is_symplectic(assemble()))
    fail(ErrorKind::NotSymplectic, "blocks do not satisfy M^t I M = I");
}

SymplecticMatrix SymplecticMatrix::identity(int n) {
  Matrix id = Matrix::identity(n);
  Matrix zero(n, n);
  return SymplecticMatrix(id, zero, zero, id);
}

SymplecticMatrix SymplecticMatrix::gl(const Matrix& d) {
  if (!d.is_square() || d.rows() < 1) fail(ErrorKind::BadShape, "gl block must be n x n");
  Matrix zero(d.rows(), d.rows());
  // inverse() raises NotInvertible exactly when d is singular.
  return SymplecticMatrix(inverse(d), zero, zero, d.transpose());
}

SymplecticMatrix SymplecticMatrix::translate(const Matrix& c) {
  if (!c.is_symmetric()) fail(ErrorKind::NotSymmetric, "translation block must be symmetric");
  Matrix id = Matrix::identity(c.rows());
  Matrix zero(c.rows(), c.rows());
  return SymplecticMatrix(id, zero, c, id);
}

SymplecticMatrix SymplecticMatrix::shear(const Matrix& b) {
  if (!b.is_symmetric()) fail(ErrorKind::NotSymmetric, "shear block must be symmetric");
  Matrix id = Matrix::identity(b.rows());
  Matrix zero(b.rows(), b.rows());
  return SymplecticMatrix(id, b, zero, id);
}

Matrix SymplecticMatrix::assemble() const {
  const int n = a_.rows();
  Matrix m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m.at(i, j) = a_.at(i, j);
      m.at(i, n + j) = b_.at(i, j);
      m.at(n + i, j) = c_.at(i, j);
      m.at(n + i, n + j) = d_.at(i, j);
    }
  return m;
}

SymplecticMatrix operator*(const SymplecticMatrix& l, const SymplecticMatrix& r) {
  if (l.n() != r.n()) fail(ErrorKind::DimensionMismatch, "symplectic product size mismatch");
  return SymplecticMatrix(l.a_ * r.a_ + l.b_ * r.c_, l.a_ * r.b_ + l.b_ * r.d_,
                          l.c_ * r.a_ + l.d_ * r.c_, l.c_ * r.b_ + l.d_ * r.d_);
}

SpAlgebraElement::SpAlgebraElement(Matrix bdot, Matrix cdot, Matrix ddot)
    : bdot_(std::move(bdot)), cdot_(std::move(cdot)), ddot_(std::move(ddot)) {
  if (!bdot_.is_square() || bdot_.rows() < 1)
    fail(ErrorKind::BadShape, "block Bdot must be n x n");
  const int n = bdot_.rows();
  require_block(cdot_, n, "Cdot");
  require_block(ddot_, n, "Ddot");
  if (!bdot_.is_symmetric()) fail(ErrorKind::NotSymmetric, "Bdot must be symmetric");
  if (!cdot_.is_symmetric()) fail(ErrorKind::NotSymmetric, "Cdot must be symmetric");
}

Matrix SpAlgebraElement::assemble() const {
  const int n = bdot_.rows();
  Matrix m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m.at(i, j) = -ddot_.at(j, i);
      m.at(i, n + j) = bdot_.at(i, j);
      m.at(n + i, j) = cdot_.at(i, j);
      m.at(n + i, n + j) = ddot_.at(i, j);
    }
  return m;
}

SymMatrix action(const SymplecticMatrix& m, const SymMatrix& h) {
  if (m.n() != h.n()) fail(ErrorKind::DimensionMismatch, "action size mismatch");
  const Matrix hm = h.to_matrix();
  const Matrix denom = m.A() + m.B() * hm;
  if (det(denom).is_zero())
    fail(ErrorKind::LeavesBigCell, "image point is at infinity: det(A + B h) = 0");
  const Matrix image = (m.C() + m.D() * hm) * inverse(denom);
  // from_matrix rejects a non-symmetric image; unreachable for symplectic m.
  return SymMatrix::from_matrix(image);
}

SymMatrix infinitesimal_action(const SpAlgebraElement& x, const SymMatrix& h) {
  if (x.n() != h.n())
    fail(ErrorKind::DimensionMismatch, "infinitesimal action size mismatch");
  const Matrix hm = h.to_matrix();
  const Matrix image = x.Cdot() + x.Ddot() * hm + hm * x.Ddot().transpose() -
                       hm * x.Bdot() * hm;
  return SymMatrix::from_matrix(image);
}

}  // namespace lgr
