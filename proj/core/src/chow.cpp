#include "lgr/chow.hpp"

#include <algorithm>

#include "lgr/pde_analysis.hpp"
#include "lgr/symplectic.hpp"

namespace lgr {

ChowSubspace::ChowSubspace(Matrix d) : d_(std::move(d)) {
  if (!d_.is_square() || d_.rows() < 1)
    fail(ErrorKind::BadShape, "subspace representative must be n x n");
}

PdePolynomial chow_transform(const ChowSubspace& dsub, int max_n) {
  const int n = dsub.n();
  if (n > max_n)
    fail(ErrorKind::LimitsExceeded,
         "chow_transform limited to n <= " + std::to_string(max_n));
  std::vector<std::vector<PdePolynomial>> table(
      n, std::vector<PdePolynomial>(n, PdePolynomial(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[i][j] = PdePolynomial::p_var(n, std::min(i, j) + 1, std::max(i, j) + 1) -
                    PdePolynomial::constant(n, dsub.D().at(i, j));
  return det_of(table);
}

ChowSubspace chow_orthogonal(const ChowSubspace& dsub) {
  const int n = dsub.n();
  // Columns of (Id; D) paired against every coordinate direction under omega.
  Matrix basis(2 * n, n);
  for (int j = 0; j < n; ++j) {
    basis.at(j, j) = Rational(1);
    for (int i = 0; i < n; ++i) basis.at(n + i, j) = dsub.D().at(i, j);
  }
  Matrix pairing = basis.transpose() * standard_symplectic_matrix(n);
  auto kernel = kernel_basis(pairing);
  // The pairing matrix has full rank n, so the kernel has dimension n.
  Matrix top(n, n), bottom(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      top.at(i, j) = kernel[j][i];
      bottom.at(i, j) = kernel[j][n + i];
    }
  if (det(top).is_zero())
    fail(ErrorKind::OrthogonalNotInBigCell,
         "orthogonal subspace has no graph representative");
  return ChowSubspace(bottom * inverse(top));
}

namespace {

// Equality of hypersurfaces: proportional by a nonzero rational.
bool proportional(const PdePolynomial& f, const PdePolynomial& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  const auto& [mf, cf] = *f.terms().begin();
  const auto& [mg, cg] = *g.terms().begin();
  if (!(mf == mg)) return false;
  PdePolynomial scaled = g;
  scaled *= cf / cg;
  return f == scaled;
}

}  // namespace

bool chow_invariance_check(const ChowSubspace& dsub) {
  return proportional(chow_transform(dsub), chow_transform(chow_orthogonal(dsub)));
}

Goursat2d goursat_indicator_2d(const ChowSubspace& dsub) {
  if (dsub.n() != 2)
    fail(ErrorKind::WrongDimension, "goursat indicator is a 2d construction");
  const MaCoefficients c = ma_coefficients(chow_transform(dsub));
  Goursat2d out;
  out.a = c.at({1}, {1});
  out.b = c.at({1}, {2}) / Rational(2);
  out.c = c.at({2}, {2});
  out.delta = c.at({}, {});
  out.e = c.at({1, 2}, {1, 2});
  out.indicator = out.a * out.c - out.delta * out.e - out.b * out.b;
  return out;
}

const char* conic_name(ConicClass c) {
  switch (c) {
    case ConicClass::Elliptic: return "elliptic";
    case ConicClass::Parabolic: return "parabolic";
    case ConicClass::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

ConicClass dual_quadric_class_2d(const MaCoefficients& c) {
  if (c.n() != 2)
    fail(ErrorKind::WrongDimension, "dual quadric classification needs n = 2");
  if (c.all_zero()) fail(ErrorKind::AllZero, "coefficient vector is zero");
  const Rational b = c.at({1}, {2}) / Rational(2);
  const Rational disc =
      c.at({1}, {1}) * c.at({2}, {2}) - c.at({}, {}) * c.at({1, 2}, {1, 2}) - b * b;
  const int s = disc.sign();
  if (s == 0) return ConicClass::Parabolic;
  return s < 0 ? ConicClass::Hyperbolic : ConicClass::Elliptic;
}

MaCoefficients dual_tangent_hyperplane_3d(const SymMatrix& big_h) {
  if (big_h.n() != 3)
    fail(ErrorKind::WrongDimension, "dual tangent hyperplane implemented for n = 3");
  const Matrix h = big_h.to_matrix();
  const Matrix adj = adjugate(h);
  MaCoefficients out(3);
  out.at({}, {}) = -det(h);
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j) {
      // Order-1 slots carry the adjugate, order-2 slots the entries of H,
      // with cofactor signs; together they expand det(h - H).
      Rational weight(i == j ? 1 : 2);
      out.at({i}, {j}) = weight * adj.at(i - 1, j - 1);
      std::vector<int> comp_i, comp_j;
      for (int t = 1; t <= 3; ++t) {
        if (t != i) comp_i.push_back(t);
        if (t != j) comp_j.push_back(t);
      }
      Rational sign((i + j) % 2 == 0 ? 1 : -1);
      out.at(comp_i, comp_j) = -weight * sign * h.at(i - 1, j - 1);
    }
  out.at({1, 2, 3}, {1, 2, 3}) = Rational(1);
  return out;
}

}  // namespace lgr
