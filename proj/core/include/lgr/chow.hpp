#pragma once

#include "lgr/grassmann.hpp"
#include "lgr/matrix.hpp"
#include "lgr/pde_poly.hpp"

namespace lgr {

// Big-cell representative of an n-dimensional subspace of V + V*: the column
// span of (Id; D). No symmetry is required of D.
class ChowSubspace {
public:
  explicit ChowSubspace(Matrix d);

  int n() const { return d_.rows(); }
  const Matrix& D() const { return d_; }

  friend bool operator==(const ChowSubspace&, const ChowSubspace&) = default;

private:
  Matrix d_;
};

// The Lagrangian Chow transform det(p - D), expanded and canonical.
PdePolynomial chow_transform(const ChowSubspace& dsub, int max_n = 5);

// The symplectic orthogonal of span(Id; D), via the kernel of the
// omega-pairing matrix, re-expressed in the big cell.
ChowSubspace chow_orthogonal(const ChowSubspace& dsub);

// True iff det(p - D) and det(p - Dperp) cut the same hypersurface.
bool chow_invariance_check(const ChowSubspace& dsub);

// Coefficients of E det(p) + A p11 + 2B p12 + C p22 + Delta for n = 2.
struct Goursat2d {
  Rational indicator;  // A C - Delta E - B^2 = -((D12 - D21)/2)^2
  Rational a, b, c, delta, e;
  friend bool operator==(const Goursat2d&, const Goursat2d&) = default;
};

Goursat2d goursat_indicator_2d(const ChowSubspace& dsub);

// Conic trichotomy of a dual point for n = 2; "parabolic" means membership in
// the dual quadric of LL(2,4).
enum class ConicClass { Elliptic, Parabolic, Hyperbolic };

const char* conic_name(ConicClass c);

ConicClass dual_quadric_class_2d(const MaCoefficients& c);

// The dual coordinates of det(h - H) for n = 3: tangent hyperplane of the
// Pluecker image at H.
MaCoefficients dual_tangent_hyperplane_3d(const SymMatrix& big_h);

}  // namespace lgr
