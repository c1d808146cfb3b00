#pragma once

#include <vector>

#include "lgr/grassmann.hpp"
#include "lgr/matrix.hpp"
#include "lgr/pde_poly.hpp"

namespace lgr {

// The symbol of F at a big-cell point is itself a symmetric matrix.
using SymbolMatrix = SymMatrix;

enum class PointLabel { Zero, Degenerate, Elliptic, Hyperbolic, Ultrahyperbolic };

const char* label_name(PointLabel label);

struct PointClass {
  int rank = 0;
  Signature signature;
  PointLabel label = PointLabel::Zero;
  friend bool operator==(const PointClass&, const PointClass&) = default;
};

// S_ij = (dF/dq_ij)(h); symmetric thanks to the q-canonical convention.
SymbolMatrix symbol(const PdePolynomial& f, const SymMatrix& h);

// Rank, inertia and the label of the symbol quadric at h. The zero symbol is
// a valid outcome (label zero), not an error.
PointClass classify_at(const PdePolynomial& f, const SymMatrix& h);

// True iff the symbol quadric vanishes on a, i.e. sum S_ij a_i a_j = 0. The
// point must lie on the equation unless off_shell is set.
bool is_characteristic(const PdePolynomial& f, const SymMatrix& h,
                       const std::vector<Rational>& a, bool off_shell = false);

// True iff the full prolongation line h + t a a^t stays inside F = 0.
bool is_strong_characteristic(const PdePolynomial& f, const SymMatrix& h,
                              const std::vector<Rational>& a, bool off_shell = false);

// [a] -> a a^t, the rank-one tangent direction attached to a hyperplane.
SymMatrix veronese(const std::vector<Rational>& a);

int tangent_rank(const SymMatrix& v);

// The Monge-Ampere test: every totally symmetrized second derivative
// d^2 F / dq_(ij dq_hk) must vanish identically. With the q-symmetries this
// reduces to the three-pairing sum over sorted index 4-multisets.
bool ma_test(const PdePolynomial& f, int max_n = 5);

// Writes F as sum c_{I,J} minor(p; I, J); the dual coordinates of the
// hyperplane section. For n = 4 the minor relation makes the solution a line;
// the free coordinate (last in canonical order) is pinned to zero.
MaCoefficients ma_coefficients(const PdePolynomial& f);

// F = sum c_{I,J} minor(p; I, J); always passes ma_test.
PdePolynomial hyperplane_section(const MaCoefficients& c);

}  // namespace lgr
