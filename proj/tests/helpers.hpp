#pragma once

#include <random>
#include <vector>

#include "lgr/dual.hpp"
#include "lgr/matrix.hpp"
#include "lgr/rational.hpp"
#include "lgr/symplectic.hpp"

namespace lgr::test {

// Pairs a value matrix with a derivative-seed matrix entrywise.
inline MatrixT<DualRational> dual_matrix(const Matrix& value, const Matrix& slope) {
  MatrixT<DualRational> m(value.rows(), value.cols());
  for (int i = 0; i < value.rows(); ++i)
    for (int j = 0; j < value.cols(); ++j)
      m.at(i, j) = DualRational(value.at(i, j), slope.at(i, j));
  return m;
}

// Deterministic generator for property tests; every suite seeds explicitly.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform below bound (bound > 0).
  int below(int bound) {
    return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound));
  }

  // Small rationals keep Bareiss intermediates readable in failure dumps.
  Rational rational(int num_range = 9, int den_range = 4) {
    long num = below(2 * num_range + 1) - num_range;
    long den = 1 + below(den_range);
    return Rational(num, den);
  }

  Rational nonzero_rational(int num_range = 9, int den_range = 4) {
    while (true) {
      Rational r = rational(num_range, den_range);
      if (!r.is_zero()) return r;
    }
  }

  Matrix matrix(int rows, int cols) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = rational();
    return m;
  }

  Matrix symmetric(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m.at(i, j) = m.at(j, i) = rational();
    return m;
  }

  Matrix invertible(int n) {
    while (true) {
      Matrix m = matrix(n, n);
      if (!det(m).is_zero()) return m;
    }
  }

  SymplecticMatrix generator(int n) {
    switch (below(3)) {
      case 0: return SymplecticMatrix::translate(symmetric(n));
      case 1: return SymplecticMatrix::shear(symmetric(n));
      default: return SymplecticMatrix::gl(invertible(n));
    }
  }

  SymplecticMatrix word(int n, int max_len) {
    SymplecticMatrix m = SymplecticMatrix::identity(n);
    int len = 1 + below(max_len);
    for (int t = 0; t < len; ++t) m = m * generator(n);
    return m;
  }

  SpAlgebraElement algebra_element(int n) {
    return SpAlgebraElement(symmetric(n), symmetric(n), matrix(n, n));
  }

  std::vector<Rational> covector(int n) {
    std::vector<Rational> v(n);
    for (auto& x : v) x = rational();
    return v;
  }

  std::vector<Rational> nonzero_covector(int n) {
    while (true) {
      auto v = covector(n);
      for (const auto& x : v)
        if (!x.is_zero()) return v;
    }
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace lgr::test
