#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "helpers.hpp"
#include "lgr/matrix.hpp"

using lgr::Matrix;
using lgr::Rational;
using lgr::Signature;

namespace {

// Independent oracle: Leibniz expansion over all permutations.
Rational leibniz_det(const Matrix& m) {
  const int n = m.rows();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational sum(0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term(inversions % 2 == 0 ? 1 : -1);
    for (int i = 0; i < n; ++i) term *= m.at(i, perm[i]);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

Matrix diag(std::vector<Rational> d) {
  Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

}  // namespace

TEST_CASE("det: frozen small cases") {
  CHECK(lgr::det(Matrix::identity(3)) == Rational(1));
  CHECK(lgr::det(Matrix{{Rational(1), Rational(2)}, {Rational(2), Rational(5)}}) == Rational(1));
  CHECK(lgr::det(Matrix{{Rational(0), Rational(1)}, {Rational(0), Rational(0)}}) == Rational(0));
  CHECK(lgr::det(Matrix(0, 0)) == Rational(1));
  CHECK_THROWS_AS(lgr::det(Matrix(2, 3)), lgr::Error);
}

TEST_CASE("det agrees with the Leibniz oracle up to 6x6") {
  lgr::test::Rng rng(101);
  for (int n = 1; n <= 6; ++n) {
    for (int iter = 0; iter < 25; ++iter) {
      Matrix m = rng.matrix(n, n);
      CHECK(lgr::det(m) == leibniz_det(m));
    }
  }
  // Singular-heavy inputs stress the rank-deficient early exits.
  for (int iter = 0; iter < 50; ++iter) {
    Matrix m = rng.matrix(5, 5);
    for (int j = 0; j < 5; ++j) m.at(3, j) = m.at(1, j);
    CHECK(lgr::det(m) == Rational(0));
    Matrix z = rng.matrix(4, 4);
    for (int i = 0; i < 4; ++i) z.at(i, 2) = Rational(0);
    CHECK(lgr::det(z) == leibniz_det(z));
  }
}

TEST_CASE("det is multiplicative and transpose-invariant") {
  lgr::test::Rng rng(202);
  for (int iter = 0; iter < 40; ++iter) {
    int n = 1 + rng.below(5);
    Matrix a = rng.matrix(n, n), b = rng.matrix(n, n);
    CHECK(lgr::det(a * b) == lgr::det(a) * lgr::det(b));
    CHECK(lgr::det(a.transpose()) == lgr::det(a));
  }
}

TEST_CASE("minor: closed forms, empty subsets, validation") {
  Matrix m{{Rational(1), Rational(2)}, {Rational(2), Rational(5)}};
  CHECK(lgr::minor(m, {}, {}) == Rational(1));
  CHECK(lgr::minor(m, {1}, {2}) == Rational(2));
  CHECK(lgr::minor(m, {1, 2}, {1, 2}) == Rational(1));
  CHECK_THROWS_AS(lgr::minor(m, {1}, {1, 2}), lgr::Error);
  CHECK_THROWS_AS(lgr::minor(m, {0}, {1}), lgr::Error);
  CHECK_THROWS_AS(lgr::minor(m, {1, 3}, {1, 2}), lgr::Error);
  CHECK_THROWS_AS(lgr::minor(m, {2, 1}, {1, 2}), lgr::Error);
  CHECK_THROWS_AS(lgr::minor(m, {1, 1}, {1, 2}), lgr::Error);
}

TEST_CASE("minor of a symmetric matrix is row/column symmetric") {
  lgr::test::Rng rng(303);
  for (int iter = 0; iter < 30; ++iter) {
    Matrix h = rng.symmetric(4);
    CHECK(lgr::minor(h, {1, 3}, {2, 4}) == lgr::minor(h, {2, 4}, {1, 3}));
    CHECK(lgr::minor(h, {1, 2, 3}, {2, 3, 4}) == lgr::minor(h, {2, 3, 4}, {1, 2, 3}));
  }
}

TEST_CASE("minor agrees with Leibniz on random submatrices") {
  lgr::test::Rng rng(404);
  for (int iter = 0; iter < 30; ++iter) {
    Matrix m = rng.matrix(5, 5);
    std::vector<int> I = {1, 3, 4}, J = {2, 3, 5};
    Matrix sub(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) sub.at(i, j) = m.at(I[i] - 1, J[j] - 1);
    CHECK(lgr::minor(m, I, J) == leibniz_det(sub));
  }
}

TEST_CASE("adjugate: frozen cases and the defining contract") {
  CHECK(lgr::adjugate(Matrix::identity(4)) == Matrix::identity(4));
  Matrix m{{Rational(3), Rational(7)}, {Rational(2), Rational(9)}};
  Matrix expect{{Rational(9), Rational(-7)}, {Rational(-2), Rational(3)}};
  CHECK(lgr::adjugate(m) == expect);
  CHECK(lgr::adjugate(Matrix(3, 3)) == Matrix(3, 3));

  lgr::test::Rng rng(505);
  for (int n = 1; n <= 5; ++n) {
    Matrix a = rng.matrix(n, n);
    Matrix prod = a * lgr::adjugate(a);
    CHECK(prod == lgr::det(a) * Matrix::identity(n));
  }
}

TEST_CASE("signature: frozen cases") {
  CHECK(lgr::signature(Matrix::identity(4)) == Signature{4, 0, 0});
  CHECK(lgr::signature(diag({Rational(1), Rational(-1)})) == Signature{1, 1, 0});
  Matrix hyp{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  CHECK(lgr::signature(hyp) == Signature{1, 1, 0});
  CHECK(lgr::signature(Matrix(3, 3)) == Signature{0, 0, 3});
  CHECK(lgr::signature(diag({Rational(0), Rational(5), Rational(-2, 3)})) == Signature{1, 1, 1});
  CHECK_THROWS_AS(lgr::signature(Matrix{{Rational(0), Rational(1)}, {Rational(2), Rational(0)}}),
                  lgr::Error);

  // Zero diagonal block with off-diagonal coupling exercises the add-row trick.
  Matrix block(4, 4);
  block.at(0, 1) = block.at(1, 0) = Rational(3);
  block.at(2, 3) = block.at(3, 2) = Rational(-1, 2);
  CHECK(lgr::signature(block) == Signature{2, 2, 0});
}

TEST_CASE("signature is congruence invariant and consistent with rank") {
  lgr::test::Rng rng(606);
  for (int iter = 0; iter < 40; ++iter) {
    int n = 1 + rng.below(5);
    Matrix s = rng.symmetric(n);
    // Degenerate directions show up often if we square a random rank-deficient factor.
    if (iter % 3 == 0) {
      Matrix f = rng.matrix(n, std::max(1, n - 1));
      s = f * f.transpose();
    }
    Signature sig = lgr::signature(s);
    CHECK(sig.positive + sig.negative + sig.zero == n);
    CHECK(sig.positive + sig.negative == lgr::rank(s));
    Matrix p = rng.invertible(n);
    CHECK(lgr::signature(p.transpose() * s * p) == sig);
  }
}

TEST_CASE("kernel_basis: frozen cases and exactness") {
  CHECK(lgr::kernel_basis(Matrix::identity(5)).empty());
  CHECK(lgr::kernel_basis(Matrix(3, 3)).size() == 3);

  Matrix ones{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
  auto basis = lgr::kernel_basis(ones);
  REQUIRE(basis.size() == 1);
  // Same line as (1, -1).
  CHECK(basis[0][0] * Rational(-1) == basis[0][1] * Rational(1));
  CHECK(!(basis[0][0].is_zero() && basis[0][1].is_zero()));

  lgr::test::Rng rng(707);
  for (int iter = 0; iter < 30; ++iter) {
    int rows = 1 + rng.below(4), cols = 1 + rng.below(5);
    Matrix m = rng.matrix(rows, cols);
    auto kb = lgr::kernel_basis(m);
    CHECK(static_cast<int>(kb.size()) == cols - lgr::rank(m));
    for (const auto& v : kb) {
      for (int i = 0; i < rows; ++i) {
        Rational dot(0);
        for (int j = 0; j < cols; ++j) dot += m.at(i, j) * v[j];
        CHECK(dot == Rational(0));
      }
    }
  }
}

TEST_CASE("inverse and canonical solve") {
  lgr::test::Rng rng(808);
  for (int iter = 0; iter < 25; ++iter) {
    int n = 1 + rng.below(4);
    Matrix m = rng.invertible(n);
    CHECK(m * lgr::inverse(m) == Matrix::identity(n));
  }
  CHECK_THROWS_AS(lgr::inverse(Matrix(2, 2)), lgr::Error);

  // Consistent underdetermined system: free variables pinned to zero.
  Matrix a{{Rational(1), Rational(2), Rational(1)}, {Rational(0), Rational(0), Rational(1)}};
  auto x = lgr::solve_canonical(a, {Rational(5), Rational(3)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(2));
  CHECK((*x)[1] == Rational(0));
  CHECK((*x)[2] == Rational(3));

  Matrix bad{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
  CHECK(!lgr::solve_canonical(bad, {Rational(1), Rational(2)}).has_value());

  for (int iter = 0; iter < 25; ++iter) {
    int rows = 1 + rng.below(5), cols = 1 + rng.below(5);
    Matrix m = rng.matrix(rows, cols);
    std::vector<Rational> sol = rng.covector(cols);
    std::vector<Rational> b(rows, Rational(0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) b[i] += m.at(i, j) * sol[j];
    auto got = lgr::solve_canonical(m, b);
    REQUIRE(got.has_value());
    for (int i = 0; i < rows; ++i) {
      Rational dot(0);
      for (int j = 0; j < cols; ++j) dot += m.at(i, j) * (*got)[j];
      CHECK(dot == b[i]);
    }
  }
}
