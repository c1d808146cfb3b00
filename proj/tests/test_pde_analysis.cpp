#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "helpers.hpp"
#include "lgr/pde_analysis.hpp"

using lgr::MaCoefficients;
using lgr::Matrix;
using lgr::PdePolynomial;
using lgr::PointClass;
using lgr::PointLabel;
using lgr::Rational;
using lgr::Signature;
using lgr::SymMatrix;

namespace {

template <class F>
lgr::ErrorKind thrown_kind(F&& f) {
  try {
    f();
  } catch (const lgr::Error& e) {
    return e.kind();
  }
  FAIL("expected lgr::Error");
  return lgr::ErrorKind::BadShape;
}

SymMatrix random_sym(lgr::test::Rng& rng, int n) {
  return SymMatrix::from_matrix(rng.symmetric(n));
}

MaCoefficients random_coeffs(lgr::test::Rng& rng, int n) {
  while (true) {
    MaCoefficients c(n);
    for (const auto& idx : lgr::minor_index_set(n))
      c.at(idx.rows, idx.cols) = rng.rational();
    if (!c.all_zero()) return c;
  }
}

PdePolynomial random_section(lgr::test::Rng& rng, int n) {
  return lgr::hyperplane_section(random_coeffs(rng, n));
}

PdePolynomial random_poly(lgr::test::Rng& rng, int n, int max_terms = 4) {
  PdePolynomial f = PdePolynomial::constant(n, rng.rational());
  int terms = 1 + rng.below(max_terms);
  for (int t = 0; t < terms; ++t) {
    PdePolynomial prod = PdePolynomial::constant(n, rng.nonzero_rational());
    int factors = 1 + rng.below(3);
    for (int s = 0; s < factors; ++s) {
      int i = 1 + rng.below(n), j = 1 + rng.below(n);
      prod *= PdePolynomial::p_var(n, std::min(i, j), std::max(i, j));
    }
    f += prod;
  }
  return f;
}

// Shifts the constant term so that h lies on the equation.
PdePolynomial on_shell(PdePolynomial f, const SymMatrix& h) {
  return f - PdePolynomial::constant(f.n(), lgr::eval(f, h));
}

// The linear Einstein-convention section B^{ij} p_ij for symmetric B.
PdePolynomial linear_section(const Matrix& b) {
  const int n = b.rows();
  PdePolynomial f(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      Rational c = b.at(i - 1, j - 1);
      if (i < j) c = Rational(2) * c;
      f += c * PdePolynomial::p_var(n, i, j);
    }
  return f;
}

std::vector<std::vector<PdePolynomial>> translate_grid(int n, const Matrix& c) {
  std::vector<std::vector<PdePolynomial>> grid(
      n, std::vector<PdePolynomial>(n, PdePolynomial(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      grid[i][j] = PdePolynomial::p_var(n, std::min(i, j) + 1, std::max(i, j) + 1) +
                   PdePolynomial::constant(n, c.at(i, j));
  return grid;
}

std::vector<std::vector<PdePolynomial>> gl_grid(int n, const Matrix& d) {
  std::vector<std::vector<PdePolynomial>> grid(
      n, std::vector<PdePolynomial>(n, PdePolynomial(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      PdePolynomial entry(n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          entry += d.at(a, i) * d.at(b, j) *
                   PdePolynomial::p_var(n, std::min(a, b) + 1, std::max(a, b) + 1);
      grid[i][j] = entry;
    }
  return grid;
}

}  // namespace

TEST_CASE("symbol: adjugate oracle and linear sections") {
  lgr::test::Rng rng(503);
  for (int n = 2; n <= 4; ++n) {
    PdePolynomial detn = lgr::det_poly(n);
    for (int iter = 0; iter < 10; ++iter) {
      SymMatrix h = random_sym(rng, n);
      CHECK(lgr::symbol(detn, h).to_matrix() == lgr::adjugate(h.to_matrix()));

      Matrix b = rng.symmetric(n);
      CHECK(lgr::symbol(linear_section(b), h).to_matrix() == b);
    }
    SymMatrix id(n);
    for (int i = 0; i < n; ++i) id.at(i, i) = Rational(1);
    CHECK(lgr::symbol(detn, id).to_matrix() == Matrix::identity(n));
    CHECK(lgr::symbol(PdePolynomial::constant(n, Rational(3)), id).is_zero());
  }
  CHECK(thrown_kind([] { lgr::symbol(lgr::det_poly(2), SymMatrix(3)); }) ==
        lgr::ErrorKind::DimensionMismatch);
}

TEST_CASE("classify_at: frozen labels") {
  SymMatrix zero2(2);
  PdePolynomial laplace = PdePolynomial::p_var(2, 1, 1) + PdePolynomial::p_var(2, 2, 2);
  PointClass pc = lgr::classify_at(laplace, zero2);
  CHECK(pc.label == PointLabel::Elliptic);
  CHECK(pc.signature == Signature{2, 0, 0});
  CHECK(pc.rank == 2);

  SymMatrix id2(2);
  id2.at(0, 0) = id2.at(1, 1) = Rational(1);
  PdePolynomial mc = lgr::det_poly(2) - PdePolynomial::constant(2, Rational(1));
  CHECK(lgr::classify_at(mc, id2).label == PointLabel::Elliptic);

  PointClass wave = lgr::classify_at(PdePolynomial::p_var(2, 1, 2), zero2);
  CHECK(wave.label == PointLabel::Hyperbolic);
  CHECK(wave.signature == Signature{1, 1, 0});

  PointClass deg = lgr::classify_at(PdePolynomial::p_var(2, 1, 1), zero2);
  CHECK(deg.label == PointLabel::Degenerate);
  CHECK(deg.rank == 1);

  CHECK(lgr::classify_at(PdePolynomial::constant(2, Rational(4)), zero2).label ==
        PointLabel::Zero);

  PdePolynomial ultra(4);
  for (int i = 1; i <= 4; ++i) {
    Rational s(i <= 2 ? 1 : -1);
    ultra += s * PdePolynomial::p_var(4, i, i);
  }
  PointClass uh = lgr::classify_at(ultra, SymMatrix(4));
  CHECK(uh.label == PointLabel::Ultrahyperbolic);
  CHECK(uh.signature == Signature{2, 2, 0});

  CHECK(lgr::label_name(PointLabel::Ultrahyperbolic) == std::string("ultrahyperbolic"));
}

TEST_CASE("classification is congruence covariant under gl substitution") {
  lgr::test::Rng rng(509);
  for (int iter = 0; iter < 15; ++iter) {
    const int n = 2 + rng.below(2);
    PdePolynomial f = random_poly(rng, n);
    Matrix d = rng.invertible(n);
    PdePolynomial g = lgr::substituted(f, gl_grid(n, d));
    SymMatrix h = random_sym(rng, n);
    SymMatrix moved = SymMatrix::from_matrix(d.transpose() * h.to_matrix() * d);
    CHECK(lgr::eval(g, h) == lgr::eval(f, moved));
    CHECK(lgr::classify_at(g, h).signature == lgr::classify_at(f, moved).signature);
  }
}

TEST_CASE("is_characteristic: frozen cases and the shell guard") {
  PdePolynomial p11 = PdePolynomial::p_var(2, 1, 1);
  SymMatrix zero2(2);
  CHECK(lgr::is_characteristic(p11, zero2, {Rational(0), Rational(1)}));
  CHECK_FALSE(lgr::is_characteristic(p11, zero2, {Rational(1), Rational(0)}));

  PdePolynomial laplace = p11 + PdePolynomial::p_var(2, 2, 2);
  lgr::test::Rng rng(521);
  for (int iter = 0; iter < 20; ++iter)
    CHECK_FALSE(lgr::is_characteristic(laplace, zero2, rng.nonzero_covector(2)));

  PdePolynomial shifted = p11 - PdePolynomial::constant(2, Rational(1));
  CHECK(thrown_kind([&] {
          lgr::is_characteristic(shifted, zero2, {Rational(0), Rational(1)});
        }) == lgr::ErrorKind::NotOnEquation);
  CHECK(lgr::is_characteristic(shifted, zero2, {Rational(0), Rational(1)}, true));
  CHECK(thrown_kind([&] {
          lgr::is_characteristic(p11, zero2, {Rational(0), Rational(0)});
        }) == lgr::ErrorKind::ZeroCovector);
}

TEST_CASE("strong characteristics: containment vs tangency") {
  SymMatrix zero2(2);
  PdePolynomial p11 = PdePolynomial::p_var(2, 1, 1);
  CHECK(lgr::is_strong_characteristic(p11, zero2, {Rational(0), Rational(1)}));

  PdePolynomial tangent_only =
      p11 - lgr::pow(PdePolynomial::p_var(2, 2, 2), 2);
  CHECK(lgr::is_characteristic(tangent_only, zero2, {Rational(0), Rational(1)}));
  CHECK_FALSE(lgr::is_strong_characteristic(tangent_only, zero2, {Rational(0), Rational(1)}));
}

TEST_CASE("strong implies characteristic; symbol matches the line slope") {
  lgr::test::Rng rng(523);
  int strong_seen = 0;
  for (int iter = 0; iter < 100; ++iter) {
    const int n = 2 + rng.below(3);
    SymMatrix h = random_sym(rng, n);
    PdePolynomial f = on_shell(random_poly(rng, n), h);
    if (f.is_zero()) continue;
    auto a = rng.nonzero_covector(n);
    bool chr = lgr::is_characteristic(f, h, a);
    CHECK(chr == lgr::restrict_line(f, h, a).coeff(1).is_zero());
    if (lgr::is_strong_characteristic(f, h, a)) {
      CHECK(chr);
      ++strong_seen;
    }
  }
  // Constructed strong cases keep the implication branch exercised.
  for (int iter = 0; iter < 10; ++iter) {
    const int n = 2 + rng.below(2);
    PdePolynomial f = PdePolynomial::p_var(n, 1, 1) * random_poly(rng, n);
    if (f.is_zero()) continue;
    SymMatrix h(n);
    std::vector<Rational> a(n, Rational(0));
    a[n - 1] = Rational(1);
    if (!lgr::eval(f, h).is_zero()) continue;
    if (lgr::is_strong_characteristic(f, h, a)) {
      CHECK(lgr::is_characteristic(f, h, a));
      ++strong_seen;
    }
  }
  CHECK(strong_seen > 0);
}

TEST_CASE("veronese directions have tangent rank one") {
  lgr::test::Rng rng(541);
  SymMatrix e11 = lgr::veronese({Rational(1), Rational(0), Rational(0)});
  CHECK(e11.at(0, 0) == Rational(1));
  CHECK(e11.to_matrix() - Matrix(3, 3) ==
        Matrix{{Rational(1), Rational(0), Rational(0)},
               {Rational(0), Rational(0), Rational(0)},
               {Rational(0), Rational(0), Rational(0)}});
  CHECK(lgr::tangent_rank(e11) == 1);
  CHECK(lgr::tangent_rank(lgr::veronese({Rational(0), Rational(0)})) == 0);
  for (int iter = 0; iter < 20; ++iter) {
    int n = 2 + rng.below(3);
    CHECK(lgr::tangent_rank(lgr::veronese(rng.nonzero_covector(n))) == 1);
  }
}

TEST_CASE("ma_test: calibration cases") {
  CHECK(lgr::ma_test(lgr::det_poly(2)));
  CHECK(lgr::ma_test(lgr::det_poly(3) - PdePolynomial::constant(3, Rational(1))));

  PdePolynomial trace3(3);
  for (int i = 1; i <= 3; ++i) trace3 += PdePolynomial::p_var(3, i, i);
  CHECK(lgr::ma_test(lgr::det_poly(3) - trace3));

  CHECK_FALSE(lgr::ma_test(lgr::pow(PdePolynomial::p_var(2, 1, 1), 2)));
  CHECK_FALSE(lgr::ma_test(PdePolynomial::p_var(2, 1, 1) * PdePolynomial::p_var(2, 2, 2)));
  CHECK_FALSE(lgr::ma_test(PdePolynomial::p_var(3, 1, 1) * PdePolynomial::p_var(3, 2, 2)));

  CHECK(thrown_kind([] { lgr::ma_test(lgr::det_poly(6), 5); }) ==
        lgr::ErrorKind::LimitsExceeded);
  CHECK(lgr::ma_test(PdePolynomial::p_var(6, 1, 1), 6));
}

TEST_CASE("ma_test accepts sections and rejects squares") {
  lgr::test::Rng rng(547);
  for (int n = 2; n <= 4; ++n) {
    for (int iter = 0; iter < 10; ++iter) {
      PdePolynomial f = random_section(rng, n);
      CHECK(lgr::ma_test(f));
      int i = 1 + rng.below(n), j = 1 + rng.below(n);
      PdePolynomial sq =
          lgr::pow(PdePolynomial::p_var(n, std::min(i, j), std::max(i, j)), 2);
      CHECK_FALSE(lgr::ma_test(f + rng.nonzero_rational() * sq));
    }
  }
}

TEST_CASE("ma_test is invariant under translate and gl substitutions") {
  lgr::test::Rng rng(557);
  for (int iter = 0; iter < 8; ++iter) {
    const int n = 2 + rng.below(2);
    PdePolynomial yes = random_section(rng, n);
    PdePolynomial no = yes + rng.nonzero_rational() *
                                 lgr::pow(PdePolynomial::p_var(n, 1, 1), 2);
    Matrix c = rng.symmetric(n);
    Matrix d = rng.invertible(n);
    for (const auto* f : {&yes, &no}) {
      bool base = lgr::ma_test(*f);
      CHECK(lgr::ma_test(lgr::substituted(*f, translate_grid(n, c))) == base);
      CHECK(lgr::ma_test(lgr::substituted(*f, gl_grid(n, d))) == base);
    }
  }
}

TEST_CASE("ma_coefficients: frozen readings") {
  PdePolynomial mc2 = lgr::det_poly(2) - PdePolynomial::constant(2, Rational(1));
  MaCoefficients c = lgr::ma_coefficients(mc2);
  for (const auto& [idx, value] : c.coords()) {
    if (idx.rows.empty())
      CHECK(value == Rational(-1));
    else if (idx.rows.size() == 2)
      CHECK(value == Rational(1));
    else
      CHECK(value == Rational(0));
  }

  PdePolynomial planar = PdePolynomial::p_var(3, 1, 1) * PdePolynomial::p_var(3, 2, 2) -
                         lgr::pow(PdePolynomial::p_var(3, 1, 2), 2);
  MaCoefficients pc = lgr::ma_coefficients(planar);
  for (const auto& [idx, value] : pc.coords()) {
    Rational expect(idx.rows == std::vector<int>{1, 2} && idx.cols == idx.rows ? 1 : 0);
    CHECK(value == expect);
  }

  CHECK(thrown_kind([] {
          lgr::ma_coefficients(lgr::pow(PdePolynomial::p_var(2, 1, 1), 2));
        }) == lgr::ErrorKind::NotMongeAmpere);
  CHECK(thrown_kind([] { lgr::ma_coefficients(PdePolynomial(2)); }) ==
        lgr::ErrorKind::AllZero);
}

TEST_CASE("hyperplane_section and ma_coefficients are mutually inverse") {
  lgr::test::Rng rng(563);
  for (int n = 2; n <= 3; ++n) {
    for (int iter = 0; iter < 15; ++iter) {
      MaCoefficients c = random_coeffs(rng, n);
      CHECK(lgr::ma_coefficients(lgr::hyperplane_section(c)) == c);

      PdePolynomial f = random_section(rng, n);
      CHECK(lgr::hyperplane_section(lgr::ma_coefficients(f)) == f);
    }
  }
  // n = 4: round trip as polynomials; the free slot of the minor relation
  // pins to zero in the canonical solution.
  for (int iter = 0; iter < 5; ++iter) {
    PdePolynomial f = random_section(rng, 4);
    MaCoefficients c = lgr::ma_coefficients(f);
    CHECK(lgr::hyperplane_section(c) == f);
    CHECK(c.at({1, 4}, {2, 3}) == Rational(0));
  }
}

TEST_CASE("hyperplane_section edge cases") {
  MaCoefficients c(2);
  c.at({}, {}) = Rational(1);
  CHECK(lgr::hyperplane_section(c) == PdePolynomial::constant(2, Rational(1)));
  CHECK(thrown_kind([] { lgr::hyperplane_section(MaCoefficients(2)); }) ==
        lgr::ErrorKind::AllZero);

  lgr::test::Rng rng(569);
  Matrix b = rng.symmetric(3);
  MaCoefficients lin(3);
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j) {
      Rational v = b.at(i - 1, j - 1);
      lin.at({i}, {j}) = i == j ? v : Rational(2) * v;
    }
  if (!lin.all_zero()) {
    CHECK(lgr::hyperplane_section(lin) == linear_section(b));
    CHECK(lgr::symbol(lgr::hyperplane_section(lin), SymMatrix(3)).to_matrix() == b);
  }
}
