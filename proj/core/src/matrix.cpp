#include "lgr/matrix.hpp"

#include <gmpxx.h>

#include <algorithm>

namespace lgr {
namespace {

mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Fraction-free two-step Bareiss (Sylvester identity: the bordered 3x3 of
// k-level minors equals the (k+2)-level minor times the squared leading
// k-minor). Falls back to closing 1x1/2x2 forms at the tail and bails out
// early when the working columns are rank-deficient.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  int k = 0;
  while (true) {
    const int rem = n - k;
    if (rem == 1) return sign * a[k][k];

    int r0 = -1;
    for (int r = k; r < n; ++r)
      if (a[r][k] != 0) {
        r0 = r;
        break;
      }
    if (r0 < 0) return 0;
    if (r0 != k) {
      std::swap(a[r0], a[k]);
      sign = -sign;
    }

    if (rem == 2) {
      mpz_class d = a[k][k] * a[k + 1][k + 1] - a[k + 1][k] * a[k][k + 1];
      return sign * exact_div(d, prev);
    }

    int r1 = -1;
    for (int r = k + 1; r < n; ++r)
      if (a[k][k] * a[r][k + 1] != a[r][k] * a[k][k + 1]) {
        r1 = r;
        break;
      }
    // Every remaining row proportional to row k in the two working columns
    // means those columns have rank 1.
    if (r1 < 0) return 0;
    if (r1 != k + 1) {
      std::swap(a[r1], a[k + 1]);
      sign = -sign;
    }

    const mpz_class d = a[k][k] * a[k + 1][k + 1] - a[k + 1][k] * a[k][k + 1];
    const mpz_class prev2 = prev * prev;
    std::vector<mpz_class> u(n), v(n);
    for (int j = k + 2; j < n; ++j) {
      u[j] = a[k][k + 1] * a[k + 1][j] - a[k + 1][k + 1] * a[k][j];
      v[j] = a[k][k] * a[k + 1][j] - a[k + 1][k] * a[k][j];
    }
    for (int i = k + 2; i < n; ++i) {
      for (int j = k + 2; j < n; ++j) {
        mpz_class det3 = a[i][k] * u[j] - a[i][k + 1] * v[j] + a[i][j] * d;
        a[i][j] = exact_div(det3, prev2);
      }
    }
    prev = exact_div(d, prev);
    k += 2;
  }
}

}  // namespace

Rational det(const Matrix& m) {
  if (!m.is_square()) fail(ErrorKind::NotSquare, "determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m.at(0, 0);
  if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(1, 0) * m.at(0, 1);

  // Clear denominators row by row so Bareiss runs over plain integers.
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class denom = 1;
  for (int i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < n; ++j) l = lcm(l, m.at(i, j).den());
    for (int j = 0; j < n; ++j)
      a[i][j] = m.at(i, j).num() * exact_div(l, m.at(i, j).den());
    denom *= l;
  }
  return Rational(mpq_class(bareiss_det(a), denom));
}

Rational minor(const Matrix& m, const std::vector<int>& I, const std::vector<int>& J) {
  if (I.size() != J.size())
    fail(ErrorKind::BadSubset, "row and column subsets differ in size");
  auto check = [&](const std::vector<int>& s, int bound, const char* which) {
    for (std::size_t t = 0; t < s.size(); ++t) {
      if (s[t] < 1 || s[t] > bound)
        fail(ErrorKind::BadSubset, std::string(which) + " index out of range");
      if (t > 0 && s[t] <= s[t - 1])
        fail(ErrorKind::BadSubset, std::string(which) + " subset not strictly increasing");
    }
  };
  check(I, m.rows(), "row");
  check(J, m.cols(), "column");

  const std::size_t k = I.size();
  if (k == 0) return Rational(1);
  if (k == 1) return m.at(I[0] - 1, J[0] - 1);
  if (k == 2)
    return m.at(I[0] - 1, J[0] - 1) * m.at(I[1] - 1, J[1] - 1) -
           m.at(I[0] - 1, J[1] - 1) * m.at(I[1] - 1, J[0] - 1);

  Matrix sub(static_cast<int>(k), static_cast<int>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sub.at(static_cast<int>(i), static_cast<int>(j)) = m.at(I[i] - 1, J[j] - 1);
  return det(sub);
}

Matrix adjugate(const Matrix& m) {
  if (!m.is_square()) fail(ErrorKind::NotSquare, "adjugate of non-square matrix");
  const int n = m.rows();
  if (n == 0) return m;
  if (n == 1) return Matrix::identity(1);
  Matrix adj(n, n);
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  for (int i = 0; i < n; ++i) {
    std::vector<int> rows = all;
    rows.erase(rows.begin() + i);
    for (int j = 0; j < n; ++j) {
      std::vector<int> cols = all;
      cols.erase(cols.begin() + j);
      Rational c = minor(m, rows, cols);
      // adj_ji = (-1)^{i+j} M_ij (transpose of the cofactor matrix).
      adj.at(j, i) = ((i + j) % 2 == 0) ? c : -c;
    }
  }
  return adj;
}

Signature signature(const Matrix& s) {
  if (!s.is_square()) fail(ErrorKind::NotSquare, "signature of non-square matrix");
  if (!s.is_symmetric()) fail(ErrorKind::NotSymmetric, "signature of non-symmetric matrix");
  const int n = s.rows();
  Matrix a = s;
  Signature out;
  for (int k = 0; k < n; ++k) {
    if (a.at(k, k).is_zero()) {
      int d = -1;
      for (int i = k + 1; i < n; ++i)
        if (!a.at(i, i).is_zero()) {
          d = i;
          break;
        }
      if (d >= 0) {
        for (int c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(d, c));
        for (int r = 0; r < n; ++r) std::swap(a.at(r, k), a.at(r, d));
      } else {
        int j = -1;
        for (int c = k + 1; c < n; ++c)
          if (!a.at(k, c).is_zero()) {
            j = c;
            break;
          }
        if (j < 0) {
          ++out.zero;
          continue;
        }
        // All active diagonal entries vanish, so adding row+column j turns
        // a(k,k) into 2*a(k,j) != 0.
        for (int c = 0; c < n; ++c) a.at(k, c) += a.at(j, c);
        for (int r = 0; r < n; ++r) a.at(r, k) += a.at(r, j);
      }
    }
    const Rational p = a.at(k, k);
    if (p.sign() > 0)
      ++out.positive;
    else
      ++out.negative;
    for (int i = k + 1; i < n; ++i) {
      if (a.at(i, k).is_zero()) continue;
      const Rational f = a.at(i, k) / p;
      for (int j = k + 1; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
      a.at(i, k) = Rational(0);
    }
    for (int j = k + 1; j < n; ++j) a.at(k, j) = Rational(0);
  }
  return out;
}

namespace {

// In-place reduced row echelon form; returns pivot columns in order. Pivot
// search is restricted to the first limit_cols columns when limit_cols >= 0.
std::vector<int> rref(Matrix& m, int limit_cols = -1) {
  const int rows = m.rows();
  const int cols = limit_cols >= 0 ? limit_cols : m.cols();
  std::vector<int> pivots;
  int pr = 0;
  for (int col = 0; col < cols && pr < rows; ++col) {
    int r = -1;
    for (int i = pr; i < rows; ++i)
      if (!m.at(i, col).is_zero()) {
        r = i;
        break;
      }
    if (r < 0) continue;
    if (r != pr)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pr, j));
    const Rational p = m.at(pr, col);
    for (int j = 0; j < m.cols(); ++j) m.at(pr, j) /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == pr || m.at(i, col).is_zero()) continue;
      const Rational f = m.at(i, col);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(pr, j);
    }
    pivots.push_back(col);
    ++pr;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Rational>> kernel_basis(const Matrix& m) {
  Matrix r = m;
  std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[f] = Rational(1);
    for (std::size_t t = 0; t < pivots.size(); ++t) v[pivots[t]] = -r.at(static_cast<int>(t), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const Matrix& m) {
  Matrix r = m;
  return static_cast<int>(rref(r).size());
}

Matrix inverse(const Matrix& m) { return inverse_t(m); }

std::optional<std::vector<Rational>> solve_canonical(const Matrix& a,
                                                     const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != a.rows())
    fail(ErrorKind::DimensionMismatch, "right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<int> pivots = rref(aug, a.cols());
  for (int i = static_cast<int>(pivots.size()); i < a.rows(); ++i)
    if (!aug.at(i, a.cols()).is_zero()) return std::nullopt;
  std::vector<Rational> x(a.cols(), Rational(0));
  for (std::size_t t = 0; t < pivots.size(); ++t)
    x[pivots[t]] = aug.at(static_cast<int>(t), a.cols());
  return x;
}

}  // namespace lgr
