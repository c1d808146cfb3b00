#include "lgr/grassmann.hpp"

#include <algorithm>

namespace lgr {

SymMatrix::SymMatrix(int n) : n_(n) {
  if (n < 1) fail(ErrorKind::WrongDimension, "symmetric matrix needs n >= 1");
  upper_.assign(static_cast<std::size_t>(n) * (n + 1) / 2, Rational(0));
}

std::size_t SymMatrix::pack(int i, int j) const {
  if (i > j) std::swap(i, j);
  return static_cast<std::size_t>(i) * n_ - static_cast<std::size_t>(i) * (i - 1) / 2 +
         (j - i);
}

SymMatrix SymMatrix::from_matrix(const Matrix& m) {
  if (!m.is_square()) fail(ErrorKind::NotSquare, "symmetric matrix must be square");
  if (!m.is_symmetric())
    fail(ErrorKind::NotSymmetric, "matrix is not symmetric");
  SymMatrix s(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i; j < m.cols(); ++j) s.at(i, j) = m.at(i, j);
  return s;
}

Matrix SymMatrix::to_matrix() const {
  Matrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m.at(i, j) = at(i, j);
  return m;
}

bool SymMatrix::is_zero() const {
  for (const auto& x : upper_)
    if (!x.is_zero()) return false;
  return true;
}

MinorIndex MinorIndex::make(std::vector<int> rows, std::vector<int> cols, int n) {
  if (rows.size() != cols.size())
    fail(ErrorKind::BadSubset, "minor index with subsets of unequal size");
  auto canon = [&](std::vector<int>& s) {
    std::sort(s.begin(), s.end());
    for (std::size_t t = 0; t < s.size(); ++t) {
      if (s[t] < 1 || s[t] > n)
        fail(ErrorKind::BadSubset, "minor index out of range");
      if (t > 0 && s[t] == s[t - 1])
        fail(ErrorKind::BadSubset, "minor index with repeated entries");
    }
  };
  canon(rows);
  canon(cols);
  if (cols < rows) rows.swap(cols);
  return MinorIndex{std::move(rows), std::move(cols)};
}

namespace {

void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(k);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n - (k - depth - 1); ++v) {
      cur[depth] = v;
      self(self, v + 1, depth + 1);
    }
  };
  rec(rec, 1, 0);
}

}  // namespace

std::vector<MinorIndex> minor_index_set(int n) {
  if (n < 1) fail(ErrorKind::WrongDimension, "index set needs n >= 1");
  std::vector<MinorIndex> out;
  for (int k = 0; k <= n; ++k) {
    std::vector<std::vector<int>> subs;
    subsets_of_size(n, k, subs);
    for (std::size_t a = 0; a < subs.size(); ++a)
      for (std::size_t b = a; b < subs.size(); ++b)
        out.push_back(MinorIndex{subs[a], subs[b]});
  }
  return out;
}

MinorIndexed::MinorIndexed(int n) : n_(n) {
  for (auto& idx : minor_index_set(n)) coords_.emplace(std::move(idx), Rational(0));
}

Rational& MinorIndexed::at(const std::vector<int>& rows, const std::vector<int>& cols) {
  auto it = coords_.find(MinorIndex::make(rows, cols, n_));
  if (it == coords_.end()) fail(ErrorKind::BadSubset, "minor index not in canonical set");
  return it->second;
}

const Rational& MinorIndexed::at(const std::vector<int>& rows,
                                 const std::vector<int>& cols) const {
  auto it = coords_.find(MinorIndex::make(rows, cols, n_));
  if (it == coords_.end()) fail(ErrorKind::BadSubset, "minor index not in canonical set");
  return it->second;
}

bool MinorIndexed::all_zero() const {
  for (const auto& [idx, value] : coords_)
    if (!value.is_zero()) return false;
  return true;
}

namespace {

Matrix standard_symplectic(int n) {
  Matrix form(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    form.at(i, n + i) = Rational(-1);
    form.at(n + i, i) = Rational(1);
  }
  return form;
}

}  // namespace

LagrangianPlane::LagrangianPlane(Matrix basis) : basis_(std::move(basis)) {
  if (basis_.cols() < 1 || basis_.rows() != 2 * basis_.cols())
    fail(ErrorKind::BadShape, "plane basis must be 2n x n");
  if (!is_lagrangian(basis_))
    fail(ErrorKind::BadShape, "basis does not span a Lagrangian plane");
}

LagrangianPlane LagrangianPlane::graph(const SymMatrix& h) {
  const int n = h.n();
  Matrix basis(2 * n, n);
  for (int j = 0; j < n; ++j) {
    basis.at(j, j) = Rational(1);
    for (int i = 0; i < n; ++i) basis.at(n + i, j) = h.at(i, j);
  }
  return LagrangianPlane(std::move(basis));
}

bool is_lagrangian(const Matrix& basis) {
  const int n = basis.cols();
  if (n < 1 || basis.rows() != 2 * n)
    fail(ErrorKind::BadShape, "plane basis must be 2n x n");
  if (rank(basis) != n) return false;
  Matrix gram = basis.transpose() * standard_symplectic(n) * basis;
  return gram.is_zero();
}

EmbeddingDims embedding_dims(int n) {
  if (n < 1) fail(ErrorKind::WrongDimension, "embedding_dims needs n >= 1");
  long raw = 0;
  long binom = 1;
  for (int k = 0; k <= n; ++k) {
    raw += binom * (binom + 1) / 2;
    binom = binom * (n - k) / (k + 1);
  }
  if (n <= 3) return {raw, raw, true};
  if (n == 4) return {raw, raw - 1, true};
  return {raw, raw, false};
}

PluckerVector plucker(const SymMatrix& h, int max_n) {
  if (h.n() > max_n)
    fail(ErrorKind::DimensionTooLarge, "plucker limited to n <= " + std::to_string(max_n));
  PluckerVector v(h.n());
  const Matrix m = h.to_matrix();
  for (auto& idx : minor_index_set(h.n())) v.at(idx.rows, idx.cols) = minor(m, idx.rows, idx.cols);
  return v;
}

namespace {

// plucker(reconstruct(v)) rescaled by the order-0 slot must reproduce v.
bool reconstruction_consistent(const PluckerVector& v) {
  const Rational z0 = v.at({}, {});
  const SymMatrix h = reconstruct_big_cell(v);
  const PluckerVector w = plucker(h, v.n());
  for (const auto& [idx, value] : v.coords())
    if (value != z0 * w.at(idx.rows, idx.cols)) return false;
  return true;
}

bool relations_n2(const PluckerVector& v) {
  const Rational z0 = v.at({}, {});
  const Rational z1 = v.at({1}, {1}), z2 = v.at({1}, {2}), z3 = v.at({2}, {2});
  const Rational z4 = v.at({1, 2}, {1, 2});
  return z1 * z3 - z2 * z2 - z0 * z4 == Rational(0);
}

bool relations_n3(const PluckerVector& v) {
  const Rational z0 = v.at({}, {});
  // Degree-1 coordinates as the symmetric matrix Z.
  const Rational z1 = v.at({1}, {1}), z2 = v.at({1}, {2}), z3 = v.at({1}, {3});
  const Rational z4 = v.at({2}, {2}), z5 = v.at({2}, {3}), z6 = v.at({3}, {3});
  // Degree-2 coordinates in cofactor convention: w_ij = (-1)^{i+j} times the
  // complementary minor, matching the adjugate of the big-cell matrix.
  const Rational w11 = v.at({2, 3}, {2, 3});
  const Rational w12 = -v.at({2, 3}, {1, 3});
  const Rational w13 = v.at({2, 3}, {1, 2});
  const Rational w22 = v.at({1, 3}, {1, 3});
  const Rational w23 = -v.at({1, 3}, {1, 2});
  const Rational w33 = v.at({1, 2}, {1, 2});
  const Rational z13 = v.at({1, 2, 3}, {1, 2, 3});

  const Rational zero(0);
  if (z0 * w11 - (z4 * z6 - z5 * z5) != zero) return false;
  if (z0 * w12 - (z3 * z5 - z2 * z6) != zero) return false;
  if (z0 * w13 - (z2 * z5 - z3 * z4) != zero) return false;
  if (z0 * w22 - (z1 * z6 - z3 * z3) != zero) return false;
  if (z0 * w23 - (z2 * z3 - z1 * z5) != zero) return false;
  if (z0 * w33 - (z1 * z4 - z2 * z2) != zero) return false;
  // Trace pairing of Z with its cofactor coordinates; the scalar 3 is forced
  // by tr(h * adj(h)) = 3 det(h) in dimension 3.
  const Rational trace = z1 * w11 + z4 * w22 + z6 * w33 +
                         Rational(2) * (z2 * w12 + z3 * w13 + z5 * w23);
  return Rational(3) * z0 * z13 == trace;
}

}  // namespace

bool check_relations(const PluckerVector& v) {
  if (v.all_zero()) return false;
  const int n = v.n();
  if (n == 1) return true;
  if (n == 2) return relations_n2(v);
  if (n == 3) return relations_n3(v);
  if (n == 4) {
    const Rational linear = -v.at({1, 2}, {3, 4}) + v.at({1, 3}, {2, 4}) -
                            v.at({1, 4}, {2, 3});
    if (!linear.is_zero()) return false;
  }
  if (v.at({}, {}).is_zero())
    fail(ErrorKind::UnsupportedAtInfinity,
         "no complete relation set for points at infinity when n >= 4");
  return reconstruction_consistent(v);
}

SymMatrix reconstruct_big_cell(const PluckerVector& v) {
  const Rational z0 = v.at({}, {});
  if (z0.is_zero()) fail(ErrorKind::AtInfinity, "point at infinity has no big-cell chart");
  SymMatrix h(v.n());
  for (int i = 1; i <= v.n(); ++i)
    for (int j = i; j <= v.n(); ++j) h.at(i - 1, j - 1) = v.at({i}, {j}) / z0;
  return h;
}

}  // namespace lgr
