#pragma once

#include <compare>
#include <map>
#include <vector>

#include "lgr/matrix.hpp"

namespace lgr {

// A big-cell point: symmetric n x n matrix stored as the packed upper
// triangle. Entry access is 0-based and folds (i,j) ~ (j,i).
class SymMatrix {
public:
  explicit SymMatrix(int n);
  static SymMatrix from_matrix(const Matrix& m);
  Matrix to_matrix() const;

  int n() const { return n_; }
  Rational& at(int i, int j) { return upper_[pack(i, j)]; }
  const Rational& at(int i, int j) const { return upper_[pack(i, j)]; }
  bool is_zero() const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
  std::size_t pack(int i, int j) const;

  int n_;
  std::vector<Rational> upper_;
};

// Canonical label of one minor: an unordered pair {rows, cols} of equal-size
// strictly increasing 1-based subsets, stored with rows <= cols. Ordered by
// subset size, then lexicographically, for stable serialization.
struct MinorIndex {
  std::vector<int> rows, cols;

  // Sorts each list, orders the pair; rejects duplicates and bad ranges.
  static MinorIndex make(std::vector<int> rows, std::vector<int> cols, int n);

  friend bool operator==(const MinorIndex&, const MinorIndex&) = default;
  friend bool operator<(const MinorIndex& a, const MinorIndex& b) {
    if (a.rows.size() != b.rows.size()) return a.rows.size() < b.rows.size();
    if (a.rows != b.rows) return a.rows < b.rows;
    return a.cols < b.cols;
  }
};

// The complete canonical index set for dimension n, in serialization order.
std::vector<MinorIndex> minor_index_set(int n);

// One exact value per canonical minor index. Doubles as a point of the
// Pluecker space (image coordinates) and of its dual (section coefficients).
class MinorIndexed {
public:
  explicit MinorIndexed(int n);

  int n() const { return n_; }
  Rational& at(const std::vector<int>& rows, const std::vector<int>& cols);
  const Rational& at(const std::vector<int>& rows, const std::vector<int>& cols) const;
  const std::map<MinorIndex, Rational>& coords() const { return coords_; }
  bool all_zero() const;

  friend bool operator==(const MinorIndexed&, const MinorIndexed&) = default;

private:
  int n_;
  std::map<MinorIndex, Rational> coords_;
};

using PluckerVector = MinorIndexed;
using MaCoefficients = MinorIndexed;

// An n-dimensional isotropic subspace given by a 2n x n column-span basis.
class LagrangianPlane {
public:
  explicit LagrangianPlane(Matrix basis);
  static LagrangianPlane graph(const SymMatrix& h);

  int n() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

private:
  Matrix basis_;
};

struct EmbeddingDims {
  long raw_minor_count;
  long embedding_dim;
  // False when the artifact does not know the full relation count (n >= 5).
  bool relations_known;
  friend bool operator==(const EmbeddingDims&, const EmbeddingDims&) = default;
};

EmbeddingDims embedding_dims(int n);

// All minors of h, indexed canonically; the order-0 slot is 1.
PluckerVector plucker(const SymMatrix& h, int max_n = 6);

// Exact membership test for the embedding image: complete quadric sets for
// n <= 3, the linear minor relation plus big-cell reconstruction for n = 4,
// reconstruction only for n >= 5. Points at infinity are undecidable for
// n >= 4 once the linear check passes.
bool check_relations(const PluckerVector& v);

// h_ij = coords[{i},{j}] / coords[{},{}].
SymMatrix reconstruct_big_cell(const PluckerVector& v);

// True iff the columns span an n-dimensional isotropic subspace.
bool is_lagrangian(const Matrix& basis);

}  // namespace lgr
