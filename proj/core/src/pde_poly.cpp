#include "lgr/pde_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lgr {

UniPoly UniPoly::from_coeffs(std::vector<Rational> c) {
  UniPoly p;
  p.c_ = std::move(c);
  p.trim();
  return p;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::eval_at(const Rational& t0) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t0 + *it;
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly p = *this;
  for (auto& x : p.c_) x = -x;
  return p;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  c_ = std::move(out);
  trim();
  return *this;
}

PdePolynomial::PdePolynomial(int n) : n_(n) {
  if (n < 1 || n > 9)
    fail(ErrorKind::DimensionTooLarge, "polynomial grid needs 1 <= n <= 9");
}

PdePolynomial PdePolynomial::constant(int n, const Rational& c) {
  PdePolynomial f(n);
  if (!c.is_zero()) f.terms_.emplace(Monomial{std::vector<int>(n * n, 0)}, c);
  return f;
}

PdePolynomial PdePolynomial::p_var(int n, int i, int j) {
  PdePolynomial f(n);
  if (i < 1 || j < 1 || i > n || j > n || i > j)
    fail(ErrorKind::BadIndex, "p variable needs 1 <= i <= j <= n");
  Monomial m{std::vector<int>(n * n, 0)};
  if (i == j) {
    m.exps[(i - 1) * n + (j - 1)] = 1;
    f.terms_.emplace(std::move(m), Rational(1));
  } else {
    m.exps[(i - 1) * n + (j - 1)] = 1;
    f.terms_.emplace(m, Rational(1, 2));
    m.exps[(i - 1) * n + (j - 1)] = 0;
    m.exps[(j - 1) * n + (i - 1)] = 1;
    f.terms_.emplace(std::move(m), Rational(1, 2));
  }
  return f;
}

void PdePolynomial::add_term(Monomial m, Rational c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PdePolynomial PdePolynomial::operator-() const {
  PdePolynomial f(n_);
  for (const auto& [m, c] : terms_) f.terms_.emplace(m, -c);
  return f;
}

namespace {

void require_same_grid(const PdePolynomial& a, const PdePolynomial& b) {
  if (a.n() != b.n())
    fail(ErrorKind::DimensionMismatch, "polynomials live on different grids");
}

}  // namespace

PdePolynomial& PdePolynomial::operator+=(const PdePolynomial& o) {
  require_same_grid(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PdePolynomial& PdePolynomial::operator-=(const PdePolynomial& o) {
  require_same_grid(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

PdePolynomial& PdePolynomial::operator*=(const PdePolynomial& o) {
  require_same_grid(*this, o);
  if (!is_zero() && !o.is_zero() && degree() + o.degree() > kDegreeCap)
    fail(ErrorKind::LimitsExceeded, "product exceeds the total-degree cap");
  PdePolynomial out(n_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma;
      for (std::size_t v = 0; v < m.exps.size(); ++v) m.exps[v] += mb.exps[v];
      out.add_term(std::move(m), ca * cb);
    }
  terms_ = std::move(out.terms_);
  return *this;
}

PdePolynomial& PdePolynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

PdePolynomial diff(const PdePolynomial& f, int i, int j) {
  const int n = f.n();
  if (i < 1 || j < 1 || i > n || j > n)
    fail(ErrorKind::BadIndex, "derivative index out of range");
  const int v = (i - 1) * n + (j - 1);
  PdePolynomial out(n);
  for (const auto& [m, c] : f.terms()) {
    if (m.exps[v] == 0) continue;
    Monomial d = m;
    d.exps[v] -= 1;
    out.add_term(std::move(d), Rational(m.exps[v]) * c);
  }
  return out;
}

Rational eval(const PdePolynomial& f, const SymMatrix& h) {
  return f.eval_ring(h.to_matrix());
}

DualRational eval_dual(const PdePolynomial& f, const MatrixT<DualRational>& grid) {
  return f.eval_ring(grid);
}

UniPoly restrict_line(const PdePolynomial& f, const SymMatrix& h,
                      const std::vector<Rational>& a) {
  const int n = f.n();
  if (static_cast<int>(a.size()) != n || h.n() != n)
    fail(ErrorKind::DimensionMismatch, "line restriction size mismatch");
  bool nonzero = false;
  for (const auto& x : a) nonzero = nonzero || !x.is_zero();
  if (!nonzero) fail(ErrorKind::ZeroCovector, "line direction covector is zero");
  MatrixT<UniPoly> grid(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      grid.at(i, j) = UniPoly::from_coeffs({h.at(i, j), a[i] * a[j]});
  return f.eval_ring(grid);
}

PdePolynomial pow(const PdePolynomial& f, int k) {
  if (k < 0) fail(ErrorKind::BadIndex, "negative polynomial power");
  PdePolynomial acc = PdePolynomial::constant(f.n(), Rational(1));
  for (int t = 0; t < k; ++t) acc *= f;
  return acc;
}

PdePolynomial substituted(const PdePolynomial& f,
                          const std::vector<std::vector<PdePolynomial>>& grid) {
  const int n = f.n();
  if (static_cast<int>(grid.size()) != n)
    fail(ErrorKind::DimensionMismatch, "substitution grid size mismatch");
  for (const auto& row : grid)
    if (static_cast<int>(row.size()) != n)
      fail(ErrorKind::DimensionMismatch, "substitution grid size mismatch");
  const int target = grid[0][0].n();
  PdePolynomial sum(target);
  for (const auto& [mono, coeff] : f.terms()) {
    PdePolynomial prod = PdePolynomial::constant(target, coeff);
    for (int v = 0; v < n * n; ++v)
      for (int e = 0; e < mono.exps[v]; ++e) prod *= grid[v / n][v % n];
    sum += prod;
  }
  return sum;
}

PdePolynomial det_of(const std::vector<std::vector<PdePolynomial>>& a) {
  const int k = static_cast<int>(a.size());
  if (k == 0) fail(ErrorKind::BadShape, "empty determinant array");
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != k)
      fail(ErrorKind::BadShape, "determinant array is not square");
  const int n = a[0][0].n();
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  PdePolynomial sum(n);
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    PdePolynomial prod = PdePolynomial::constant(n, Rational(inversions % 2 ? -1 : 1));
    for (int i = 0; i < k; ++i) prod *= a[i][perm[i]];
    sum += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

PdePolynomial minor_poly(int n, const std::vector<int>& I, const std::vector<int>& J) {
  // Reuse the index validation from the Pluecker side.
  MinorIndex idx = MinorIndex::make(I, J, n);
  if (idx.rows.empty()) return PdePolynomial::constant(n, Rational(1));
  const int k = static_cast<int>(I.size());
  std::vector<int> rows = I, cols = J;
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  std::vector<std::vector<PdePolynomial>> table(
      k, std::vector<PdePolynomial>(k, PdePolynomial(n)));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c)
      table[r][c] = PdePolynomial::p_var(n, std::min(rows[r], cols[c]),
                                         std::max(rows[r], cols[c]));
  return det_of(table);
}

PdePolynomial det_poly(int n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  return minor_poly(n, all, all);
}

namespace {

std::string monomial_str(const Monomial& m, int n) {
  std::string out;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      // Packed p-grid slot for the pair (i, j).
      const int slot = (i - 1) * n - (i - 1) * (i - 2) / 2 + (j - i);
      const int e = m.exps[slot];
      if (e == 0) continue;
      if (!out.empty()) out += "*";
      out += "p";
      out += static_cast<char>('0' + i);
      out += static_cast<char>('0' + j);
      if (e > 1) out += "^" + std::to_string(e);
    }
  return out;
}

}  // namespace

std::string to_string(const PdePolynomial& f) {
  const int n = f.n();
  // Fold the symmetric q-grid onto the upper-triangle p-grid; on canonical
  // input this inverts the p -> q substitution.
  std::map<Monomial, Rational> folded;
  for (const auto& [m, c] : f.terms()) {
    Monomial pm{std::vector<int>(n * (n + 1) / 2, 0)};
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const int e = m.exps[(i - 1) * n + (j - 1)];
        if (e == 0) continue;
        const int lo = std::min(i, j), hi = std::max(i, j);
        pm.exps[(lo - 1) * n - (lo - 1) * (lo - 2) / 2 + (hi - lo)] += e;
      }
    folded[pm] += c;
  }
  std::erase_if(folded, [](const auto& kv) { return kv.second.is_zero(); });
  if (folded.empty()) return "0";

  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : folded) {
    Rational mag = c;
    if (first) {
      if (c.sign() < 0) {
        out << "-";
        mag = -c;
      }
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) mag = -c;
    }
    const std::string vars = monomial_str(m, n);
    if (vars.empty()) {
      out << mag.str();
    } else if (mag == Rational(1)) {
      out << vars;
    } else {
      out << mag.str() << "*" << vars;
    }
  }
  return out.str();
}

}  // namespace lgr
