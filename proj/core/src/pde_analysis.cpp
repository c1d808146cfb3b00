#include "lgr/pde_analysis.hpp"

#include <algorithm>
#include <map>

namespace lgr {

const char* label_name(PointLabel label) {
  switch (label) {
    case PointLabel::Zero: return "zero";
    case PointLabel::Degenerate: return "degenerate";
    case PointLabel::Elliptic: return "elliptic";
    case PointLabel::Hyperbolic: return "hyperbolic";
    case PointLabel::Ultrahyperbolic: return "ultrahyperbolic";
  }
  return "?";
}

SymbolMatrix symbol(const PdePolynomial& f, const SymMatrix& h) {
  const int n = f.n();
  if (h.n() != n) fail(ErrorKind::DimensionMismatch, "symbol point size mismatch");
  SymMatrix s(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) s.at(i - 1, j - 1) = eval(diff(f, i, j), h);
  return s;
}

PointClass classify_at(const PdePolynomial& f, const SymMatrix& h) {
  const Signature sig = signature(symbol(f, h).to_matrix());
  PointClass out;
  out.signature = sig;
  out.rank = sig.positive + sig.negative;
  if (out.rank == 0)
    out.label = PointLabel::Zero;
  else if (sig.zero > 0)
    out.label = PointLabel::Degenerate;
  else if (std::min(sig.positive, sig.negative) == 0)
    out.label = PointLabel::Elliptic;
  else if (std::min(sig.positive, sig.negative) == 1)
    out.label = PointLabel::Hyperbolic;
  else
    out.label = PointLabel::Ultrahyperbolic;
  return out;
}

namespace {

void require_on_shell(const PdePolynomial& f, const SymMatrix& h,
                      const std::vector<Rational>& a, bool off_shell) {
  if (static_cast<int>(a.size()) != f.n() || h.n() != f.n())
    fail(ErrorKind::DimensionMismatch, "characteristic query size mismatch");
  bool nonzero = false;
  for (const auto& x : a) nonzero = nonzero || !x.is_zero();
  if (!nonzero) fail(ErrorKind::ZeroCovector, "characteristic covector is zero");
  if (!off_shell && !eval(f, h).is_zero())
    fail(ErrorKind::NotOnEquation, "point does not satisfy F = 0");
}

}  // namespace

bool is_characteristic(const PdePolynomial& f, const SymMatrix& h,
                       const std::vector<Rational>& a, bool off_shell) {
  require_on_shell(f, h, a, off_shell);
  const SymMatrix s = symbol(f, h);
  Rational q(0);
  for (int i = 0; i < f.n(); ++i)
    for (int j = 0; j < f.n(); ++j) q += s.at(i, j) * a[i] * a[j];
  return q.is_zero();
}

bool is_strong_characteristic(const PdePolynomial& f, const SymMatrix& h,
                              const std::vector<Rational>& a, bool off_shell) {
  require_on_shell(f, h, a, off_shell);
  return restrict_line(f, h, a).is_zero();
}

SymMatrix veronese(const std::vector<Rational>& a) {
  SymMatrix v(static_cast<int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j)
      v.at(static_cast<int>(i), static_cast<int>(j)) = a[i] * a[j];
  return v;
}

int tangent_rank(const SymMatrix& v) { return rank(v.to_matrix()); }

bool ma_test(const PdePolynomial& f, int max_n) {
  const int n = f.n();
  if (n > max_n)
    fail(ErrorKind::LimitsExceeded, "ma_test limited to n <= " + std::to_string(max_n));
  // Cache first derivatives; the pairing sums reuse them heavily.
  std::vector<PdePolynomial> first(n * n, PdePolynomial(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) first[(i - 1) * n + (j - 1)] = diff(f, i, j);
  auto second = [&](int a, int b, int c, int d) {
    return diff(first[(a - 1) * n + (b - 1)], c, d);
  };
  // The symmetrized derivative depends only on the multiset {i,j,h,k}, so
  // sorted 4-tuples cover every case.
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int h = j; h <= n; ++h)
        for (int k = h; k <= n; ++k) {
          PdePolynomial sum = second(i, j, h, k);
          sum += second(i, h, j, k);
          sum += second(i, k, j, h);
          if (!sum.is_zero()) return false;
        }
  return true;
}

MaCoefficients ma_coefficients(const PdePolynomial& f) {
  const int n = f.n();
  if (f.is_zero()) fail(ErrorKind::AllZero, "zero polynomial defines no hypersurface");
  const auto index_set = minor_index_set(n);
  std::vector<PdePolynomial> basis;
  basis.reserve(index_set.size());
  for (const auto& idx : index_set) basis.push_back(minor_poly(n, idx.rows, idx.cols));

  // One linear constraint per monomial appearing anywhere.
  std::map<Monomial, int> row_of;
  auto note = [&](const PdePolynomial& g) {
    for (const auto& [m, c] : g.terms()) row_of.emplace(m, 0);
  };
  for (const auto& g : basis) note(g);
  note(f);
  int rows = 0;
  for (auto& [m, r] : row_of) r = rows++;

  Matrix a(rows, static_cast<int>(basis.size()));
  for (int col = 0; col < static_cast<int>(basis.size()); ++col)
    for (const auto& [m, c] : basis[col].terms()) a.at(row_of.at(m), col) = c;
  std::vector<Rational> b(rows, Rational(0));
  for (const auto& [m, c] : f.terms()) b[row_of.at(m)] = c;

  auto x = solve_canonical(a, b);
  if (!x) fail(ErrorKind::NotMongeAmpere, "polynomial is not a linear minor combination");
  MaCoefficients out(n);
  for (std::size_t t = 0; t < index_set.size(); ++t)
    out.at(index_set[t].rows, index_set[t].cols) = (*x)[t];
  return out;
}

PdePolynomial hyperplane_section(const MaCoefficients& c) {
  if (c.all_zero()) fail(ErrorKind::AllZero, "coefficient vector is zero");
  PdePolynomial f(c.n());
  for (const auto& [idx, value] : c.coords()) {
    if (value.is_zero()) continue;
    f += value * minor_poly(c.n(), idx.rows, idx.cols);
  }
  return f;
}

}  // namespace lgr
