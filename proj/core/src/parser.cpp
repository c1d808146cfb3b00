#include "lgr/parser.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "lgr/error.hpp"

namespace lgr {

namespace {

// Powers of bare rationals are exact at any size, but a fuzzer-supplied
// exponent still has to terminate in reasonable time.
constexpr long kExponentCap = 4096;

// Recursion bound so pathological nesting errors out instead of exhausting
// the stack.
constexpr int kDepthCap = 512;

struct Parser {
  const std::string& s;
  const int n;
  std::size_t pos = 0;
  int depth = 0;

  struct DepthGuard {
    int& d;
    DepthGuard(Parser& p) : d(p.depth) {
      if (++d > kDepthCap)
        fail(ErrorKind::SyntaxError, "expression nested too deeply", p.pos);
    }
    ~DepthGuard() { --d; }
  };

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool digit_here() const {
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }

  bool take(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c) return false;
    ++pos;
    return true;
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      fail(ErrorKind::SyntaxError, std::string("expected ") + what, pos);
    ++pos;
  }

  mpz_class big_uint() {
    skip_ws();
    if (!digit_here()) fail(ErrorKind::SyntaxError, "expected digits", pos);
    const std::size_t start = pos;
    while (digit_here()) ++pos;
    return mpz_class(s.substr(start, pos - start), 10);
  }

  Rational rational_literal() {
    mpz_class num = big_uint();
    skip_ws();
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      skip_ws();
      const std::size_t dpos = pos;
      mpz_class den = big_uint();
      if (den == 0)
        fail(ErrorKind::ZeroDenominator, "zero denominator in rational literal", dpos);
      return Rational(std::move(num)) / Rational(std::move(den));
    }
    return Rational(std::move(num));
  }

  // The bare matrix token inside det/tr/minor; "p11" is not accepted here.
  void matrix_p() {
    skip_ws();
    const std::size_t start = pos;
    if (pos >= s.size() || s[pos] != 'p')
      fail(ErrorKind::SyntaxError, "expected the matrix token p", pos);
    ++pos;
    if (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos])))
      fail(ErrorKind::SyntaxError, "expected the bare matrix token p", start);
  }

  std::vector<int> idxlist() {
    std::vector<int> out;
    skip_ws();
    if (!digit_here()) return out;
    for (;;) {
      skip_ws();
      const std::size_t start = pos;
      mpz_class v = big_uint();
      if (v < 1 || v > n) fail(ErrorKind::BadIndex, "minor index out of range", start);
      out.push_back(static_cast<int>(v.get_si()));
      if (!take(',')) break;
    }
    return out;
  }

  PdePolynomial expr() {
    PdePolynomial acc = term();
    for (;;) {
      if (take('+'))
        acc += term();
      else if (take('-'))
        acc -= term();
      else
        return acc;
    }
  }

  PdePolynomial term() {
    PdePolynomial acc = factor();
    while (take('*')) acc *= factor();
    return acc;
  }

  PdePolynomial factor() {
    DepthGuard guard(*this);
    if (take('-')) return -factor();
    PdePolynomial b = base();
    skip_ws();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      skip_ws();
      const std::size_t start = pos;
      mpz_class e = big_uint();
      if (e > kExponentCap) fail(ErrorKind::LimitsExceeded, "exponent too large", start);
      return pow(b, static_cast<int>(e.get_si()));
    }
    return b;
  }

  PdePolynomial base() {
    skip_ws();
    if (pos >= s.size()) fail(ErrorKind::SyntaxError, "unexpected end of input", pos);
    const char c = s[pos];
    if (c == '(') {
      ++pos;
      PdePolynomial e = expr();
      expect(')', ")");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return PdePolynomial::constant(n, rational_literal());
    if (std::isalpha(static_cast<unsigned char>(c))) return named();
    fail(ErrorKind::SyntaxError, "expected a term", pos);
  }

  PdePolynomial named() {
    const std::size_t start = pos;
    std::size_t end = pos;
    while (end < s.size() && std::isalpha(static_cast<unsigned char>(s[end]))) ++end;
    const std::string id = s.substr(start, end - start);
    pos = end;
    if (id == "p") return pvar(start);
    if (id == "det") {
      expect('(', "(");
      matrix_p();
      expect(')', ")");
      return det_poly(n);
    }
    if (id == "tr") {
      expect('(', "(");
      matrix_p();
      expect(')', ")");
      PdePolynomial t(n);
      for (int i = 1; i <= n; ++i) t += PdePolynomial::p_var(n, i, i);
      return t;
    }
    if (id == "minor") return minor_call(start);
    fail(ErrorKind::SyntaxError, "unknown identifier " + id, start);
  }

  PdePolynomial pvar(std::size_t start) {
    if (!(pos + 1 < s.size() && digit_here() &&
          std::isdigit(static_cast<unsigned char>(s[pos + 1]))))
      fail(ErrorKind::SyntaxError, "p needs two digit indices", pos);
    const int i = s[pos] - '0';
    const int j = s[pos + 1] - '0';
    pos += 2;
    if (digit_here())
      fail(ErrorKind::SyntaxError, "variable indices are single digits", pos);
    if (i < 1 || j < i || j > n)
      fail(ErrorKind::BadIndex, "p variable needs 1 <= i <= j <= n", start);
    return PdePolynomial::p_var(n, i, j);
  }

  // Lowered by Leibniz on the symbolic submatrix, so repeated or unsorted
  // indices behave like determinant rows: repeats give 0, swaps flip sign.
  PdePolynomial minor_call(std::size_t start) {
    expect('(', "(");
    matrix_p();
    expect(';', ";");
    std::vector<int> rows = idxlist();
    expect(';', ";");
    std::vector<int> cols = idxlist();
    expect(')', ")");
    if (rows.size() != cols.size())
      fail(ErrorKind::BadIndex, "minor needs equally many row and column indices", start);
    const int k = static_cast<int>(rows.size());
    std::vector<std::vector<PdePolynomial>> table(
        k, std::vector<PdePolynomial>(k, PdePolynomial(n)));
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c)
        table[r][c] = PdePolynomial::p_var(n, std::min(rows[r], cols[c]),
                                           std::max(rows[r], cols[c]));
    if (k == 0) return PdePolynomial::constant(n, Rational(1));
    return det_of(table);
  }
};

}  // namespace

PdePolynomial parse_pde(const std::string& text, int n) {
  if (n < 1 || n > 9)
    fail(ErrorKind::DimensionTooLarge, "parser handles 1 <= n <= 9");
  Parser p{text, n};
  PdePolynomial out = p.expr();
  p.skip_ws();
  if (p.pos < text.size())
    fail(ErrorKind::SyntaxError, "unexpected trailing input", p.pos);
  return out;
}

std::string format_pde(const PdePolynomial& f) { return to_string(f); }

}  // namespace lgr
