#include "json_io.hpp"

#include <fstream>
#include <sstream>

#include "lgr/error.hpp"

namespace lgr::io {

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorKind::IoError, std::string("missing key \"") + key + "\"");
  return j.at(key);
}

int int_from(const Json& j, const char* what) {
  if (!j.is_number_integer())
    fail(ErrorKind::IoError, std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_list_from(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorKind::IoError, std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(int_from(e, what));
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::IoError, std::string("bad JSON: ") + e.what());
  }
}

Json load_payload(const std::string& arg) {
  std::size_t i = 0;
  while (i < arg.size() && std::isspace(static_cast<unsigned char>(arg[i]))) ++i;
  if (i < arg.size() && (arg[i] == '[' || arg[i] == '{')) return parse_json(arg);
  std::ifstream in(arg);
  if (!in) fail(ErrorKind::IoError, "cannot read file '" + arg + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

std::string dump(const Json& j) { return j.dump(); }

Rational rational_from(const Json& j) {
  if (!j.is_string())
    fail(ErrorKind::IoError, "rationals travel as strings like \"2/3\"");
  return Rational::parse(j.get<std::string>());
}

Matrix matrix_from(const Json& j) {
  if (!j.is_array() || j.empty())
    fail(ErrorKind::IoError, "a matrix is a nonempty array of rows");
  const int rows = static_cast<int>(j.size());
  int cols = -1;
  for (const auto& row : j) {
    if (!row.is_array() || row.empty())
      fail(ErrorKind::IoError, "each matrix row is a nonempty array");
    if (cols < 0) cols = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols)
      fail(ErrorKind::BadShape, "matrix rows have unequal lengths");
  }
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) m.at(i, k) = rational_from(j.at(i).at(k));
  return m;
}

SymMatrix sym_from(const Json& j) { return SymMatrix::from_matrix(matrix_from(j)); }

std::vector<Rational> covector_from(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::IoError, "a covector is an array of rationals");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(rational_from(e));
  return out;
}

MinorIndexed minor_indexed_from(const Json& j, int n) {
  if (!j.is_array())
    fail(ErrorKind::IoError, "minor-indexed values are arrays of {rows, cols, value}");
  MinorIndexed v(n);
  for (const auto& e : j) {
    std::vector<int> rows = int_list_from(need(e, "rows"), "rows");
    std::vector<int> cols = int_list_from(need(e, "cols"), "cols");
    v.at(rows, cols) = rational_from(need(e, "value"));
  }
  return v;
}

SymplecticMatrix symplectic_from(const Json& j) {
  return SymplecticMatrix(matrix_from(need(j, "A")), matrix_from(need(j, "B")),
                          matrix_from(need(j, "C")), matrix_from(need(j, "D")));
}

SpAlgebraElement algebra_from(const Json& j) {
  return SpAlgebraElement(matrix_from(need(j, "Bdot")), matrix_from(need(j, "Cdot")),
                          matrix_from(need(j, "Ddot")));
}

ChowSubspace chow_from(const Json& j) { return ChowSubspace(matrix_from(need(j, "D"))); }

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const SymMatrix& h) { return to_json(h.to_matrix()); }

Json to_json(const std::vector<Rational>& a) {
  Json out = Json::array();
  for (const auto& x : a) out.push_back(x.str());
  return out;
}

Json to_json(const MinorIndexed& v) {
  Json out = Json::array();
  for (const auto& [idx, value] : v.coords()) {
    Json e = Json::object();
    e["rows"] = idx.rows;
    e["cols"] = idx.cols;
    e["value"] = value.str();
    out.push_back(std::move(e));
  }
  return out;
}

Json to_json(const SymplecticMatrix& m) {
  Json out = Json::object();
  out["A"] = to_json(m.A());
  out["B"] = to_json(m.B());
  out["C"] = to_json(m.C());
  out["D"] = to_json(m.D());
  return out;
}

Json to_json(const SpAlgebraElement& x) {
  Json out = Json::object();
  out["Bdot"] = to_json(x.Bdot());
  out["Cdot"] = to_json(x.Cdot());
  out["Ddot"] = to_json(x.Ddot());
  return out;
}

Json to_json(const ChowSubspace& d) {
  Json out = Json::object();
  out["D"] = to_json(d.D());
  return out;
}

Json to_json(const Signature& s) {
  Json out = Json::object();
  out["positive"] = s.positive;
  out["negative"] = s.negative;
  out["zero"] = s.zero;
  return out;
}

Json to_json(const PointClass& c) {
  Json out = Json::object();
  out["rank"] = c.rank;
  out["signature"] = to_json(c.signature);
  out["label"] = label_name(c.label);
  return out;
}

Json to_json(const Goursat2d& g) {
  Json out = Json::object();
  out["indicator"] = g.indicator.str();
  out["a"] = g.a.str();
  out["b"] = g.b.str();
  out["c"] = g.c.str();
  out["delta"] = g.delta.str();
  out["e"] = g.e.str();
  return out;
}

}  // namespace lgr::io
