#include "commands.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "lgr/error.hpp"
#include "lgr/parser.hpp"

namespace lgr::cli {

using io::Json;

namespace {

const Json& need(const Json& spec, const char* key) {
  if (!spec.is_object() || !spec.contains(key))
    fail(ErrorKind::IoError, std::string("job needs a \"") + key + "\" field");
  return spec.at(key);
}

int need_n(const Json& spec) {
  const Json& j = need(spec, "n");
  if (!j.is_number_integer()) fail(ErrorKind::IoError, "\"n\" must be an integer");
  return j.get<int>();
}

std::string need_text(const Json& spec, const char* key) {
  const Json& j = need(spec, key);
  if (!j.is_string()) fail(ErrorKind::IoError, std::string("\"") + key + "\" must be a string");
  return j.get<std::string>();
}

SymMatrix need_sym(const Json& spec, const char* key, int n) {
  SymMatrix h = io::sym_from(need(spec, key));
  if (h.n() != n)
    fail(ErrorKind::DimensionMismatch, std::string("\"") + key + "\" does not match n");
  return h;
}

// A subspace payload: either {"D": rows} or the bare rows array.
ChowSubspace need_chow(const Json& spec) {
  const Json& j = need(spec, "d");
  if (j.is_array()) return ChowSubspace(io::matrix_from(j));
  return io::chow_from(j);
}

PdePolynomial need_pde(const Json& spec, int n) {
  return parse_pde(need_text(spec, "pde"), n);
}

}  // namespace

Caps caps_from_env() {
  Caps caps;
  if (const char* raw = std::getenv("LGR_MAX_N")) {
    const std::string s(raw);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || value < 1 || value > 9)
      fail(ErrorKind::IoError, "LGR_MAX_N must be an integer in 1..9");
    caps.ma = value;
    caps.plucker = value;
  }
  return caps;
}

Json run_command(const Json& spec, const Caps& caps) {
  const std::string cmd = need_text(spec, "command");

  if (cmd == "plucker") {
    const int n = need_n(spec);
    return io::to_json(plucker(need_sym(spec, "matrix", n), caps.plucker));
  }
  if (cmd == "relations") {
    const int n = need_n(spec);
    return check_relations(io::minor_indexed_from(need(spec, "v"), n));
  }
  if (cmd == "act") {
    const SymplecticMatrix m = io::symplectic_from(need(spec, "m"));
    return io::to_json(action(m, need_sym(spec, "h", m.n())));
  }
  if (cmd == "infaction") {
    const SpAlgebraElement x = io::algebra_from(need(spec, "x"));
    return io::to_json(infinitesimal_action(x, need_sym(spec, "h", x.n())));
  }
  if (cmd == "ma-test") {
    const int n = need_n(spec);
    return ma_test(need_pde(spec, n), caps.ma);
  }
  if (cmd == "ma-coeffs") {
    const int n = need_n(spec);
    return io::to_json(ma_coefficients(need_pde(spec, n)));
  }
  if (cmd == "section") {
    const int n = need_n(spec);
    return format_pde(hyperplane_section(io::minor_indexed_from(need(spec, "coeffs"), n)));
  }
  if (cmd == "symbol") {
    const int n = need_n(spec);
    return io::to_json(symbol(need_pde(spec, n), need_sym(spec, "h", n)));
  }
  if (cmd == "classify") {
    const int n = need_n(spec);
    return io::to_json(classify_at(need_pde(spec, n), need_sym(spec, "h", n)));
  }
  if (cmd == "char") {
    const int n = need_n(spec);
    const PdePolynomial f = need_pde(spec, n);
    const SymMatrix h = need_sym(spec, "h", n);
    const auto alpha = io::covector_from(need(spec, "alpha"));
    bool off_shell = false;
    if (spec.contains("off_shell")) {
      if (!spec.at("off_shell").is_boolean())
        fail(ErrorKind::IoError, "\"off_shell\" must be a boolean");
      off_shell = spec.at("off_shell").get<bool>();
    }
    Json out = Json::object();
    out["characteristic"] = is_characteristic(f, h, alpha, off_shell);
    out["strong"] = is_strong_characteristic(f, h, alpha, off_shell);
    return out;
  }
  if (cmd == "chow") {
    const ChowSubspace d = need_chow(spec);
    if (spec.contains("n") && need_n(spec) != d.n())
      fail(ErrorKind::DimensionMismatch, "\"d\" does not match n");
    return format_pde(chow_transform(d, caps.ma));
  }
  if (cmd == "goursat2") {
    const ChowSubspace d = need_chow(spec);
    const Goursat2d g = goursat_indicator_2d(d);
    const ConicClass cls = dual_quadric_class_2d(ma_coefficients(chow_transform(d)));
    Json out = Json::object();
    out["indicator"] = g.indicator.str();
    out["class"] = conic_name(cls);
    out["a"] = g.a.str();
    out["b"] = g.b.str();
    out["c"] = g.c.str();
    out["delta"] = g.delta.str();
    out["e"] = g.e.str();
    return out;
  }
  if (cmd == "dual3") {
    const SymMatrix h = io::sym_from(need(spec, "h"));
    const MaCoefficients c = dual_tangent_hyperplane_3d(h);
    const PdePolynomial f = hyperplane_section(c);
    const Rational value = eval(f, h);
    const SymbolMatrix s = symbol(f, h);
    Json out = Json::object();
    out["coefficients"] = io::to_json(c);
    out["value_at_h"] = value.str();
    out["symbol_at_h"] = io::to_json(s);
    out["tangent"] = value.is_zero() && s.is_zero();
    return out;
  }
  if (cmd == "parse") {
    const int n = need_n(spec);
    return format_pde(need_pde(spec, n));
  }
  fail(ErrorKind::IoError, "unknown command '" + cmd + "'");
}

Json fixture_jobs() {
  Json jobs = Json::object();

  jobs["plucker_n2.json"] = Json{{"command", "plucker"},
                                 {"n", 2},
                                 {"matrix", Json::parse(R"([["1","2"],["2","5"]])")}};
  jobs["relations_n2.json"] =
      Json{{"command", "relations"},
           {"n", 2},
           {"v", Json::parse(R"([
             {"rows": [], "cols": [], "value": "1"},
             {"rows": [1], "cols": [1], "value": "1"},
             {"rows": [1], "cols": [2], "value": "2"},
             {"rows": [2], "cols": [2], "value": "5"},
             {"rows": [1,2], "cols": [1,2], "value": "1"}
           ])")}};
  jobs["ma_det3.json"] = Json{{"command", "ma-test"}, {"n", 3}, {"pde", "det(p) - 1"}};
  jobs["ma_det_tr3.json"] =
      Json{{"command", "ma-test"}, {"n", 3}, {"pde", "det(p) - tr(p)"}};
  jobs["ma_square_fails.json"] = Json{{"command", "ma-test"}, {"n", 2}, {"pde", "p11^2"}};
  jobs["classify_laplace2.json"] =
      Json{{"command", "classify"},
           {"n", 2},
           {"pde", "p11 + p22"},
           {"h", Json::parse(R"([["0","0"],["0","0"]])")}};
  jobs["classify_wave2.json"] =
      Json{{"command", "classify"},
           {"n", 2},
           {"pde", "p11 - p22"},
           {"h", Json::parse(R"([["0","0"],["0","0"]])")}};
  jobs["coeffs_det2.json"] =
      Json{{"command", "ma-coeffs"}, {"n", 2}, {"pde", "det(p) - 1"}};
  jobs["goursat_skew.json"] =
      Json{{"command", "goursat2"}, {"d", Json::parse(R"([["0","1"],["0","0"]])")}};
  jobs["chow_skew.json"] =
      Json{{"command", "chow"}, {"d", Json::parse(R"([["0","1"],["0","0"]])")}};
  jobs["dual3_identity.json"] =
      Json{{"command", "dual3"},
           {"h", Json::parse(R"([["1","0","0"],["0","1","0"],["0","0","1"]])")}};
  jobs["act_translate.json"] =
      Json{{"command", "act"},
           {"m", Json::parse(R"({
             "A": [["1","0"],["0","1"]],
             "B": [["0","0"],["0","0"]],
             "C": [["1","2"],["2","3"]],
             "D": [["1","0"],["0","1"]]
           })")},
           {"h", Json::parse(R"([["1","0"],["0","1"]])")}};
  return jobs;
}

}  // namespace lgr::cli
