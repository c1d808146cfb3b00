#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "lgr/error.hpp"

namespace {

namespace fs = std::filesystem;
using lgr::cli::Caps;
using lgr::io::Json;

Json error_json(const lgr::Error& e) {
  Json err = Json::object();
  err["error"] = e.kind_str();
  err["message"] = e.what();
  if (e.position() == lgr::Error::npos)
    err["position"] = nullptr;
  else
    err["position"] = e.position();
  return err;
}

int emit_error(const lgr::Error& e) {
  std::cout << error_json(e).dump() << "\n";
  return lgr::is_input_error(e.kind()) ? 2 : 3;
}

void write_file(const fs::path& path, const std::string& bytes) {
  std::ofstream out(path);
  if (!out) lgr::fail(lgr::ErrorKind::IoError, "cannot write '" + path.string() + "'");
  out << bytes;
  if (!out) lgr::fail(lgr::ErrorKind::IoError, "short write to '" + path.string() + "'");
}

int run_jobs(const std::vector<std::string>& paths, const Caps& caps) {
  int status = 0;
  for (const auto& path : paths) {
    Json line = Json::object();
    line["job"] = path;
    try {
      Json spec = lgr::io::load_payload(path);
      Json wrapped = Json::object();
      wrapped["result"] = lgr::cli::run_command(spec, caps);
      if (spec.is_object() && spec.contains("out")) {
        const std::string out_path = spec.at("out").get<std::string>();
        write_file(out_path, wrapped.dump() + "\n");
        line["out"] = out_path;
      } else {
        line["result"] = wrapped.at("result");
      }
    } catch (const lgr::Error& e) {
      line["error"] = error_json(e);
      if (status == 0) status = lgr::is_input_error(e.kind()) ? 2 : 3;
    }
    std::cout << line.dump() << "\n";
  }
  return status;
}

int write_fixtures(const std::string& dir) {
  fs::create_directories(dir);
  Json jobs = lgr::cli::fixture_jobs();
  Json written = Json::array();
  for (const auto& [name, job] : jobs.items()) {
    const fs::path path = fs::path(dir) / name;
    write_file(path, job.dump() + "\n");
    written.push_back(path.string());
  }
  Json wrapped = Json::object();
  wrapped["result"] = Json::object();
  wrapped["result"]["written"] = written;
  std::cout << wrapped.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations on the Lagrangian Grassmannian: Pluecker "
               "images, symplectic action, Monge-Ampere classification, Chow "
               "transforms and low-dimensional duals"};
  app.require_subcommand(1);
  // --h carries a payload below, so help loses its short alias.
  app.set_help_flag("--help", "print help");

  int n = 0;
  std::string pde, matrix_arg, v_arg, m_arg, x_arg, h_arg, coeffs_arg, alpha_arg, d_arg;
  std::string out_dir;
  std::vector<std::string> job_paths;
  bool exit_code = false;
  bool off_shell = false;

  auto* plucker = app.add_subcommand("plucker", "Pluecker coordinates of a big-cell point");
  plucker->set_help_flag("--help", "print help");
  plucker->add_option("--n", n, "dimension")->required();
  plucker->add_option("--matrix", matrix_arg, "symmetric matrix (JSON or file)")->required();

  auto* relations = app.add_subcommand("relations", "test a coordinate vector against the image");
  relations->set_help_flag("--help", "print help");
  relations->add_option("--n", n, "dimension")->required();
  relations->add_option("--v", v_arg, "minor-indexed vector (JSON or file)")->required();
  relations->add_flag("--exit-code", exit_code, "report the boolean as the exit status");

  auto* act = app.add_subcommand("act", "fractional-linear action of a symplectic matrix");
  act->set_help_flag("--help", "print help");
  act->add_option("--m", m_arg, "symplectic matrix blocks (JSON or file)")->required();
  act->add_option("--h", h_arg, "big-cell point (JSON or file)")->required();

  auto* infaction = app.add_subcommand("infaction", "infinitesimal action of an sp element");
  infaction->set_help_flag("--help", "print help");
  infaction->add_option("--x", x_arg, "algebra element blocks (JSON or file)")->required();
  infaction->add_option("--h", h_arg, "big-cell point (JSON or file)")->required();

  auto* ma_test = app.add_subcommand("ma-test", "third-derivative Monge-Ampere membership test");
  ma_test->set_help_flag("--help", "print help");
  ma_test->add_option("--n", n, "dimension")->required();
  ma_test->add_option("--pde", pde, "polynomial text")->required();
  ma_test->add_flag("--exit-code", exit_code, "report the boolean as the exit status");

  auto* ma_coeffs = app.add_subcommand("ma-coeffs", "minor-basis coefficients of a Monge-Ampere polynomial");
  ma_coeffs->set_help_flag("--help", "print help");
  ma_coeffs->add_option("--n", n, "dimension")->required();
  ma_coeffs->add_option("--pde", pde, "polynomial text")->required();

  auto* section = app.add_subcommand("section", "expand coefficients into a polynomial");
  section->set_help_flag("--help", "print help");
  section->add_option("--n", n, "dimension")->required();
  section->add_option("--coeffs", coeffs_arg, "minor-indexed coefficients (JSON or file)")->required();

  auto* symbol = app.add_subcommand("symbol", "symbol matrix of a polynomial at a point");
  symbol->set_help_flag("--help", "print help");
  symbol->add_option("--n", n, "dimension")->required();
  symbol->add_option("--pde", pde, "polynomial text")->required();
  symbol->add_option("--h", h_arg, "big-cell point (JSON or file)")->required();

  auto* classify = app.add_subcommand("classify", "pointwise type of the symbol");
  classify->set_help_flag("--help", "print help");
  classify->add_option("--n", n, "dimension")->required();
  classify->add_option("--pde", pde, "polynomial text")->required();
  classify->add_option("--h", h_arg, "big-cell point (JSON or file)")->required();

  auto* chr = app.add_subcommand("char", "characteristic and strong-characteristic test");
  chr->set_help_flag("--help", "print help");
  chr->add_option("--n", n, "dimension")->required();
  chr->add_option("--pde", pde, "polynomial text")->required();
  chr->add_option("--h", h_arg, "big-cell point (JSON or file)")->required();
  chr->add_option("--alpha", alpha_arg, "covector (JSON or file)")->required();
  chr->add_flag("--off-shell", off_shell, "skip the on-equation check");

  auto* chow = app.add_subcommand("chow", "Lagrangian Chow transform of a subspace");
  chow->set_help_flag("--help", "print help");
  chow->add_option("--d", d_arg, "subspace matrix (JSON or file)")->required();
  chow->add_option("--n", n, "dimension (checked against the payload)");

  auto* goursat2 = app.add_subcommand("goursat2", "Goursat ellipticity indicator for n = 2");
  goursat2->set_help_flag("--help", "print help");
  goursat2->add_option("--d", d_arg, "subspace matrix (JSON or file)")->required();

  auto* dual3 = app.add_subcommand("dual3", "dual tangent hyperplane at a point, n = 3");
  dual3->set_help_flag("--help", "print help");
  dual3->add_option("--h", h_arg, "symmetric 3x3 matrix (JSON or file)")->required();

  auto* parse = app.add_subcommand("parse", "canonicalize polynomial text");
  parse->set_help_flag("--help", "print help");
  parse->add_option("--n", n, "dimension")->required();
  parse->add_option("--pde", pde, "polynomial text")->required();

  auto* fixtures = app.add_subcommand("fixtures", "write ready-made job files");
  fixtures->set_help_flag("--help", "print help");
  fixtures->add_option("--out", out_dir, "output directory")->required();

  auto* jobs = app.add_subcommand("jobs", "run job files in order");
  jobs->set_help_flag("--help", "print help");
  jobs->add_option("files", job_paths, "job file paths")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    Json err = Json::object();
    err["error"] = "IoError";
    err["message"] = e.what();
    err["position"] = nullptr;
    std::cout << err.dump() << "\n";
    return 2;
  }

  try {
    const Caps caps = lgr::cli::caps_from_env();

    if (fixtures->parsed()) return write_fixtures(out_dir);
    if (jobs->parsed()) return run_jobs(job_paths, caps);

    Json spec = Json::object();
    if (plucker->parsed()) {
      spec["command"] = "plucker";
      spec["n"] = n;
      spec["matrix"] = lgr::io::load_payload(matrix_arg);
    } else if (relations->parsed()) {
      spec["command"] = "relations";
      spec["n"] = n;
      spec["v"] = lgr::io::load_payload(v_arg);
    } else if (act->parsed()) {
      spec["command"] = "act";
      spec["m"] = lgr::io::load_payload(m_arg);
      spec["h"] = lgr::io::load_payload(h_arg);
    } else if (infaction->parsed()) {
      spec["command"] = "infaction";
      spec["x"] = lgr::io::load_payload(x_arg);
      spec["h"] = lgr::io::load_payload(h_arg);
    } else if (ma_test->parsed()) {
      spec["command"] = "ma-test";
      spec["n"] = n;
      spec["pde"] = pde;
    } else if (ma_coeffs->parsed()) {
      spec["command"] = "ma-coeffs";
      spec["n"] = n;
      spec["pde"] = pde;
    } else if (section->parsed()) {
      spec["command"] = "section";
      spec["n"] = n;
      spec["coeffs"] = lgr::io::load_payload(coeffs_arg);
    } else if (symbol->parsed()) {
      spec["command"] = "symbol";
      spec["n"] = n;
      spec["pde"] = pde;
      spec["h"] = lgr::io::load_payload(h_arg);
    } else if (classify->parsed()) {
      spec["command"] = "classify";
      spec["n"] = n;
      spec["pde"] = pde;
      spec["h"] = lgr::io::load_payload(h_arg);
    } else if (chr->parsed()) {
      spec["command"] = "char";
      spec["n"] = n;
      spec["pde"] = pde;
      spec["h"] = lgr::io::load_payload(h_arg);
      spec["alpha"] = lgr::io::load_payload(alpha_arg);
      spec["off_shell"] = off_shell;
    } else if (chow->parsed()) {
      spec["command"] = "chow";
      if (chow->count("--n") > 0) spec["n"] = n;
      spec["d"] = lgr::io::load_payload(d_arg);
    } else if (goursat2->parsed()) {
      spec["command"] = "goursat2";
      spec["d"] = lgr::io::load_payload(d_arg);
    } else if (dual3->parsed()) {
      spec["command"] = "dual3";
      spec["h"] = lgr::io::load_payload(h_arg);
    } else if (parse->parsed()) {
      spec["command"] = "parse";
      spec["n"] = n;
      spec["pde"] = pde;
    }

    Json result = lgr::cli::run_command(spec, caps);
    Json wrapped = Json::object();
    wrapped["result"] = result;
    std::cout << wrapped.dump() << "\n";
    if (exit_code && result.is_boolean()) return result.get<bool>() ? 0 : 1;
    return 0;
  } catch (const lgr::Error& e) {
    return emit_error(e);
  }
}
