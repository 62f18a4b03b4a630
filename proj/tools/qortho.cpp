#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qortho/error.hpp"
#include "suite.hpp"

namespace {

using qortho::Error;
using qortho::ErrorKind;
using qortho::Rational;
namespace suite = qortho::suite;

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct Options {
  std::vector<std::string> qs;
  std::optional<int> n;
  std::optional<int> n_max;
  std::vector<int> ks;
  std::optional<std::string> theorem;
  std::optional<std::string> grid;
  std::optional<double> tol_zero;
  std::optional<double> tol_nonzero;
  std::map<std::string, std::optional<std::string>> point;
  bool emit_csv = false;
  std::string out;
  int jobs = 1;
};

void add_common(CLI::App& app, Options& o) {
  app.add_option("--q", o.qs, "base q values as p/q strings")->delimiter(',');
  app.add_option("--n", o.n, "single degree n");
  app.add_option("--n-max", o.n_max, "largest degree n");
  app.add_option("--k", o.ks, "orders k")->delimiter(',');
  app.add_option("--theorem", o.theorem, "zero theorem id (T2_3, T2_4, T3_2, T3_3, T4_2) or role name");
  app.add_option("--grid", o.grid, "JSON grid file");
  app.add_option("--tol-zero", o.tol_zero, "normalized moment zero threshold");
  app.add_option("--tol-nonzero", o.tol_nonzero, "normalized moment nonzero threshold");
  for (const char* name : {"t", "u", "a", "b", "c"}) {
    app.add_option(std::string("--") + name, o.point[name], std::string("single-point value of ") + name);
  }
  app.add_flag("--emit-csv", o.emit_csv, "write zeros_<theorem>.csv tables");
  app.add_option("--out", o.out, "artifact directory");
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
}

suite::SuiteConfig build_config(const Options& o) {
  suite::SuiteConfig cfg;
  if (o.grid) suite::load_grid(*o.grid, cfg);
  if (!o.qs.empty()) {
    std::vector<Rational> qs;
    for (const auto& text : o.qs) {
      qs.push_back(Rational::parse(text));
      qortho::ParamPoint check(qs.back());
    }
    cfg.qs = qs;
  }
  if (o.n) cfg.n_min = cfg.n_max = *o.n;
  if (o.n_max) cfg.n_max = *o.n_max;
  if (!o.ks.empty()) cfg.ks = o.ks;
  if (o.theorem) cfg.theorem = qortho::parse_zero_theorem(*o.theorem);
  if (o.tol_zero) cfg.tol.zero = *o.tol_zero;
  if (o.tol_nonzero) cfg.tol.nonzero = *o.tol_nonzero;
  if (!(cfg.tol.zero > 0 && cfg.tol.zero < cfg.tol.nonzero)) {
    throw Error(ErrorKind::Config, "tolerances must satisfy 0 < tol-zero < tol-nonzero");
  }

  // Any explicit parameter switches to single-point mode; unset names take
  // the defaults below so every sub-suite finds what it needs.
  bool any = false;
  for (const auto& [name, value] : o.point) any = any || value.has_value();
  if (any) {
    suite::Point p{{"t", Rational(1, 2)}, {"u", Rational(3)}, {"a", Rational(1, 2)}, {"b", Rational(1, 2)},
                   {"c", Rational(2)}};
    for (const auto& [name, value] : o.point) {
      if (value) p[name] = Rational::parse(*value);
    }
    cfg.points = std::vector<suite::Point>{p};
  }
  if (cfg.n_min && cfg.n_max && *cfg.n_min > *cfg.n_max) {
    throw Error(ErrorKind::Config, "n exceeds n-max");
  }
  cfg.emit_csv = o.emit_csv;
  cfg.jobs = o.jobs;
  return cfg;
}

int execute(const std::vector<suite::SubSuite>& which, const Options& o, bool artifacts) {
  suite::SuiteConfig cfg;
  try {
    cfg = build_config(o);
  } catch (const Error& e) {
    std::cerr << "qortho: " << e.what() << '\n';
    return kExitConfig;
  }
  if (cfg.emit_csv && o.out.empty()) cfg.out = "qortho-out";
  else cfg.out = o.out;

  const suite::Report report = suite::run(which, cfg);
  for (const auto& r : report.records) {
    if (!r.pass) std::cout << "FAIL " << r.key << ": " << r.verdict << '\n';
  }
  std::cout << report.records.size() << " checks, " << report.passed() << " passed, " << report.failed()
            << " failed\n";
  if (artifacts || !cfg.out.empty()) {
    try {
      for (const auto& path : suite::write_artifacts(report, which, cfg)) std::cout << "wrote " << path.string() << '\n';
    } catch (const std::exception& e) {
      std::cerr << "qortho: " << e.what() << '\n';
      return kExitConfig;
    }
  }
  return report.all_pass() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of quasi-orthogonal q-polynomial identities, orders and zeros"};
  app.require_subcommand(1);

  Options verify_opts;
  std::string which_text;
  CLI::App* verify = app.add_subcommand("verify", "run one sub-suite");
  verify->add_option("sub-suite", which_text, "relations | expansions | quasi | zeros | interlace")->required();
  add_common(*verify, verify_opts);

  Options suite_opts;
  CLI::App* full = app.add_subcommand("suite", "run every sub-suite and write the report");
  add_common(*full, suite_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (verify->parsed()) {
    suite::SubSuite which;
    try {
      which = suite::parse_sub_suite(which_text);
    } catch (const Error& e) {
      std::cerr << "qortho: " << e.what() << '\n';
      return kExitConfig;
    }
    return execute({which}, verify_opts, false);
  }
  if (suite_opts.out.empty()) suite_opts.out = "qortho-out";
  return execute(std::vector<suite::SubSuite>(std::begin(suite::kAllSubSuites), std::end(suite::kAllSubSuites)),
                 suite_opts, true);
}
