#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qortho/classify.hpp"
#include "qortho/param_point.hpp"
#include "qortho/quasi.hpp"
#include "qortho/rational.hpp"

namespace qortho::suite {

enum class SubSuite { Relations, Expansions, Quasi, Zeros, Interlace };

inline constexpr SubSuite kAllSubSuites[] = {SubSuite::Relations, SubSuite::Expansions, SubSuite::Quasi,
                                             SubSuite::Zeros, SubSuite::Interlace};

std::string_view to_string(SubSuite s) noexcept;
/// Throws Error(Config).
SubSuite parse_sub_suite(std::string_view text);

/// Named parameter values without q; combined with each q of the run.
using Point = std::map<std::string, Rational>;

/// What to run. Unset optionals fall back to the built-in grids, which
/// reproduce the full verification run.
struct SuiteConfig {
  std::optional<std::vector<Rational>> qs;
  std::optional<int> n_min;
  std::optional<int> n_max;
  std::optional<std::vector<int>> ks;
  std::optional<std::vector<Point>> points;
  std::optional<ZeroTheorem> theorem;
  Tolerances tol;
  bool emit_csv = false;
  std::filesystem::path out;
  int jobs = 1;
};

/// Reads a grid file (JSON) into cfg. Keys: "q" (list of "p/q" strings),
/// "n_min", "n_max", "k" (list of ints), "points" (list of objects mapping
/// parameter names to "p/q" strings), "theorem", "tol_zero", "tol_nonzero".
/// Throws Error(Config) on malformed input.
void load_grid(const std::filesystem::path& path, SuiteConfig& cfg);

struct RootRow {
  std::string theorem;
  int n = 0;
  std::string q;
  std::string params;
  int index = 0;
  std::string lower;
  std::string upper;
  std::string value;
};

struct Record {
  std::string key;  // sort key: sub-suite, check, q, parameters, n
  std::string suite;
  std::string check;
  int n = 0;
  std::string q;
  Point params;
  bool pass = false;
  std::string verdict;
  nlohmann::json certificate = nlohmann::json::object();
  std::vector<RootRow> roots;  // zero tables only
};

struct Report {
  std::vector<Record> records;  // sorted by key

  std::size_t passed() const;
  std::size_t failed() const { return records.size() - passed(); }
  bool all_pass() const { return failed() == 0; }
};

/// Runs the sub-suites with cfg.jobs worker threads. Record order and
/// content do not depend on the thread count.
Report run(const std::vector<SubSuite>& which, const SuiteConfig& cfg);

/// Structured report document; `generated` is the only time-dependent field.
nlohmann::json to_json(const Report& report, const std::vector<SubSuite>& which, const SuiteConfig& cfg,
                       const std::string& generated);

/// Writes report.json and, with cfg.emit_csv, zeros_<theorem>.csv files.
/// Returns the written paths.
std::vector<std::filesystem::path> write_artifacts(const Report& report, const std::vector<SubSuite>& which,
                                                   const SuiteConfig& cfg);

std::string format_double(double v);

}  // namespace qortho::suite
