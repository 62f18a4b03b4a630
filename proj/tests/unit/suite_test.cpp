#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "qortho/error.hpp"
#include "suite.hpp"

namespace qortho::suite {
namespace {

namespace fs = std::filesystem;

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("qortho_suite_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const fs::path& dir, const std::string& name, const std::string& body) {
  const fs::path p = dir / name;
  std::ofstream(p) << body;
  return p;
}

TEST(Runner, RelationsAtDegreeOne) {
  SuiteConfig cfg;
  cfg.qs = std::vector<Rational>{Rational(1, 2)};
  cfg.n_max = 1;
  const Report r = run({SubSuite::Relations}, cfg);
  EXPECT_EQ(r.records.size(), 21u);  // seven relations, three points each
  EXPECT_TRUE(r.all_pass());
  for (std::size_t i = 1; i < r.records.size(); ++i) EXPECT_LT(r.records[i - 1].key, r.records[i].key);
}

TEST(Runner, SinglePointZeros) {
  SuiteConfig cfg;
  cfg.qs = std::vector<Rational>{Rational(1, 2)};
  cfg.n_min = cfg.n_max = 3;
  cfg.theorem = ZeroTheorem::LaguerreOrder1;
  cfg.points = std::vector<Point>{{{"t", Rational(1, 2)}, {"u", Rational(1, 3)}}};
  const Report r = run({SubSuite::Zeros}, cfg);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_TRUE(r.records[0].pass);
  EXPECT_EQ(r.records[0].roots.size(), 3u);
  EXPECT_EQ(r.records[0].certificate["claims"][1]["observed"], "all-positive");
}

TEST(Runner, EmptyGridGivesEmptyReport) {
  SuiteConfig cfg;
  cfg.points = std::vector<Point>{};
  const Report r = run(std::vector<SubSuite>(std::begin(kAllSubSuites), std::end(kAllSubSuites)), cfg);
  EXPECT_TRUE(r.records.empty());
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(to_json(r, {SubSuite::Quasi}, cfg, "x")["summary"]["checks"], 0);
}

TEST(Runner, ModuleErrorsBecomeFailedRows) {
  SuiteConfig cfg;
  cfg.n_min = cfg.n_max = 3;
  cfg.theorem = ZeroTheorem::LaguerreOrder1;
  cfg.points = std::vector<Point>{{{"t", Rational(1, 2)}, {"u", Rational(1)}}};
  const Report r = run({SubSuite::Zeros}, cfg);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_FALSE(r.records[0].pass);
  EXPECT_NE(r.records[0].verdict.find("Boundary"), std::string::npos);
}

TEST(Runner, ReportDoesNotDependOnThreadCount) {
  SuiteConfig one;
  one.n_max = 5;
  SuiteConfig many = one;
  many.jobs = 4;
  const std::vector<SubSuite> which = {SubSuite::Quasi, SubSuite::Interlace};
  EXPECT_EQ(to_json(run(which, one), which, one, "t").dump(), to_json(run(which, many), which, many, "t").dump());
}

TEST(Artifacts, CsvRowsMatchRootCounts) {
  SuiteConfig cfg;
  cfg.n_max = 4;
  cfg.emit_csv = true;
  cfg.out = scratch_dir("csv");
  const std::vector<SubSuite> which = {SubSuite::Zeros};
  const Report r = run(which, cfg);
  std::map<std::string, std::size_t> expected;
  for (const auto& rec : r.records) expected[rec.check] += rec.roots.size();
  write_artifacts(r, which, cfg);
  for (const auto& [theorem, rows] : expected) {
    std::ifstream is(cfg.out / ("zeros_" + theorem + ".csv"), std::ios::binary);
    std::stringstream body;
    body << is.rdbuf();
    const std::string text = body.str();
    EXPECT_EQ(text.find('\r'), std::string::npos);
    EXPECT_EQ(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')), rows + 1) << theorem;
    EXPECT_EQ(text.rfind("theorem,n,q,params,root_index,lower,upper,value\n", 0), 0u);
  }
  EXPECT_TRUE(fs::exists(cfg.out / "report.json"));
}

TEST(Grid, LoadsAllKeys) {
  const fs::path dir = scratch_dir("grid");
  SuiteConfig cfg;
  load_grid(write_file(dir, "g.json",
                       R"({"q": ["1/2", "2/3"], "n_min": 2, "n_max": 4, "k": [1],
                           "points": [{"t": "1/2", "u": "3"}], "theorem": "T2_3",
                           "tol_zero": 1e-13, "tol_nonzero": 1e-9})"),
            cfg);
  ASSERT_TRUE(cfg.qs);
  EXPECT_EQ(cfg.qs->at(1), Rational(2, 3));
  EXPECT_EQ(*cfg.n_min, 2);
  EXPECT_EQ(cfg.points->at(0).at("u"), Rational(3));
  EXPECT_EQ(*cfg.theorem, ZeroTheorem::LaguerreOrder1);
  EXPECT_DOUBLE_EQ(cfg.tol.zero, 1e-13);
}

TEST(Grid, RejectsMalformedInput) {
  const fs::path dir = scratch_dir("bad");
  for (const std::string& body : {std::string("{"), std::string(R"({"q": ["1/0"]})"), std::string(R"({"q": ["3/2"]})"),
                                  std::string(R"({"q": [0.5]})"), std::string(R"({"unknown": 1})"),
                                  std::string(R"({"n_min": 5, "n_max": 2})"), std::string(R"({"theorem": "T9"})"),
                                  std::string(R"([1, 2])")}) {
    SuiteConfig cfg;
    EXPECT_THROW(load_grid(write_file(dir, "g.json", body), cfg), Error) << body;
  }
  SuiteConfig cfg;
  EXPECT_THROW(load_grid(dir / "missing.json", cfg), Error);
}

TEST(Format, SeventeenDigits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(parse_sub_suite("interlace"), SubSuite::Interlace);
  EXPECT_THROW(parse_sub_suite("all"), Error);
}

}  // namespace
}  // namespace qortho::suite
