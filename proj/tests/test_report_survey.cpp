#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <set>

#include "schemeconn/catalog.hpp"
#include "schemeconn/error.hpp"
#include "schemeconn/report.hpp"
#include "schemeconn/scheme_io.hpp"
#include "schemeconn/survey.hpp"

using namespace schemeconn;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "schemeconn_report_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp_tree(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::string out;
  for (const auto& f : files) out += f.filename().string() + "\n" + read_text_file(f.string());
  return out;
}

}  // namespace

TEST(FormatReal, SnapsIntegersAndKeepsTwelveDigits) {
  EXPECT_EQ(format_real(3.0), "3");
  EXPECT_EQ(format_real(-2.0000000000004), "-2");
  EXPECT_EQ(format_real(0.0), "0");
  EXPECT_EQ(format_real(-1e-12), "0");
  EXPECT_EQ(format_real(2.0 / 3.0), "0.666666666667");
  EXPECT_EQ(format_real(1.6180339887498949), "1.61803398875");
}

TEST(Report, RequiredFieldsInOrder) {
  const AuditConfig config;
  const auto analysis = analyze_scheme(gen_johnson(5, 2), config);
  const auto r = analyze_relation(analysis, 2, config);
  const std::vector<std::string> required{
      "scheme", "relation", "v", "d", "valency", "diameter", "kappa", "lambda",
      "godsil_bound_num", "godsil_bound_den", "twin_pairs", "h_prime_connected", "theorem1",
      "corollaries", "w_empty", "small_cut", "min_cuts_are_neighborhoods"};
  std::vector<std::string> keys;
  for (auto it = r.json.begin(); it != r.json.end(); ++it) keys.push_back(it.key());
  ASSERT_GE(keys.size(), required.size());
  EXPECT_EQ(std::vector<std::string>(keys.begin(), keys.begin() + static_cast<long>(required.size())), required);
  EXPECT_EQ(r.json["kappa"], 3);
  EXPECT_EQ(r.json["godsil_bound_num"], 5);
  EXPECT_EQ(r.json["godsil_bound_den"], 3);
  EXPECT_TRUE(r.json["theorem1"]["equivalent"].get<bool>());
  EXPECT_TRUE(r.json.contains("tool"));
  EXPECT_TRUE(r.json.contains("config"));
  EXPECT_TRUE(r.findings.empty());
  EXPECT_FALSE(r.conjecture_counterexample);
}

TEST(Report, DirectedInputIsSymmetrized) {
  const AuditConfig config;
  const auto analysis = analyze_scheme(gen_conjugacy(cyclic_group(7), "z7"), config);
  EXPECT_TRUE(analysis.symmetrized);
  EXPECT_EQ(analysis.scheme.d(), 3);
  EXPECT_TRUE(analysis.findings.empty());
}

TEST(Report, DisconnectedRelationReportsZeroConnectivity) {
  const AuditConfig config;
  const auto analysis = analyze_scheme(gen_hamming(3, 2), config);
  const auto r = analyze_relation(analysis, 2, config);
  EXPECT_FALSE(r.json["connected"].get<bool>());
  EXPECT_EQ(r.json["kappa"], 0);
  EXPECT_EQ(r.json["lambda"], 0);
  EXPECT_TRUE(r.findings.empty());
}

TEST(Manifest, ParseAndFailFast) {
  const auto m = parse_manifest(R"({"seed": 9, "entries": [
      {"family": ["johnson", "5", "2"], "relations": [2]},
      {"family": ["cyclic", "6"], "relations": "all"}]})", ".");
  EXPECT_EQ(m.entries.size(), 2U);
  EXPECT_EQ(*m.seed, 9U);
  EXPECT_EQ(*m.entries[0].relations, (std::vector<int>{2}));
  EXPECT_FALSE(m.entries[1].relations.has_value());
  for (const char* bad : {R"({"entries": [{"file": "missing.json"}]})",
                          R"({"entries": [{"family": ["nosuch"]}]})",
                          R"({"entries": [{"family": ["cyclic", "5"], "relations": [0]}]})",
                          R"({"entries": {}})", "not json"}) {
    try {
      (void)parse_manifest(bad, scratch("manifest").string());
      ADD_FAILURE() << bad;
    } catch (const SchemeError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
    }
  }
}

TEST(Survey, InvalidFileIsIsolated) {
  const fs::path dir = scratch("isolated");
  write_text_file((dir / "bad.json").string(),
                  R"({"name": "bad", "v": 3, "d": 1, "classes": [[0,1,1],[1,0,1],[1,1,1]]})");
  const auto m = load_manifest([&] {
    const auto p = (dir / "manifest.json").string();
    write_text_file(p, R"({"entries": [{"file": "bad.json"}, {"family": ["cyclic", "5"]}]})");
    return p;
  }());
  SurveyOptions opts;
  const auto r = run_survey(m, opts);
  EXPECT_TRUE(r.any_failure);
  EXPECT_EQ(r.summary["errors"].size(), 1U);
  EXPECT_EQ(r.summary["reports"], 2);
  EXPECT_EQ(r.summary["schemes_analyzed"], 1);
}

TEST(Survey, OutputIndependentOfJobs) {
  const auto m = parse_manifest(R"({"entries": [
      {"family": ["johnson", "6", "3"]}, {"family": ["hamming", "3", "2"]},
      {"family": ["conjugacy", "d4"]}, {"family": ["cyclic", "9"]}, {"family": ["drg", "petersen"]}]})",
                                ".");
  SurveyOptions one;
  one.jobs = 1;
  one.out_dir = scratch("jobs1").string();
  SurveyOptions many;
  many.jobs = 4;
  many.out_dir = scratch("jobs4").string();
  const auto a = run_survey(m, one);
  const auto b = run_survey(m, many);
  EXPECT_FALSE(a.any_failure);
  EXPECT_EQ(a.summary.dump(), b.summary.dump());
  EXPECT_EQ(slurp_tree(one.out_dir), slurp_tree(many.out_dir));
}

TEST(Survey, DuplicateNamesGetDistinctFiles) {
  const auto m = parse_manifest(R"({"entries": [{"family": ["cyclic", "4"]}, {"family": ["cyclic", "4"]}]})", ".");
  const auto r = run_survey(m, {});
  ASSERT_EQ(r.reports.size(), 4U);
  std::set<std::string> names;
  for (const auto& [name, json] : r.reports) names.insert(name);
  EXPECT_EQ(names.size(), 4U);
}

TEST(Survey, SeedChangesSampledConfig) {
  const auto m = parse_manifest(R"({"seed": 1234, "entries": [{"family": ["cyclic", "5"]}]})", ".");
  const auto r = run_survey(m, {});
  EXPECT_EQ(r.summary["config"]["c1_seed"], "0x4D2");
}

TEST(Survey, DefaultJobsFromEnvironment) {
  ::setenv("SCHEME_CONN_JOBS", "3", 1);
  EXPECT_EQ(default_jobs(), 3);
  ::setenv("SCHEME_CONN_JOBS", "zero", 1);
  EXPECT_EQ(default_jobs(), 1);
  ::unsetenv("SCHEME_CONN_JOBS");
  EXPECT_EQ(default_jobs(), 1);
}
