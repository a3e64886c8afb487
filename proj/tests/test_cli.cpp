#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "schemeconn/catalog.hpp"
#include "schemeconn/cli.hpp"
#include "schemeconn/scheme_io.hpp"

using namespace schemeconn;
namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / "schemeconn_cli_tests";
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    save_scheme(gen_cyclic(5).renamed("pentagon"), path("pentagon.json"));
    save_scheme(gen_cyclic(5).renamed("cyclic5"), path("cyclic5.json"));
    write_text_file(path("perturbed.json"), R"({"name": "perturbed", "v": 5, "d": 2, "classes": [
      [0,2,1,2,1],[2,0,1,2,2],[1,1,0,1,2],[2,2,1,0,1],[1,2,2,1,0]]})");
    const std::string full = read_text_file(path("pentagon.json"));
    write_text_file(path("truncated.json"), full.substr(0, full.size() / 2));
    save_scheme(gen_conjugacy(cyclic_group(5), "z5"), path("z5.json"));
  }
  static std::string path(const std::string& name) { return (dir_ / name).string(); }
  static fs::path dir_;
};

fs::path CliTest::dir_;

}  // namespace

TEST_F(CliTest, VerifyPentagon) {
  const auto r = cli({"verify", path("pentagon.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("v=5 d=2"), std::string::npos);
}

TEST_F(CliTest, VerifyPerturbedPentagon) {
  const auto r = cli({"verify", path("perturbed.json")});
  EXPECT_EQ(r.code, kExitInvalid);
  EXPECT_NE(r.err.find("witness"), std::string::npos);
}

TEST_F(CliTest, VerifyTruncatedFile) {
  EXPECT_EQ(cli({"verify", path("truncated.json")}).code, kExitParse);
  EXPECT_EQ(cli({"verify", path("absent.json")}).code, kExitParse);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(cli({}).code, kExitParse);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitParse);
  EXPECT_EQ(cli({"analyze", "--relation", "1", "--all-relations", path("pentagon.json")}).code, kExitParse);
  EXPECT_EQ(cli({"--version"}).code, kExitOk);
}

TEST_F(CliTest, AnalyzePetersenRelation) {
  const auto r = cli({"analyze", "--family", "johnson", "5", "2", "--relation", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["kappa"], 3);
  for (const char* key : {"exists_a_connected", "forall_a_connected", "h_prime_connected", "twin_free"})
    EXPECT_TRUE(j["theorem1"][key].get<bool>()) << key;
}

TEST_F(CliTest, AnalyzeHammingRelationTwo) {
  const auto r = cli({"analyze", "--family", "hamming", "4", "2", "--relation", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["twin_pairs"], 8);
  EXPECT_FALSE(j["h_prime_connected"].get<bool>());
  for (const char* key : {"exists_a_connected", "forall_a_connected", "h_prime_connected", "twin_free"})
    EXPECT_FALSE(j["theorem1"][key].get<bool>()) << key;
}

TEST_F(CliTest, AnalyzeCyclicFile) {
  const auto r = cli({"analyze", path("cyclic5.json"), "--relation", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["kappa"], 2);
  EXPECT_TRUE(j["small_cut"]["tcut2_ok"].get<bool>());
}

TEST_F(CliTest, AnalyzeAllRelationsWritesReport) {
  const auto r = cli({"analyze", path("pentagon.json"), "--report", path("pentagon_report.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = json::parse(read_text_file(path("pentagon_report.json")));
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 2U);
}

TEST_F(CliTest, AnalyzeDirectedNeedsSymmetrize) {
  EXPECT_EQ(cli({"analyze", path("z5.json"), "--no-symmetrize"}).code, kExitInvalid);
  const auto r = cli({"analyze", path("z5.json"), "--relation", "1"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(json::parse(r.out)["symmetrized"].get<bool>());
}

TEST_F(CliTest, AnalyzeRelationOutOfRange) {
  EXPECT_EQ(cli({"analyze", path("pentagon.json"), "--relation", "3"}).code, kExitInvalid);
}

TEST_F(CliTest, CutsExamples) {
  {
    const auto r = cli({"cuts", path("pentagon.json"), "--relation", "1"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["cuts"].size(), 5U);
    EXPECT_TRUE(j["all_neighborhoods"].get<bool>());
  }
  {
    const auto r = cli({"cuts", "--family", "drg", "petersen"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["kappa"], 3);
    EXPECT_EQ(j["cuts"].size(), 10U);
    for (const auto& c : j["cuts"]) EXPECT_FALSE(c["neighborhood_of"].is_null());
  }
  {
    const auto r = cli({"cuts", "--family", "drg", "k33"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = json::parse(r.out);
    bool left = false, right = false;
    for (const auto& c : j["cuts"]) {
      left = left || c["vertices"] == json::array({0, 1, 2});
      right = right || c["vertices"] == json::array({3, 4, 5});
    }
    EXPECT_TRUE(left && right);
    EXPECT_TRUE(j["all_neighborhoods"].get<bool>());
  }
}

TEST_F(CliTest, CutsCapExceeded) {
  // kappa(Q4) = 4 exceeds --max-size 3.
  EXPECT_EQ(cli({"cuts", "--family", "hamming", "4", "2", "--relation", "1"}).code, kExitCap);
  EXPECT_EQ(cli({"cuts", "--family", "hamming", "4", "2", "--relation", "1", "--max-size", "4"}).code,
            kExitOk);
}

TEST_F(CliTest, SurveyManifestWithInvalidEntry) {
  write_text_file(path("bad.json"), R"({"name": "bad", "v": 2, "d": 1, "classes": [[0,1],[1,1]]})");
  write_text_file(path("manifest.json"),
                  R"({"entries": [{"file": "bad.json"}, {"file": "pentagon.json"}, {"family": ["cyclic", "6"]}]})");
  const auto r = cli({"survey", "--manifest", path("manifest.json"), "--out", path("survey_out")});
  EXPECT_EQ(r.code, kExitFinding);
  const auto summary = json::parse(read_text_file(path("survey_out/summary.json")));
  EXPECT_EQ(summary["errors"].size(), 1U);
  EXPECT_EQ(summary["reports"], 5);
  EXPECT_TRUE(fs::exists(path("survey_out/pentagon__rel1.json")));
}

TEST_F(CliTest, SurveyNeedsExactlyOneSource) {
  EXPECT_EQ(cli({"survey"}).code, kExitParse);
  EXPECT_EQ(cli({"survey", "--manifest", path("missing_manifest.json")}).code, kExitParse);
}
