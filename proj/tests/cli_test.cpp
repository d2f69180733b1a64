#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "omega/analysis.hpp"
#include "omega/hasse.hpp"
#include "omega/metric.hpp"

namespace omega {
namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CorpusFile {
 public:
  explicit CorpusFile(const std::string& contents) {
    path_ = std::filesystem::temp_directory_path() /
            ("omega_corpus_" + std::to_string(counter_++) + ".txt");
    std::ofstream(path_) << contents;
  }
  ~CorpusFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

TEST(CliTest, Dist) {
  EXPECT_EQ(run({"dist", "11", "12"}).out, "4\n");
  EXPECT_EQ(run({"dist", "7", "7"}).out, "0\n");
  const CliResult csv = run({"dist", "8", "9", "--format", "csv"});
  EXPECT_EQ(csv.out, "a,b,dist\n8,9,5\n");
}

TEST(CliTest, JsonEnvelope) {
  const CliResult r = run({"--format", "json", "dist", "11", "12"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"command\":\"dist\",\"input\":{\"a\":11,\"b\":12},\"result\":4}\n");
  const auto pretty = run({"dist", "11", "12", "--format", "json", "--pretty"});
  EXPECT_NE(pretty.out.find("\n  \"command\""), std::string::npos);
}

TEST(CliTest, BallJson) {
  const CliResult r = run({"ball", "1", "1", "--max", "100", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["command"], "ball");
  EXPECT_EQ(doc["result"].size(), 26u);
  EXPECT_EQ(doc["result"].get<std::vector<std::uint64_t>>(), closed_ball(1, 1, 100));
}

TEST(CliTest, FactorOmegaXi) {
  EXPECT_EQ(run({"factor", "360"}).out, "2^3 * 3^2 * 5\n");
  EXPECT_EQ(run({"factor", "1"}).out, "1\n");
  EXPECT_EQ(run({"factor", "12", "--format", "csv"}).out, "prime,exponent\n2,2\n3,1\n");
  EXPECT_EQ(run({"omega", "360"}).out, "6\n");
  EXPECT_EQ(run({"xi", "2", "12"}).out, "3\n");
}

TEST(CliTest, Diameter) {
  EXPECT_EQ(run({"diameter", "12"}).out, "5\n");
  EXPECT_EQ(run({"diameter", "12", "--brute"}).out, "5 8 9\n");
  const auto doc = nlohmann::json::parse(run({"diameter", "100", "--brute", "--format", "json"}).out);
  EXPECT_EQ(doc["result"]["diameter"], 10);
  EXPECT_EQ(doc["result"]["witness"], nlohmann::json({64, 81}));
}

TEST(CliTest, HasseDotMatchesLibrary) {
  EXPECT_EQ(run({"hasse", "12", "--dot"}).out, export_dot(build_hasse(12)));
  EXPECT_EQ(run({"hasse", "12", "--format", "dot"}).out, export_dot(build_hasse(12)));
  EXPECT_EQ(run({"hasse", "12"}).out, "vertices 12 edges 14\n");
}

TEST(CliTest, CensusCsv) {
  const CliResult r = run({"census", "100", "--kmax", "2", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string header, row0, row1;
  std::getline(in, header);
  std::getline(in, row0);
  std::getline(in, row1);
  EXPECT_EQ(header, "k,count,estimate,ratio");
  EXPECT_EQ(row0, "0,1,NA,NA");
  EXPECT_EQ(row1.substr(0, 5), "1,25,");
  EXPECT_EQ(r.out.back(), '\n');
  EXPECT_EQ(r.out.find(",\n"), std::string::npos);
}

TEST(CliTest, CensusJsonIsLabelledApproximate) {
  const auto doc = nlohmann::json::parse(run({"census", "1000", "--format", "json"}).out);
  EXPECT_EQ(doc["result"]["estimate_is_approximate"], true);
  EXPECT_EQ(doc["result"]["rows"][1]["count"], 168);
}

TEST(CliTest, CorpusQueries) {
  std::string contents;
  for (int v = 1; v <= 12; ++v) contents += std::to_string(v) + "\n";
  const CorpusFile corpus(contents);
  EXPECT_EQ(run({"range", "6", "2", "--corpus", corpus.path()}).out, "1 2 3 4 6 9 10 12\n");
  EXPECT_EQ(run({"nn", "8", "3", "--corpus", corpus.path()}).out, "8 0\n4 1\n2 2\n");
  const auto doc =
      nlohmann::json::parse(run({"nn", "7", "2", "--corpus", corpus.path(), "--format", "json"}).out);
  EXPECT_EQ(doc["result"], nlohmann::json::parse(R"([{"value":7,"distance":0},{"value":1,"distance":1}])"));
}

TEST(CliTest, CorpusErrors) {
  const CorpusFile bad("1\nfoo\n");
  EXPECT_EQ(run({"range", "6", "2", "--corpus", bad.path()}).code, cli::kInvalidArgument);
  const CorpusFile empty("");
  EXPECT_EQ(run({"nn", "6", "2", "--corpus", empty.path()}).code, cli::kInvalidArgument);
  EXPECT_EQ(run({"nn", "6", "2", "--corpus", "/nonexistent/corpus.txt"}).code,
            cli::kInvalidArgument);
}

TEST(CliTest, ExtDist) {
  EXPECT_EQ(run({"ext-dist", "root(2, 2)", "root(3, 2)"}).out, "1/6\n");
  EXPECT_EQ(run({"ext-dist", "1/2", "3"}).out, "2\n");
  EXPECT_EQ(run({"ext-dist", "root(2,", "3"}).code, cli::kInvalidArgument);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run({"dist", "0", "5"}).code, cli::kInvalidArgument);
  EXPECT_EQ(run({"dist", "-3", "5"}).code, cli::kInvalidArgument);
  EXPECT_EQ(run({"dist", "99999999999999999999", "5"}).code, cli::kOutOfRange);
  EXPECT_EQ(run({"ball", "1", "1", "--max", "2000000"}).code, cli::kOutOfRange);
  EXPECT_EQ(run({"diameter", "5000", "--brute"}).code, cli::kOutOfRange);
  EXPECT_EQ(run({"census", "100000000"}).code, cli::kOutOfRange);
  const CliResult unknown = run({"frobnicate"});
  EXPECT_EQ(unknown.code, cli::kInvalidArgument);
  EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({}).code, cli::kInvalidArgument);
  EXPECT_EQ(run({"dist", "1", "2", "--format", "xml"}).code, cli::kInvalidArgument);
}

TEST(CliTest, VerifySingleSuite) {
  const CliResult r = run({"verify", "--suite", "diameter"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out, "PASS diameter 300 checks, 0 failures\n");
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, cli::kInvalidArgument);
}

TEST(CliTest, VerifyIsDeterministicPerSeed) {
  const CliResult a = run({"verify", "--suite", "index", "--seed", "5", "--format", "json"});
  const CliResult b = run({"verify", "--suite", "index", "--seed", "5", "--format", "json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["input"]["seed"], 5);
  EXPECT_EQ(doc["result"]["passed"], true);
}

TEST(CliTest, ResultsMatchLibrary) {
  for (std::uint64_t a : {1u, 30u, 97u, 1024u}) {
    for (std::uint64_t b : {2u, 45u, 360u}) {
      const CliResult r = run({"dist", std::to_string(a), std::to_string(b)});
      ASSERT_EQ(r.out, std::to_string(dist(a, b)) + "\n");
    }
  }
}

}  // namespace
}  // namespace omega
