#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "uul/cli.hpp"

using namespace uul;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::execute(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::ordered_json> lines(const std::string& text) {
  std::vector<nlohmann::ordered_json> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.push_back(nlohmann::ordered_json::parse(l));
  return out;
}

std::string cat(const std::string& sub) { return (catalog_dir() / sub).string(); }

}  // namespace

TEST(Cli, VerifyNormalityClaimOnD8) {
  CliRun r = run({"verify", "thm1.1", "--group", "dihedral(8)", "--p", "2", "--exhaustive"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("pass"), std::string::npos);
}

TEST(Cli, VerifyPairCriterionOverOrder16) {
  CliRun r = run({"verify", "lemma1.3", "--catalog", cat("order16"), "--p", "2", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto docs = lines(r.out);
  ASSERT_EQ(docs.size(), 14u);
  for (const auto& d : docs) {
    EXPECT_EQ(d["verdict"], "pass");
    EXPECT_EQ(d["details"]["agree"], d["details"]["pairs"]);
  }
}

TEST(Cli, ClassifyModular16) {
  CliRun r = run({"classify", "--group", "modular16", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto d = lines(r.out).at(0);
  EXPECT_EQ(d["details"]["thm11"]["in_class"], false);
  EXPECT_EQ(d["details"]["thm12"]["in_class"], false);
}

TEST(Cli, OutputFollowsCatalogOrder) {
  setenv("UUL_THREADS", "4", 1);
  CliRun r = run({"info", "--catalog", cat("order16"), "--format", "json", "--no-timing"});
  unsetenv("UUL_THREADS");
  ASSERT_EQ(r.code, 0) << r.err;
  std::vector<std::string> names;
  for (const auto& d : lines(r.out)) names.push_back(d["group"]);
  std::vector<std::string> expected;
  for (const auto& e : stratum(16)) expected.push_back(e.name);
  EXPECT_EQ(names, expected);
}

TEST(Cli, JsonIsByteStableAcrossRunsAndThreads) {
  const std::vector<std::string> args = {"units",  "--catalog", cat("order8"), "--sample", "300",
                                         "--seed", "5",         "--format",   "json",     "--no-timing"};
  setenv("UUL_THREADS", "1", 1);
  CliRun a = run(args);
  setenv("UUL_THREADS", "3", 1);
  CliRun b = run(args);
  unsetenv("UUL_THREADS");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, b.code);
}

TEST(Cli, JsonRoundTripsThroughReport) {
  CliRun r = run({"verify", "thm1.2", "--catalog", cat("order8"), "--format", "json"});
  for (const auto& d : lines(r.out)) {
    VerificationReport rep = VerificationReport::from_json(d);
    EXPECT_EQ(rep.to_json(true), d);
  }
}

TEST(Cli, TextRendersSameFields) {
  CliRun t = run({"verify", "thm1.2", "--group", "modular16", "--no-timing"});
  CliRun j = run({"verify", "thm1.2", "--group", "modular16", "--no-timing", "--format", "json"});
  EXPECT_EQ(t.code, j.code);
  EXPECT_EQ(VerificationReport::from_json(lines(j.out).at(0)).to_text(false), t.out);
}

TEST(Cli, RawVerbsReportTheProperty) {
  CliRun u = run({"units", "--group", "semidihedral(16)"});
  EXPECT_EQ(u.code, 1);
  EXPECT_NE(u.out.find("fail"), std::string::npos);
  CliRun h = run({"units", "--group", "heisenberg(3)", "--p", "3", "--sample", "10000", "--seed", "1", "--format",
               "json"});
  EXPECT_EQ(h.code, 1);
  auto d = lines(h.out).at(0);
  EXPECT_EQ(d["verdict"], "fail");
  EXPECT_EQ(d["seed"], 1);
  EXPECT_EQ(d["witness"].size(), 3u);
  CliRun b = run({"bicyclic", "--group", "dihedral(8)", "--g", "s", "--h", "r", "--format", "json"});
  EXPECT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(lines(b.out).at(0)["details"]["support_size"], 5);
  CliRun m = run({"bicyclic", "--group", "modular16", "--format", "json"});
  EXPECT_EQ(m.code, 1);
  EXPECT_EQ(lines(m.out).at(0)["witness"][0], "b");
  EXPECT_EQ(lines(m.out).at(0)["witness"][1], "a");
}

TEST(Cli, ScanFilterClaim) {
  CliRun r = run({"scan", "lemma4.1", "--catalog", cat("order16"), "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto d = lines(r.out).at(0);
  EXPECT_EQ(d["details"]["holds"], nlohmann::ordered_json::array({"C4sdC4", "C4xC4"}));
  CliRun skip = run({"scan", "lemma4.1", "--catalog", cat("order27"), "--format", "json"});
  EXPECT_EQ(skip.code, 0) << skip.err;
  EXPECT_EQ(lines(skip.out).at(0)["details"]["skipped"].size(), 5u);
}

TEST(Cli, InfoEmitsLoadableGroupFile) {
  CliRun r = run({"info", "--group", "H32", "--emit", "grp"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  FiniteGroup g = group_from_file(parse_group_file(in));
  EXPECT_TRUE(is_isomorphic(g, builtin("H32")).has_value());
}

TEST(Cli, OutFileOption) {
  auto path = std::filesystem::temp_directory_path() / "uul-cli-out.jsonl";
  CliRun r = run({"info", "--group", "Q8xC2", "--format", "json", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(lines(body).at(0)["group"], "Q8xC2");
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "thm9.9", "--group", "Q8xC2"}).code, 2);
  EXPECT_EQ(run({"verify", "thm1.1"}).code, 2);
  EXPECT_EQ(run({"verify", "thm1.1", "--group", "Q8xC2", "--catalog", cat("order8")}).code, 2);
  EXPECT_EQ(run({"verify", "thm1.1", "--group", "no_such_group"}).code, 2);
  EXPECT_EQ(run({"verify", "thm1.1", "--group", "Q8xC2", "--p", "4"}).code, 2);
  EXPECT_EQ(run({"verify", "thm1.1", "--group", "Q8xC2", "--exhaustive", "--sample", "5"}).code, 2);
  EXPECT_EQ(run({"verify", "thm1.1", "--group", "Q8xC2", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"verify", "lemma4.1", "--group", "heisenberg(3)"}).code, 2);
  EXPECT_EQ(run({"units", "--group", "Q8xC4", "--exhaustive"}).code, 2);
  EXPECT_EQ(run({"bicyclic", "--group", "Q8xC2", "--g", "zz", "--h", "a"}).code, 2);
  EXPECT_EQ(run({"scan", "lemma4.1", "--group", "Q8xC2"}).code, 2);
  CliRun r = run({"verify", "thm1.1", "--group", "no_such_group"});
  EXPECT_NE(r.err.find("UnknownName"), std::string::npos);
}

TEST(Cli, HelpAndVersion) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"--version"}).code, 0);
  CliRun h = run({"verify", "--help"});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("--sample"), std::string::npos);
}
