#include "subseq/cli.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <unistd.h>

using nlohmann::json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "subseq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = subseq::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

json parsed(const Result& r) { return json::parse(r.out); }

// Every value in a JSON document that is a count must be a string; numbers
// are only allowed under index-like keys.
bool counts_are_strings(const json& j, const std::string& key = "") {
  static const std::set<std::string> index_keys{"n", "k", "i", "j", "l", "N", "n_max", "shape",
                                                "least_separating_n", "max_least_separating_n",
                                                "compositions", "internal_zero_positions"};
  if (j.is_number()) return index_keys.count(key) > 0;
  if (j.is_array()) {
    for (const auto& v : j) {
      if (!counts_are_strings(v, key)) return false;
    }
  }
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (!counts_are_strings(v, k)) return false;
    }
  }
  return true;
}

} // namespace

TEST(Cli, Count) {
  const auto r = invoke({"count", "-p", "10", "-w", "10010"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "{\"count\":\"4\"}\n");
}

TEST(Cli, SpectrumCsv) {
  const auto r = invoke({"spectrum", "-p", "101", "-n", "6", "--format", "csv"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("k,count\n", 0), 0u);
  EXPECT_NE(r.out.find("\n5,0\n"), std::string::npos);
  EXPECT_NE(r.out.find("\n6,9\n"), std::string::npos);
}

TEST(Cli, SpectrumJson) {
  const auto r = invoke({"spectrum", "-p", "10", "-n", "2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(parsed(r), json::parse(R"({"pattern":"10","n":2,"counts":["3","1"]})"));
}

TEST(Cli, ClosedForm) {
  const auto r = invoke({"closed-form", "-p", "10", "-n", "4", "-k", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "{\"B\":\"3\"}\n");
}

TEST(Cli, ClosedFormOutOfRange) {
  const auto r = invoke({"closed-form", "-p", "10", "-n", "2", "-k", "4"});
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("OutOfStatedRange"), std::string::npos);
}

TEST(Cli, BudgetExceededNamesCapAndLength) {
  const auto r = invoke({"spectrum", "-p", "10", "-n", "23"});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("BudgetExceeded"), std::string::npos);
  EXPECT_NE(r.err.find("n=23"), std::string::npos);
  EXPECT_NE(r.err.find("cap 22"), std::string::npos);
  EXPECT_EQ(invoke({"spectrum", "-p", "1", "-n", "23", "--budget", "23"}).status, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).status, 1);
  EXPECT_EQ(invoke({"bogus"}).status, 1);
  EXPECT_EQ(invoke({"spectrum", "-p", "1x", "-n", "3"}).status, 1);
  EXPECT_EQ(invoke({"spectrum", "-p", "", "-n", "3"}).status, 1);
  EXPECT_EQ(invoke({"spectrum", "-p", "10"}).status, 1);
  EXPECT_EQ(invoke({"spectrum", "-p", "10", "-n", "3", "--format", "xml"}).status, 1);
  EXPECT_EQ(invoke({"max", "-p", "1010", "-n", "6"}).status, 1);
  EXPECT_EQ(invoke({"internal-zeros", "-p", "1010", "--n-min", "4", "--n-max", "6"}).status, 1);
  EXPECT_EQ(invoke({"--help"}).status, 0);
}

TEST(Cli, Identities) {
  const auto r = invoke({"identities", "-p", "10", "-n", "4"});
  EXPECT_EQ(r.status, 0);
  const auto j = parsed(r);
  EXPECT_TRUE(j["all_hold"].get<bool>());
  EXPECT_EQ(j["identities"][1]["lhs"], "24");
}

TEST(Cli, MaxWithOracle) {
  const auto r = invoke({"max", "-p", "101", "--n-min", "3", "--n-max", "12", "--oracle"});
  EXPECT_EQ(r.status, 0);
  const auto j = parsed(r);
  EXPECT_EQ(j["rows"].back()["M"], "64");
  EXPECT_EQ(j["rows"].back()["oracle_M"], "64");

  const auto csv = invoke({"max", "-p", "0110", "--n-min", "4", "--n-max", "5", "--format", "csv"});
  EXPECT_EQ(csv.status, 0);
  EXPECT_EQ(csv.out, "n,M\n4,1\n5,3\n");
}

TEST(Cli, Optimal) {
  const auto r = invoke({"optimal", "-p", "1101", "-n", "7"});
  EXPECT_EQ(r.status, 0);
  const auto words = parsed(r)["optimal_words"];
  EXPECT_NE(std::find(words.begin(), words.end(), "1110101"), words.end());

  const auto capped = parsed(invoke({"optimal", "-p", "10", "-n", "9", "--cap", "1"}));
  EXPECT_TRUE(capped["truncated"].get<bool>());
  EXPECT_EQ(capped["optimal_words"].size(), 1u);
}

TEST(Cli, InternalZeros) {
  const auto r = invoke({"internal-zeros", "-p", "1101", "--n-min", "6", "--n-max", "10"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(parsed(r)["all_agree"].get<bool>());
  EXPECT_EQ(invoke({"internal-zeros", "-p", "110100", "--n-min", "6", "--n-max", "8", "--raw"}).status, 0);
}

TEST(Cli, WilfScan) {
  const auto r = invoke({"wilf-scan", "-l", "3", "--n-max", "6"});
  EXPECT_EQ(r.status, 0);
  const auto j = parsed(r);
  EXPECT_EQ(j["classes"].size(), 3u);
  EXPECT_TRUE(j["verdict"].get<bool>());
  EXPECT_TRUE(j.contains("horizon_note"));

  const auto candidates = invoke({"wilf-scan", "-l", "4", "--n-max", "4"});
  EXPECT_EQ(candidates.status, 2);
}

TEST(Cli, WilfScanCheckpoint) {
  const auto path =
      std::filesystem::temp_directory_path() / ("subseq-cli-ckpt-" + std::to_string(::getpid()));
  std::filesystem::remove(path);
  const auto a = invoke({"wilf-scan", "-l", "4", "--checkpoint", path.string()});
  const auto b = invoke({"wilf-scan", "-l", "4", "--checkpoint", path.string(), "--workers", "3"});
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  std::filesystem::remove(path);
}

TEST(Cli, GfCheck) {
  const auto ok = invoke({"gf-check", "-i", "0", "-j", "1", "-N", "8"});
  EXPECT_EQ(ok.status, 0);
  EXPECT_TRUE(parsed(ok)["agrees"].get<bool>());

  const auto plain = invoke({"gf-check", "-i", "0", "-j", "1", "-N", "8", "--plain-leading"});
  EXPECT_EQ(plain.status, 2);
  EXPECT_FALSE(parsed(plain)["mismatches"].empty());

  const auto series = parsed(invoke({"gf-check", "-i", "1", "-j", "1", "-N", "6", "--series"}));
  const auto& row = series["coeffs"][6]["terms"];
  EXPECT_NE(std::find(row.begin(), row.end(), json::parse(R"({"k":6,"c":"9"})")), row.end());
  for (const auto& t : row) EXPECT_NE(t["k"], 5);
}

TEST(Cli, CountsAreDecimalStrings) {
  const std::vector<std::vector<std::string>> calls{
      {"count", "-p", "10", "-w", "1100"},
      {"spectrum", "-p", "1101", "-n", "9"},
      {"identities", "-p", "110", "-n", "7"},
      {"max", "-p", "110", "--n-min", "3", "--n-max", "8", "--oracle"},
      {"optimal", "-p", "101", "-n", "8"},
      {"internal-zeros", "-p", "101", "--n-min", "3", "--n-max", "8"},
      {"wilf-scan", "-l", "4"},
      {"gf-check", "-i", "1", "-j", "0", "-N", "6", "--series"},
      {"gf-check", "-i", "0", "-j", "0", "-N", "4", "--plain-leading"},
  };
  for (const auto& c : calls) {
    const auto r = invoke(c);
    ASSERT_LE(r.status, 2) << c[0];
    EXPECT_TRUE(counts_are_strings(parsed(r))) << c[0] << ": " << r.out;
  }
}

TEST(Cli, WorkerCountDoesNotChangeOutput) {
  for (const std::vector<std::string>& c :
       {std::vector<std::string>{"spectrum", "-p", "110100", "-n", "15"},
        std::vector<std::string>{"wilf-scan", "-l", "5"},
        std::vector<std::string>{"optimal", "-p", "1101", "-n", "12"}}) {
    const std::string base = invoke(c).out;
    for (const char* w : {"2", "8"}) {
      auto with = c;
      with.push_back("--workers");
      with.push_back(w);
      EXPECT_EQ(invoke(with).out, base) << c[0] << " workers=" << w;
    }
  }
}

TEST(Cli, WorkersFromEnvironment) {
  ::setenv(subseq::cli::kWorkersEnv, "4", 1);
  const auto r = invoke({"spectrum", "-p", "101", "-n", "12"});
  ::unsetenv(subseq::cli::kWorkersEnv);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, invoke({"spectrum", "-p", "101", "-n", "12"}).out);
}
