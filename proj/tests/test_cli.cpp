#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  std::string cmd = std::string(MMT_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) r.out += buf.data();
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::string temp_file(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / ("mmt_cli_" + name + ".json");
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST(Cli, VerifyIdentity) {
  auto r = run("verify --m 3 --k 2 --cap 6 --matrix identity");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "d=6 ok residual_terms=0"));
  EXPECT_TRUE(contains(r.out, "PASS"));
}

TEST(Cli, VerifyExamples) {
  EXPECT_EQ(run("verify --m 3 --k 3 --matrix identity --cap 8").code, 0);
  EXPECT_EQ(run("verify --m 3 --k 2 --matrix random --seed 7 --cap 6").code, 0);
  auto sym = run("verify --m 3 --k 3 --matrix symbolic --cap 4");
  EXPECT_EQ(sym.code, 0);
  EXPECT_TRUE(contains(sym.out, "mode=symbolic"));
  EXPECT_EQ(run("verify --m 4 --k 3 --cap 5 --matrix random --seed 7").code, 0);
}

TEST(Cli, VerifyFromFile) {
  auto path = temp_file("ok", R"({"m":2,"mode":"numeric","entries":[["1/2","1"],["0","-2"]]})");
  auto r = run("verify --m 2 --k 2 --cap 4 --matrix " + path);
  EXPECT_EQ(r.code, 0);
  std::remove(path.c_str());
}

TEST(Cli, CountTable) {
  auto r = run("count --m 3 --k 3 --len 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "3\t26\t26\t26\n"));
  EXPECT_TRUE(contains(r.out, "AGREE"));
}

TEST(Cli, SeriesEqual) {
  auto r = run("series --m 3 --k 3 --cap 4 --variant weak");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "symmetric: true"));
  EXPECT_TRUE(contains(r.out, "EQUAL"));
}

TEST(Cli, NormalFormSigns) {
  auto r = run("normal-form --m 3 --k 3 --word 3,2,1");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "+1\t1,2,3\n-1\t1,3,2\n-1\t2,1,3\n+1\t2,3,1\n+1\t3,1,2\n"));
}

TEST(Cli, CharpolySymbolic) {
  auto r = run("charpoly --m 2 --matrix symbolic --format json");
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["coeffs"].size(), 3u);
  EXPECT_FALSE(j.contains("second_factor"));
  auto with_k = nlohmann::json::parse(run("charpoly --m 3 --k 3 --matrix identity --format json").out);
  EXPECT_TRUE(with_k.contains("second_factor"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("normal-form --m 3 --k 3 --word 1,4").code, 2);
  EXPECT_EQ(run("normal-form --m 3 --k 3 --word 1,x").code, 2);
  EXPECT_EQ(run("verify --m 3 --k 2 --matrix random").code, 2);
  EXPECT_EQ(run("verify --m 3 --k 4").code, 2);
  EXPECT_EQ(run("verify --m 3").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
  auto bad = temp_file("bad", R"({"m":2,"entries":[["1","2"],["3"]]})");
  EXPECT_EQ(run("verify --m 2 --k 2 --matrix " + bad).code, 2);
  auto mismatch = temp_file("mismatch", R"({"m":2,"entries":[["1","2"],["3","4"]]})");
  EXPECT_EQ(run("verify --m 3 --k 2 --matrix " + mismatch).code, 2);
  EXPECT_EQ(run("verify --m 3 --k 2 --matrix /nonexistent/file.json").code, 2);
  std::remove(bad.c_str());
  std::remove(mismatch.c_str());
}

TEST(Cli, Help) { EXPECT_EQ(run("--help").code, 0); }

TEST(Cli, DeterministicOutput) {
  const std::string args = "verify --m 3 --k 3 --cap 5 --matrix random --seed 42 --format json";
  auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, JsonOutputsParse) {
  for (const char* args : {"verify --m 2 --k 2 --cap 3 --format json", "count --m 3 --k 2 --len 4 --format json",
                           "series --m 2 --k 2 --cap 3 --format json",
                           "normal-form --m 3 --k 2 --word 3,1 --format json"}) {
    auto r = run(args);
    EXPECT_EQ(r.code, 0) << args;
    EXPECT_TRUE(nlohmann::json::accept(r.out)) << args;
  }
  auto j = nlohmann::json::parse(run("verify --m 2 --k 2 --cap 3 --format json").out);
  EXPECT_EQ(j["pass"], true);
  EXPECT_TRUE(j["first_failure"].is_null());
}
