#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "costpcf/app.hpp"

using namespace costpcf;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) {
  return std::string(COSTPCF_CORPUS_DIR) + "/" + name + ".pcf";
}

std::string temp_program(const std::string& name, const std::string& source) {
  auto dir = std::filesystem::temp_directory_path() / "costpcf_cli_test";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << source;
  return path.string();
}

json first_line(const std::string& s) { return json::parse(s.substr(0, s.find('\n'))); }

}  // namespace

TEST(Cli, Typecheck) {
  auto r = cli({"typecheck", corpus("add")});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(first_line(r.out), json::parse(R"({"type":"F nat"})"));
}

TEST(Cli, IllTypedFileIsAUserError) {
  auto r = cli({"typecheck", temp_program("bad.pcf", "(ap (ret zero) zero)")});
  EXPECT_EQ(r.code, kUserError);
  auto e = first_line(r.err);
  EXPECT_EQ(e["error"], "type");
  EXPECT_EQ(e["at"], "/0");
}

TEST(Cli, EmptyFileIsAParseError) {
  auto r = cli({"typecheck", temp_program("empty.pcf", "")});
  EXPECT_EQ(r.code, kUserError);
  auto e = first_line(r.err);
  EXPECT_EQ(e["error"], "parse");
  EXPECT_EQ(e["line"], 1);
}

TEST(Cli, MissingFileAndBadUsage) {
  EXPECT_EQ(first_line(cli({"profile", "/nonexistent/x.pcf"}).err)["error"], "io");
  EXPECT_EQ(cli({}).code, kUserError);
  EXPECT_EQ(cli({"frobnicate"}).code, kUserError);
  EXPECT_EQ(cli({"--fuel", "0", "profile", corpus("unit_ret")}).code, kUserError);
  EXPECT_EQ(cli({"--monoid", "vec:x", "profile", corpus("unit_ret")}).code, kUserError);
  EXPECT_EQ(cli({"check", "nope"}).code, kUserError);
}

TEST(Cli, Profile) {
  auto two = temp_program("two.pcf", "(step 2 (ret triv))");
  EXPECT_EQ(first_line(cli({"profile", two}).out), json::parse(R"({"status":"defined","cost":2})"));
  auto omega = temp_program("omega.pcf", "(fix x x)");
  EXPECT_EQ(first_line(cli({"profile", omega}).out),
            json::parse(R"({"status":"exhausted","fuel":100000})"));
  for (const auto& name : {"step_chain", "countdown3", "higher_order", "thunk_twice"}) {
    auto r = cli({"--phase", "ext", "profile", corpus(name)});
    EXPECT_EQ(first_line(r.out), json::parse(R"({"status":"defined","cost":"*"})")) << name;
  }
  // Profiling needs a program of type F unit.
  EXPECT_EQ(cli({"profile", corpus("add")}).code, kUserError);
}

TEST(Cli, OtherMonoids) {
  auto v = temp_program("vec.pcf", "(step [1,2] (step [0,3] (ret triv)))");
  EXPECT_EQ(first_line(cli({"--monoid", "vec:2", "profile", v}).out)["cost"], json::parse("[1,5]"));
  auto w = temp_program("word.pcf", "(step {1} (step {2,3} (ret triv)))");
  EXPECT_EQ(first_line(cli({"--monoid", "word", "profile", w}).out)["cost"], "{1,2,3}");
}

TEST(Cli, Denote) {
  auto two = temp_program("two.pcf", "(step 2 (ret triv))");
  auto j = first_line(cli({"denote", two}).out);
  EXPECT_EQ(j["status"], "defined");
  EXPECT_EQ(j["cost"], 2);
  EXPECT_EQ(j["value"], "triv");
  auto add = first_line(cli({"denote", corpus("add")}).out);
  EXPECT_EQ(add["value"], 5);
  auto loop = first_line(cli({"--fuel", "50", "denote", corpus("omega")}).out);
  EXPECT_EQ(loop["status"], "exhausted");
  EXPECT_TRUE(loop["cost"].is_null());
}

TEST(Cli, Step) {
  auto r = cli({"step", corpus("step_chain")});
  EXPECT_EQ(r.code, kOk);
  auto j = first_line(r.out);
  EXPECT_EQ(j["status"], "terminal");
  EXPECT_EQ(j["total"], 5);

  auto t = cli({"--trace", "--fuel", "3", "step", corpus("omega")});
  std::istringstream lines(t.out);
  std::string line;
  std::size_t n = 0;
  json last;
  while (std::getline(lines, line)) {
    last = json::parse(line);
    ++n;
  }
  EXPECT_EQ(n, 4u);
  EXPECT_EQ(last["status"], "truncated");
  EXPECT_EQ(last["steps"], 3);
}

TEST(Cli, Adequacy) {
  auto r = cli({"adequacy", corpus("countdown3")});
  EXPECT_EQ(r.code, kOk);
  auto j = first_line(r.out);
  EXPECT_EQ(j["agree"], true);
}

TEST(Cli, CheckAdequacySuite) {
  auto r = cli({"check", "adequacy", "--cases", "200"});
  EXPECT_EQ(r.code, kOk) << r.out << r.err;
  EXPECT_EQ(first_line(r.out)["ok"], true);
}

TEST(Cli, Deterministic) {
  auto a = cli({"--seed", "7", "check", "sequencing", "--cases", "40"});
  auto b = cli({"--seed", "7", "check", "sequencing", "--cases", "40"});
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, FuelFromEnvironment) {
  auto omega = temp_program("omega.pcf", "(fix x x)");
  ::setenv("COSTPCF_FUEL", "123", 1);
  auto j = first_line(cli({"profile", omega}).out);
  auto explicit_fuel = first_line(cli({"--fuel", "9", "profile", omega}).out);
  ::unsetenv("COSTPCF_FUEL");
  EXPECT_EQ(j["fuel"], 123);
  EXPECT_EQ(explicit_fuel["fuel"], 9);
}
