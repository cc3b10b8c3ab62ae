#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "charp/io.hpp"
#include "support.hpp"

using charp::testing::cases_dir;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run run(const std::vector<std::string>& args) {
  std::string cmd = quote(CHARP_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string case_file(const std::string& name) { return cases_dir() + "/" + name; }

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("charp_cli_" + name);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(CliVerify, ExitCodes) {
  auto ok = run({"verify", case_file("worked_integer.json"), "--char0"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(ok.out).at("passed").get<bool>());

  auto bad = run({"verify", case_file("fails_condition2.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_FALSE(nlohmann::json::parse(bad.out).at("condition2").at(0).get<bool>());

  auto malformed = temp_file("malformed.json", "{\"ring\": ");
  EXPECT_EQ(run({"verify", malformed.string()}).code, 2);
  EXPECT_EQ(run({"verify", "/nonexistent/case.json"}).code, 2);
  EXPECT_EQ(run({"verify", case_file("worked_integer.json"), "--bogus"}).code, 2);
}

TEST(CliVerify, ModPrime) {
  auto r = run({"verify", case_file("worked_sixfold.json"), "--prime", "7"});
  EXPECT_EQ(r.code, 0);
  auto bad = run({"verify", case_file("worked_sixfold.json"), "--prime", "3"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(nlohmann::json::parse(bad.out).at("error").at("kind"), "BadPrime");
  EXPECT_EQ(run({"verify", case_file("worked_sixfold.json"), "--prime", "8"}).code, 2);
}

TEST(CliSweep, SixfoldRange) {
  auto r = run({"sweep", case_file("worked_sixfold.json"), "--primes", "2..100"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.at("bad_primes").size(), 2u);
  EXPECT_EQ(j.at("bad_primes").at(0).at("prime"), 2);
  EXPECT_EQ(j.at("bad_primes").at(1).at("prime"), 3);
  EXPECT_EQ(j.at("uniform_d"), 2);
  EXPECT_EQ(j.at("char0_d"), 2);
}

TEST(CliSweep, SingleAndEmptyRanges) {
  auto single = run({"sweep", case_file("worked_integer.json"), "--primes", "7..7"});
  EXPECT_EQ(single.code, 0);
  EXPECT_EQ(nlohmann::json::parse(single.out).at("per_prime").size(), 1u);
  auto empty = run({"sweep", case_file("worked_integer.json"), "--primes", "5..3"});
  EXPECT_EQ(empty.code, 0);
  auto j = nlohmann::json::parse(empty.out);
  EXPECT_TRUE(j.at("per_prime").empty());
  EXPECT_TRUE(j.at("bad_primes").empty());
  EXPECT_EQ(run({"sweep", case_file("worked_integer.json"), "--primes", "7-9"}).code, 2);
}

TEST(CliSweep, RefusedAndWrittenToFile) {
  EXPECT_EQ(run({"sweep", case_file("fails_condition1.json")}).code, 1);
  auto out = std::filesystem::temp_directory_path() / "charp_cli_sweep.json";
  std::filesystem::remove(out);
  auto r = run({"sweep", case_file("torus.json"), "--primes", "2..30", "--output", out.string()});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(out);
  std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(nlohmann::json::parse(written), nlohmann::json::parse(r.out));
}

TEST(CliSweep, JobsDoNotChangeOutput) {
  auto one = run({"sweep", case_file("scaled_denominators.json"), "--primes", "2..80", "--jobs", "1"});
  for (const char* jobs : {"2", "4", "8"}) {
    auto many = run({"sweep", case_file("scaled_denominators.json"), "--primes", "2..80", "--jobs", jobs});
    EXPECT_EQ(many.out, one.out) << jobs;
    EXPECT_EQ(many.code, one.code);
  }
}

TEST(CliSweep, ReportReparses) {
  auto r = run({"sweep", case_file("worked_sixfold.json"), "--primes", "2..30"});
  auto j = nlohmann::json::parse(r.out);
  auto back = charp::sweep_from_json(j);
  auto ring = charp::load_case(case_file("worked_sixfold.json")).ring;
  EXPECT_EQ(charp::to_json(back, *ring).dump(2) + "\n", r.out);
}

TEST(CliPredicates, Examples) {
  auto member = run({"member", "--f", "x^2", "--ideal", "(x)"});
  EXPECT_EQ(member.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(member.out).at("member").get<bool>());
  EXPECT_EQ(run({"member", "--vars", "x,y", "--f", "y", "--ideal", "(x)"}).code, 1);

  auto dim = run({"dim", "--vars", "x,y", "--ideal", "(x*y)"});
  EXPECT_EQ(nlohmann::json::parse(dim.out).at("dimension"), 1);

  auto gb = run({"gb", "--ideal", "(x^2 - y, x)"});
  EXPECT_EQ(nlohmann::json::parse(gb.out).at("basis"), nlohmann::json::parse(R"(["y", "x"])"));

  auto rad = run({"radical-eq", "--ideal", "(x^2, y)", "--prime", "(x, y)", "--cap", "4"});
  EXPECT_EQ(rad.code, 0);
  EXPECT_EQ(nlohmann::json::parse(rad.out).at("exponents"), nlohmann::json::parse("[2, 1]"));
  EXPECT_EQ(run({"radical-eq", "--vars", "x,y", "--ideal", "(x)", "--prime", "(x, y)"}).code, 1);

  auto probe = run({"prime-probe", "--ideal", "(x*y)", "--seed", "3"});
  EXPECT_EQ(probe.code, 1);
  EXPECT_EQ(nlohmann::json::parse(probe.out).at("verdict"), "NotPrime");
  EXPECT_EQ(run({"prime-probe", "--vars", "x,y", "--ideal", "(x)"}).code, 0);

  EXPECT_EQ(run({"maximal", "--ideal", "(x - 1, y - 2)", "--point", "1,2"}).code, 0);
  EXPECT_EQ(run({"maximal", "--ideal", "(x^2 + 1)", "--point", "1"}).code, 1);

  auto cx = run({"complexity", "--ideal", "(x^3 + y)"});
  EXPECT_EQ(nlohmann::json::parse(cx.out).at("complexity"), 3);

  auto pts = run({"points", "--field", "5", "--ideal", "(T^2 + 1)"});
  EXPECT_EQ(nlohmann::json::parse(pts.out).at("points"), nlohmann::json::parse(R"([["2"], ["3"]])"));

  EXPECT_EQ(run({"member", "--f", "x +", "--ideal", "(x)"}).code, 2);
  EXPECT_EQ(run({"dim", "--ideal", "(x, x - 1)"}).code, 1);
}

TEST(CliPredicates, EncodeDecodeRoundTrip) {
  auto enc = run({"encode", "--order", "lex", "--ideal", "(x)", "--d", "1"});
  ASSERT_EQ(enc.code, 0);
  auto code = nlohmann::json::parse(enc.out);
  EXPECT_EQ(code.at("rows"), nlohmann::json::parse(R"([["1", "0"], ["0", "0"]])"));
  auto path = temp_file("code.json", enc.out);
  auto dec = run({"decode", "--code", "@" + path.string()});
  ASSERT_EQ(dec.code, 0);
  EXPECT_EQ(nlohmann::json::parse(dec.out).at("generators"), nlohmann::json::parse(R"(["x1"])"));
  EXPECT_EQ(run({"encode", "--ideal", "(x^3)", "--d", "2"}).code, 1);
  EXPECT_EQ(run({"decode", "--code", "{\"nvars\": 1}"}).code, 2);
}
