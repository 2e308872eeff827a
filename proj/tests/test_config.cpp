#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "logpole/acceptance.hpp"
#include "logpole/config.hpp"

using namespace logpole;

TEST_CASE("serialization round-trips bit-exactly") {
  RunConfig cfg;
  cfg.d = 2;
  cfg.N = 3;
  cfg.M = 123.456789012345678;  // more digits than decimal printing keeps
  cfg.epsilon = 0.1 + 0.2;      // deliberately not a clean literal
  cfg.n0 = 6;
  cfg.quad_rel_tol = 3.3333333333333333e-11;
  const RunConfig back = RunConfig::parse(cfg.serialize());
  CHECK(back.d == cfg.d);
  CHECK(back.N == cfg.N);
  REQUIRE(back.M.has_value());
  CHECK(*back.M == *cfg.M);  // exact, not approximate
  CHECK(back.epsilon == cfg.epsilon);
  CHECK(*back.n0 == *cfg.n0);
  CHECK(back.quad_rel_tol == cfg.quad_rel_tol);
  CHECK(back.serialize() == cfg.serialize());
}

TEST_CASE("auto entries survive a round trip as auto") {
  RunConfig cfg;
  const RunConfig back = RunConfig::parse(cfg.serialize());
  CHECK_FALSE(back.M.has_value());
  CHECK_FALSE(back.n0.has_value());
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(RunConfig::parse("d=3\n"), ConfigError);              // no version
  CHECK_THROWS_AS(RunConfig::parse("config_version=2\n"), ConfigError); // wrong version
  CHECK_THROWS_AS(RunConfig::parse("config_version=1\nbogus_key=1\n"), ConfigError);
  CHECK_THROWS_AS(RunConfig::parse("config_version=1\nd three\n"), ConfigError);
  CHECK_THROWS_AS(RunConfig::parse("config_version=1\nd=three\n"), ConfigError);
  CHECK_THROWS_AS(RunConfig::parse("config_version=1\nvariant=cubic\n"), ConfigError);
}

TEST_CASE("resolution expands auto values") {
  RunConfig cfg;  // defaults: d = 3, N = 2, auto M, auto n0
  const ResolvedConfig r = resolve(cfg);
  CHECK(r.profile.M == 160.0);
  CHECK(r.n0 >= 1);
  CHECK(r.n0 <= 5);
  CHECK(r.level_hi - r.level_lo + 1 == cfg.level_span);
  // explicit values pass through untouched
  RunConfig manual;
  manual.M = 200.0;
  manual.n0 = 6;
  const ResolvedConfig rm = resolve(manual);
  CHECK(rm.profile.M == 200.0);
  CHECK(rm.n0 == 6);
}

TEST_CASE("resolution validates") {
  RunConfig bad;
  bad.d = 0;
  CHECK_THROWS_AS(resolve(bad), ConfigError);
  bad = RunConfig{};
  bad.M = 0.5;
  CHECK_THROWS_AS(resolve(bad), ConfigError);
  bad = RunConfig{};
  bad.format = "yaml";
  CHECK_THROWS_AS(resolve(bad), ConfigError);
  bad = RunConfig{};
  bad.variant = ProfileVariant::epsilon;
  bad.epsilon = -1.0;
  CHECK_THROWS_AS(resolve(bad), ConfigError);
}

TEST_CASE("resolved header embeds the expanded values") {
  const ResolvedConfig r = resolve(RunConfig{});
  const std::string header = r.header();
  CHECK(header.find("# M=160") != std::string::npos);
  CHECK(header.find("auto") == std::string::npos);
  CHECK(header.find("# config_version=1") != std::string::npos);
}

TEST_CASE("suite names map to criteria") {
  CHECK(criteria_for_suite("ode") == std::vector<int>{1});
  CHECK(criteria_for_suite("all").size() == 9);
  CHECK_THROWS_AS(criteria_for_suite("everything"), ConfigError);
}

#ifdef LOGPOLE_CLI_PATH

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(LOGPOLE_CLI_PATH) + " " + args + " > /tmp/logpole_cli_out.txt 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string last_output() {
  std::ifstream in("/tmp/logpole_cli_out.txt");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("cli exit-code contract") {
  CHECK(run_cli("ladder --levels 4..5") == 0);
  CHECK(run_cli("verify --suite ode") == 0);
  CHECK(run_cli("verify --suite nonsense") == 2);
  CHECK(run_cli("quotients --family dispersion --q 1.5 --levels 4..7") == 2);
  CHECK(run_cli("--d 0 ladder") == 2);
  CHECK(run_cli("bogus-subcommand") == 2);
  // a failing check is exit 1, distinct from usage errors
  CHECK(run_cli("verify --suite decay") == 1);
}

TEST_CASE("cli evolve emits the full time series") {
  REQUIRE(run_cli("evolve --n 4 --samples 10") == 0);
  const std::string out = last_output();
  std::istringstream lines(out);
  std::string line;
  int rows = 0;
  bool saw_zero = false;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("t,", 0) == 0) continue;
    if (rows == 0 && line.rfind("0,0,", 0) == 0) saw_zero = true;
    ++rows;
  }
  CHECK(rows == 11);  // samples + 1, t = 0 included
  CHECK(saw_zero);
}

TEST_CASE("cli determinism: identical config gives identical bytes") {
  REQUIRE(run_cli("ladder --levels 4..6") == 0);
  const std::string first = last_output();
  REQUIRE(run_cli("ladder --levels 4..6") == 0);
  CHECK(first == last_output());
  CHECK(first.find("# M=160") != std::string::npos);  // resolved header present
}

TEST_CASE("cli ladder output shape") {
  REQUIRE(run_cli("ladder --levels 4..11") == 0);
  const std::string out = last_output();
  int rows = 0;
  std::istringstream lines(out);
  std::string line;
  bool saw_header = false;
  while (std::getline(lines, line)) {
    if (line.rfind("n,lambda_n", 0) == 0) saw_header = true;
    else if (!line.empty() && line[0] != '#' && saw_header) ++rows;
  }
  CHECK(saw_header);
  CHECK(rows == 8);
}

TEST_CASE("cli single-level ladder") {
  REQUIRE(run_cli("ladder --levels 5..5") == 0);
  const std::string out = last_output();
  CHECK(out.find("\n5,") != std::string::npos);
}

#endif  // LOGPOLE_CLI_PATH
