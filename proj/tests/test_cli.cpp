#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(CCS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("no-such-command").exit_code == 2);
  CHECK(run("casimir --lambda 1").exit_code == 2);
  CHECK(run("kernel-check --format xml").exit_code == 2);
}

TEST_CASE("passing checks exit with 0 and emit schema 1 json") {
  RunResult r = run("casimir --lambda 5 --degree 3");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "casimir");
  CHECK(j["pass"] == true);
  CHECK(j["rows"].is_array());
  CHECK(!j["rows"].empty());
}

TEST_CASE("numerical failure exits with 1") {
  // an absurd tolerance forces the comparison to fail
  RunResult r = run("kernel-check --lambda 4 --degree 4 --tolerance 1e-30");
  CHECK(r.exit_code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == false);
}

TEST_CASE("reports are byte identical across runs") {
  std::string args = "ortho-check --lambda 5 --mc-samples 20000 --seed 9";
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("csv output has a header and parses") {
  RunResult r = run("casimir --lambda 4 --degree 2 --format csv");
  CHECK(r.exit_code == 0);
  std::istringstream is(r.out);
  std::string header;
  REQUIRE(std::getline(is, header));
  CHECK(header.find(',') != std::string::npos);
  int rows = 0;
  std::string line;
  while (std::getline(is, line))
    if (!line.empty()) ++rows;
  CHECK(rows > 0);
}

TEST_CASE("--out writes the report to a file") {
  std::string path = "cli_test_report.json";
  std::remove(path.c_str());
  RunResult r = run("symbols --lambda 4 --degree 12 --seed 3 --out " + path);
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  auto j = nlohmann::json::parse(in);
  CHECK(j["schema"] == 1);
  std::remove(path.c_str());
}

TEST_CASE("fock and cs subcommands pass at defaults") {
  CHECK(run("fock-verify --lambda 4 --degree 2").exit_code == 0);
  CHECK(run("cs-expand --lambda 4 --degree 6 --seed 2").exit_code == 0);
  CHECK(run("generators-dump --lambda 4 --degree 1").exit_code == 0);
}
