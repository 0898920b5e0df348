#include <doctest.h>

#include <sstream>

#include "ayrep/cli.hpp"
#include "ayrep/serialize.hpp"

using namespace ayrep;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ayrep");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_command_line(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("cell prints the members") {
    const Result r = cli({"cell", "--n", "3", "--f", "0,2,-1"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("members (3): 1,2,3 / 2,1,3 / 1,3,2") != std::string::npos);
    CHECK(r.out.find("T_dK: (1,3)") != std::string::npos);
  }

  TEST_CASE("verify coxeter at n = 4 passes") {
    const Result r = cli({"verify", "--n", "4", "--suite", "coxeter"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("PASS coxeter") != std::string::npos);
  }

  TEST_CASE("tops at n = 3 reports two certified elements") {
    const Result r = cli({"tops", "--n", "3", "--json"});
    CHECK(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["report"]["oracle"].size() == 2);
    CHECK(j["schema_version"] == kSchemaVersion);
  }

  TEST_CASE("JSON output is deterministic") {
    const std::vector<std::string> args{"rep", "--n", "5", "--f", "0,1,2,-1,0", "--form", "seminormal", "--json"};
    const Result a = cli(args), b = cli(args);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    const Json j = Json::parse(a.out);
    CHECK(j["representation"]["generators"][0]["matrix"][0][0] == "1/1");
    CHECK(j["ok"] == true);
    const std::vector<std::string> sweep{"verify", "--n", "6", "--suite", "coxeter", "--seed", "3", "--samples", "1", "--json"};
    CHECK(cli(sweep).out == cli(sweep).out);
  }

  TEST_CASE("every subcommand runs") {
    CHECK(cli({"syt", "--shape", "3,2"}).out.find("5 standard tableaux") != std::string::npos);
    CHECK(cli({"syt", "--content", "0,-2,1"}).code == kExitOk);
    CHECK(cli({"rep", "--shape", "2,2/1", "--form", "orthogonal"}).code == kExitOk);
    CHECK(cli({"rep", "--shape", "3,1", "--form", "row-stochastic"}).code == kExitOk);
    CHECK(cli({"rep", "--f=-1,0,1", "--form", "orthogonal"}).code == kExitOk);
    CHECK(cli({"induce", "--n", "4", "--J", "1,3", "--shapes", "2;1,1"}).code == kExitOk);
    CHECK(cli({"bn", "--lambda", "2", "--mu", "1"}).code == kExitOk);
    CHECK(cli({"rep", "--type", "B", "--lambda", "1", "--mu", "1,1", "--form", "orthogonal"}).code == kExitOk);
    const Result dot = cli({"rep", "--f", "0,1,-1", "--dot"});
    CHECK(dot.out.find("digraph") == 0);
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"cell", "--n", "3"}).code == kExitUsage);
    CHECK(cli({"cell", "--n", "4", "--f", "0,2,-1"}).code == kExitUsage);
    CHECK(cli({"rep", "--f", "0,0,1"}).code == kExitUsage);
    CHECK(cli({"rep", "--f", "0,x"}).code == kExitUsage);
    CHECK(cli({"verify", "--n", "3", "--suite", "nope"}).code == kExitUsage);
    CHECK(cli({"verify", "--n", "0"}).code == kExitUsage);
    CHECK(cli({"tops", "--n", "3", "--json", "--dot"}).code == kExitUsage);
    CHECK(cli({"tops", "--n", "3", "--dot"}).code == kExitUsage);
    CHECK(cli({"rep", "--f", "1,2,3,4,5,6,7,8,9", "--max-n", "4"}).code == kExitUsage);
    CHECK(cli({"--help"}).code == kExitOk);
  }

  TEST_CASE("run accepts a filled-in configuration") {
    RunConfig config;
    config.command = "verify";
    config.n = 3;
    config.suites = {"coxeter"};
    std::ostringstream out, err;
    CHECK(run(config, out, err) == kExitOk);
    CHECK(out.str().find("result: PASS") != std::string::npos);
  }
}
