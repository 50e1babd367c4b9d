#include "ruledcone/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace ruledcone;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("chamber command") {
  auto r = run({"chamber", "--u", "5/2,1/4"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("chamber 5") == 0);
  auto j = nlohmann::json::parse(run({"chamber", "--u", "2,1/2", "--json"}).out);
  CHECK(j["chamber"] == 3);
  CHECK(j["active_walls"][0] == "B-2F");
}

TEST_CASE("invalid input exits with code 2") {
  auto r = run({"chamber", "--u", "1/2,1/4"});
  CHECK(r.code == kExitInvalidInput);
  CHECK(r.err.find("mu >= 1 (policy)") != std::string::npos);
  CHECK(run({"chamber", "--u", "0.5,0.1"}).code == kExitInvalidInput);
  CHECK(run({"inflate", "--u", "5/2,1/4", "--z", "E", "--t", "1/2"}).code == kExitInvalidInput);
  CHECK(run({"no-such-command"}).code == kExitInvalidInput);
  CHECK(run({}).code == kExitInvalidInput);
  CHECK(run({"plan", "--from", "5/2,1/4", "--to", "5/2,3/4"}).code == kExitInvalidInput);
}

TEST_CASE("help exits cleanly") {
  auto r = run({"--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("verify-stability") != std::string::npos);
}

TEST_CASE("strata command") {
  auto j = nlohmann::json::parse(run({"strata", "--u", "5/2,1/4", "--json"}).out);
  CHECK(j["chamber"] == 5);
  CHECK(j["labels"][0]["core"].empty());
  CHECK(j["labels"].size() == 6);
}

TEST_CASE("plan command") {
  auto r = run({"plan", "--from", "5/2,1/4", "--to", "11/4,1/2", "--label", "B-2F", "--json"});
  CHECK(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["recipe"] == "right-then-vertical");
  CHECK(j["end"]["mu"] == "11/4");
  auto blocked = run({"plan", "--from", "5/4,1/4", "--to", "5/4,1/2"});
  CHECK(blocked.code == kExitCounterexample);
  CHECK(blocked.err.find("mu > x + c_target") != std::string::npos);
}

TEST_CASE("verify-stability exit codes") {
  CHECK(run({"verify-stability", "--g", "1", "--mu-max", "3", "--step", "1/4"}).code ==
        kExitCounterexample);
  CHECK(run({"verify-stability", "--g", "1", "--mu-max", "3", "--step", "1/4", "--x", "0"})
            .code == kExitOk);
}

TEST_CASE("gromov and decompose") {
  auto r = run({"gromov", "--p", "1", "--q", "3", "--g", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("= 8") != std::string::npos);
  CHECK(run({"gromov", "--p", "2", "--q", "0", "--g", "3"}).code == kExitInvalidInput);
  auto d = nlohmann::json::parse(
      run({"decompose", "--g", "2", "--report-sections", "--json"}).out);
  CHECK(d["count"].get<int>() == static_cast<int>(d["decompositions"].size()));
  CHECK(d.contains("non_bxf_sections"));
}

TEST_CASE("figure command") {
  auto svg = run({"figure", "--mu-max", "4"});
  CHECK(svg.code == kExitOk);
  CHECK(svg.out.rfind("<svg", 0) == 0);
  auto csv = run({"figure", "--mu-max", "4", "--format", "csv"});
  CHECK(csv.out.rfind("wall_class,", 0) == 0);
}
