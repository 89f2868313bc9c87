#include "qeala/cli.hpp"
#include "qeala/json_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qeala;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qeala_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("verify-brackets passes and reports every check") {
  const Run r = run({"verify-brackets", "--box", "-2..2", "--samples", "5", "--seed", "7", "--no-timing"});
  CHECK(r.code == kExitOk);
  const json rep = r.report();
  CHECK(rep["command"] == "verify-brackets");
  CHECK(rep["elapsedMs"] == 0);
  CHECK(rep["config"]["seed"] == 7);
  REQUIRE(rep["checks"].size() > 2);
  for (const auto& c : rep["checks"]) CHECK(c["status"] == "pass");
}

TEST_CASE("reports are byte-identical for a fixed seed") {
  for (const char* cmd : {"verify-brackets", "verify-involution", "verify-contravariance"}) {
    const std::vector<std::string> args{cmd, "--samples", "3", "--seed", "11", "--no-timing"};
    CHECK(run(args).out == run(args).out);
  }
  const Run a = run({"verify-involution", "--samples", "3", "--seed", "11", "--no-timing"});
  const Run b = run({"verify-involution", "--samples", "3", "--seed", "12", "--no-timing"});
  CHECK(a.out != b.out);
}

TEST_CASE("form") {
  Run r = run({"form", "--f", "x[0,0]^2", "--g", "1", "--no-timing"});
  CHECK(r.code == kExitOk);
  CHECK(r.report()["result"]["text"] == "0");
  r = run({"form", "--f", "x[0,0]^2", "--g", "1", "--x-family", "constant:2,3,1/2"});
  CHECK(r.report()["result"]["text"] == "-6");
  r = run({"form", "--f", "x[0,0]^2", "--g", "x[0,0]^2", "--method", "jk"});
  CHECK(r.report()["result"]["text"] == "2*mu^2 + 2*mu");
  r = run({"form", "--f", "x[0,0]^2", "--g", "x[0,0]^2", "--method", "push"});
  CHECK(r.report()["result"]["text"] == "2*mu^2 + 2*mu");
}

TEST_CASE("configuration errors exit with code 2") {
  Run r = run({"form", "--f", "x[0,0", "--g", "1"});
  CHECK(r.code == kExitConfigError);
  CHECK(r.err.find("position 6") != std::string::npos);
  CHECK(run({"no-such-command"}).code == kExitConfigError);
  CHECK(run({"gram", "--x-family", "constant:2,0,1"}).code == kExitConfigError);
  CHECK(run({"gram", "--box", "3..1"}).code == kExitConfigError);
  CHECK(run({"gram", "--q-exact", "2"}).code == kExitConfigError);
  CHECK(run({"gram", "--method", "jk", "--x-family", "constant:2,3,1/2"}).code == kExitConfigError);
  CHECK(run({"verify-brackets", "--samples", "0"}).code == kExitConfigError);
  CHECK(run({"gram", "--config", temp_path("missing.json").string()}).code == kExitConfigError);
}

TEST_CASE("config file and output path") {
  const auto cfg = temp_path("config.json"), report = temp_path("report.json");
  {
    std::ofstream f(cfg);
    f << R"({"xFamily": {"kind": "constant", "a": 2, "c": 3, "d": "1/2"}, "samples": 2, "seed": 5,
             "output": ")" << report.generic_string() << R"("})";
  }
  const Run r = run({"verify-contravariance", "--config", cfg.string(), "--no-timing"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("pass ") != std::string::npos);
  const json rep = json::parse(slurp(report));
  CHECK(rep["config"]["xFamily"]["kind"] == "constant");
  CHECK(rep["config"]["samples"] == 2);
  std::filesystem::remove(cfg);
  std::filesystem::remove(report);
}

TEST_CASE("gram with csv") {
  const auto csv = temp_path("gram.csv");
  const Run r = run({"gram", "--level", "1", "--box", "0..1", "--mu", "2", "--csv", csv.string()});
  CHECK(r.code == kExitOk);
  const json rep = r.report();
  CHECK(rep["result"]["basis"].size() == 4);
  const std::string text = slurp(csv);
  CHECK(text.rfind("i,j,re,im\n0,0,2,0\n", 0) == 0);
  std::filesystem::remove(csv);
}

TEST_CASE("scan-mu") {
  const auto csv = temp_path("scan.csv");
  const Run r = run({"scan-mu", "--level", "1", "--mu", "-1,0,1", "--q-exact", "i", "--csv", csv.string()});
  CHECK(r.code == kExitOk);
  const json rows = r.report()["result"]["rows"];
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["verdict"] == "indefinite");
  CHECK(rows[1]["verdict"] == "PSD-degenerate");
  CHECK(rows[2]["verdict"] == "PD");
  CHECK(slurp(csv) == "mu,verdict,minEigenvalueOrMinor,boundary\n-1,indefinite,-1,false\n0,PSD-degenerate,0,true\n1,PD,1,false\n");
  std::filesystem::remove(csv);

  const Run fail = run({"scan-mu", "--level", "2", "--box", "0..0", "--mu", "-2"});
  CHECK(fail.code == kExitCheckFailed);
  CHECK(fail.err.find("FAIL positive-iff-mu-positive") != std::string::npos);
}

TEST_CASE("oracle-compare") {
  const Run r = run({"oracle-compare", "--level", "2", "--box", "0..1"});
  CHECK(r.code == kExitOk);
  for (const auto& c : r.report()["checks"]) CHECK(c["status"] == "pass");
}
