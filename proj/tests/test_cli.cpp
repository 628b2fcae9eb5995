#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string("\"") + HERD_CLI_PATH + "\" " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string model(const std::string& file) {
  return std::string("\"") + HERD_MODELS_DIR + "/" + file + "\"";
}

fs::path scratch_file(const std::string& file) {
  const fs::path dir = fs::temp_directory_path() / "herd-cli-tests";
  fs::create_directories(dir);
  return dir / file;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("check reports herdability through the exit code") {
  const auto positive = run_cli("check " + model("star-positive.json"));
  CHECK(positive.exit_code == 0);
  CHECK(positive.output.find("herdable") != std::string::npos);

  const auto mixed = run_cli("check " + model("star-mixed.json"));
  CHECK(mixed.exit_code == 3);
  CHECK(mixed.output.find("not herdable") != std::string::npos);
}

TEST_CASE("check emits machine-readable reports") {
  const auto result = run_cli("check --format json " + model("star-positive.json"));
  REQUIRE(result.exit_code == 0);
  const json doc = json::parse(result.output);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["command"] == "check");
  CHECK(doc["model_name"] == "star-positive");
  CHECK(doc["verdict"]["herdable"] == true);
  CHECK(doc["verdict"]["method"] == "direct-feasibility");
  CHECK(doc["verdict"].contains("primal_certificate"));
}

TEST_CASE("the report file matches stdout and is stable across runs") {
  const auto path = scratch_file("check-report.json");
  const auto first =
      run_cli("check --format json --report \"" + path.string() + "\" " + model("tree6.json"));
  REQUIRE(first.exit_code == 0);
  json from_stdout = json::parse(first.output);
  json from_file = json::parse(slurp(path));
  CHECK(from_stdout == from_file);

  const auto second =
      run_cli("check --format json --report \"" + path.string() + "\" " + model("tree6.json"));
  json repeat = json::parse(second.output);
  from_stdout.erase("timing_ms");
  repeat.erase("timing_ms");
  CHECK(from_stdout == repeat);
}

TEST_CASE("criteria lists every pipeline report consistently") {
  const auto result = run_cli("criteria --format json " + model("tree6.json"));
  REQUIRE(result.exit_code == 0);
  const json doc = json::parse(result.output);
  CHECK(doc["criteria"]["consistency_failures"].empty());
  bool saw_depth2 = false;
  for (const json& report : doc["criteria"]["reports"]) {
    if (report["criterion"] == "tree-depth-2") {
      saw_depth2 = true;
      CHECK(report["strength"] == "iff");
      CHECK(report["hypotheses_hold"] == true);
      CHECK(report["implied_herdable"] == true);
    }
  }
  CHECK(saw_depth2);
  CHECK(doc["criteria"]["reductions"].size() == 2);
}

TEST_CASE("balance prints both partitions") {
  const auto result = run_cli("balance --format json " + model("tree6-negc.json"));
  REQUIRE(result.exit_code == 0);
  const json doc = json::parse(result.output);
  REQUIRE(doc.contains("balance"));
  CHECK(doc["balance"]["clustering"]["clusters"].size() == 2);
  CHECK_FALSE(doc["balance"]["structural"].is_null());
}

TEST_CASE("tree decomposes layers around the chosen leader") {
  const auto result = run_cli("tree --leader 1 --format json " + model("tree6.json"));
  REQUIRE(result.exit_code == 0);
  const json doc = json::parse(result.output);
  CHECK(doc["tree"]["leader"] == 1);
  CHECK(doc["tree"]["layers"] == json::parse("[[2,3,4],[5,6]]"));
  CHECK(doc["tree"]["parents"][0].is_null());
  CHECK(doc["tree"]["parents"][4] == 3);

  const auto bad = run_cli("tree --leader 9 " + model("tree6.json"));
  CHECK(bad.exit_code == 2);
}

TEST_CASE("synthesize produces a plan that verify-report accepts") {
  const auto report_path = scratch_file("plan-report.json");
  const auto x0 = model("x0-zeros6.json");
  const auto synth = run_cli("synthesize --x0 " + x0 + " --h 2 --format json --report \"" +
                             report_path.string() + "\" " + model("tree6.json"));
  REQUIRE(synth.exit_code == 0);
  const json doc = json::parse(synth.output);
  CHECK(doc["plan"]["horizon"] == 6);
  CHECK(doc["plan"]["threshold"] == "2");
  CHECK(doc["plan"]["inputs"].size() == 6);

  const auto verify = run_cli("verify-report " + model("tree6.json") + " \"" +
                              report_path.string() + "\"");
  CHECK(verify.exit_code == 0);
  CHECK(verify.output.find("verifies") != std::string::npos);

  // The same report presented for a different model must be rejected.
  const auto cross = run_cli("verify-report " + model("tree6-negc.json") + " \"" +
                             report_path.string() + "\"");
  CHECK(cross.exit_code == 4);
  CHECK(cross.output.find("problem") != std::string::npos);
}

TEST_CASE("synthesize refuses non-herdable models") {
  const auto x0 = scratch_file("x0-zeros3.json");
  std::ofstream(x0) << "[0, 0, 0]\n";
  const auto result =
      run_cli("synthesize --x0 \"" + x0.string() + "\" " + model("star-mixed.json"));
  CHECK(result.exit_code == 3);
}

TEST_CASE("verify-report flags a hand-edited verdict") {
  const auto report_path = scratch_file("tamper-report.json");
  const auto honest = run_cli("check --format json --report \"" + report_path.string() + "\" " +
                              model("star-positive.json"));
  REQUIRE(honest.exit_code == 0);
  json doc = json::parse(slurp(report_path));
  doc["verdict"]["primal_certificate"][0] = "0";
  const auto tampered_path = scratch_file("tampered-report.json");
  std::ofstream(tampered_path) << doc.dump();
  const auto verify = run_cli("verify-report " + model("star-positive.json") + " \"" +
                              tampered_path.string() + "\"");
  CHECK(verify.exit_code == 4);
}

TEST_CASE("design enumerates minimal leader sets") {
  const auto result = run_cli("design --max-size 2 --format json " + model("star-mixed.json"));
  REQUIRE(result.exit_code == 0);
  const json doc = json::parse(result.output);
  CHECK(doc["design"]["budget"] == 2);
  json leader_sets = json::array();
  for (const json& entry : doc["design"]["minimal_sets"]) leader_sets.push_back(entry["leaders"]);
  CHECK(leader_sets == json::parse("[[2],[3]]"));

  const auto bad = run_cli("design --max-size 9 " + model("star-mixed.json"));
  CHECK(bad.exit_code == 2);
}

TEST_CASE("input problems exit with the input-error code") {
  CHECK(run_cli("check /nonexistent/model.json").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("check --bogus-flag " + model("tree6.json")).exit_code == 2);

  const auto malformed = scratch_file("malformed.json");
  std::ofstream(malformed) << "{\"n\": 1}";
  CHECK(run_cli("check \"" + malformed.string() + "\"").exit_code == 2);

  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("synthesize --help").exit_code == 0);
}

TEST_CASE("fuzz runs its fixed battery clean") {
  const auto result = run_cli("fuzz --seed 7");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("100") != std::string::npos);
}
