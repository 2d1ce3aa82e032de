// End-to-end checks of the command-line tool: exit codes, output formats
// and file products.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(TPMKIN_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) output.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

const std::string kParams = std::string(TPMKIN_DATA_DIR) + "/paper.json";
const std::string kTopo = std::string(TPMKIN_DATA_DIR) + "/paper.topo";

}  // namespace

TEST_CASE("fk solves, reports y = 25 everywhere, exit 0") {
  const RunResult r = run("fk -p " + kParams + " -- 350 -300 -25");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("solutions: 8") != std::string::npos);
  // every solution line carries the decoupled y column
  std::istringstream lines(r.output);
  int y_columns = 0;
  for (std::string line; std::getline(lines, line);)
    if (line.find(" 25 ") != std::string::npos) ++y_columns;
  CHECK(y_columns == 8);
}

TEST_CASE("fk reports no assembly with exit 2") {
  const RunResult r = run("fk -p " + kParams + " -- 900 -900 0");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("no real assembly") != std::string::npos);
}

TEST_CASE("fk reports self-motion with exit 3") {
  const RunResult r = run("fk -p " + kParams + " -- 350 210 -25");
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("self-motion") != std::string::npos);
}

TEST_CASE("fk json format parses and matches") {
  const RunResult r = run("fk -p " + kParams + " --format json -- 350 -300 -25");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  REQUIRE(j["solutions"].size() == 8);
  CHECK(j["solutions"][0]["branch"] == "+++");
  CHECK(std::abs(j["solutions"][0]["y"].get<double>() - 25.0) < 1e-9);
}

TEST_CASE("ik round-trips the principal pose, exit 0") {
  const RunResult r = run("ik -p " + kParams +
                          " --format json -- 39.9669358788861 25 32.4723475351418");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["solutions"].size() == 32);
  bool found = false;
  for (const auto& s : j["solutions"])
    if (std::abs(s["q1"].get<double>() - 350) < 1e-3 &&
        std::abs(s["q2"].get<double>() + 300) < 1e-3 &&
        std::abs(s["q3"].get<double>() + 25) < 1e-3)
      found = true;
  CHECK(found);
}

TEST_CASE("ik reports unreachable poses with exit 2") {
  const RunResult r = run("ik -p " + kParams + " -- 2000 0 0");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("unreachable") != std::string::npos);
}

TEST_CASE("bad arguments and files exit 1") {
  CHECK(run("fk -p " + kParams).exit_code == 1);        // missing positionals
  CHECK(run("fk -p missing.json -- 1 2 3").exit_code == 1);
  CHECK(run("bogus-command").exit_code == 1);
  CHECK(run("").exit_code == 1);                        // subcommand required
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("validate passes on the stock solver and fails when corrupted") {
  const RunResult ok = run("validate -p " + kParams + " --samples 10 --seed 7");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("ok") != std::string::npos);

  const RunResult bad = run("validate -p " + kParams + " --samples 3 --inject-fk-error");
  CHECK(bad.exit_code == 4);
  CHECK(bad.output.find("FAILED") != std::string::npos);

  const RunResult trivial = run("validate -p " + kParams + " --samples 0");
  CHECK(trivial.exit_code == 0);
}

TEST_CASE("tables report asserts the reproducible columns") {
  const RunResult r = run("tables");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("y column equals 25:          ok") != std::string::npos);
  CHECK(r.output.find("y_a1 root pair {350, -160}:  ok") != std::string::npos);
  CHECK(r.output.find("violation=") != std::string::npos);
}

TEST_CASE("topology report prints the bundled mechanism figures") {
  const RunResult r = run("topology " + kTopo);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("platform POC: t3 r0") != std::string::npos);
  CHECK(r.output.find("F = 3") != std::string::npos);
  CHECK(r.output.find("kappa = 1") != std::string::npos);
  CHECK(r.output.find("delta=+1") != std::string::npos);
  CHECK(r.output.find("delta=-1") != std::string::npos);
}

TEST_CASE("topology rejects unbalanced constraint degrees with exit 4") {
  const std::string path = "cli_bad.topo";
  {
    std::ofstream out(path);
    out << R"({"branches":[{"name":"b","poc":{"t":["x"],"r":[]}}],)"
        << R"("loops":[{"name":"l1","sum_f":6,"actuated":2,"xi":3},)"
        << R"({"name":"l2","sum_f":5,"actuated":1,"xi":4}]})";
  }
  const RunResult r = run("topology " + path);
  CHECK(r.exit_code == 4);
  std::remove(path.c_str());

  const RunResult missing = run("topology nowhere.topo");
  CHECK(missing.exit_code == 1);
}

TEST_CASE("workspace sweep writes one row per node plus a header") {
  const std::string out = "cli_sweep.csv";
  const RunResult r = run("workspace -p " + kParams +
                          " --axes 340:360:21 -310:-290:21 -35:-15:21 --out " + out);
  CHECK(r.exit_code == 0);
  std::ifstream in(out);
  REQUIRE(in.good());
  int rows = 0;
  std::string header, line;
  std::getline(in, header);
  CHECK(header == "ix,iy,iz,q1,q2,q3,x,y,z,count,branch,min_margin,margin_name");
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 9261);
  std::remove(out.c_str());
}

TEST_CASE("workspace slice emits the gamma fold locus") {
  const std::string out = "cli_slice.csv";
  const std::string locus = "cli_locus.csv";
  const RunResult r = run("workspace -p " + kParams +
                          " --axes -700:700:41 -700:700:41 -25 --locus --out " + out +
                          " --locus-out " + locus);
  CHECK(r.exit_code == 0);
  std::ifstream in(locus);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "u,v,margin_name");
  bool has_gamma = false;
  for (std::string line; std::getline(in, line);)
    if (line.find("d_gamma") != std::string::npos) has_gamma = true;
  CHECK(has_gamma);
  std::remove(out.c_str());
  std::remove(locus.c_str());
}

TEST_CASE("workspace rejects an empty-range grid with exit 1") {
  const RunResult r = run("workspace -p " + kParams + " --axes 10:-10:5 0 0");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("invalid grid") != std::string::npos);
}
