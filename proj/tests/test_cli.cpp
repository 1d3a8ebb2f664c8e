// End-to-end tests for the command-line tool.  The binary path arrives in
// the HYPERDISC_CLI environment variable (wired up by CMake); commands run
// through std::system with stdout/stderr redirected to temp files.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperdisc/canonical.hpp"
#include "hyperdisc/constructions.hpp"
#include "hyperdisc/core.hpp"
#include "hyperdisc/io.hpp"
#include "hyperdisc/wvector.hpp"

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "hyperdisc-cli-tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

RunResult run_cli(const std::string& args) {
  const char* cli = std::getenv("HYPERDISC_CLI");
  REQUIRE_MESSAGE(cli != nullptr, "HYPERDISC_CLI must point at the binary");
  const fs::path out = work_dir() / "stdout.txt";
  const fs::path err = work_dir() / "stderr.txt";
  const std::string command = std::string("\"") + cli + "\" " + args + " > " +
                              out.string() + " 2> " + err.string();
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = (status >= 0 && (status & 0x7f) == 0) ? (status >> 8) & 0xff
                                                           : -1;
  result.out = slurp(out);
  result.err = slurp(err);
  return result;
}

// Removes the one nondeterministic field so outputs can be compared.
std::string strip_timing(const std::string& text) {
  std::string cleaned;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line))
    if (line.find("\"seconds\"") == std::string::npos) cleaned += line + "\n";
  return cleaned;
}

fs::path make_sts7() {
  const fs::path path = work_dir() / "sts7.whg";
  if (!fs::exists(path))
    REQUIRE(run_cli("gen sts --n 7 --out " + path.string()).exit_code == 0);
  return path;
}

fs::path make_cross7() {
  const fs::path path = work_dir() / "cross7.whg";
  if (!fs::exists(path))
    REQUIRE(run_cli("gen crosscut --n 7 --a 1,2,3 --out " + path.string())
                .exit_code == 0);
  return path;
}

}  // namespace

TEST_CASE("generated triple system round-trips through a file") {
  const fs::path path = make_sts7();
  const hyperdisc::Weighting w = hyperdisc::parse_weighting(path.string());
  CHECK(w.n() == 7);
  CHECK(w.k() == 3);
  CHECK(w.total() == 7.0);
  CHECK(w.l1_norm() == 7.0);
  int nonzero = 0;
  for (double value : w.weights()) {
    CHECK((value == 0.0 || value == 1.0));
    nonzero += value != 0.0;
  }
  CHECK(nonzero == 7);
}

TEST_CASE("disc reports the zero-discrepancy pair exactly") {
  const RunResult r = run_cli("disc --a " + make_sts7().string() + " --b " +
                              make_cross7().string() + " --method exact");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["disc"].get<double>() == 0.0);
  CHECK(j["disc_plus"].get<double>() == 0.0);
  CHECK(j["disc_minus"].get<double>() == 0.0);
  CHECK(j["baseline"].get<double>() == 6.0);
  CHECK(j["method"] == "exact");
  CHECK(j["argmax"].size() == 7);
  CHECK(j["argmin"].size() == 7);
  CHECK(j["meta"]["command"] == "disc");
  CHECK(j["meta"]["version"] == "1.0.0");
  CHECK(j["timing"].contains("seconds"));
}

TEST_CASE("wvector json matches the in-process computation") {
  const fs::path path = make_sts7();
  const RunResult r =
      run_cli("wvector --input " + path.string() + " --method recursive");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  const hyperdisc::WVector v =
      hyperdisc::wvector_recursive(hyperdisc::parse_weighting(path.string()));
  CHECK(j["n"].get<int>() == v.n);
  CHECK(j["k"].get<int>() == v.k);
  REQUIRE(j["W"].size() == v.values.size());
  for (std::size_t i = 0; i < v.values.size(); ++i)
    CHECK(j["W"][i].get<double>() == v.values[i]);
  CHECK(!j.contains("stderr"));
}

TEST_CASE("wvector csv has a header and one row per level") {
  const RunResult r = run_cli("wvector --input " + make_sts7().string() +
                              " --method canonical --format csv");
  REQUIRE(r.exit_code == 0);
  std::vector<std::string> lines;
  std::istringstream stream(r.out);
  for (std::string line; std::getline(stream, line);) lines.push_back(line);
  REQUIRE(lines.size() == 5);  // header + levels 0..3
  CHECK(lines[0] == "level,value,stderr");
  for (int level = 0; level <= 3; ++level) {
    CAPTURE(level);
    CHECK(lines[level + 1].rfind(std::to_string(level) + ",", 0) == 0);
    CHECK(std::count(lines[level + 1].begin(), lines[level + 1].end(), ',') ==
          2);
  }
}

TEST_CASE("repeat invocations differ only in the timing block") {
  const std::string cmd = "wvector --input " + make_sts7().string() +
                          " --method mc --samples 2000 --seed 42";
  const RunResult first = run_cli(cmd);
  const RunResult second = run_cli(cmd);
  REQUIRE(first.exit_code == 0);
  REQUIRE(second.exit_code == 0);
  CHECK(strip_timing(first.out) == strip_timing(second.out));
  json a = json::parse(first.out);
  json b = json::parse(second.out);
  a.erase("timing");
  b.erase("timing");
  CHECK(a == b);
}

TEST_CASE("exact scan results do not depend on the thread count") {
  const std::string tail = " disc --a " + make_sts7().string() + " --b " +
                           make_cross7().string();
  const RunResult one = run_cli("--threads 1" + tail);
  const RunResult four = run_cli("--threads 4" + tail);
  REQUIRE(one.exit_code == 0);
  REQUIRE(four.exit_code == 0);
  CHECK(strip_timing(one.out) == strip_timing(four.out));
}

TEST_CASE("missing input file exits 2 and names the path") {
  const RunResult r = run_cli("wvector --input /nonexistent/missing.whg");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("/nonexistent/missing.whg") != std::string::npos);
}

TEST_CASE("duplicate edge in a weighting file exits 2 and names the line") {
  const fs::path bad = work_dir() / "dup.whg";
  {
    std::ofstream file(bad);
    file << "5 2\n1 2 1.0\n1 2 2.0\n";
  }
  const RunResult r = run_cli("wvector --input " + bad.string());
  CHECK(r.exit_code == 2);
  CHECK(r.err.find(bad.string() + ":3:") != std::string::npos);
  CHECK(r.err.find("twice") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("").exit_code == 2);                      // no subcommand
  CHECK(run_cli("wvector").exit_code == 2);               // missing --input
  CHECK(run_cli("verify nosuch").exit_code == 2);         // unknown suite
  CHECK(run_cli("frobnicate").exit_code == 2);            // unknown command
  const RunResult csv = run_cli("disc --a " + make_sts7().string() + " --b " +
                                make_cross7().string() + " --format csv");
  CHECK(csv.exit_code == 2);  // csv is wvector-only
  CHECK(run_cli("gen crosscut --n 7 --a 0,1,2").exit_code == 2);  // 1-indexed
}

TEST_CASE("capacity guards exit 3") {
  const fs::path big = work_dir() / "r12.whg";
  REQUIRE(run_cli("gen random --n 12 --k 3 --p 0.5 --seed 1 --out " +
                  big.string())
              .exit_code == 0);
  const RunResult r = run_cli("disc --a " + big.string() + " --b " +
                              big.string() + " --method exact");
  CHECK(r.exit_code == 3);
  CHECK(!r.err.empty());
  // the same pair is fine under the heuristic
  const RunResult h = run_cli("disc --a " + big.string() + " --b " +
                              big.string() +
                              " --method heuristic --restarts 3 --seed 4");
  CHECK(h.exit_code == 0);
}

TEST_CASE("verify runs a single suite and reports it as json") {
  const RunResult r = run_cli("verify scan-mean --scale small");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["all_passed"] == true);
  CHECK(j["scale"] == "small");
  REQUIRE(j["checks"].size() == 1);
  CHECK(j["checks"][0]["name"] == "scan-mean");
  CHECK(j["checks"][0]["status"] == "pass");
}

TEST_CASE("expect and gamma agree with the zero-discrepancy structure") {
  const std::string pair = " --a " + make_sts7().string() + " --b " +
                           make_cross7().string();
  const RunResult e = run_cli("expect" + pair + " --method exact");
  REQUIRE(e.exit_code == 0);
  CHECK(json::parse(e.out)["value"].get<double>() == 6.0);
  const RunResult gm = run_cli("gamma" + pair + " --method exact");
  REQUIRE(gm.exit_code == 0);
  CHECK(json::parse(gm.out)["value"].get<double>() == 0.0);
  const RunResult mc =
      run_cli("gamma" + pair + " --method mc --samples 500 --seed 5");
  REQUIRE(mc.exit_code == 0);
  const json jmc = json::parse(mc.out);
  CHECK(jmc["value"].get<double>() == 0.0);  // constant intersection
  CHECK(jmc["samples"].get<int>() == 500);
  CHECK(jmc.contains("stderr"));
}

TEST_CASE("polycoeff echoes the requested pairs and k coefficients") {
  const RunResult r =
      run_cli("polycoeff --a " + make_sts7().string() + " --b " +
              make_cross7().string() + " --pairs \"1,2;3,4;5,6\"");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j["coefficients"].size() == 3);
  for (const auto& c : j["coefficients"])
    CHECK(c.get<double>() == 0.0);  // constant inner product
  CHECK(j["constant_residual"].get<double>() == 0.0);
  CHECK(j["meta"]["parameters"]["pairs"] == "1,2;3,4;5,6");
}

TEST_CASE("single-disc reports subset witnesses") {
  const RunResult r =
      run_cli("single-disc --input " + make_sts7().string());
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["disc"].get<double>() == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(j["argmax_set"].size() >= 3);
  CHECK(j["argmin_set"].size() >= 3);
}

TEST_CASE("decompose writes component files that sum back to the input") {
  const fs::path input = make_sts7();
  const fs::path out = work_dir() / "parts.json";
  const RunResult r =
      run_cli("decompose --input " + input.string() + " --out " +
              out.string());
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(slurp(out));
  CHECK(j["residual_l1"].get<double>() < 1e-9);
  REQUIRE(j["components"].size() == 4);  // levels 0..3
  const hyperdisc::Weighting original =
      hyperdisc::parse_weighting(input.string());
  hyperdisc::Weighting sum(original.n(), original.k());
  for (const auto& part : j["components"]) {
    const hyperdisc::Weighting component =
        hyperdisc::parse_weighting(part["path"].get<std::string>());
    REQUIRE(component.same_shape(original));
    for (std::int64_t e = 0; e < sum.edge_count(); ++e)
      sum[e] += component[e];
  }
  for (std::int64_t e = 0; e < sum.edge_count(); ++e)
    CHECK(sum[e] == doctest::Approx(original[e]).epsilon(1e-9));
}

TEST_CASE("gen random is reproducible per seed through the CLI") {
  const fs::path a = work_dir() / "ra.whg";
  const fs::path b = work_dir() / "rb.whg";
  const fs::path c = work_dir() / "rc.whg";
  REQUIRE(run_cli("gen random --n 9 --k 3 --p 0.3 --seed 11 --out " +
                  a.string())
              .exit_code == 0);
  REQUIRE(run_cli("gen random --n 9 --k 3 --p 0.3 --seed 11 --out " +
                  b.string())
              .exit_code == 0);
  REQUIRE(run_cli("gen random --n 9 --k 3 --p 0.3 --seed 12 --out " +
                  c.string())
              .exit_code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a) != slurp(c));
}

TEST_CASE("gen phi matches the library construction") {
  const fs::path path = work_dir() / "phi.whg";
  REQUIRE(run_cli("gen phi --n 6 --k 2 --i 2 --seq 1,2,3,4 --out " +
                  path.string())
              .exit_code == 0);
  const hyperdisc::Weighting from_cli =
      hyperdisc::parse_weighting(path.string());
  hyperdisc::CanonicalSequence seq;
  seq.vertices = {0, 1, 2, 3};
  const hyperdisc::Weighting direct = hyperdisc::phi(6, 2, 2, seq);
  REQUIRE(from_cli.same_shape(direct));
  for (std::int64_t e = 0; e < direct.edge_count(); ++e)
    CHECK(from_cli[e] == direct[e]);
}

TEST_CASE("gen orthoset writes one scaled member per level") {
  const fs::path base = work_dir() / "os.whg";
  REQUIRE(run_cli("gen orthoset --n 6 --k 2 --out " + base.string())
              .exit_code == 0);
  const std::vector<hyperdisc::Weighting> family =
      hyperdisc::scaled_phi_family(6, 2);
  REQUIRE(family.size() == 2);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const fs::path part =
        work_dir() / ("os.level" + std::to_string(i + 1) + ".whg");
    CAPTURE(part.string());
    REQUIRE(fs::exists(part));
    const hyperdisc::Weighting member =
        hyperdisc::parse_weighting(part.string());
    for (std::int64_t e = 0; e < member.edge_count(); ++e)
      CHECK(member[e] == doctest::Approx(family[i][e]).epsilon(1e-12));
  }
  // without --out there is nowhere to put k files
  CHECK(run_cli("gen orthoset --n 6 --k 2").exit_code == 2);
}

TEST_CASE("text format renders flat key = value lines") {
  const RunResult r = run_cli("wvector --input " + make_sts7().string() +
                              " --format text");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("n = 7") != std::string::npos);
  CHECK(r.out.find("k = 3") != std::string::npos);
  CHECK(r.out.find("W[0] = ") != std::string::npos);
  CHECK(r.out.find("meta.command = \"wvector\"") != std::string::npos);
}
