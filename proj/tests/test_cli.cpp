#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the installed binary with stderr folded into stdout.
RunResult run(const std::string& args) {
  std::string cmd = std::string(LCPLAB_BIN) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0)
    r.out.append(buf.data(), got);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  REQUIRE(os.good());
  os << text;
}

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  REQUIRE(is.good());
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

const char* kWorked = R"({
  "n": 3,
  "A": [[0, 1, 1], [2, 0, 2], [-2, -5, 0]],
  "q": [-4, -7, 10]
})";

}  // namespace

TEST_CASE("classify renders the table and the json report") {
  write_file("cli_worked.json", kWorked);
  RunResult r = run("classify -i cli_worked.json --json cli_report.json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("E0s~") != std::string::npos);
  CHECK(r.out.find("game value") != std::string::npos);

  auto rep = nlohmann::json::parse(slurp("cli_report.json"));
  CHECK(rep["n"] == 3);
  CHECK(rep["classes"]["E0s~"]["member"] == true);
  CHECK(rep["classes"]["R0"]["member"] == false);
  CHECK(rep["classes"]["R0"].contains("witness"));
  CHECK(rep["derived"]["Q_b"]["holds"] == false);

  // byte-identical reruns
  RunResult again = run("classify -i cli_worked.json");
  CHECK(again.out == run("classify -i cli_worked.json").out);
  std::remove("cli_report.json");
}

TEST_CASE("classify rejects malformed input with a diagnostic") {
  write_file("cli_bad.json", "{\n  \"n\": 2,\n  \"A\": [[1, }\n");
  RunResult r = run("classify -i cli_bad.json");
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("line") != std::string::npos);
  CHECK(r.out.find("column") != std::string::npos);
  std::remove("cli_bad.json");

  CHECK(run("classify -i cli_missing_file.json").exit_code == 3);
  CHECK(run("classify").exit_code == 3);  // missing required flag
}

TEST_CASE("solve dispatches lemke, enumerate and ipm") {
  write_file("cli_worked.json", kWorked);

  RunResult lemke = run("solve -i cli_worked.json --method lemke");
  CHECK(lemke.exit_code == 0);
  CHECK(lemke.out.find("z = (0, 2, 7/2)") != std::string::npos);

  RunResult enumr = run("solve -i cli_worked.json --method enumerate");
  CHECK(enumr.exit_code == 0);
  CHECK(enumr.out.find("3 solutions") != std::string::npos);
  CHECK(enumr.out.find("z = (15/14, 11/7, 17/7)") != std::string::npos);
  CHECK(enumr.out.find("z = (5, 0, 4)") != std::string::npos);
  CHECK(enumr.out.find("z = (0, 2, 7/2)") != std::string::npos);

  RunResult ipm = run(
      "solve -i cli_worked.json --method ipm --beta 0.5 --sigma 0.2 "
      "--eps 1e-5 --z0 1,1,5 --trace cli_trace.csv");
  CHECK(ipm.exit_code == 0);
  CHECK(ipm.out.find("status = converged") != std::string::npos);
  CHECK(ipm.out.find("z = (1.07") != std::string::npos);

  std::string trace = slurp("cli_trace.csv");
  CHECK(trace.rfind("k,z1,z2,z3,w1,w2,w3,kappa,tau,m,psi,ztw\n", 0) == 0);
  CHECK(trace.find("\n0,1,1,5,2,5,3,") != std::string::npos);
  std::remove("cli_trace.csv");

  // byte-identical determinism of the numeric path
  RunResult ipm2 = run(
      "solve -i cli_worked.json --method ipm --beta 0.5 --sigma 0.2 "
      "--eps 1e-5 --z0 1,1,5");
  RunResult ipm3 = run(
      "solve -i cli_worked.json --method ipm --beta 0.5 --sigma 0.2 "
      "--eps 1e-5 --z0 1,1,5");
  CHECK(ipm2.out == ipm3.out);
}

TEST_CASE("solve reports rays and infeasibility with exit code 2") {
  write_file("cli_ray.json",
             R"({"n":2,"A":[[0,-1],[-1,0]],"q":[-1,-1]})");
  RunResult lemke = run("solve -i cli_ray.json --method lemke");
  CHECK(lemke.exit_code == 2);
  CHECK(lemke.out.find("ray") != std::string::npos);

  RunResult enumr = run("solve -i cli_ray.json --method enumerate");
  CHECK(enumr.exit_code == 2);
  CHECK(enumr.out.find("no solution") != std::string::npos);

  RunResult ipm = run("solve -i cli_ray.json --method ipm");
  CHECK(ipm.exit_code == 2);
  CHECK(ipm.out.find("no-strictly-feasible-point") != std::string::npos);
  std::remove("cli_ray.json");

  // a stalled run exits 4
  write_file("cli_worked.json", kWorked);
  RunResult stall = run(
      "solve -i cli_worked.json --method ipm --z0 1,1,5 --max-iter 1");
  CHECK(stall.exit_code == 4);
  CHECK(stall.out.find("stalled-max-iter") != std::string::npos);

  // q without a file entry is an input error
  write_file("cli_noq.json", R"({"n":1,"A":[[1]]})");
  CHECK(run("solve -i cli_noq.json --method lemke").exit_code == 3);
  std::remove("cli_noq.json");
}

TEST_CASE("ppt prints the transform or refuses the pivot") {
  write_file("cli_fragile.json",
             R"({"n":3,"A":[[0,1,1],[2,0,1],[-1,-1,0]]})");
  RunResult full = run("ppt -i cli_fragile.json --alpha 1,2,3");
  CHECK(full.exit_code == 0);
  CHECK(full.out.find("(-1/3, 1/3, -1/3)") != std::string::npos);
  CHECK(full.out.find("(2/3, 1/3, 2/3)") != std::string::npos);

  RunResult bad = run("ppt -i cli_fragile.json --alpha 1");
  CHECK(bad.exit_code == 2);  // singular 1x1 block: zero diagonal
  CHECK(bad.out.find("not legitimate") != std::string::npos);

  CHECK(run("ppt -i cli_fragile.json --alpha 0,1").exit_code == 3);
  CHECK(run("ppt -i cli_fragile.json --alpha 1,1").exit_code == 3);
  std::remove("cli_fragile.json");
}

TEST_CASE("game prints the exact value and strategies") {
  write_file("cli_id2.json", R"({"n":2,"A":[[1,0],[0,1]]})");
  RunResult r = run("game -i cli_id2.json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("v(A) = 1/2") != std::string::npos);
  CHECK(r.out.find("(1/2, 1/2)") != std::string::npos);
  std::remove("cli_id2.json");
}

TEST_CASE("gen writes deterministic instances") {
  RunResult s1 = run("gen --structured --n 4 --seed 11 -o cli_gen1.json");
  CHECK(s1.exit_code == 0);
  RunResult s2 = run("gen --structured --n 4 --seed 11 -o cli_gen2.json");
  CHECK(s2.exit_code == 0);
  CHECK(slurp("cli_gen1.json") == slurp("cli_gen2.json"));

  RunResult cls = run("classify -i cli_gen1.json");
  CHECK(cls.exit_code == 0);
  CHECK(cls.out.find("E0s~") != std::string::npos);
  std::remove("cli_gen1.json");
  std::remove("cli_gen2.json");

  RunResult rnd = run("gen --random --class P0 --n 3 --seed 7 -o cli_p0.json");
  CHECK(rnd.exit_code == 0);
  auto doc = nlohmann::json::parse(slurp("cli_p0.json"));
  CHECK(doc["n"] == 3);
  CHECK(!doc.contains("q"));
  std::remove("cli_p0.json");

  CHECK(run("gen --n 3 --seed 1 -o cli_x.json").exit_code == 3);
  CHECK(run("gen --random --class bogus --n 3 --seed 1 -o cli_x.json")
            .exit_code == 3);
}

TEST_CASE("reproduce-paper runs green and lists every catalogued check") {
  RunResult list = run("reproduce-paper --list");
  CHECK(list.exit_code == 0);

  std::set<std::string> listed;
  std::stringstream ss(list.out);
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) listed.insert(line);

  // the checklist in the repo and the implemented suite must match both ways
  std::set<std::string> catalogued;
  std::ifstream cat(LCPLAB_CHECKLIST);
  REQUIRE(cat.good());
  while (std::getline(cat, line))
    if (!line.empty()) catalogued.insert(line);
  CHECK(listed == catalogued);

  RunResult full = run("reproduce-paper");
  CHECK(full.exit_code == 0);
  for (const std::string& name : catalogued)
    CHECK(full.out.find("PASS " + name) != std::string::npos);
  CHECK(full.out.find("FAIL") == std::string::npos);
  std::ostringstream tally;
  tally << catalogued.size() << "/" << catalogued.size() << " checks passed";
  CHECK(full.out.find(tally.str()) != std::string::npos);

  std::remove("cli_worked.json");
}
