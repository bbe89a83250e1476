#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Runs the installed binary with the given arguments, capturing stdout.
// Stderr is dropped so expected error paths do not pollute the test log.
CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + KDIRAC_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed for: " + cmd);
  CliResult r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kBggGolden =
    "relative BGG diagram  k=3\n"
    "seed: [-3,-3,-3|-3|3]\n"
    "row 0: A00 [-3,-3,-3|-3|3]\n"
    "row 1: A11 [-3,-3,-5|-1|3]\n"
    "row 2: A20 [-3,-3,-7|-1|1]  A22 [-3,-5,-5|1|3]\n"
    "row 3: A31 [-3,-5,-7|1|1]  A33 [-5,-5,-5|3|3]\n"
    "row 4: A40 [-3,-7,-7|1|-1]  A42 [-5,-5,-7|3|1]\n"
    "row 5: A51 [-5,-7,-7|3|-1]\n"
    "row 6: A60 [-7,-7,-7|3|-3]\n";

const std::string kPushdownGolden =
    "direct images  k=3\n"
    "seed: [-3,-3,-3|-3|3]\n"
    "row 0: A00 [-3,-3,-3|1,-1]_1\n"
    "row 1: A11 [-3,-3,-5|1,1]_1\n"
    "row 2: A20 ∅  A22 ∅\n"
    "row 3: A31 [-3,-5,-7|1,1]_0  A33 [-5,-5,-5|3,3]_0\n"
    "row 4: A40 [-3,-7,-7|1,-1]_0  A42 [-5,-5,-7|3,1]_0\n"
    "row 5: A51 [-5,-7,-7|3,-1]_0\n"
    "row 6: A60 [-7,-7,-7|3,-3]_0\n";

}  // namespace

TEST_CASE("bgg table for k=3 is byte-exact and stable") {
  const CliResult a = run_cli("bgg --k 3");
  CHECK(a.exit_code == 0);
  CHECK(a.out == kBggGolden);
  const CliResult b = run_cli("bgg --k 3");
  CHECK(b.out == a.out);
}

TEST_CASE("pushdown table for k=3 is byte-exact") {
  const CliResult r = run_cli("pushdown --k 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == kPushdownGolden);
}

TEST_CASE("half-coordinate output prints true fractions") {
  const CliResult r = run_cli("bgg --k 3 --half");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("seed: [-3/2,-3/2,-3/2|-3/2|3/2]") != std::string::npos);
  CHECK(r.out.find("A60 [-7/2,-7/2,-7/2|3/2|-3/2]") != std::string::npos);
}

TEST_CASE("hasse output") {
  const CliResult r = run_cli("hasse --k 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("relative Hasse diagram  k=4") == 0);
  CHECK(r.out.find("vertices: 15  edges: 20") != std::string::npos);
  CHECK(r.out.find("A00 -> A11 [a(4,5)]") != std::string::npos);

  const CliResult dot = run_cli("hasse --k 4 --format dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.out.rfind("digraph", 0) == 0);
}

TEST_CASE("complex json carries the orders and dimensions") {
  const CliResult r = run_cli("complex --k 3 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["k"] == 3);
  CHECK(j["complex"]["orders"] == std::vector<int>{1, 2, 1, 1, 1});
  CHECK(j["complex"]["positions"] == std::vector<int>{0, 1, 3, 4, 5, 6});
  CHECK(j["complex"]["terms"][0][0]["dim"] == 2);
  CHECK(j["complex"]["terms"][2][0]["dim"] == 16);
  CHECK(j["complex"]["terms"][2][1]["dim"] == 4);
}

TEST_CASE("dims text lists the frozen term totals") {
  const CliResult r = run_cli("dims --k 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("term totals: 2 6 20 30 18 4") != std::string::npos);
}

TEST_CASE("custom seeds reach the bgg subcommand") {
  // The de Rham normalization: zero seed, integral weights.
  const CliResult r = run_cli("bgg --k 3 --seed 0,0,0,0,0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("seed: [0,0,0|0|0]") != std::string::npos);
  CHECK(r.out.find("A60 [-4,-4,-4|6|-6]") != std::string::npos);
}

TEST_CASE("exit codes distinguish the failure families") {
  CHECK(run_cli("hasse --k 1").exit_code == 2);          // rank too small
  CHECK(run_cli("bgg --k 3 --seed 0,0,5,0,0").exit_code == 3);  // not dominant
  CHECK(run_cli("bgg --k 3 --seed 1,2").exit_code == 2);        // wrong length
  CHECK(run_cli("bgg --k 3 --seed a,b,c,d,e").exit_code == 2);  // not integers
  CHECK(run_cli("bgg --k 3 --format yaml").exit_code == 2);     // unknown format
  CHECK(run_cli("pushdown --k 3 --format tikz").exit_code == 2);  // unsupported
  CHECK(run_cli("dims --k 3 --format dot").exit_code == 2);       // unsupported
  CHECK(run_cli("").exit_code == 2);  // missing subcommand
}

TEST_CASE("check-dirac reports every property family") {
  const CliResult r = run_cli("check-dirac --k 1 --trials 5 --mode serial");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("check-dirac  k=1  degree=4  terms=6  trials=5  seedrng=1  mode=serial") == 0);
  CHECK(r.out.find("target fiber: first operator of the complex, dim 2") != std::string::npos);
  CHECK(r.out.find("5/5 factorization checks passed") != std::string::npos);
  CHECK(r.out.find("polarization skipped (single variable)") != std::string::npos);
  CHECK(r.out.find("5/5 annihilation checks passed") != std::string::npos);
  CHECK(r.out.find("all properties hold") != std::string::npos);

  const CliResult r2 = run_cli("check-dirac --k 2 --trials 4 --mode parallel");
  CHECK(r2.exit_code == 0);
  CHECK(r2.out.find("4/4 polarization checks passed") != std::string::npos);
}

TEST_CASE("check-dirac serial and parallel print identical reports") {
  const CliResult s = run_cli("check-dirac --k 2 --trials 20 --seedrng 7 --mode serial");
  const CliResult p = run_cli("check-dirac --k 2 --trials 20 --seedrng 7 --mode parallel");
  CHECK(s.exit_code == 0);
  CHECK(p.exit_code == 0);
  // Everything after the first line (which names the mode) must agree.
  const std::string s_body = s.out.substr(s.out.find('\n'));
  const std::string p_body = p.out.substr(p.out.find('\n'));
  CHECK(s_body == p_body);
}
