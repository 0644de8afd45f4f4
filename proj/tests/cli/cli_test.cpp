// End-to-end checks of the coprime-census binary: output bytes, exit codes,
// environment handling. argv[1] is the path to the binary under test.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

int g_failures = 0;

#define EXPECT(cond)                                                    \
  do {                                                                  \
    if (!(cond)) {                                                      \
      std::cerr << "FAIL " << __FILE__ << ":" << __LINE__ << "  " #cond \
                << "\n";                                                \
      ++g_failures;                                                     \
    }                                                                   \
  } while (0)

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs a complete shell command, captures stdout.
RunResult run_sh(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    std::cerr << "FAIL cannot spawn: " << cmd << "\n";
    ++g_failures;
    return r;
  }
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string g_bin;  // path to coprime-census, shell-safe (no quoting applied)

RunResult run(const std::string& args, bool keep_stderr = false) {
  return run_sh(g_bin + " " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null"));
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-coprime-census>\n";
    return 2;
  }
  g_bin = argv[1];

  // --- count: exact backends and text/json formats -------------------------
  EXPECT(run("count --graph 'v=2;1-2' --q 2 --n 1 --backend brute").out == "7\n");
  EXPECT(run("count --graph 'v=2;1-2' --q 2 --n 1 --backend ie").out == "7\n");
  EXPECT(run("count --graph 'v=2;1-2' --q 2 --n 2").out == "31\n");
  EXPECT(run("count --graph 'v=3;1-2,2-3' --q 3 --n 0").out == "1\n");
  {
    const RunResult r = run("count --graph 'v=2;1-2' --q 2 --n 2 --format json");
    EXPECT(r.exit_code == 0);
    EXPECT(contains(r.out, "\"count\": \"31\""));
    EXPECT(contains(r.out, "\"backend\": \"ie\""));
    EXPECT(!r.out.empty() && r.out.back() == '\n');
  }
  // JSON graph form, and both spellings of a prime-power field
  EXPECT(run("count --graph '{\"vertices\":2,\"edges\":[[1,2]]}' --q 4 --n 1 "
             "--backend brute")
             .out ==
         run("count --graph 'v=2;1-2' --q 2^2 --n 1 --backend ie").out);

  // --- count: Monte Carlo determinism --------------------------------------
  {
    const std::string args =
        "count --graph 'v=2;1-2' --q 2 --n 2 --backend montecarlo "
        "--samples 20000 --seed 11 --workers 3";
    const RunResult a = run(args);
    const RunResult b = run(args);
    EXPECT(a.exit_code == 0);
    EXPECT(a.out == b.out);
    EXPECT(contains(a.out, "montecarlo estimate="));
    EXPECT(contains(a.out, "samples=20000"));
    EXPECT(contains(a.out, "seed=11"));
    EXPECT(contains(a.out, "workers=3"));
  }

  // --- exit codes -----------------------------------------------------------
  EXPECT(run("").exit_code == 2);        // missing subcommand
  EXPECT(run("count").exit_code == 2);   // missing required options
  EXPECT(run("count --graph 'v=2;1-2' --q 6 --n 1").exit_code == 2);  // 6 = 2*3
  EXPECT(run("count --graph 'v=2;1-1' --q 2 --n 1").exit_code == 2);  // self-loop
  EXPECT(run("count --graph 'v=2;1-2' --q 2 --n 1 --backend nope").exit_code == 2);
  EXPECT(run("bogus-subcommand").exit_code == 2);
  EXPECT(run("--help").exit_code == 0);
  EXPECT(run("count --help").exit_code == 0);
  EXPECT(run("--version").out == "coprime-census 1.0.0\n");
  // a forced backend over its budget is exit 3
  EXPECT(run("count --graph 'v=2;1-2' --q 2 --n 8 --backend brute "
             "--budget-brute 100")
             .exit_code == 3);
  EXPECT(run("count --graph 'v=2;1-2' --q 2 --n 8 --backend ie --budget-ie 2")
             .exit_code == 3);

  // --- environment-variable budget, flag precedence -------------------------
  {
    // plenty of room under the default budget
    EXPECT(run("count --graph 'v=2;1-2' --q 2 --n 8 --backend brute").exit_code == 0);
    // the environment variable becomes the default budget...
    EXPECT(run_sh("COPRIME_CENSUS_BUDGET=100 " + g_bin +
                  " count --graph 'v=2;1-2' --q 2 --n 8 --backend brute "
                  "2>/dev/null")
               .exit_code == 3);
    // ...but an explicit flag still wins
    const RunResult r =
        run_sh("COPRIME_CENSUS_BUDGET=100 " + g_bin +
               " count --graph 'v=2;1-2' --q 2 --n 8 --backend brute "
               "--budget-brute 100000000 2>/dev/null");
    EXPECT(r.exit_code == 0);
    EXPECT(r.out == "131071\n");  // 2^17 - 1
    // malformed environment values are ignored, not fatal
    EXPECT(run_sh("COPRIME_CENSUS_BUDGET=pebbles " + g_bin +
                  " count --graph 'v=2;1-2' --q 2 --n 1 2>/dev/null")
               .out == "7\n");
  }

  // --- density ---------------------------------------------------------------
  {
    const RunResult r = run("density --graph 'v=2;1-2' --q 5 --eps 1e-10");
    EXPECT(r.exit_code == 0);
    EXPECT(contains(r.out, "rho in [7.99999999"));  // 1 - 1/5 from below
    EXPECT(contains(r.out, ", 8.0000000"));
    EXPECT(contains(r.out, "truncation_degree="));
    const RunResult j = run("density --graph 'v=3;1-2,2-3' --q 2 --format json --plus");
    EXPECT(j.exit_code == 0);
    EXPECT(contains(j.out, "\"plus\": true"));
    EXPECT(contains(j.out, "\"truncation_degree\""));
    EXPECT(run("density --graph 'v=2;1-2' --q 2 --eps 0").exit_code == 2);
  }

  // --- polys -----------------------------------------------------------------
  {
    const RunResult r = run("polys --graph 'v=3;1-2,2-3' --vertex 2 --pair 1,3");
    EXPECT(r.exit_code == 0);
    EXPECT(contains(r.out, "Q_G = 1 - 2*z^2 + z^3"));
    EXPECT(contains(r.out, "Q_G_plus = 1 + 2*z^2 + z^3"));
    EXPECT(contains(r.out, "Q_G_2 = 1 - 2*z + z^2"));
    EXPECT(contains(r.out, "Q_1_3 = 1 + 3*z"));
    // r,s must be a non-edge
    EXPECT(run("polys --graph 'v=3;1-2,2-3' --pair 1,2").exit_code == 2);
  }

  // --- verify ---------------------------------------------------------------
  {
    const RunResult ok = run("verify --max-vertices 3 --q 2 --max-n 1", true);
    EXPECT(ok.exit_code == 0);
    EXPECT(contains(ok.out, "PASS oracle-equivalence"));
    EXPECT(contains(ok.out, "verification passed"));
    EXPECT(!contains(ok.out, "FAIL"));
    const RunResult bad =
        run("verify --max-vertices 3 --q 2 --max-n 1 --inject-fault", true);
    EXPECT(bad.exit_code == 1);
    EXPECT(contains(bad.out, "FAIL oracle-equivalence"));
    EXPECT(contains(bad.out, "verification FAILED"));
  }

  // --- sweep ------------------------------------------------------------------
  {
    const std::string args =
        "sweep --graph 'v=3;1-2,2-3' --q 2 --n-range 0..3 --samples 2000";
    const RunResult a = run(args);
    const RunResult b = run(args);
    EXPECT(a.exit_code == 0);
    EXPECT(a.out == b.out);  // byte-identical reruns
    EXPECT(contains(a.out, "\"rows\""));
    EXPECT(contains(a.out, "\"backend\": \"ie\""));
    EXPECT(contains(a.out, "\"alt_predictor\""));
    EXPECT(!a.out.empty() && a.out.back() == '\n');

    const RunResult csv = run("sweep --graph 'v=2;1-2' --q 2 --n-range 1..2 --format csv");
    EXPECT(csv.exit_code == 0);
    EXPECT(csv.out.rfind("n,backend,g,total,empirical,", 0) == 0);
    EXPECT(run("sweep --graph 'v=2;1-2' --q 2 --n-range 2..1").exit_code == 2);
    EXPECT(run("sweep --graph 'v=2;1-2' --q 2 --n-range x").exit_code == 2);
  }

  // --- --out writes the same bytes to a file ----------------------------------
  {
    const std::filesystem::path path = "cli_out_check.json";
    const RunResult direct = run("count --graph 'v=2;1-2' --q 2 --n 3 --format json");
    const RunResult filed = run("count --graph 'v=2;1-2' --q 2 --n 3 --format json "
                                "--out " + path.string());
    EXPECT(filed.exit_code == 0);
    EXPECT(filed.out.empty());
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT(buf.str() == direct.out);
    std::filesystem::remove(path);
  }

  if (g_failures == 0) {
    std::cout << "cli_tests: all checks passed\n";
    return 0;
  }
  std::cerr << "cli_tests: " << g_failures << " failing check(s)\n";
  return 1;
}
