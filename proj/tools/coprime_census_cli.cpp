// coprime-census: exact counts, Euler-product densities and error bounds for
// tuples of monic polynomials over F_q under graph-shaped coprimality
// constraints.
//
// Exit codes: 0 success, 1 runtime failure (including failed verification),
// 2 bad usage or malformed input, 3 a forced backend refused by its budget.

#include "coprime_census/bounds.hpp"
#include "coprime_census/counting.hpp"
#include "coprime_census/density.hpp"
#include "coprime_census/enumerate.hpp"
#include "coprime_census/errors.hpp"
#include "coprime_census/graph_poly.hpp"
#include "coprime_census/montecarlo.hpp"
#include "coprime_census/sweep.hpp"
#include "coprime_census/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace cc = coprime_census;
using nlohmann::json;

namespace {

// ------------------------------------------------------------- plumbing ---

struct GraphArgs {
  std::string inline_text;
  std::string file;

  cc::CoprimalityGraph resolve() const {
    if (!inline_text.empty() && !file.empty()) {
      throw cc::ValidationError("give either --graph or --graph-file, not both");
    }
    if (!inline_text.empty()) return cc::parse_graph(inline_text);
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw cc::ValidationError("cannot open graph file: " + file);
      std::stringstream buf;
      buf << in.rdbuf();
      return cc::parse_graph(buf.str());
    }
    throw cc::ValidationError("a graph is required (--graph or --graph-file)");
  }

  void add_to(CLI::App* cmd) {
    cmd->add_option("--graph", inline_text,
                    "graph, inline: 'v=3;1-2,2-3' or JSON {\"vertices\":..,\"edges\":[[..]]}");
    cmd->add_option("--graph-file", file, "file containing the graph description");
  }
};

// Accepts "p", "p^k", or a plain prime power like 8 or 49.
cc::FieldCtx parse_field(const std::string& text) {
  const auto parse_u64 = [](const std::string& s) -> uint64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw cc::ValidationError("bad number in field size: '" + s + "'");
    }
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw cc::ValidationError("field size out of range: '" + s + "'");
    }
  };
  const size_t caret = text.find('^');
  if (caret != std::string::npos) {
    const uint64_t p = parse_u64(text.substr(0, caret));
    const uint64_t k = parse_u64(text.substr(caret + 1));
    if (k == 0 || k > 64) throw cc::ValidationError("field size: exponent out of range");
    return cc::FieldCtx(p, static_cast<uint32_t>(k));
  }
  const uint64_t q = parse_u64(text);
  uint64_t p = 0;
  uint32_t k = 0;
  if (!cc::factor_prime_power(q, p, k)) {
    throw cc::ValidationError("q = " + text + " is not a prime power");
  }
  return cc::FieldCtx(p, k);
}

struct BudgetArgs {
  std::optional<uint64_t> brute, ie, subsets, irred;
  std::optional<uint64_t> env;

  void add_to(CLI::App* cmd) {
    const char* env_text = std::getenv("COPRIME_CENSUS_BUDGET");
    if (env_text != nullptr) {
      try {
        env = std::stoull(env_text);
      } catch (const std::exception&) {
        env.reset();  // ignored; flags and defaults still apply
      }
    }
    cmd->add_option("--budget-brute", brute, "max gcd tests for the brute backend");
    cmd->add_option("--budget-ie", ie, "max raw labelings for the inclusion-exclusion backend");
    cmd->add_option("--budget-subsets", subsets, "max edge subsets for graph polynomials");
    cmd->add_option("--budget-irred", irred, "max candidate scan for the irreducible cache");
  }

  cc::BruteForceOptions brute_options(unsigned workers) const {
    cc::BruteForceOptions o;
    if (auto b = brute ? brute : env) o.budget = *b;
    o.workers = workers;
    return o;
  }
  cc::InclusionExclusionOptions ie_options() const {
    cc::InclusionExclusionOptions o;
    if (auto b = ie ? ie : env) o.budget = *b;
    return o;
  }
  uint64_t subset_budget() const {
    if (auto b = subsets ? subsets : env) return *b;
    return cc::kDefaultSubsetBudget;
  }
  void apply_irred(cc::FieldCtx& f) const {
    if (auto b = irred ? irred : env) f.set_irreducible_cache_budget(*b);
  }
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw cc::ValidationError("cannot write to " + out_path);
  out << text;
}

cc::CountBackend parse_backend(const std::string& name) {
  if (name == "auto") return cc::CountBackend::kAuto;
  if (name == "brute") return cc::CountBackend::kBrute;
  if (name == "ie") return cc::CountBackend::kInclusionExclusion;
  if (name == "montecarlo") return cc::CountBackend::kMonteCarlo;
  throw cc::ValidationError("unknown backend '" + name + "'");
}

std::pair<int64_t, int64_t> parse_n_range(const std::string& text) {
  const size_t dots = text.find("..");
  if (dots == std::string::npos) {
    throw cc::ValidationError("bad --n-range, expected A..B: '" + text + "'");
  }
  try {
    const int64_t lo = std::stoll(text.substr(0, dots));
    const int64_t hi = std::stoll(text.substr(dots + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    throw cc::ValidationError("bad --n-range, expected A..B: '" + text + "'");
  }
}

// ------------------------------------------------------------- commands ---

struct CountCmd {
  GraphArgs graph;
  BudgetArgs budgets;
  std::string q_text;
  int64_t n = 0;
  std::string backend = "auto";
  std::string format = "text";
  std::string out;
  uint64_t seed = 1, samples = 100'000;
  unsigned workers = 1;

  int run() {
    const cc::CoprimalityGraph g = graph.resolve();
    cc::FieldCtx f = parse_field(q_text);
    budgets.apply_irred(f);
    const cc::CountBackend be = parse_backend(backend);
    cc::MonteCarloOptions mc_opt{samples, seed, workers};

    json j;
    j["graph"] = json::parse(cc::graph_to_json(g));
    j["q"] = f.q();
    j["n"] = n;
    std::string text;

    const auto run_mc = [&] {
      const cc::MonteCarloResult mc = cc::monte_carlo_density(f, g, n, mc_opt);
      j["backend"] = "montecarlo";
      j["estimate"] = cc::double_string(mc.estimate);
      j["stderr"] = cc::double_string(mc.standard_error);
      j["hits"] = mc.hits;
      j["samples"] = mc.samples;
      j["seed"] = mc.seed;
      j["workers"] = mc.workers;
      text = "montecarlo estimate=" + cc::double_string(mc.estimate) +
             " stderr=" + cc::double_string(mc.standard_error) +
             " hits=" + std::to_string(mc.hits) +
             " samples=" + std::to_string(mc.samples) +
             " seed=" + std::to_string(mc.seed) +
             " workers=" + std::to_string(mc.workers) + "\n";
    };
    const auto finish_exact = [&](const cc::BigInt& count, const char* which) {
      j["backend"] = which;
      j["count"] = cc::decimal_string(count);
      text = cc::decimal_string(count) + "\n";
    };

    switch (be) {
      case cc::CountBackend::kBrute:
        finish_exact(cc::brute_force_count(f, g, n, budgets.brute_options(workers)), "brute");
        break;
      case cc::CountBackend::kInclusionExclusion:
        finish_exact(cc::inclusion_exclusion_count(f, g, n, budgets.ie_options()), "ie");
        break;
      case cc::CountBackend::kMonteCarlo:
        run_mc();
        break;
      case cc::CountBackend::kAuto:
        try {
          finish_exact(cc::inclusion_exclusion_count(f, g, n, budgets.ie_options()), "ie");
        } catch (const cc::BudgetError& e) {
          std::cerr << "warning: " << e.what() << "; falling back to montecarlo\n";
          run_mc();
        }
        break;
    }
    emit(format == "json" ? j.dump(2) + "\n" : text, out);
    return 0;
  }
};

struct DensityCmd {
  GraphArgs graph;
  BudgetArgs budgets;
  std::string q_text;
  std::string eps = "1e-12";
  bool plus = false;
  uint32_t max_degree = 4096;
  std::string format = "text";
  std::string out;

  int run() {
    const cc::CoprimalityGraph g = graph.resolve();
    cc::FieldCtx f = parse_field(q_text);
    budgets.apply_irred(f);
    cc::DensityOptions opt;
    try {
      opt.target_width = cc::BigFloat(eps);
    } catch (const std::exception&) {
      throw cc::ValidationError("bad --eps value: '" + eps + "'");
    }
    opt.plus = plus;
    opt.max_truncation_degree = max_degree;
    opt.subset_budget = budgets.subset_budget();
    const cc::DensityInterval rho = cc::density_rho(g, f, opt);

    if (format == "json") {
      json j;
      j["graph"] = json::parse(cc::graph_to_json(g));
      j["q"] = f.q();
      j["plus"] = plus;
      j["lo"] = cc::float_string(rho.lo);
      j["hi"] = cc::float_string(rho.hi);
      j["width"] = cc::float_string(rho.width());
      j["truncation_degree"] = rho.truncation_degree;
      emit(j.dump(2) + "\n", out);
    } else {
      emit(std::string(plus ? "rho_plus" : "rho") + " in [" + cc::float_string(rho.lo) +
               ", " + cc::float_string(rho.hi) + "] width=" + cc::float_string(rho.width()) +
               " truncation_degree=" + std::to_string(rho.truncation_degree) + "\n",
           out);
    }
    return 0;
  }
};

struct PolysCmd {
  GraphArgs graph;
  BudgetArgs budgets;
  uint32_t vertex = 0;
  std::string pair;
  std::string format = "text";
  std::string out;

  int run() {
    const cc::CoprimalityGraph g = graph.resolve();
    const uint64_t sb = budgets.subset_budget();
    json j;
    j["graph"] = json::parse(cc::graph_to_json(g));
    std::string text;
    const auto add = [&](const std::string& key, const std::string& label,
                         const cc::GraphPolynomial& p) {
      json pj;
      pj["text"] = p.to_string();
      auto arr = json::array();
      for (const cc::BigInt& c : p.coeffs()) arr.push_back(cc::decimal_string(c));
      pj["coeffs"] = arr;
      j[key] = pj;
      text += label + " = " + p.to_string() + "\n";
    };
    add("q_g", "Q_G", cc::q_g(g, cc::SubsetWalk::kGrayCode, sb));
    add("q_g_plus", "Q_G_plus", cc::q_g_plus(g, cc::SubsetWalk::kGrayCode, sb));
    if (vertex != 0) {
      add("q_g_r", "Q_G_" + std::to_string(vertex),
          cc::q_g_r(g, vertex, cc::SubsetWalk::kGrayCode, sb));
      add("q_g_r_plus", "Q_G_" + std::to_string(vertex) + "_plus",
          cc::q_g_r_plus(g, vertex, cc::SubsetWalk::kGrayCode, sb));
    }
    if (!pair.empty()) {
      const size_t comma = pair.find(',');
      if (comma == std::string::npos) {
        throw cc::ValidationError("bad --pair, expected r,s: '" + pair + "'");
      }
      uint32_t r = 0, s = 0;
      try {
        r = static_cast<uint32_t>(std::stoul(pair.substr(0, comma)));
        s = static_cast<uint32_t>(std::stoul(pair.substr(comma + 1)));
      } catch (const std::exception&) {
        throw cc::ValidationError("bad --pair, expected r,s: '" + pair + "'");
      }
      add("q_rs", "Q_" + std::to_string(r) + "_" + std::to_string(s),
          cc::q_rs(g, r, s, cc::SubsetWalk::kGrayCode, sb));
    }
    emit(format == "json" ? j.dump(2) + "\n" : text, out);
    return 0;
  }
};

struct VerifyCmd {
  cc::VerifyOptions opt;

  int run() {
    const cc::VerifyReport report = cc::run_verification(opt);
    for (const cc::VerifyCheck& c : report.checks) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) std::cout << ": " << c.detail;
      std::cout << "\n";
    }
    std::cout << (report.all_pass() ? "verification passed\n" : "verification FAILED\n");
    return report.all_pass() ? 0 : 1;
  }
};

struct SweepCmd {
  GraphArgs graph;
  BudgetArgs budgets;
  std::string q_text;
  std::string n_range;
  std::string backend = "auto";
  std::string eps = "1e-12";
  double tail_eps = 0.25;
  uint64_t seed = 1, samples = 100'000;
  unsigned workers = 1;
  std::string format = "json";
  std::string out;

  int run() {
    const cc::CoprimalityGraph g = graph.resolve();
    cc::FieldCtx f = parse_field(q_text);
    budgets.apply_irred(f);
    const auto [n_lo, n_hi] = parse_n_range(n_range);
    cc::SweepOptions opt;
    opt.backend = parse_backend(backend);
    opt.brute = budgets.brute_options(workers);
    opt.ie = budgets.ie_options();
    opt.mc = cc::MonteCarloOptions{samples, seed, workers};
    try {
      opt.rho_width = cc::BigFloat(eps);
    } catch (const std::exception&) {
      throw cc::ValidationError("bad --eps value: '" + eps + "'");
    }
    opt.tail_eps = tail_eps;
    opt.subset_budget = budgets.subset_budget();
    const cc::CensusReport report = cc::census_sweep(f, g, n_lo, n_hi, opt);
    emit(format == "csv" ? cc::report_to_csv(report) : cc::report_to_json(report) + "\n",
         out);
    return 0;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "coprime-census: censuses of coprime tuples of monic polynomials over F_q"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "coprime-census 1.0.0");

  CountCmd count;
  auto* count_cmd = app.add_subcommand(
      "count", "count tuples of degree <= n satisfying the coprimality graph");
  count.graph.add_to(count_cmd);
  count.budgets.add_to(count_cmd);
  count_cmd->add_option("--q", count.q_text, "field size: p, p^k or a prime power")
      ->required();
  count_cmd->add_option("--n", count.n, "degree bound")->required();
  count_cmd->add_option("--backend", count.backend, "auto | brute | ie | montecarlo");
  count_cmd->add_option("--format", count.format, "text | json");
  count_cmd->add_option("--out", count.out, "write output to this file");
  count_cmd->add_option("--seed", count.seed, "montecarlo seed");
  count_cmd->add_option("--samples", count.samples, "montecarlo sample count");
  count_cmd->add_option("--workers", count.workers, "worker threads");

  DensityCmd density;
  auto* density_cmd = app.add_subcommand(
      "density", "rigorous interval for the asymptotic coprimality density");
  density.graph.add_to(density_cmd);
  density.budgets.add_to(density_cmd);
  density_cmd->add_option("--q", density.q_text, "field size: p, p^k or a prime power")
      ->required();
  density_cmd->add_option("--eps", density.eps, "target interval width (default 1e-12)");
  density_cmd->add_flag("--plus", density.plus, "compute the all-positive upper density");
  density_cmd->add_option("--max-degree", density.max_degree,
                          "give up past this truncation degree");
  density_cmd->add_option("--format", density.format, "text | json");
  density_cmd->add_option("--out", density.out, "write output to this file");

  PolysCmd polys;
  auto* polys_cmd =
      app.add_subcommand("polys", "print the graph polynomials behind the censuses");
  polys.graph.add_to(polys_cmd);
  polys.budgets.add_to(polys_cmd);
  polys_cmd->add_option("--vertex", polys.vertex,
                        "also print the sums that never count this vertex");
  polys_cmd->add_option("--pair", polys.pair,
                        "also print the pair sum for this non-edge, as r,s");
  polys_cmd->add_option("--format", polys.format, "text | json");
  polys_cmd->add_option("--out", polys.out, "write output to this file");

  VerifyCmd verify;
  auto* verify_cmd = app.add_subcommand(
      "verify", "re-derive the library's core identities and report pass/fail");
  verify_cmd->add_option("--max-vertices", verify.opt.max_vertices,
                         "check all graphs up to this many vertices (default 4)");
  verify_cmd->add_option("--q", verify.opt.qs, "field sizes to check (default 2 3 4)");
  verify_cmd->add_option("--max-n", verify.opt.max_n, "degree bounds 0..max (default 2)");
  verify_cmd->add_flag("--inject-fault", verify.opt.inject_mu_fault,
                       "testing only: flip one Moebius sign so the oracle check must fail");
  verify_cmd->add_option("--budget-ie", verify.opt.ie_budget,
                         "max raw labelings for the inclusion-exclusion backend");
  verify_cmd->add_option("--budget-brute", verify.opt.brute_budget,
                         "max gcd tests for the brute backend");

  SweepCmd sweep;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "counts, densities, predictors and bounds across a range of n");
  sweep.graph.add_to(sweep_cmd);
  sweep.budgets.add_to(sweep_cmd);
  sweep_cmd->add_option("--q", sweep.q_text, "field size: p, p^k or a prime power")
      ->required();
  sweep_cmd->add_option("--n-range", sweep.n_range, "degree bounds, as A..B")->required();
  sweep_cmd->add_option("--backend", sweep.backend, "auto | brute | ie | montecarlo");
  sweep_cmd->add_option("--eps", sweep.eps, "density interval width target");
  sweep_cmd->add_option("--tail-eps", sweep.tail_eps,
                        "epsilon in the tail bound's q^{-(1-eps)n} factor");
  sweep_cmd->add_option("--seed", sweep.seed, "montecarlo seed");
  sweep_cmd->add_option("--samples", sweep.samples, "montecarlo sample count");
  sweep_cmd->add_option("--workers", sweep.workers, "worker threads");
  sweep_cmd->add_option("--format", sweep.format, "json | csv");
  sweep_cmd->add_option("--out", sweep.out, "write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (count_cmd->parsed()) return count.run();
    if (density_cmd->parsed()) return density.run();
    if (polys_cmd->parsed()) return polys.run();
    if (verify_cmd->parsed()) return verify.run();
    if (sweep_cmd->parsed()) return sweep.run();
    return 2;
  } catch (const cc::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cc::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const cc::EulerFactorError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
