#include "coprime_census/enumerate.hpp"
#include "coprime_census/errors.hpp"
#include "coprime_census/field.hpp"
#include "coprime_census/graph.hpp"
#include "coprime_census/numeric.hpp"
#include "coprime_census/sweep.hpp"

#include <doctest.h>

#include <string>

using namespace coprime_census;

TEST_CASE("backend names") {
  CHECK(backend_name(CountBackend::kAuto) == "auto");
  CHECK(backend_name(CountBackend::kBrute) == "brute");
  CHECK(backend_name(CountBackend::kInclusionExclusion) == "ie");
  CHECK(backend_name(CountBackend::kMonteCarlo) == "montecarlo");
}

TEST_CASE("exact sweep rows carry counts, ratios and bounds") {
  const FieldCtx f(2, 1);
  const CensusReport rep = census_sweep(f, complete_graph(2), 0, 4);
  CHECK(rep.p == 2);
  CHECK(rep.k == 1);
  CHECK(rep.rows.size() == 5);
  CHECK(rep.rho.contains(BigFloat(0.5)));
  const BigInt expect_g[] = {1, 7, 31, 127, 511};
  for (size_t i = 0; i < rep.rows.size(); ++i) {
    const CensusRow& row = rep.rows[i];
    CHECK(row.n == static_cast<int64_t>(i));
    CHECK(row.exact);
    CHECK(row.backend == "ie");
    CHECK(row.error.empty());
    CHECK(row.g == expect_g[i]);
    CHECK(row.total == ipow(w_count(2, row.n), 2));
    CHECK(row.empirical == BigRat(row.g, row.total));
    CHECK(row.residual > 0);
    CHECK(row.bound_t > 0);
    CHECK(row.predictor.lo <= row.predictor.hi);
  }
  // residuals fall monotonically on this graph
  for (size_t i = 1; i < rep.rows.size(); ++i) {
    CHECK(rep.rows[i].residual < rep.rows[i - 1].residual);
  }
}

TEST_CASE("backend fallback and per-row failure recording") {
  const FieldCtx f(2, 1);
  SweepOptions opt;
  opt.backend = CountBackend::kBrute;
  opt.brute.budget = 100;  // w(2^2)^3 = 343 tuples: over budget from n = 2 on
  const CensusReport rep = census_sweep(f, path_graph(3), 1, 2, opt);
  CHECK(rep.rows[0].exact);
  CHECK(rep.rows[0].backend == "brute");
  CHECK(!rep.rows[1].exact);
  CHECK(!rep.rows[1].error.empty());
  CHECK(rep.rows[1].backend.empty());

  // auto mode downgrades to Monte Carlo instead of failing
  SweepOptions fallback;
  fallback.backend = CountBackend::kAuto;
  fallback.ie.budget = 1;
  fallback.brute.budget = 100;
  fallback.mc.samples = 5000;
  const CensusReport mc_rep = census_sweep(f, path_graph(3), 2, 2, fallback);
  CHECK(mc_rep.rows[0].backend == "montecarlo");
  CHECK(mc_rep.rows[0].has_mc);
  CHECK(!mc_rep.rows[0].exact);
  CHECK(mc_rep.rows[0].error.empty());
  CHECK(mc_rep.rows[0].mc_estimate > 0);
}

TEST_CASE("JSON round-trip is byte-exact") {
  const FieldCtx f(3, 1);
  SweepOptions opt;
  opt.backend = CountBackend::kAuto;
  opt.mc.samples = 2000;
  opt.mc.seed = 5;
  const CensusReport rep = census_sweep(f, path_graph(3), 0, 3, opt);
  const std::string text = report_to_json(rep);
  const CensusReport parsed = report_from_json(text);
  CHECK(report_to_json(parsed) == text);
  CHECK(parsed.rows.size() == rep.rows.size());
  CHECK(parsed.graph == rep.graph);
  // floats travel as 25-significant-digit strings: exact on re-serialization,
  // recovered to ~1e-24 relative in memory
  const BigFloat parse_err = parsed.rho.lo - rep.rho.lo;
  CHECK((parse_err < 0 ? -parse_err : parse_err) <= BigFloat("1e-24") * rep.rho.lo);
  CHECK(parsed.rows[2].g == rep.rows[2].g);
  CHECK(parsed.rows[2].empirical == rep.rows[2].empirical);

  // mixed exact/Monte Carlo reports round-trip too
  SweepOptions mixed;
  mixed.backend = CountBackend::kMonteCarlo;
  mixed.mc.samples = 1000;
  const CensusReport mc_rep = census_sweep(f, complete_graph(2), 1, 2, mixed);
  const std::string mc_text = report_to_json(mc_rep);
  CHECK(report_to_json(report_from_json(mc_text)) == mc_text);
}

TEST_CASE("CSV has the documented header and one line per row") {
  const FieldCtx f(2, 1);
  const CensusReport rep = census_sweep(f, complete_graph(2), 1, 3);
  const std::string csv = report_to_csv(rep);
  const std::string header =
      "n,backend,g,total,empirical,mc_estimate,mc_stderr,rho_lo,rho_hi,"
      "rho_truncation_degree,residual,predictor_lo,predictor_hi,"
      "alt_predictor_lo,alt_predictor_hi,bound_rk,bound_t,error";
  CHECK(csv.substr(0, header.size()) == header);
  size_t lines = 0;
  for (char c : csv) lines += (c == '\n') ? 1 : 0;
  CHECK(lines == 1 + rep.rows.size());  // header + rows, trailing newline
}

TEST_CASE("sweep input validation") {
  const FieldCtx f(2, 1);
  CHECK_THROWS_AS(census_sweep(f, complete_graph(2), 3, 1), ValidationError);
  CHECK_THROWS_AS(census_sweep(f, complete_graph(2), -1, 1), ValidationError);
  SweepOptions opt;
  opt.tail_eps = 0.7;
  CHECK_THROWS_AS(census_sweep(f, complete_graph(2), 1, 1, opt), ValidationError);
}

TEST_CASE("malformed report text is rejected") {
  CHECK_THROWS_AS(report_from_json("not json"), ValidationError);
  CHECK_THROWS_AS(report_from_json("{}"), ValidationError);
  CHECK_THROWS_AS(report_from_json(R"({"graph": 3})"), ValidationError);
}
