#include "coprime_census/sweep.hpp"

#include "coprime_census/bounds.hpp"
#include "coprime_census/enumerate.hpp"
#include "coprime_census/errors.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace coprime_census {

namespace {

using nlohmann::json;

std::string sanitize_csv(const std::string& s) {
  std::string out = s;
  for (char& c : out) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return out;
}

json interval_to_json(const DensityInterval& i, bool with_degree) {
  json j;
  j["lo"] = float_string(i.lo);
  j["hi"] = float_string(i.hi);
  if (with_degree) j["truncation_degree"] = i.truncation_degree;
  return j;
}

DensityInterval interval_from_json(const json& j) {
  DensityInterval i;
  i.lo = BigFloat(j.at("lo").get<std::string>());
  i.hi = BigFloat(j.at("hi").get<std::string>());
  if (j.contains("truncation_degree")) {
    i.truncation_degree = j.at("truncation_degree").get<uint32_t>();
  }
  return i;
}

}  // namespace

std::string backend_name(CountBackend b) {
  switch (b) {
    case CountBackend::kAuto: return "auto";
    case CountBackend::kBrute: return "brute";
    case CountBackend::kInclusionExclusion: return "ie";
    case CountBackend::kMonteCarlo: return "montecarlo";
  }
  return "?";
}

CensusReport census_sweep(const FieldCtx& f, const CoprimalityGraph& g,
                          int64_t n_lo, int64_t n_hi, const SweepOptions& opt) {
  if (n_lo > n_hi) throw ValidationError("sweep: empty n range");
  if (n_lo < 0) throw ValidationError("sweep: n must be >= 0");

  CensusReport report;
  report.graph = g;
  report.p = f.p();
  report.k = f.k();
  report.tail_eps = opt.tail_eps;
  report.mc_seed = opt.mc.seed;
  report.mc_samples = opt.mc.samples;
  report.mc_workers = opt.mc.workers;

  DensityOptions dopt;
  dopt.target_width = opt.rho_width;
  dopt.subset_budget = opt.subset_budget;
  report.rho = density_rho(g, f, dopt);
  const BigFloat rho_mid = report.rho.mid();

  TailBoundOptions topt;
  topt.eps = opt.tail_eps;
  topt.rho_width = opt.rho_width;
  topt.subset_budget = opt.subset_budget;
  const BigFloat tail_sum = tail_density_sum(g, f, topt);

  const uint32_t v = g.vertex_count();
  const BigInt qminus1_v = ipow(BigInt(f.q()) - 1, v);

  for (int64_t n = n_lo; n <= n_hi; ++n) {
    CensusRow row;
    row.n = n;
    row.total = ipow(w_count(f.q(), n), v);
    row.predictor = main_term(report.rho, f, v, n);
    const BigFloat alt_scale =
        to_bigfloat(ipow(BigInt(f.q()), static_cast<uint64_t>(n) * v)) /
        to_bigfloat(qminus1_v);
    row.alt_predictor = DensityInterval{report.rho.lo * alt_scale,
                                        report.rho.hi * alt_scale,
                                        report.rho.truncation_degree};
    try {
      row.bound_rk = error_bound_rk(g, f, n);
      row.bound_t = error_bound_t_from_sum(tail_sum, f, v, n, opt.tail_eps);
    } catch (const PrecisionError& e) {
      row.error = e.what();
      report.rows.push_back(std::move(row));
      continue;
    }

    try {
      switch (opt.backend) {
        case CountBackend::kBrute:
          row.g = brute_force_count(f, g, n, opt.brute);
          row.backend = "brute";
          row.exact = true;
          break;
        case CountBackend::kInclusionExclusion:
          row.g = inclusion_exclusion_count(f, g, n, opt.ie);
          row.backend = "ie";
          row.exact = true;
          break;
        case CountBackend::kMonteCarlo: {
          const MonteCarloResult mc = monte_carlo_density(f, g, n, opt.mc);
          row.backend = "montecarlo";
          row.has_mc = true;
          row.mc_estimate = mc.estimate;
          row.mc_stderr = mc.standard_error;
          break;
        }
        case CountBackend::kAuto:
          try {
            row.g = inclusion_exclusion_count(f, g, n, opt.ie);
            row.backend = "ie";
            row.exact = true;
          } catch (const BudgetError&) {
            try {
              row.g = brute_force_count(f, g, n, opt.brute);
              row.backend = "brute";
              row.exact = true;
            } catch (const BudgetError&) {
              const MonteCarloResult mc = monte_carlo_density(f, g, n, opt.mc);
              row.backend = "montecarlo";
              row.has_mc = true;
              row.mc_estimate = mc.estimate;
              row.mc_stderr = mc.standard_error;
            }
          }
          break;
      }
    } catch (const BudgetError& e) {
      row.error = e.what();
    } catch (const ValidationError& e) {
      row.error = e.what();
    }

    if (row.exact) {
      row.empirical = BigRat(row.g) / BigRat(row.total);
      row.residual = static_cast<double>(
          BigFloat(abs(to_bigfloat(row.empirical) - rho_mid)));
    } else if (row.has_mc) {
      row.residual = static_cast<double>(
          BigFloat(abs(BigFloat(row.mc_estimate) - rho_mid)));
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string report_to_json(const CensusReport& r) {
  json j;
  j["graph"] = json::parse(graph_to_json(r.graph));
  j["p"] = r.p;
  j["k"] = r.k;
  uint64_t q = 1;
  for (uint32_t i = 0; i < r.k; ++i) q *= r.p;
  j["q"] = q;
  j["rho"] = interval_to_json(r.rho, true);
  j["tail_eps"] = double_string(r.tail_eps);
  j["mc"] = {{"seed", r.mc_seed}, {"samples", r.mc_samples}, {"workers", r.mc_workers}};
  json rows = json::array();
  for (const CensusRow& row : r.rows) {
    json rj;
    rj["n"] = row.n;
    rj["backend"] = row.backend;
    rj["total"] = decimal_string(row.total);
    if (row.exact) {
      rj["g"] = decimal_string(row.g);
      rj["empirical"] = row.empirical.str();
    }
    if (row.has_mc) {
      rj["mc_estimate"] = double_string(row.mc_estimate);
      rj["mc_stderr"] = double_string(row.mc_stderr);
    }
    if (row.exact || row.has_mc) rj["residual"] = double_string(row.residual);
    rj["predictor"] = interval_to_json(row.predictor, false);
    rj["alt_predictor"] = interval_to_json(row.alt_predictor, false);
    rj["bound_rk"] = float_string(row.bound_rk);
    rj["bound_t"] = float_string(row.bound_t);
    rj["error"] = row.error;
    rows.push_back(std::move(rj));
  }
  j["rows"] = std::move(rows);
  return j.dump(2);
}

CensusReport report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("report: bad JSON: ") + e.what());
  }
  try {
    CensusReport r;
    r.graph = parse_graph(j.at("graph").dump());
    r.p = j.at("p").get<uint64_t>();
    r.k = j.at("k").get<uint32_t>();
    r.rho = interval_from_json(j.at("rho"));
    r.tail_eps = std::stod(j.at("tail_eps").get<std::string>());
    r.mc_seed = j.at("mc").at("seed").get<uint64_t>();
    r.mc_samples = j.at("mc").at("samples").get<uint64_t>();
    r.mc_workers = j.at("mc").at("workers").get<unsigned>();
    for (const json& rj : j.at("rows")) {
      CensusRow row;
      row.n = rj.at("n").get<int64_t>();
      row.backend = rj.at("backend").get<std::string>();
      row.total = BigInt(rj.at("total").get<std::string>());
      if (rj.contains("g")) {
        row.exact = true;
        row.g = BigInt(rj.at("g").get<std::string>());
        row.empirical = BigRat(rj.at("empirical").get<std::string>());
      }
      if (rj.contains("mc_estimate")) {
        row.has_mc = true;
        row.mc_estimate = std::stod(rj.at("mc_estimate").get<std::string>());
        row.mc_stderr = std::stod(rj.at("mc_stderr").get<std::string>());
      }
      if (rj.contains("residual")) {
        row.residual = std::stod(rj.at("residual").get<std::string>());
      }
      row.predictor = interval_from_json(rj.at("predictor"));
      row.alt_predictor = interval_from_json(rj.at("alt_predictor"));
      row.bound_rk = BigFloat(rj.at("bound_rk").get<std::string>());
      row.bound_t = BigFloat(rj.at("bound_t").get<std::string>());
      row.error = rj.at("error").get<std::string>();
      r.rows.push_back(std::move(row));
    }
    return r;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("report: missing or mistyped field: ") + e.what());
  }
}

std::string report_to_csv(const CensusReport& r) {
  std::string out =
      "n,backend,g,total,empirical,mc_estimate,mc_stderr,rho_lo,rho_hi,"
      "rho_truncation_degree,residual,predictor_lo,predictor_hi,"
      "alt_predictor_lo,alt_predictor_hi,bound_rk,bound_t,error\n";
  for (const CensusRow& row : r.rows) {
    out += std::to_string(row.n) + ',' + row.backend + ',';
    out += (row.exact ? decimal_string(row.g) : "") + ',';
    out += decimal_string(row.total) + ',';
    out += (row.exact ? row.empirical.str() : "") + ',';
    out += (row.has_mc ? double_string(row.mc_estimate) : "") + ',';
    out += (row.has_mc ? double_string(row.mc_stderr) : "") + ',';
    out += float_string(r.rho.lo) + ',' + float_string(r.rho.hi) + ',';
    out += std::to_string(r.rho.truncation_degree) + ',';
    out += ((row.exact || row.has_mc) ? double_string(row.residual) : "") + ',';
    out += float_string(row.predictor.lo) + ',' + float_string(row.predictor.hi) + ',';
    out += float_string(row.alt_predictor.lo) + ',' +
           float_string(row.alt_predictor.hi) + ',';
    out += float_string(row.bound_rk) + ',' + float_string(row.bound_t) + ',';
    out += sanitize_csv(row.error) + '\n';
  }
  return out;
}

}  // namespace coprime_census
