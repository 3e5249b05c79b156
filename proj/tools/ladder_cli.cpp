// Command-line front end: parameter sweeps, verification suite, scaling
// collapse and direct oracle evaluations. Exit codes: 0 success, 1
// verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ladder/acceptance.hpp"
#include "ladder/golden.hpp"
#include "ladder/sweep.hpp"

namespace {

using nlohmann::json;

struct OutputTarget {
  std::ofstream file;
  std::ostream* os = &std::cout;
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
      os = &file;
    }
  }
};

json record_to_json(const ladder::SweepRecord& r, const std::string& q) {
  json j{{"quantity", q}, {"var", r.var}, {"x", r.x}};
  if (r.size >= 0) j["N"] = r.size;
  if (r.sep >= 0) j["n"] = r.sep;
  auto put = [&](const char* key, double v) {
    if (std::isnan(v))
      j[key] = nullptr;
    else
      j[key] = v;
  };
  put("value", r.value);
  put("d1", r.d1);
  put("d2", r.d2);
  return j;
}

int run_sweep_cmd(const ladder::SweepConfig& cfg, const std::string& out,
                  const std::string& format) {
  OutputTarget target(out);
  const std::string qname = ladder::quantity_name(cfg.quantity);
  const std::vector<ladder::SweepRecord> rows = ladder::run_sweep(cfg);
  if (format == "json") {
    json j = json::array();
    for (const auto& r : rows) j.push_back(record_to_json(r, qname));
    *target.os << j.dump(2) << '\n';
  } else {
    ladder::write_csv(*target.os, qname, rows);
  }
  return 0;
}

int run_collapse_cmd(std::vector<long long> sizes, std::vector<double> x_grid,
                     const std::string& out, const std::string& format) {
  if (sizes.empty()) sizes = {100, 1000, 10000, 100000};
  if (x_grid.empty()) x_grid = {0.02, 0.05, 0.1, 0.2};
  ladder::CollapseDataset ds = ladder::collapse_dataset(sizes, x_grid);
  ds.nu_fit = ladder::fit_collapse_exponent(sizes);
  OutputTarget target(out);
  if (format == "json") {
    json rows = json::array();
    for (const auto& r : ds.rows)
      rows.push_back({{"N", r.N},
                      {"v", r.v},
                      {"d_over_n", r.d_over_n},
                      {"scaling_x", r.scaling_x}});
    *target.os << json{{"rows", rows},
                       {"score", ds.score},
                       {"nu_fit", ds.nu_fit}}
                      .dump(2)
               << '\n';
  } else {
    ladder::write_collapse_csv(*target.os, ds);
  }
  std::cerr << "collapse score " << ds.score << ", nu estimate " << ds.nu_fit
            << '\n';
  return 0;
}

const char* status_name(ladder::CriterionResult::Status s) {
  switch (s) {
    case ladder::CriterionResult::kPass: return "PASS";
    case ladder::CriterionResult::kFail: return "FAIL";
    case ladder::CriterionResult::kExpectedFail: return "XFAIL";
  }
  return "?";
}

int run_verify_cmd(const std::string& level, const std::string& golden_path,
                   const std::string& out) {
  const bool quick = level == "quick";
  const auto results = ladder::run_acceptance(quick);
  bool golden_ok = true;
  json golden_report = json::array();
  try {
    const auto rows = ladder::load_golden_file(golden_path);
    const auto checks = ladder::verify_golden(rows, quick);
    for (const auto& c : checks) {
      if (!c.pass) golden_ok = false;
      golden_report.push_back({{"quantity", c.row.quantity},
                               {"u", c.row.u},
                               {"rungs", c.row.rungs},
                               {"stored", c.row.value},
                               {"recomputed", c.recomputed},
                               {"status", c.skipped ? "SKIP"
                                          : c.pass  ? "PASS"
                                                    : "FAIL"}});
      if (!c.pass)
        std::cout << "golden mismatch: " << c.row.quantity << " at u="
                  << c.row.u << ", 2N=" << c.row.rungs << " (stored "
                  << c.row.value << ", recomputed " << c.recomputed << ")\n";
    }
  } catch (const std::exception& e) {
    golden_ok = false;
    std::cout << "golden file error: " << e.what() << '\n';
  }
  for (const auto& r : results) {
    std::cout << "criterion " << r.id << " [" << status_name(r.status)
              << "] " << r.name;
    if (!r.detail.empty()) std::cout << " -- " << r.detail;
    std::cout << '\n';
  }
  std::cout << "golden data: " << (golden_ok ? "PASS" : "FAIL") << '\n';
  const bool ok = ladder::acceptance_ok(results) && golden_ok;
  if (!out.empty()) {
    json jr = json::array();
    for (const auto& r : results)
      jr.push_back({{"id", r.id},
                    {"name", r.name},
                    {"status", status_name(r.status)},
                    {"detail", r.detail}});
    std::ofstream f(out);
    f << json{{"criteria", jr}, {"golden", golden_report}, {"ok", ok}}.dump(2)
      << '\n';
  }
  std::cout << (ok ? "verification passed" : "verification FAILED") << '\n';
  return ok ? 0 : 1;
}

int run_oracle_cmd(const std::string& quantity, double u, int rungs,
                   long long n_sep, double delta, long long samples,
                   std::uint64_t seed, const std::string& emit_golden,
                   const std::string& out, const std::string& format) {
  if (!emit_golden.empty()) {
    std::ofstream f(emit_golden);
    if (!f) throw CLI::ValidationError("--emit-golden",
                                       "cannot open " + emit_golden);
    ladder::write_golden(f, ladder::compute_golden());
    std::cerr << "golden data written to " << emit_golden << '\n';
    return 0;
  }
  double value = 0.0, stderr_v = 0.0;
  bool has_stderr = false;
  if (quantity == "norm") {
    value = ladder::detail::golden_dense_log_norm(u, rungs);
  } else if (quantity == "overlap") {
    value = ladder::detail::golden_dense_overlap(u, rungs);
  } else if (quantity == "s_single") {
    value = ladder::detail::golden_entropy(u, rungs, {0});
  } else if (quantity == "s_pair") {
    value = ladder::detail::golden_entropy(u, rungs,
                                           {0, static_cast<int>(n_sep)});
  } else if (quantity == "c_spin") {
    value = ladder::oracle::spin_correlation(u, rungs, n_sep);
  } else if (quantity == "fidelity") {
    const auto mc = ladder::oracle::average_fidelity(u, delta, rungs,
                                                     samples, seed);
    value = mc.value;
    stderr_v = mc.stderr_;
    has_stderr = true;
  } else if (quantity == "dimer") {
    value = ladder::oracle::dimer_correlation(u, rungs, n_sep);
  } else if (quantity == "residual") {
    value = ladder::oracle::energy_residual(u, rungs);
  } else {
    throw CLI::ValidationError("--quantity", "unknown oracle quantity " +
                                                 quantity);
  }
  OutputTarget target(out);
  if (format == "json") {
    json j{{"quantity", quantity}, {"u", u}, {"rungs", rungs},
           {"value", value}};
    if (n_sep > 0) j["n"] = n_sep;
    if (has_stderr) j["stderr"] = stderr_v;
    *target.os << j.dump(2) << '\n';
  } else {
    *target.os << "quantity,u,rungs,n,value,stderr\n"
               << quantity << ',' << ladder::detail::format_g17(u) << ','
               << rungs << ',' << (n_sep > 0 ? std::to_string(n_sep) : "")
               << ',' << ladder::detail::format_g17(value) << ','
               << (has_stderr ? ladder::detail::format_g17(stderr_v) : "")
               << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix-product ground states of a two-leg spin-1/2 ladder: "
               "entanglement, correlations and fidelity"};
  app.require_subcommand(1);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "evaluate a quantity on a grid");
  std::string s_quantity, s_var = "u", s_out, s_format = "csv";
  ladder::SweepConfig cfg;
  sweep->add_option("--quantity", s_quantity, "quantity to sweep")
      ->required()
      ->check(CLI::IsMember({"s_single", "s_pair", "xi_e", "xi_c", "c_spin",
                             "fidelity", "d_of_u", "chi_f"}));
  sweep->add_option("--var", s_var, "sweep variable")
      ->check(CLI::IsMember({"u", "inv-u"}));
  sweep->add_option("--min", cfg.min, "grid minimum")->required();
  sweep->add_option("--max", cfg.max, "grid maximum")->required();
  sweep->add_option("--points", cfg.points, "grid points (>= 2)")
      ->check(CLI::Range(2, 1000000));
  sweep->add_flag("--log", cfg.log_grid, "logarithmic grid");
  sweep->add_option("--n-sep", cfg.n_sep, "separation n (s_pair, c_spin)");
  sweep->add_option("--N", cfg.sizes, "system size N, repeatable");
  sweep->add_option("--delta", cfg.delta, "parameter increment (fidelity)");
  sweep->add_option("--seed", cfg.seed, "random seed (recorded)");
  sweep->add_option("--out", s_out, "output path (default stdout)");
  sweep->add_option("--format", s_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  // verify
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  std::string v_level = "full", v_golden = "data/golden.csv", v_out;
  verify->add_option("--level", v_level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--golden", v_golden, "golden data file");
  verify->add_option("--out", v_out, "JSON report path");

  // collapse
  auto* collapse = app.add_subcommand("collapse", "scaling-collapse dataset");
  std::vector<long long> c_sizes;
  std::vector<double> c_xgrid;
  std::string c_out, c_format = "csv";
  collapse->add_option("--N", c_sizes, "system size N, repeatable");
  collapse->add_option("--x", c_xgrid, "scaling variable N v^2, repeatable");
  collapse->add_option("--out", c_out, "output path (default stdout)");
  collapse->add_option("--format", c_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  // oracle
  auto* oracle = app.add_subcommand("oracle", "brute-force evaluations");
  std::string o_quantity, o_emit, o_out, o_format = "csv";
  double o_u = 1.0, o_delta = 1e-3;
  int o_rungs = 4;
  long long o_nsep = 0, o_samples = 2000;
  std::uint64_t o_seed = 0x5EED;
  oracle->add_option("--quantity", o_quantity, "oracle quantity")
      ->check(CLI::IsMember({"norm", "overlap", "s_single", "s_pair",
                             "c_spin", "fidelity", "dimer", "residual"}));
  oracle->add_option("--u", o_u, "control parameter");
  oracle->add_option("--rungs", o_rungs, "number of rungs (even, <= 8)");
  oracle->add_option("--n-sep", o_nsep, "separation n");
  oracle->add_option("--delta", o_delta, "parameter increment");
  oracle->add_option("--samples", o_samples, "Monte-Carlo samples");
  oracle->add_option("--seed", o_seed, "random seed");
  oracle->add_option("--emit-golden", o_emit, "write golden data file here");
  oracle->add_option("--out", o_out, "output path (default stdout)");
  oracle->add_option("--format", o_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sweep->parsed()) {
      cfg.quantity = ladder::parse_quantity(s_quantity);
      cfg.var = s_var == "inv-u" ? ladder::Variable::kInvU
                                 : ladder::Variable::kU;
      return run_sweep_cmd(cfg, s_out, s_format);
    }
    if (verify->parsed()) return run_verify_cmd(v_level, v_golden, v_out);
    if (collapse->parsed())
      return run_collapse_cmd(c_sizes, c_xgrid, c_out, c_format);
    if (oracle->parsed()) {
      if (o_quantity.empty() && o_emit.empty())
        throw CLI::ValidationError("--quantity",
                                   "required unless --emit-golden is given");
      return run_oracle_cmd(o_quantity, o_u, o_rungs, o_nsep, o_delta,
                            o_samples, o_seed, o_emit, o_out, o_format);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
