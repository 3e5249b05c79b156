// Golden-data file: oracle-derived reference values checked into the repo so
// closed-form regressions run without re-deriving the brute-force results.
// Plain CSV, one row per value: u,rungs,quantity,value,tolerance.

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ladder/entanglement.hpp"
#include "ladder/fidelity.hpp"
#include "ladder/mps.hpp"
#include "ladder/oracle.hpp"
#include "ladder/sweep.hpp"
#include "ladder/transfer.hpp"

namespace ladder {

struct GoldenRow {
  double u = 0.0;
  int rungs = 0;
  std::string quantity;
  double value = 0.0;
  double tolerance = 0.0;
};

struct GoldenCheck {
  GoldenRow row;
  bool pass = false;
  bool skipped = false;
  double recomputed = 0.0;
};

namespace detail {

inline double golden_dense_log_norm(double u, int rungs) {
  const Eigen::VectorXd psi = build_state(u, rungs, 0);
  return std::log(psi.squaredNorm());
}

inline double golden_dense_overlap(double u, int rungs) {
  const Eigen::VectorXd a = oracle::ground_state(u, rungs, 0);
  const Eigen::VectorXd b = oracle::ground_state(u, rungs, 1);
  return a.dot(b);
}

inline double golden_entropy(double u, int rungs, std::vector<int> keep) {
  const Eigen::VectorXd psi = oracle::ground_state(u, rungs, 0);
  return von_neumann(oracle::partial_trace(psi, keep, rungs));
}

}  // namespace detail

// Reference values computed from the brute-force oracle. Tolerances cover
// the finite-size gap to the matching thermodynamic-limit expression plus
// numerical headroom; rows without such a gap carry tight tolerances.
inline std::vector<GoldenRow> compute_golden() {
  std::vector<GoldenRow> rows;
  auto add = [&](double u, int rungs, std::string q, double v, double tol) {
    rows.push_back({u, rungs, std::move(q), v, tol});
  };
  for (double u : {0.5, 1.0, 2.0})
    for (int rungs : {4, 8}) {
      add(u, rungs, "log_norm_sq", detail::golden_dense_log_norm(u, rungs),
          1e-9);
      add(u, rungs, "overlap", detail::golden_dense_overlap(u, rungs), 1e-10);
    }
  // entropy and correlator tolerances cover the deterministic finite-size
  // gap between 2N=8 and the thermodynamic limit (largest at u=2, where the
  // subdominant transfer eigenvalue ratio is 3/7)
  for (double u : {0.0, 0.5, 1.0, 2.0})
    add(u, 8, "s_single", detail::golden_entropy(u, 8, {1}), 2e-2);
  for (double u : {0.0, 0.5, 2.0}) {
    add(u, 8, "s_pair_n2", detail::golden_entropy(u, 8, {0, 2}), 2e-2);
    add(u, 8, "s_pair_n3", detail::golden_entropy(u, 8, {0, 3}), 2e-2);
    add(u, 8, "c_spin_n2", oracle::spin_correlation(u, 8, 2), 1e-2);
    add(u, 8, "c_spin_n3", oracle::spin_correlation(u, 8, 3), 1e-2);
  }
  for (double u : {0.5, 1.0, 2.0})
    for (int rungs : {4, 6})
      add(u, rungs, "energy_residual", oracle::energy_residual(u, rungs),
          1e-10);
  add(1.0, 6, "avg_fidelity_d0.1_k2000",
      oracle::average_fidelity(1.0, 0.1, 6, 2000).value, 1e-12);
  for (double u : {1.0, 10.0})
    add(u, 8, "dimer_n2", oracle::dimer_correlation(u, 8, 2), 1e-10);
  return rows;
}

inline void write_golden(std::ostream& os, const std::vector<GoldenRow>& rows) {
  os << "u,rungs,quantity,value,tolerance\n";
  for (const GoldenRow& r : rows)
    os << detail::format_g17(r.u) << ',' << r.rungs << ',' << r.quantity << ','
       << detail::format_g17(r.value) << ',' << detail::format_g17(r.tolerance)
       << '\n';
}

inline std::vector<GoldenRow> read_golden(std::istream& is) {
  std::vector<GoldenRow> rows;
  std::string line;
  if (!std::getline(is, line) || line != "u,rungs,quantity,value,tolerance")
    throw std::runtime_error("golden file: bad or missing header");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    GoldenRow r;
    std::string cell;
    std::getline(ss, cell, ',');
    r.u = std::stod(cell);
    std::getline(ss, cell, ',');
    r.rungs = std::stoi(cell);
    std::getline(ss, r.quantity, ',');
    std::getline(ss, cell, ',');
    r.value = std::stod(cell);
    std::getline(ss, cell, ',');
    r.tolerance = std::stod(cell);
    rows.push_back(std::move(r));
  }
  return rows;
}

// Compares each stored oracle value to the cheap (closed-form / TM) side, or
// re-runs the deterministic oracle where no closed form exists. In quick mode
// only oracle recomputations at 2N <= 4 are executed; closed-form rows always
// run.
inline std::vector<GoldenCheck> verify_golden(const std::vector<GoldenRow>& rows,
                                              bool quick = false) {
  std::vector<GoldenCheck> out;
  for (const GoldenRow& r : rows) {
    GoldenCheck c;
    c.row = r;
    const long long n_cells = r.rungs / 2;
    const bool heavy_oracle = r.rungs > 4;
    if (r.quantity == "log_norm_sq") {
      c.recomputed = log_norm_sq(r.u, n_cells);
    } else if (r.quantity == "overlap") {
      c.recomputed = overlap_closed_form(r.u, n_cells);
    } else if (r.quantity == "s_single") {
      c.recomputed = s_single(r.u);
    } else if (r.quantity == "s_pair_n2") {
      c.recomputed = s_pair(r.u, 2);
    } else if (r.quantity == "s_pair_n3") {
      c.recomputed = s_pair(r.u, 3);
    } else if (r.quantity == "c_spin_n2") {
      c.recomputed = spin_correlation_closed(r.u, 2);
    } else if (r.quantity == "c_spin_n3") {
      c.recomputed = spin_correlation_closed(r.u, 3);
    } else if (r.quantity == "energy_residual") {
      if (quick && heavy_oracle) {
        c.skipped = true;
      } else {
        c.recomputed = oracle::energy_residual(r.u, r.rungs);
      }
    } else if (r.quantity == "avg_fidelity_d0.1_k2000") {
      if (quick && heavy_oracle) {
        c.skipped = true;
      } else {
        c.recomputed = oracle::average_fidelity(r.u, 0.1, r.rungs, 2000).value;
      }
    } else if (r.quantity == "dimer_n2") {
      if (quick && heavy_oracle) {
        c.skipped = true;
      } else {
        c.recomputed = oracle::dimer_correlation(r.u, r.rungs, 2);
      }
    } else {
      c.skipped = false;
      c.pass = false;  // unknown quantity: treated as a mismatch
      out.push_back(std::move(c));
      continue;
    }
    if (!c.skipped) c.pass = std::abs(c.recomputed - r.value) <= r.tolerance;
    else c.pass = true;
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<GoldenRow> load_golden_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("golden file not readable: " + path);
  return read_golden(f);
}

}  // namespace ladder
