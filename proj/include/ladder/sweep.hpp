// Parameter-sweep engine behind the CLI: grid generation, per-quantity
// evaluation and deterministic CSV emission (17 significant digits).
// Column semantics are documented in docs/csv_schema.md.

#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ladder/entanglement.hpp"
#include "ladder/fidelity.hpp"
#include "ladder/transfer.hpp"

namespace ladder {

enum class Quantity {
  kSSingle,
  kSPair,
  kXiE,
  kXiC,
  kCSpin,
  kFidelity,
  kDOfU,
  kChiF,
  kCollapse,
};

enum class Variable { kU, kInvU };

inline Quantity parse_quantity(const std::string& name) {
  if (name == "s_single") return Quantity::kSSingle;
  if (name == "s_pair") return Quantity::kSPair;
  if (name == "xi_e") return Quantity::kXiE;
  if (name == "xi_c") return Quantity::kXiC;
  if (name == "c_spin") return Quantity::kCSpin;
  if (name == "fidelity") return Quantity::kFidelity;
  if (name == "d_of_u") return Quantity::kDOfU;
  if (name == "chi_f") return Quantity::kChiF;
  if (name == "collapse") return Quantity::kCollapse;
  throw std::invalid_argument("unknown quantity: " + name);
}

inline std::string quantity_name(Quantity q) {
  switch (q) {
    case Quantity::kSSingle: return "s_single";
    case Quantity::kSPair: return "s_pair";
    case Quantity::kXiE: return "xi_e";
    case Quantity::kXiC: return "xi_c";
    case Quantity::kCSpin: return "c_spin";
    case Quantity::kFidelity: return "fidelity";
    case Quantity::kDOfU: return "d_of_u";
    case Quantity::kChiF: return "chi_f";
    case Quantity::kCollapse: return "collapse";
  }
  return "?";
}

struct SweepConfig {
  Quantity quantity = Quantity::kSSingle;
  Variable var = Variable::kU;
  double min = -3.0, max = 3.0;
  int points = 2;
  bool log_grid = false;
  long long n_sep = 1000;             // separation for s_pair / c_spin
  std::vector<long long> sizes;       // N list for the fidelity family
  double delta = 1e-3;                // parameter increment for fidelity
  std::uint64_t seed = 0x5EED;        // recorded for reproducibility
};

struct SweepRecord {
  std::string var;          // "u" or "inv_u"
  double x = 0.0;           // grid value
  long long size = -1;      // N, -1 when not applicable
  long long sep = -1;       // n, -1 when not applicable
  double value = std::numeric_limits<double>::quiet_NaN();
  double d1 = std::numeric_limits<double>::quiet_NaN();
  double d2 = std::numeric_limits<double>::quiet_NaN();
};

inline std::vector<double> make_grid(double min, double max, int points,
                                     bool log_grid) {
  if (points < 2) throw std::invalid_argument("grid: points must be >= 2");
  if (!(min < max)) throw std::invalid_argument("grid: need min < max");
  if (log_grid && min <= 0.0)
    throw std::invalid_argument("grid: log grid needs min > 0");
  std::vector<double> g(points);
  if (log_grid) {
    const double l0 = std::log(min), l1 = std::log(max);
    for (int i = 0; i < points; ++i)
      g[i] = std::exp(l0 + (l1 - l0) * i / (points - 1));
  } else {
    for (int i = 0; i < points; ++i)
      g[i] = min + (max - min) * i / (points - 1);
  }
  g.front() = min;
  g.back() = max;
  return g;
}

namespace detail {

inline const char* var_name(Variable v) {
  return v == Variable::kU ? "u" : "inv_u";
}

// One grid point of a non-fidelity quantity; NaN on evaluation failure
// (e.g. the degenerate-overlap point u = 0 of the fidelity family).
inline SweepRecord eval_point(const SweepConfig& cfg, double x) {
  SweepRecord rec;
  rec.var = var_name(cfg.var);
  rec.x = x;
  const bool inv = cfg.var == Variable::kInvU;
  try {
    switch (cfg.quantity) {
      case Quantity::kSSingle:
        if (inv) {
          rec.value = s_single_inv(x);
          rec.d1 = s_single_inv_d1(x);
        } else {
          rec.value = s_single(x);
          rec.d1 = s_single_d1(x);
          rec.d2 = s_single_d2(x);
        }
        break;
      case Quantity::kSPair:
        rec.sep = cfg.n_sep;
        if (inv) {
          rec.value = s_pair_inv(x, cfg.n_sep);
          const double h = 1e-5 * std::max(1.0, std::abs(x));
          rec.d1 = (s_pair_inv(x + h, cfg.n_sep) -
                    s_pair_inv(x - h, cfg.n_sep)) /
                   (2.0 * h);
        } else {
          rec.value = s_pair(x, cfg.n_sep);
          rec.d1 = s_pair_d1(x, cfg.n_sep);
          rec.d2 = s_pair_d2(x, cfg.n_sep);
        }
        break;
      case Quantity::kXiE:
        rec.value = inv ? entanglement_length_closed_inv(x)
                        : entanglement_length_closed(x);
        break;
      case Quantity::kXiC:
        rec.value = inv ? correlation_length_inv(x) : correlation_length(x);
        break;
      case Quantity::kCSpin:
        rec.sep = cfg.n_sep;
        if (inv) {
          if (x == 0.0)
            throw std::domain_error("c_spin: inv_u = 0 not representable");
          rec.value = spin_correlation_closed(1.0 / x, cfg.n_sep);
        } else {
          rec.value = spin_correlation_closed(x, cfg.n_sep);
        }
        break;
      default:
        throw std::logic_error("eval_point: fidelity-family handled apart");
    }
  } catch (const std::exception&) {
    // leave NaNs in place
  }
  return rec;
}

// One (grid point, N) cell of the fidelity family. For fidelity, d1 carries
// ln F; for d_of_u, value is the unnormalized and d1 the normalized variant.
inline SweepRecord eval_fidelity_point(const SweepConfig& cfg, double x,
                                       long long n) {
  SweepRecord rec;
  rec.var = var_name(cfg.var);
  rec.x = x;
  rec.size = n;
  const bool inv = cfg.var == Variable::kInvU;
  try {
    switch (cfg.quantity) {
      case Quantity::kFidelity: {
        const FidelityPoint f = inv
                                    ? fidelity_closed_tilde(x, x + cfg.delta, n)
                                    : fidelity_closed(x, x + cfg.delta, n);
        rec.value = f.value;
        rec.d1 = f.log_value;
        break;
      }
      case Quantity::kDOfU: {
        const Curvature c = inv ? d_tilde(x, n) : d_of_u(x, n);
        rec.value = c.d_unnormalized;
        rec.d1 = c.d_normalized;
        break;
      }
      case Quantity::kChiF:
        if (inv) throw std::domain_error("chi_f: only var=u supported");
        rec.value = chi_f(x, n, cfg.delta);
        break;
      default:
        throw std::logic_error("eval_fidelity_point: wrong family");
    }
  } catch (const std::exception&) {
    // leave NaNs in place
  }
  return rec;
}

}  // namespace detail

// Evaluates the whole grid; rows are emitted in grid order (outer loop x,
// inner loop N for the fidelity family), so output is deterministic.
inline std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
  if (cfg.quantity == Quantity::kCollapse)
    throw std::invalid_argument("run_sweep: use run_collapse for collapse");
  const std::vector<double> grid =
      make_grid(cfg.min, cfg.max, cfg.points, cfg.log_grid);
  const bool fidelity_family = cfg.quantity == Quantity::kFidelity ||
                               cfg.quantity == Quantity::kDOfU ||
                               cfg.quantity == Quantity::kChiF;
  std::vector<long long> sizes = cfg.sizes;
  if (fidelity_family && sizes.empty()) sizes = {1000};
  std::vector<SweepRecord> rows;
  rows.reserve(grid.size() * std::max<size_t>(1, sizes.size()));
  for (double x : grid) {
    if (fidelity_family) {
      for (long long n : sizes)
        rows.push_back(detail::eval_fidelity_point(cfg, x, n));
    } else {
      rows.push_back(detail::eval_point(cfg, x));
    }
  }
  return rows;
}

namespace detail {

inline std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string csv_cell(double v) {
  return std::isnan(v) ? std::string() : format_g17(v);
}

inline std::string csv_cell(long long v) {
  return v < 0 ? std::string() : std::to_string(v);
}

}  // namespace detail

inline void write_csv(std::ostream& os, const std::string& quantity,
                      const std::vector<SweepRecord>& rows) {
  os << "quantity,var,x,N,n,value,d1,d2\n";
  for (const SweepRecord& r : rows) {
    os << quantity << ',' << r.var << ',' << detail::format_g17(r.x) << ','
       << detail::csv_cell(r.size) << ',' << detail::csv_cell(r.sep) << ','
       << detail::csv_cell(r.value) << ',' << detail::csv_cell(r.d1) << ','
       << detail::csv_cell(r.d2) << '\n';
  }
}

// Scaling-collapse table: one row per (N, grid point) with the rescaled
// curvature and the scaling variable N v^2.
inline void write_collapse_csv(std::ostream& os, const CollapseDataset& ds) {
  os << "N,v,d_over_n,scaling_x\n";
  for (const CollapseRow& r : ds.rows) {
    os << r.N << ',' << detail::format_g17(r.v) << ','
       << detail::format_g17(r.d_over_n) << ','
       << detail::format_g17(r.scaling_x) << '\n';
  }
}

}  // namespace ladder
