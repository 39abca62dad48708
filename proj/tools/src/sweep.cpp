#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "qrde/errors.hpp"
#include "qrde/ewl_engine.hpp"
#include "qrde/quantum_rde.hpp"
#include "qrde/risk_dominance.hpp"
#include "qrde_cli/cli.hpp"

namespace qrde::cli {

namespace {

std::string join_labels(const PayoffMatrix2x2& m, const std::vector<NashEquilibriumRecord>& ne) {
  std::string out;
  for (const auto& rec : ne) {
    if (!out.empty()) out += ';';
    out += profile_label(m, rec.profile);
  }
  return out;
}

bool in_pd_quadrant(const DilemmaParams& params) {
  return params.d_g() > 0.0 && params.d_r() > 0.0;
}

// Selection on an arbitrary quantum matrix outside the PD quadrant.
std::optional<RdeOutcome> select_generic(const PayoffMatrix2x2& m) {
  const auto ne = enumerate_pure_ne(m, kNeMembershipTol);
  if (ne.size() == 1) return RdeOutcome{RdeKind::kPure, ne[0].profile, ne[0].payoffs};
  if (ne.size() != 2) return std::nullopt;
  const bool diagonal = ne[0].profile.p() == ne[0].profile.q();
  return diagonal ? select_rde_symmetric(m) : select_rde_asymmetric(m);
}

void add_optional(std::vector<Cell>& row, const std::optional<double>& v) {
  row.push_back(v ? Cell::num(*v) : Cell::empty());
}

std::vector<Cell> evaluate_point(const SweepConfig& config, double dg, double dr, double gm) {
  const DilemmaParams params(dg, dr);
  const EntanglementAngle gamma(gm);
  const QuantumPayoffMatrix qm = pure_quantum_matrix(params, gamma);

  std::vector<Cell> row{Cell::num(dg), Cell::num(dr), Cell::num(gm)};
  for (Quantity q : config.quantities) {
    switch (q) {
      case Quantity::kClass: {
        const DilemmaClass cls = classify_dilemma(params);
        row.push_back(Cell::str(std::string(to_string(cls.kind))));
        row.push_back(Cell::str(cls.boundary ? "true" : "false"));
        break;
      }
      case Quantity::kNe: {
        if (in_pd_quadrant(params)) {
          const QuantumNeReport rep = classify_quantum_ne(params, gamma);
          row.push_back(Cell::str(std::string(to_string(rep.phase))));
          row.push_back(Cell::str(join_labels(qm.matrix, rep.equilibria)));
        } else {
          row.push_back(Cell::empty());
          row.push_back(Cell::str(join_labels(qm.matrix, enumerate_pure_ne(qm.matrix, kNeMembershipTol))));
        }
        break;
      }
      case Quantity::kRde: {
        std::optional<RdeOutcome> sel;
        try {
          sel = in_pd_quadrant(params) ? select_rde_quantum(params, gamma).outcome
                                       : select_generic(qm.matrix);
        } catch (const Error&) {
          sel.reset();
        }
        if (sel) {
          row.push_back(Cell::str(sel->kind == RdeKind::kPure ? "pure" : "mixed"));
          row.push_back(Cell::str(profile_label(qm.matrix, sel->profile)));
          row.push_back(Cell::num(sel->profile.p()));
          row.push_back(Cell::num(sel->profile.q()));
          row.push_back(Cell::num(sel->payoffs.a));
          row.push_back(Cell::num(sel->payoffs.b));
        } else {
          row.push_back(Cell::str("none"));
          row.insert(row.end(), 5, Cell::empty());
        }
        break;
      }
      case Quantity::kPayoffs:
        row.push_back(Cell::num(qm.pi_q));
        row.push_back(Cell::num(qm.pi_d));
        break;
      case Quantity::kSensitivity: {
        std::optional<SensitivityReport> rep;
        bool indices = false;
        try {
          rep = sensitivity_indices(params, gamma);
          indices = true;
        } catch (const Error& e) {
          if (e.code() == ErrorCode::kDegenerateBase) rep = sensitivity_partials(params, gamma);
        }
        if (rep) {
          row.push_back(Cell::num(rep->p_star));
          row.push_back(Cell::num(rep->partial_dg));
          row.push_back(Cell::num(rep->partial_dr));
          row.push_back(Cell::num(rep->partial_gamma));
          if (indices) {
            row.push_back(Cell::num(rep->index_dg));
            row.push_back(Cell::num(rep->index_dr));
            row.push_back(Cell::num(rep->index_gamma));
            row.push_back(Cell::num(rep->semi_elasticity_gamma));
          } else {
            row.insert(row.end(), 4, Cell::empty());
          }
        } else {
          row.insert(row.end(), 8, Cell::empty());
        }
        break;
      }
      case Quantity::kThresholds: {
        const PhaseThresholds th = thresholds(params);
        add_optional(row, th.gamma1);
        add_optional(row, th.gamma2);
        add_optional(row, th.gamma_star);
        break;
      }
    }
  }
  return row;
}

std::vector<std::string> columns_for(const SweepConfig& config) {
  std::vector<std::string> cols{"d_g", "d_r", "gamma"};
  for (Quantity q : config.quantities) {
    switch (q) {
      case Quantity::kClass: cols.insert(cols.end(), {"class", "boundary"}); break;
      case Quantity::kNe: cols.insert(cols.end(), {"phase", "ne"}); break;
      case Quantity::kRde:
        cols.insert(cols.end(),
                    {"rde_kind", "rde_profile", "rde_p", "rde_q", "rde_payoff_a", "rde_payoff_b"});
        break;
      case Quantity::kPayoffs: cols.insert(cols.end(), {"pi_q", "pi_d"}); break;
      case Quantity::kSensitivity:
        cols.insert(cols.end(), {"p_star", "dp_ddg", "dp_ddr", "dp_dgamma", "s_dg", "s_dr",
                                 "s_gamma", "semi_gamma"});
        break;
      case Quantity::kThresholds:
        cols.insert(cols.end(), {"gamma1", "gamma2", "gamma_star"});
        break;
    }
  }
  return cols;
}

void check_range(const Range& r, double lo, double hi, const char* name) {
  if (r.steps < 1) {
    throw Error(ErrorCode::kInvalidArgument, std::string(name) + " range needs steps >= 1");
  }
  for (double v : {r.start, r.stop}) {
    if (!(v >= lo && v <= hi)) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(name) + " range leaves its domain [" + format_sig12(lo) + ", " +
                      format_sig12(hi) + "]");
    }
  }
}

}  // namespace

void validate(const SweepConfig& config) {
  check_range(config.dg_range, -1.0, 1.0, "d_g");
  check_range(config.dr_range, -1.0, 1.0, "d_r");
  check_range(config.gamma_range, 0.0, EntanglementAngle::kMax, "gamma");
  if (config.quantities.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "at least one quantity is required");
  }
}

ReportTable sweep(const SweepConfig& config) {
  validate(config);
  SweepConfig cfg = config;
  std::sort(cfg.quantities.begin(), cfg.quantities.end());
  cfg.quantities.erase(std::unique(cfg.quantities.begin(), cfg.quantities.end()),
                       cfg.quantities.end());

  struct Point {
    double dg, dr, gm;
  };
  std::vector<Point> points;
  for (double dg : cfg.dg_range.values()) {
    for (double dr : cfg.dr_range.values()) {
      for (double gm : cfg.gamma_range.values()) points.push_back({dg, dr, gm});
    }
  }

  ReportTable table{columns_for(cfg), std::vector<std::vector<Cell>>(points.size())};
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < points.size(); i = next++) {
        table.rows[i] = evaluate_point(cfg, points[i].dg, points[i].dr, points[i].gm);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = points.size();
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t n_threads = std::min<std::size_t>(hw, std::max<std::size_t>(1, points.size() / 64));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
  return table;
}

}  // namespace qrde::cli
