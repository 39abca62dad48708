#include "qrde/game_core.hpp"

#include <cmath>
#include <sstream>

#include "qrde/errors.hpp"

namespace qrde {

namespace {

bool in_unit_interval(double x) { return x >= 0.0 && x <= 1.0; }

int pure_index(double prob) { return prob == 1.0 ? 0 : 1; }

}  // namespace

DilemmaParams::DilemmaParams(double d_g, double d_r) : d_g_(d_g), d_r_(d_r) {
  if (!(d_g >= -1.0 && d_g <= 1.0) || !(d_r >= -1.0 && d_r <= 1.0)) {
    std::ostringstream msg;
    msg << "dilemma strengths must lie in [-1, 1], got d_g=" << d_g << " d_r=" << d_r;
    throw Error(ErrorCode::kInvalidArgument, msg.str());
  }
}

PayoffMatrix2x2::PayoffMatrix2x2(const Entries& entries, std::array<std::string, 2> action_labels)
    : entries_(entries), labels_(std::move(action_labels)) {
  for (const auto& row : entries_) {
    for (const auto& cell : row) {
      if (!std::isfinite(cell.a) || !std::isfinite(cell.b)) {
        throw Error(ErrorCode::kInvalidArgument, "payoff entries must be finite");
      }
    }
  }
}

PayoffPair PayoffMatrix2x2::expected(double p, double q) const {
  const std::array<double, 2> wa{p, 1.0 - p};
  const std::array<double, 2> wb{q, 1.0 - q};
  PayoffPair out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double w = wa[i] * wb[j];
      out.a += w * entries_[i][j].a;
      out.b += w * entries_[i][j].b;
    }
  }
  return out;
}

std::string PayoffMatrix2x2::cell_label(int row, int col) const {
  return labels_.at(row) + labels_.at(col);
}

bool PayoffMatrix2x2::is_best_response_a(int row, int col, double tol) const {
  return at(row, col).a + tol >= at(1 - row, col).a;
}

bool PayoffMatrix2x2::is_best_response_b(int row, int col, double tol) const {
  return at(row, col).b + tol >= at(row, 1 - col).b;
}

StrategyProfile::StrategyProfile(double p, double q) : p_(p), q_(q) {
  if (!in_unit_interval(p) || !in_unit_interval(q)) {
    std::ostringstream msg;
    msg << "probabilities must lie in [0, 1], got p=" << p << " q=" << q;
    throw Error(ErrorCode::kInvalidArgument, msg.str());
  }
}

std::string_view to_string(DilemmaKind kind) {
  switch (kind) {
    case DilemmaKind::kPrisonersDilemma: return "PD";
    case DilemmaKind::kChicken: return "CH";
    case DilemmaKind::kStagHunt: return "SH";
    case DilemmaKind::kTrivial: return "TRIVIAL";
  }
  return "TRIVIAL";
}

PayoffMatrix2x2 build_dilemma_matrix(const DilemmaParams& params) {
  const double g = params.d_g();
  const double r = params.d_r();
  return PayoffMatrix2x2({{
      {{{1.0, 1.0}, {-r, 1.0 + g}}},
      {{{1.0 + g, -r}, {0.0, 0.0}}},
  }});
}

DilemmaClass classify_dilemma(const DilemmaParams& params) {
  const double g = params.d_g();
  const double r = params.d_r();
  const bool boundary = g == 0.0 || r == 0.0;

  // A zero strength reads as negative unless that leaves no dilemma, in
  // which case the zero components read as positive.
  bool g_pos = g > 0.0;
  bool r_pos = r > 0.0;
  if (boundary && !g_pos && !r_pos) {
    g_pos = g >= 0.0;
    r_pos = r >= 0.0;
  }

  DilemmaKind kind;
  if (g_pos && r_pos) {
    kind = DilemmaKind::kPrisonersDilemma;
  } else if (g_pos) {
    kind = DilemmaKind::kChicken;
  } else if (r_pos) {
    kind = DilemmaKind::kStagHunt;
  } else {
    kind = DilemmaKind::kTrivial;
  }
  return {kind, boundary};
}

PayoffPair expected_payoff_classical(const DilemmaParams& params, const StrategyProfile& profile) {
  const double g = params.d_g();
  const double r = params.d_r();
  const double p = profile.p();
  const double q = profile.q();
  return {(r - g) * p * q - r * p + (1.0 + g) * q,
          (r - g) * p * q - r * q + (1.0 + g) * p};
}

std::vector<NashEquilibriumRecord> enumerate_pure_ne(const PayoffMatrix2x2& matrix, double tol) {
  std::vector<NashEquilibriumRecord> out;
  for (int row = 0; row < 2; ++row) {
    for (int col = 0; col < 2; ++col) {
      if (matrix.is_pure_ne(row, col, tol)) {
        out.push_back({StrategyProfile(row == 0 ? 1.0 : 0.0, col == 0 ? 1.0 : 0.0),
                       matrix.at(row, col), NeKind::kPure});
      }
    }
  }
  return out;
}

bool verify_mixed_ne(const DilemmaParams& params, const StrategyProfile& profile, double tol) {
  const PayoffPair here = expected_payoff_classical(params, profile);
  for (double dev : {0.0, 1.0}) {
    if (expected_payoff_classical(params, StrategyProfile(dev, profile.q())).a > here.a + tol) {
      return false;
    }
    if (expected_payoff_classical(params, StrategyProfile(profile.p(), dev)).b > here.b + tol) {
      return false;
    }
  }
  return true;
}

std::string profile_label(const PayoffMatrix2x2& matrix, const StrategyProfile& profile) {
  if (!profile.is_pure()) return "mixed";
  return matrix.cell_label(pure_index(profile.p()), pure_index(profile.q()));
}

}  // namespace qrde
