#include "qrde/risk_dominance.hpp"

#include <cmath>
#include <string>

#include "qrde/errors.hpp"

namespace qrde {

namespace {

void require_ne(const PayoffMatrix2x2& m, int row, int col) {
  if (!m.is_pure_ne(row, col, kNeMembershipTol)) {
    throw Error(ErrorCode::kNotAnEquilibrium,
                "cell " + m.cell_label(row, col) + " is not a pure Nash equilibrium");
  }
}

double mixing_weight(double numerator, double other, double tie_eps) {
  const double denom = numerator + other;
  if (std::abs(denom) <= tie_eps) {
    throw Error(ErrorCode::kDegenerateDenominator,
                "deviation losses sum to zero; tie-break profile undefined");
  }
  return numerator / denom;
}

double clamp_unit(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

RdeOutcome pure_outcome(const PayoffMatrix2x2& m, int row, int col) {
  return {RdeKind::kPure, StrategyProfile(row == 0 ? 1.0 : 0.0, col == 0 ? 1.0 : 0.0),
          m.at(row, col)};
}

RdeOutcome mixed_outcome(const PayoffMatrix2x2& m, double p, double q) {
  const StrategyProfile profile(clamp_unit(p), clamp_unit(q));
  return {RdeKind::kMixed, profile, m.expected(profile.p(), profile.q())};
}

}  // namespace

DeviationLossPair make_loss_pair(double loss_a, double loss_b) {
  return {loss_a, loss_b, loss_a * loss_b};
}

SymmetricLosses deviation_losses_symmetric(const PayoffMatrix2x2& m) {
  require_ne(m, 0, 0);
  require_ne(m, 1, 1);
  return {
      make_loss_pair(m.at(0, 0).a - m.at(1, 0).a, m.at(0, 0).b - m.at(0, 1).b),
      make_loss_pair(m.at(1, 1).a - m.at(0, 1).a, m.at(1, 1).b - m.at(1, 0).b),
  };
}

AsymmetricLosses deviation_losses_asymmetric(const PayoffMatrix2x2& m) {
  require_ne(m, 0, 1);
  require_ne(m, 1, 0);
  return {
      make_loss_pair(m.at(0, 1).a - m.at(1, 1).a, m.at(0, 1).b - m.at(0, 0).b),
      make_loss_pair(m.at(1, 0).a - m.at(0, 0).a, m.at(1, 0).b - m.at(1, 1).b),
  };
}

RdeOutcome select_rde_symmetric(const PayoffMatrix2x2& m, double tie_eps) {
  const SymmetricLosses l = deviation_losses_symmetric(m);
  const double diff = l.cc.product - l.dd.product;
  if (diff > tie_eps) return pure_outcome(m, 0, 0);
  if (diff < -tie_eps) return pure_outcome(m, 1, 1);
  const double p = mixing_weight(l.dd.loss_b, l.cc.loss_b, tie_eps);
  const double q = mixing_weight(l.dd.loss_a, l.cc.loss_a, tie_eps);
  return mixed_outcome(m, p, q);
}

RdeOutcome select_rde_asymmetric(const PayoffMatrix2x2& m, double tie_eps) {
  const AsymmetricLosses l = deviation_losses_asymmetric(m);
  const double diff = l.cd.product - l.dc.product;
  if (diff > tie_eps) return pure_outcome(m, 0, 1);
  if (diff < -tie_eps) return pure_outcome(m, 1, 0);
  const double p = mixing_weight(l.dc.loss_b, l.cd.loss_b, tie_eps);
  const double q = mixing_weight(l.cd.loss_a, l.dc.loss_a, tie_eps);
  return mixed_outcome(m, p, q);
}

RdeOutcome rde_chicken(const DilemmaParams& params) {
  if (classify_dilemma(params).kind != DilemmaKind::kChicken) {
    throw Error(ErrorCode::kWrongClass, "closed-form chicken selection needs D_g > 0, D_r < 0");
  }
  const double risk = -params.d_r();
  const double p = mixing_weight(risk, params.d_g(), kTieEps);
  return mixed_outcome(build_dilemma_matrix(params), p, p);
}

RdeOutcome rde_staghunt(const DilemmaParams& params) {
  if (classify_dilemma(params).kind != DilemmaKind::kStagHunt) {
    throw Error(ErrorCode::kWrongClass, "closed-form stag-hunt selection needs D_g < 0, D_r > 0");
  }
  const double g = params.d_g();
  const double r = params.d_r();
  const PayoffMatrix2x2 m = build_dilemma_matrix(params);
  const double diff = g * g - r * r;
  if (diff > kTieEps) return pure_outcome(m, 0, 0);
  if (diff < -kTieEps) return pure_outcome(m, 1, 1);
  const double p = mixing_weight(r, -g, kTieEps);
  return mixed_outcome(m, p, p);
}

RdeOutcome select_rde_classical(const DilemmaParams& params) {
  switch (classify_dilemma(params).kind) {
    case DilemmaKind::kChicken: return rde_chicken(params);
    case DilemmaKind::kStagHunt: return rde_staghunt(params);
    default: break;
  }
  const PayoffMatrix2x2 m = build_dilemma_matrix(params);
  const auto ne = enumerate_pure_ne(m);
  if (ne.size() == 1) {
    return {RdeKind::kPure, ne.front().profile, ne.front().payoffs};
  }
  return select_rde_symmetric(m);
}

}  // namespace qrde
