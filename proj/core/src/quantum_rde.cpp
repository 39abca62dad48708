#include "qrde/quantum_rde.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qrde/errors.hpp"

namespace qrde {

namespace {

struct Phase {
  double k;   // 1 + D_r + D_g
  double ks;  // k sin^2 gamma
  double g1;
  double g2;
};

Phase phase_quantities(const DilemmaParams& params, const EntanglementAngle& gamma) {
  const PhaseThresholds th = thresholds(params);
  const double k = 1.0 + params.d_r() + params.d_g();
  const double s = std::sin(gamma.radians());
  return {k, k * s * s, th.gamma1.value_or(0.0), th.gamma2.value_or(0.0)};
}

[[noreturn]] void out_of_phase(const char* phase, const DilemmaParams& params,
                               const EntanglementAngle& gamma) {
  std::ostringstream msg;
  msg << phase << " phase requires ";
  if (std::string_view(phase) == "transitional") {
    msg << "D_g > D_r > 0 and gamma1 <= gamma <= gamma2";
  } else {
    msg << "D_r > D_g > 0 and gamma2 <= gamma <= gamma1";
  }
  msg << "; got d_g=" << params.d_g() << " d_r=" << params.d_r() << " gamma=" << gamma.radians();
  throw Error(ErrorCode::kOutOfPhase, msg.str());
}

bool within(double x, double lo, double hi) { return x >= lo - kTieEps && x <= hi + kTieEps; }

bool is_transitional(const DilemmaParams& params, const EntanglementAngle& gamma) {
  if (!(params.d_g() > params.d_r() && params.d_r() > 0.0)) return false;
  const Phase ph = phase_quantities(params, gamma);
  return within(gamma.radians(), ph.g1, ph.g2);
}

bool is_coexistence(const DilemmaParams& params, const EntanglementAngle& gamma) {
  if (!(params.d_r() > params.d_g() && params.d_g() > 0.0)) return false;
  const Phase ph = phase_quantities(params, gamma);
  return within(gamma.radians(), ph.g2, ph.g1);
}

Phase require_transitional(const DilemmaParams& params, const EntanglementAngle& gamma) {
  if (!is_transitional(params, gamma)) out_of_phase("transitional", params, gamma);
  return phase_quantities(params, gamma);
}

Phase require_coexistence(const DilemmaParams& params, const EntanglementAngle& gamma) {
  if (!is_coexistence(params, gamma)) out_of_phase("coexistence", params, gamma);
  return phase_quantities(params, gamma);
}

// Maximum loss at a pure profile when the opponent deviates within [0, 1].
SituRisk situ_at(const DilemmaParams& params, const EntanglementAngle& gamma, double p0,
                 double q0) {
  const QuantumStrategyParam sp(p0);
  const QuantumStrategyParam sq(q0);
  const PayoffPair here = expected_payoff_quantum(params, sp, sq, gamma);
  SituRisk risk;
  for (double dev : {0.0, 1.0}) {
    const QuantumStrategyParam d(dev);
    risk.risk_a = std::max(risk.risk_a, here.a - expected_payoff_quantum(params, sp, d, gamma).a);
    risk.risk_b = std::max(risk.risk_b, here.b - expected_payoff_quantum(params, d, sq, gamma).b);
  }
  return risk;
}

// Extended precision: the quotient is ill-conditioned as D_g approaches D_r.
double transitional_p_star(const DilemmaParams& params, const EntanglementAngle& gamma) {
  const long double g = params.d_g();
  const long double r = params.d_r();
  const long double s = std::sin(static_cast<long double>(gamma.radians()));
  const long double p = ((1.0L + g + r) * s * s - r) / (g - r);
  return std::clamp(static_cast<double>(p), 0.0, 1.0);
}

}  // namespace

TransitionalSituRisks situ_risk_transitional(const DilemmaParams& params,
                                             const EntanglementAngle& gamma) {
  require_transitional(params, gamma);
  return {situ_at(params, gamma, 0.0, 1.0), situ_at(params, gamma, 1.0, 0.0)};
}

CoexistenceSituRisks situ_risk_coexistence(const DilemmaParams& params,
                                           const EntanglementAngle& gamma) {
  require_coexistence(params, gamma);
  return {situ_at(params, gamma, 0.0, 0.0), situ_at(params, gamma, 1.0, 1.0)};
}

QuantumDeviationLosses deviation_losses_quantum(const DilemmaParams& params,
                                                const EntanglementAngle& gamma,
                                                MultiNePhase phase) {
  const double g = params.d_g();
  const double r = params.d_r();
  if (phase == MultiNePhase::kTransitional) {
    const Phase ph = require_transitional(params, gamma);
    const double defector_loss = g - ph.ks;
    const double cooperator_loss = ph.ks - r;
    return {make_loss_pair(defector_loss, cooperator_loss),
            make_loss_pair(cooperator_loss, defector_loss)};
  }
  const Phase ph = require_coexistence(params, gamma);
  return {make_loss_pair(ph.ks - g, ph.ks - g), make_loss_pair(r - ph.ks, r - ph.ks)};
}

RdeOutcome rde_transitional(const DilemmaParams& params, const EntanglementAngle& gamma) {
  require_transitional(params, gamma);
  const double p = transitional_p_star(params, gamma);
  const QuantumStrategyParam sp(p);
  return {RdeKind::kMixed, StrategyProfile(p, p),
          expected_payoff_quantum(params, sp, sp, gamma)};
}

RdeOutcome rde_coexistence(const DilemmaParams& params, const EntanglementAngle& gamma) {
  require_coexistence(params, gamma);
  const double star = *thresholds(params).gamma_star;
  const double x = gamma.radians();
  if (std::abs(x - star) <= kTieEps) {
    const QuantumStrategyParam half(0.5);
    return {RdeKind::kMixed, StrategyProfile(0.5, 0.5),
            expected_payoff_quantum(params, half, half, gamma)};
  }
  if (x < star) return {RdeKind::kPure, StrategyProfile(0.0, 0.0), {0.0, 0.0}};
  return {RdeKind::kPure, StrategyProfile(1.0, 1.0), {1.0, 1.0}};
}

SensitivityReport sensitivity_partials(const DilemmaParams& params,
                                       const EntanglementAngle& gamma) {
  const Phase ph = require_transitional(params, gamma);
  const double g = params.d_g();
  const double r = params.d_r();
  const double x = gamma.radians();
  const double s = std::sin(x);
  const double c = std::cos(x);
  const double gap = g - r;

  SensitivityReport out;
  out.p_star = transitional_p_star(params, gamma);
  out.partial_dg = (r - (1.0 + 2.0 * r) * s * s) / (gap * gap);
  out.partial_dr = (-g + (1.0 + 2.0 * g) * s * s) / (gap * gap);
  out.partial_gamma = 2.0 * ph.k * s * c / gap;
  return out;
}

SensitivityReport sensitivity_indices(const DilemmaParams& params,
                                      const EntanglementAngle& gamma) {
  SensitivityReport out = sensitivity_partials(params, gamma);
  if (out.p_star <= kTieEps) {
    throw Error(ErrorCode::kDegenerateBase, "p* vanishes at gamma1; elasticities undefined");
  }
  out.index_dg = out.partial_dg * params.d_g() / out.p_star;
  out.index_dr = out.partial_dr * params.d_r() / out.p_star;
  out.index_gamma = out.partial_gamma * gamma.radians() / out.p_star;
  out.semi_elasticity_gamma = out.partial_gamma / out.p_star;
  return out;
}

CriticalAngles sensitivity_critical_angles(const DilemmaParams& params) {
  const double g = params.d_g();
  const double r = params.d_r();
  if (!(g > 0.0 && r > 0.0)) {
    throw Error(ErrorCode::kOutOfRegime, "critical angles need D_g > 0 and D_r > 0");
  }
  return {std::asin(std::sqrt(r / (1.0 + 2.0 * r))), std::asin(std::sqrt(g / (1.0 + 2.0 * g)))};
}

PayoffPair rde_expected_payoff(const DilemmaParams& params, const EntanglementAngle& gamma) {
  require_transitional(params, gamma);
  const double g = params.d_g();
  const double r = params.d_r();
  const double p = transitional_p_star(params, gamma);
  const double v = (r - g) * p * p + (1.0 - r + g) * p;
  return {v, v};
}

double rde_group_benefit(const DilemmaParams& params, const EntanglementAngle& gamma) {
  const PayoffPair v = rde_expected_payoff(params, gamma);
  return v.a + v.b;
}

std::optional<double> group_benefit_threshold(const DilemmaParams& params) {
  const double g = params.d_g();
  const double r = params.d_r();
  if (!(g > r && r > 0.0)) {
    throw Error(ErrorCode::kOutOfPhase, "group-benefit threshold needs D_g > D_r > 0");
  }
  const PhaseThresholds th = thresholds(params);
  const double k = 1.0 + r + g;
  const double rhs = std::sqrt(2.0 * (r + 2.0 * r * g + g)) / k;
  if (rhs > 1.0) return std::nullopt;

  // gamma2 < pi/4 whenever D_g < 1 + D_r, so sin 2 gamma is increasing on
  // the whole bracket.
  auto excess = [&](double x) { return std::sin(2.0 * x) - rhs; };
  if (excess(*th.gamma1) > 0.0) return *th.gamma1;
  if (excess(*th.gamma2) <= 0.0) return std::nullopt;
  return 0.5 * std::asin(rhs);
}

std::optional<double> asymmetric_ne_group_benefit_crossing(const DilemmaParams& params) {
  const double g = params.d_g();
  const double r = params.d_r();
  if (!(g > r && r > 0.0)) {
    throw Error(ErrorCode::kOutOfPhase, "asymmetric-NE crossing needs D_g > D_r > 0");
  }
  // 2[(r - g) p^2 + (1 + g - r) p] = 1 + g - r at the lower root
  //   p = (1 + d) / ((1 + d) + sqrt(1 - d^2)),  d = g - r.
  const double d = g - r;
  const double p = (1.0 + d) / ((1.0 + d) + std::sqrt((1.0 - d) * (1.0 + d)));
  if (p > 1.0) return std::nullopt;
  const double s2 = (r + d * p) / (1.0 + r + g);
  return std::asin(std::sqrt(s2));
}

PayoffPair unilateral_deviation_payoffs(const DilemmaParams& params,
                                        const EntanglementAngle& gamma, FixedStrategy fixed_a,
                                        const QuantumStrategyParam& qq) {
  const double g = params.d_g();
  const double r = params.d_r();
  const double s = std::sin(gamma.radians());
  const double ks = (1.0 + r + g) * s * s;
  const double q = qq.value();
  switch (fixed_a) {
    case FixedStrategy::kDefect:
      return {(1.0 + g - ks) * q, (-r + ks) * q};
    case FixedStrategy::kQuantumCooperate:
      return {(1.0 + r - ks) * q - r + ks, (-g + ks) * q + 1.0 + g - ks};
    case FixedStrategy::kHalf:
      // At gamma_star these reduce to q + (D_g - D_r)/4 and (2 + D_g - D_r)/4.
      return {(1.0 + (r + g) / 2.0 - ks) * q + (ks - r) / 2.0,
              (ks - (g + r) / 2.0) * q + (1.0 + g - ks) / 2.0};
  }
  return {};
}

QuantumRdeReport select_rde_quantum(const DilemmaParams& params, const EntanglementAngle& gamma) {
  const QuantumNeReport ne = classify_quantum_ne(params, gamma);
  if (is_transitional(params, gamma)) return {ne.phase, rde_transitional(params, gamma)};
  if (is_coexistence(params, gamma)) return {ne.phase, rde_coexistence(params, gamma)};
  if (ne.equilibria.size() == 1) {
    const auto& only = ne.equilibria.front();
    return {ne.phase, {RdeKind::kPure, only.profile, only.payoffs}};
  }
  return {ne.phase, select_rde_symmetric(pure_quantum_matrix(params, gamma).matrix)};
}

}  // namespace qrde
