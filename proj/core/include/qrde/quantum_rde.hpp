#pragma once

// Equilibrium selection in the quantum prisoner's dilemma (D_g, D_r > 0).
//
// Two phases have two pure quantum NEs:
//   transitional  D_g > D_r, gamma1 <= gamma <= gamma2:  D^Q^ and Q^D^
//   coexistence   D_r > D_g, gamma2 <= gamma <= gamma1:  D^D^ and Q^Q^
// Inputs within kTieEps of a phase edge count as inside; anything else throws
// Error(kOutOfPhase). With K = 1 + D_r + D_g and s = sin^2 gamma, the
// transitional selection is the mixed profile
//   p* = q* = (K s - D_r) / (D_g - D_r).

#include <optional>

#include "qrde/ewl_engine.hpp"
#include "qrde/risk_dominance.hpp"

namespace qrde {

// Largest loss a player at an NE can suffer when the opponent moves anywhere
// in the one-parameter family.
struct SituRisk {
  double risk_a = 0.0;
  double risk_b = 0.0;
};

struct TransitionalSituRisks {
  SituRisk dq;  // A plays D^, B plays Q^
  SituRisk qd;
};

struct CoexistenceSituRisks {
  SituRisk dd;
  SituRisk qq;
};

enum class MultiNePhase { kTransitional, kCoexistence };

// transitional: first = D^Q^, second = Q^D^
// coexistence:  first = Q^Q^, second = D^D^
struct QuantumDeviationLosses {
  DeviationLossPair first;
  DeviationLossPair second;
};

struct SensitivityReport {
  double p_star = 0.0;
  double partial_dg = 0.0;
  double partial_dr = 0.0;
  double partial_gamma = 0.0;
  // Elasticities S_x = (dp*/dx) x / p*; zero until sensitivity_indices fills them.
  double index_dg = 0.0;
  double index_dr = 0.0;
  double index_gamma = 0.0;
  // (dp*/dgamma) / p*
  double semi_elasticity_gamma = 0.0;
};

// Where dp*/dD_g and dp*/dD_r change sign.
struct CriticalAngles {
  double gamma_g = 0.0;  // sin^2 = D_r / (1 + 2 D_r)
  double gamma_r = 0.0;  // sin^2 = D_g / (1 + 2 D_g)
};

enum class FixedStrategy { kDefect, kQuantumCooperate, kHalf };

struct QuantumRdeReport {
  QuantumPhase phase;
  RdeOutcome outcome;
};

// Maxima over the deviating parameter are taken at the endpoints of [0, 1]
// since payoffs are affine in it.
TransitionalSituRisks situ_risk_transitional(const DilemmaParams& params,
                                             const EntanglementAngle& gamma);
CoexistenceSituRisks situ_risk_coexistence(const DilemmaParams& params,
                                           const EntanglementAngle& gamma);

QuantumDeviationLosses deviation_losses_quantum(const DilemmaParams& params,
                                                const EntanglementAngle& gamma,
                                                MultiNePhase phase);

RdeOutcome rde_transitional(const DilemmaParams& params, const EntanglementAngle& gamma);

// D^D^ below gamma_star, U(1/2)(x)U(1/2) at gamma_star (within kTieEps),
// Q^Q^ above.
RdeOutcome rde_coexistence(const DilemmaParams& params, const EntanglementAngle& gamma);

// p* and its three partial derivatives; index fields are left zero.
SensitivityReport sensitivity_partials(const DilemmaParams& params,
                                       const EntanglementAngle& gamma);

// Partials plus elasticities. Throws kDegenerateBase when p* <= kTieEps.
SensitivityReport sensitivity_indices(const DilemmaParams& params,
                                      const EntanglementAngle& gamma);

// Throws kOutOfRegime unless D_g > 0 and D_r > 0.
CriticalAngles sensitivity_critical_angles(const DilemmaParams& params);

// Common payoff at the transitional RDE: (D_r - D_g) p*^2 + (1 - D_r + D_g) p*.
PayoffPair rde_expected_payoff(const DilemmaParams& params, const EntanglementAngle& gamma);

// Sum of both players' payoffs at the transitional RDE.
double rde_group_benefit(const DilemmaParams& params, const EntanglementAngle& gamma);

// Smallest gamma in [gamma1, gamma2] with
//   sin 2 gamma > sqrt(2 (D_r + 2 D_r D_g + D_g)) / (1 + D_r + D_g).
// That inequality is equivalent to rde_group_benefit > 1. Empty if the
// interval never satisfies it. Throws kOutOfPhase unless D_g > D_r > 0.
std::optional<double> group_benefit_threshold(const DilemmaParams& params);

// Smallest gamma in [gamma1, gamma2] at which rde_group_benefit reaches the
// group benefit 1 + D_g - D_r of either asymmetric pure NE.
std::optional<double> asymmetric_ne_group_benefit_crossing(const DilemmaParams& params);

// Payoffs when A holds D^, Q^ or U(1/2) and B plays U(q).
PayoffPair unilateral_deviation_payoffs(const DilemmaParams& params,
                                        const EntanglementAngle& gamma, FixedStrategy fixed_a,
                                        const QuantumStrategyParam& q);

// Selected equilibrium at any gamma in the PD quadrant: the phase-specific
// selection inside the two multi-NE phases, the unique pure NE elsewhere.
// Throws kOutOfRegime outside D_g > 0, D_r > 0, and kDegenerateDenominator
// at D_g == D_r, gamma == gamma1 where every profile ties.
QuantumRdeReport select_rde_quantum(const DilemmaParams& params, const EntanglementAngle& gamma);

}  // namespace qrde
