#pragma once

// Eisert-Wilkens-Lewenstein quantization of the dilemma with the
// one-parameter strategy family
//
//   U(t) = [[ i sqrt(t),      sqrt(1 - t) ],
//           [ -sqrt(1 - t),  -i sqrt(t)   ]],   0 <= t <= 1,
//
// where U(1) = Q^ (quantum-cooperate) and U(0) = D^ (defect). The shared
// state starts at J|CC>, each player applies U, and J^dagger is applied
// before measurement. Basis order is (CC, CD, DC, DD) throughout.
//
// Two independent routes are provided: dense 4x4 complex arithmetic
// (initial_state / entangling_gate / final_state) and the closed-form outcome
// distribution and payoffs. Tests hold them against each other.

#include <Eigen/Core>
#include <complex>
#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

#include "qrde/game_core.hpp"

namespace qrde {

// Entanglement measure in radians, 0 (separable) to pi/2 (maximal).
class EntanglementAngle {
 public:
  static constexpr double kMax = std::numbers::pi / 2.0;

  explicit EntanglementAngle(double radians);
  double radians() const noexcept { return radians_; }

 private:
  double radians_;
};

// Weight on Q^ in the one-parameter family.
class QuantumStrategyParam {
 public:
  explicit QuantumStrategyParam(double t);
  double value() const noexcept { return t_; }

 private:
  double t_;
};

using Unitary2 = Eigen::Matrix2cd;
using Unitary4 = Eigen::Matrix4cd;
using StateVector4 = Eigen::Vector4cd;

enum class GateConvention {
  // J = cos(g/2) I(x)I - i sin(g/2) sy(x)sy  ==  exp(i g D^(x)D^ / 2)
  kSigmaY,
  // cos(g/2) I(x)I - i sin(g/2) sx(x)sx. Wrong for this strategy family;
  // exists only as a negative control for the oracle check.
  kSigmaX,
};

struct JointDistribution {
  double eps1 = 0.0;  // CC
  double eps2 = 0.0;  // CD
  double eps3 = 0.0;  // DC
  double eps4 = 0.0;  // DD

  double sum() const noexcept { return eps1 + eps2 + eps3 + eps4; }
};

// Table-style pure-strategy matrix with labels Q/D:
//   (1,1)          (pi_q, pi_d)
//   (pi_d, pi_q)   (0,0)
// pi_q = -D_r + (1 + D_r + D_g) sin^2 g,  pi_d = 1 + D_g - (1 + D_r + D_g) sin^2 g.
struct QuantumPayoffMatrix {
  PayoffMatrix2x2 matrix;
  double pi_q;
  double pi_d;
};

// Angles delimiting the NE phases. Empty when the radicand under the
// arcsin(sqrt(.)) falls outside [0, 1].
//   sin^2 gamma1     = D_r / (1 + D_r + D_g)
//   sin^2 gamma2     = D_g / (1 + D_r + D_g)
//   sin^2 gamma_star = (D_g + D_r) / (2 (1 + D_r + D_g))
// gamma_star is where the two risk-dominance products are equal in the
// coexistence phase and where p* = 1/2 in the transitional phase.
struct PhaseThresholds {
  std::optional<double> gamma1;
  std::optional<double> gamma2;
  std::optional<double> gamma_star;
};

enum class QuantumPhase {
  kClassicalLike,  // only D^D^
  kTransitional,   // D^Q^ and Q^D^ (D_g > D_r)
  kCoexistence,    // D^D^ and Q^Q^ (D_g < D_r)
  kFullyQuantum,   // only Q^Q^
  kBoundary,       // at a threshold; union of the neighbouring NE sets
};

std::string_view to_string(QuantumPhase phase);

struct QuantumNeReport {
  QuantumPhase phase;
  std::vector<NashEquilibriumRecord> equilibria;
};

StateVector4 initial_state(const EntanglementAngle& gamma);

Unitary2 strategy_operator(const QuantumStrategyParam& t);

Unitary4 entangling_gate(const EntanglementAngle& gamma,
                         GateConvention convention = GateConvention::kSigmaY);

// J^dagger (U(p) (x) U(q)) J |CC> by dense matrix-vector products.
StateVector4 final_state(const QuantumStrategyParam& p, const QuantumStrategyParam& q,
                         const EntanglementAngle& gamma,
                         GateConvention convention = GateConvention::kSigmaY);

JointDistribution joint_distribution(const QuantumStrategyParam& p, const QuantumStrategyParam& q,
                                     const EntanglementAngle& gamma);

// Expected payoffs of the quantum game: the classical bilinear form plus
// +/- (1 + D_r + D_g)(p - q) sin^2 g for A and B respectively.
PayoffPair expected_payoff_quantum(const DilemmaParams& params, const QuantumStrategyParam& p,
                                   const QuantumStrategyParam& q, const EntanglementAngle& gamma);

QuantumPayoffMatrix pure_quantum_matrix(const DilemmaParams& params,
                                        const EntanglementAngle& gamma);

PhaseThresholds thresholds(const DilemmaParams& params);

// Pure quantum NEs and the phase for D_g > 0, D_r > 0. Closed intervals:
// at a threshold (within kNeMembershipTol) the neighbouring sets are merged.
// Throws kOutOfRegime outside the prisoner's-dilemma quadrant.
QuantumNeReport classify_quantum_ne(const DilemmaParams& params, const EntanglementAngle& gamma);

}  // namespace qrde
