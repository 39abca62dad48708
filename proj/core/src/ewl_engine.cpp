#include "qrde/ewl_engine.hpp"

#include <cmath>
#include <sstream>
#include <unsupported/Eigen/KroneckerProduct>

#include "qrde/errors.hpp"

namespace qrde {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

std::optional<double> arcsin_sqrt(double num, double den) {
  if (den <= 0.0) return std::nullopt;
  const double x = num / den;
  if (!(x >= 0.0 && x <= 1.0)) return std::nullopt;
  return std::asin(std::sqrt(x));
}

double sin_sq(const EntanglementAngle& gamma) {
  const double s = std::sin(gamma.radians());
  return s * s;
}

}  // namespace

EntanglementAngle::EntanglementAngle(double radians) : radians_(radians) {
  if (!(radians >= 0.0 && radians <= kMax)) {
    std::ostringstream msg;
    msg << "entanglement angle must lie in [0, pi/2], got " << radians;
    throw Error(ErrorCode::kInvalidArgument, msg.str());
  }
}

QuantumStrategyParam::QuantumStrategyParam(double t) : t_(t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    std::ostringstream msg;
    msg << "strategy parameter must lie in [0, 1], got " << t;
    throw Error(ErrorCode::kInvalidArgument, msg.str());
  }
}

std::string_view to_string(QuantumPhase phase) {
  switch (phase) {
    case QuantumPhase::kClassicalLike: return "classical-like";
    case QuantumPhase::kTransitional: return "transitional";
    case QuantumPhase::kCoexistence: return "coexistence";
    case QuantumPhase::kFullyQuantum: return "fully-quantum";
    case QuantumPhase::kBoundary: return "boundary";
  }
  return "boundary";
}

StateVector4 initial_state(const EntanglementAngle& gamma) {
  const double half = 0.5 * gamma.radians();
  StateVector4 psi = StateVector4::Zero();
  psi(0) = std::cos(half);
  psi(3) = kI * std::sin(half);
  return psi;
}

Unitary2 strategy_operator(const QuantumStrategyParam& t) {
  const double c = std::sqrt(t.value());
  const double s = std::sqrt(1.0 - t.value());
  Unitary2 u;
  u << kI * c, s,
       -s, -kI * c;
  return u;
}

Unitary4 entangling_gate(const EntanglementAngle& gamma, GateConvention convention) {
  Unitary2 pauli;
  if (convention == GateConvention::kSigmaY) {
    pauli << 0.0, -kI,
             kI, 0.0;
  } else {
    pauli << 0.0, 1.0,
             1.0, 0.0;
  }
  const double half = 0.5 * gamma.radians();
  const Unitary4 pp = Eigen::kroneckerProduct(pauli, pauli).eval();
  return std::cos(half) * Unitary4::Identity() - kI * std::sin(half) * pp;
}

StateVector4 final_state(const QuantumStrategyParam& p, const QuantumStrategyParam& q,
                         const EntanglementAngle& gamma, GateConvention convention) {
  const Unitary4 j = entangling_gate(gamma, convention);
  const Unitary4 local =
      Eigen::kroneckerProduct(strategy_operator(p), strategy_operator(q)).eval();
  StateVector4 cc = StateVector4::Zero();
  cc(0) = 1.0;
  return j.adjoint() * (local * (j * cc));
}

JointDistribution joint_distribution(const QuantumStrategyParam& pp,
                                     const QuantumStrategyParam& qq,
                                     const EntanglementAngle& gamma) {
  const double p = pp.value();
  const double q = qq.value();
  const double c = std::cos(gamma.radians());
  const double c2 = c * c;
  const double s2 = sin_sq(gamma);
  return {p * q,
          p * (1.0 - q) * c2 + (1.0 - p) * q * s2,
          (1.0 - p) * q * c2 + p * (1.0 - q) * s2,
          (1.0 - p) * (1.0 - q)};
}

PayoffPair expected_payoff_quantum(const DilemmaParams& params, const QuantumStrategyParam& pp,
                                   const QuantumStrategyParam& qq, const EntanglementAngle& gamma) {
  const double g = params.d_g();
  const double r = params.d_r();
  const double p = pp.value();
  const double q = qq.value();
  const double shift = (1.0 + r + g) * (p - q) * sin_sq(gamma);
  return {(r - g) * p * q - r * p + (1.0 + g) * q + shift,
          (r - g) * p * q - r * q + (1.0 + g) * p - shift};
}

QuantumPayoffMatrix pure_quantum_matrix(const DilemmaParams& params,
                                        const EntanglementAngle& gamma) {
  const double g = params.d_g();
  const double r = params.d_r();
  const double ks = (1.0 + r + g) * sin_sq(gamma);
  const double pi_q = -r + ks;
  const double pi_d = 1.0 + g - ks;
  PayoffMatrix2x2 m({{
                        {{{1.0, 1.0}, {pi_q, pi_d}}},
                        {{{pi_d, pi_q}, {0.0, 0.0}}},
                    }},
                    {"Q", "D"});
  return {std::move(m), pi_q, pi_d};
}

PhaseThresholds thresholds(const DilemmaParams& params) {
  const double g = params.d_g();
  const double r = params.d_r();
  const double k = 1.0 + r + g;
  return {arcsin_sqrt(r, k), arcsin_sqrt(g, k), arcsin_sqrt(g + r, 2.0 * k)};
}

QuantumNeReport classify_quantum_ne(const DilemmaParams& params, const EntanglementAngle& gamma) {
  if (!(params.d_g() > 0.0 && params.d_r() > 0.0)) {
    throw Error(ErrorCode::kOutOfRegime, "quantum NE phases are defined for D_g > 0, D_r > 0");
  }
  const PhaseThresholds th = thresholds(params);
  const double g1 = *th.gamma1;
  const double g2 = *th.gamma2;
  const double x = gamma.radians();
  constexpr double tol = kNeMembershipTol;

  const bool dd = x <= g1 + tol;
  const bool qq = x >= g2 - tol;
  const bool mixed_pair = x >= g1 - tol && x <= g2 + tol;
  const bool at_threshold = std::abs(x - g1) <= tol || std::abs(x - g2) <= tol;

  QuantumPhase phase;
  if (at_threshold) {
    phase = QuantumPhase::kBoundary;
  } else if (mixed_pair) {
    phase = QuantumPhase::kTransitional;
  } else if (dd && qq) {
    phase = QuantumPhase::kCoexistence;
  } else if (dd) {
    phase = QuantumPhase::kClassicalLike;
  } else {
    phase = QuantumPhase::kFullyQuantum;
  }

  const QuantumPayoffMatrix qm = pure_quantum_matrix(params, gamma);
  QuantumNeReport report{phase, {}};
  auto add = [&](int row, int col) {
    report.equilibria.push_back({StrategyProfile(row == 0 ? 1.0 : 0.0, col == 0 ? 1.0 : 0.0),
                                 qm.matrix.at(row, col), NeKind::kPure});
  };
  if (qq) add(0, 0);
  if (mixed_pair) {
    add(0, 1);
    add(1, 0);
  }
  if (dd) add(1, 1);
  return report;
}

}  // namespace qrde
