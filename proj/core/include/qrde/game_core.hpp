#pragma once

// Symmetric 2x2 dilemmas in the (D_g, D_r) parametrization with the reward
// fixed at R = 1 and the punishment at P = 0.
//
//            B: C              B: D
//   A: C   (1, 1)            (-D_r, 1 + D_g)
//   A: D   (1 + D_g, -D_r)   (0, 0)

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "qrde/tolerances.hpp"

namespace qrde {

class DilemmaParams {
 public:
  static constexpr double kReward = 1.0;
  static constexpr double kPunishment = 0.0;

  // Throws Error(kInvalidArgument) unless both strengths lie in [-1, 1].
  DilemmaParams(double d_g, double d_r);

  // Gamble-intending strength: gain from defecting against a cooperator.
  double d_g() const noexcept { return d_g_; }
  // Risk-averting strength: loss from cooperating against a defector.
  double d_r() const noexcept { return d_r_; }

 private:
  double d_g_;
  double d_r_;
};

struct PayoffPair {
  double a = 0.0;
  double b = 0.0;

  friend bool operator==(const PayoffPair&, const PayoffPair&) = default;
};

// General bimatrix. Row index is player A's action, column index is player
// B's action; index 0 is the first action (C, or Q^ in the quantum game).
class PayoffMatrix2x2 {
 public:
  using Entries = std::array<std::array<PayoffPair, 2>, 2>;

  PayoffMatrix2x2(const Entries& entries,
                  std::array<std::string, 2> action_labels = {"C", "D"});

  const PayoffPair& at(int row, int col) const { return entries_.at(row).at(col); }
  const Entries& entries() const noexcept { return entries_; }
  const std::array<std::string, 2>& labels() const noexcept { return labels_; }

  // Bilinear expected payoff when A plays the first action with probability
  // p and B with probability q.
  PayoffPair expected(double p, double q) const;

  // Cell label such as "CD" (A's action first).
  std::string cell_label(int row, int col) const;

  // Best-response checks for a pure cell; ties count as best responses.
  bool is_best_response_a(int row, int col, double tol = 0.0) const;
  bool is_best_response_b(int row, int col, double tol = 0.0) const;
  bool is_pure_ne(int row, int col, double tol = 0.0) const {
    return is_best_response_a(row, col, tol) && is_best_response_b(row, col, tol);
  }

 private:
  Entries entries_;
  std::array<std::string, 2> labels_;
};

class StrategyProfile {
 public:
  // Throws Error(kInvalidArgument) unless 0 <= p, q <= 1.
  StrategyProfile(double p, double q);

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

  bool is_pure() const noexcept {
    return (p_ == 0.0 || p_ == 1.0) && (q_ == 0.0 || q_ == 1.0);
  }

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;

 private:
  double p_;
  double q_;
};

enum class DilemmaKind { kPrisonersDilemma, kChicken, kStagHunt, kTrivial };

std::string_view to_string(DilemmaKind kind);

struct DilemmaClass {
  DilemmaKind kind;
  // Set when d_g == 0 or d_r == 0; the kind is then that of the adjacent
  // non-trivial class.
  bool boundary = false;

  friend bool operator==(const DilemmaClass&, const DilemmaClass&) = default;
};

enum class NeKind { kPure, kMixed };

struct NashEquilibriumRecord {
  StrategyProfile profile;
  PayoffPair payoffs;
  NeKind kind;
};

PayoffMatrix2x2 build_dilemma_matrix(const DilemmaParams& params);

DilemmaClass classify_dilemma(const DilemmaParams& params);

// Closed-form mixed-strategy payoffs:
//   $A = (D_r - D_g) p q - D_r p + (1 + D_g) q
//   $B = (D_r - D_g) p q - D_r q + (1 + D_g) p
PayoffPair expected_payoff_classical(const DilemmaParams& params,
                                     const StrategyProfile& profile);

// All pure cells where both players best-respond (weak NE admitted), in
// row-major order.
std::vector<NashEquilibriumRecord> enumerate_pure_ne(const PayoffMatrix2x2& matrix,
                                                     double tol = 0.0);

// True iff neither player gains more than tol by a unilateral deviation.
// Payoffs are affine in the deviator's own probability, so only the two pure
// deviations are tested.
bool verify_mixed_ne(const DilemmaParams& params, const StrategyProfile& profile,
                     double tol = kNeCheckTol);

// Label of a pure profile on a matrix, e.g. "DC"; "mixed" otherwise.
std::string profile_label(const PayoffMatrix2x2& matrix, const StrategyProfile& profile);

}  // namespace qrde
