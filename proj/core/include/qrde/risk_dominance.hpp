#pragma once

// Harsanyi-Selten risk dominance between two pure equilibria of a 2x2
// bimatrix game.
//
// The deviation loss of a player at an equilibrium is what that player gives
// up when the opponent switches action; the equilibrium with the larger
// product of the two losses is risk dominant. On a tie the selection is the
// mixed profile built from the component losses.
//
// Only risk dominance is implemented. Payoff dominance, which the full
// Harsanyi-Selten procedure checks first, is left to the caller.

#include "qrde/game_core.hpp"
#include "qrde/tolerances.hpp"

namespace qrde {

struct DeviationLossPair {
  double loss_a = 0.0;
  double loss_b = 0.0;
  double product = 0.0;
};

DeviationLossPair make_loss_pair(double loss_a, double loss_b);

// Losses at the two diagonal equilibria, (first, first) and (second, second).
struct SymmetricLosses {
  DeviationLossPair cc;
  DeviationLossPair dd;
};

// Losses at the two off-diagonal equilibria, (first, second) and
// (second, first).
struct AsymmetricLosses {
  DeviationLossPair cd;
  DeviationLossPair dc;
};

enum class RdeKind { kPure, kMixed };

struct RdeOutcome {
  RdeKind kind;
  StrategyProfile profile;
  PayoffPair payoffs;
};

// Throws kNotAnEquilibrium unless both diagonal cells are pure NEs (checked
// with kNeMembershipTol slack so that closed-form matrices evaluated exactly
// at a boundary are accepted).
SymmetricLosses deviation_losses_symmetric(const PayoffMatrix2x2& matrix);

// Throws kNotAnEquilibrium unless both off-diagonal cells are pure NEs.
AsymmetricLosses deviation_losses_asymmetric(const PayoffMatrix2x2& matrix);

// (C,C) if its product is larger, (D,D) if smaller, and on a tie (within
// tie_eps) the mixed profile
//   p* = dB(DD) / (dB(CC) + dB(DD)),  q* = dA(DD) / (dA(CC) + dA(DD)).
// Throws kDegenerateDenominator if a tie needs a mixing denominator that is 0.
RdeOutcome select_rde_symmetric(const PayoffMatrix2x2& matrix, double tie_eps = kTieEps);

// (C,D) if its product is larger, (D,C) if smaller, and on a tie
//   p' = dB(DC) / (dB(CD) + dB(DC)),  q' = dA(CD) / (dA(DC) + dA(CD)).
RdeOutcome select_rde_asymmetric(const PayoffMatrix2x2& matrix, double tie_eps = kTieEps);

// Chicken: both products equal -D_r D_g, so the selection is always the mixed
// profile p* = q* = -D_r / (-D_r + D_g). Throws kWrongClass otherwise.
RdeOutcome rde_chicken(const DilemmaParams& params);

// Stag hunt: products are D_g^2 at (C,C) and D_r^2 at (D,D).
RdeOutcome rde_staghunt(const DilemmaParams& params);

// Dispatch on the dilemma class: chicken and stag hunt go through the
// closed forms above, a game with a single pure NE returns it. Throws
// kDegenerateDenominator when the boundary games leave the choice undefined.
RdeOutcome select_rde_classical(const DilemmaParams& params);

}  // namespace qrde
