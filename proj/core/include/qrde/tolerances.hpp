#pragma once

namespace qrde {

// Algebraic identities evaluated in double precision.
inline constexpr double kIdentityTol = 1e-12;

// Equality of derived quantities: risk-dominance ties, phase membership.
inline constexpr double kTieEps = 1e-9;

// Default tolerance for unilateral-deviation checks.
inline constexpr double kNeCheckTol = 1e-9;

// Best-response membership at the Table-style NE boundaries.
inline constexpr double kNeMembershipTol = 1e-12;

}  // namespace qrde
