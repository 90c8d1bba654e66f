#pragma once

#include <string>
#include <vector>

namespace xdiscord {

// Two-qubit X density matrix with complex off-diagonal entries,
//
//   [ a    .    .    u  ]
//   [ .    b    v    .  ]
//   [ .    v*   c    .  ]
//   [ u*   .    .    d  ]
//
// where u = u_re + i*u_im and v = v_re + i*v_im.
struct ComplexXState {
  double a{}, b{}, c{}, d{};
  double u_re{}, u_im{};
  double v_re{}, v_im{};
};

// Canonical real non-negative form; the engine's working representation.
// Local unitaries map any ComplexXState onto this form without changing
// any correlation measure.
struct RealXState {
  double a{}, b{}, c{}, d{};
  double u{}, v{};  // off-diagonal moduli, >= 0
};

// Correlator coordinates: local z-components s1, s2 and the binary
// correlators c1 = <sx sx>, c2 = <sy sy>, c3 = <sz sz>.
struct BlochXState {
  double s1{}, s2{};
  double c1{}, c2{}, c3{};
};

struct ConstraintViolation {
  std::string constraint;
  double residual;  // negative when violated
};

struct ValidityReport {
  bool valid{true};
  std::vector<ConstraintViolation> violations;
  std::vector<std::string> adjustments;

  std::string summary() const;
};

// Tolerance on the trace and on non-negativity. Inputs within this
// tolerance are renormalized / clamped by sanitized().
inline constexpr double kSumTol = 1e-9;

// Strips the off-diagonal phases by local z-rotations and folds the sign
// flips, leaving the moduli |u|, |v| and an unchanged diagonal. Throws
// std::invalid_argument when the input violates the density-matrix
// constraints beyond kSumTol.
RealXState canonicalize(const ComplexXState& state);

// Never throws; reports all violated constraints with residuals.
ValidityReport validate(const RealXState& state);

// Clamps tiny negatives and renormalizes the trace when the deviation is
// within kSumTol; every adjustment is recorded in the report.
RealXState sanitized(const RealXState& state, ValidityReport& report);

BlochXState to_bloch(const RealXState& state);

// Inverse of to_bloch up to the sign stripping of the off-diagonals.
// Throws std::invalid_argument when the coordinates lie outside the
// physical domain.
RealXState from_bloch(const BlochXState& state);

// Exchanges the roles of the two qubits (b <-> c, s1 <-> s2). Lets a
// measurement on subsystem A be modelled by the B-measurement engine.
RealXState swap_parties(const RealXState& state);

// Membership test for the correlator-space domain: both hyperquadric
// conditions (1 -+ c3)^2 >= (s1 -+ s2)^2 + (c1 +- c2)^2.
bool bloch_in_domain(const BlochXState& state, double tol = kSumTol);

}  // namespace xdiscord
