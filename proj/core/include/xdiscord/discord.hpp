#pragma once

#include <optional>

#include "xdiscord/xstate.hpp"

namespace xdiscord {

enum class Branch { Q0, QTheta, QPi2 };

const char* branch_name(Branch b);

// An interior local minimum of the measurement-dependent discord.
struct InteriorMinimum {
  double theta{};  // radians, strictly inside (0, pi/2)
  double q{};      // discord value at theta, nats
};

struct InteriorScan {
  std::optional<InteriorMinimum> best;  // deepest interior minimum
  int n_minima{};                       // count of interior minima found
};

struct DiscordResult {
  double q{};        // nats
  Branch branch{Branch::Q0};
  double theta_opt{};
  double q0{}, q_pi2{};
  std::optional<double> q_theta;  // absent when no interior minimum exists
  int n_interior_minima{};
};

// Closed-form endpoint branches (sigma_z and sigma_x measurements).
double q0(const RealXState& state);
double q_pi2(const RealXState& state);

// Measurement-dependent discord S(rho_B) - S(rho_AB) + S_cond(theta).
double measurement_discord(const RealXState& state, double theta);

// Dense scan of S_cond over [0, pi/2] with derivative-bisection
// refinement of every bracketed interior minimum.
InteriorScan scan_interior_minima(const RealXState& state);
std::optional<InteriorMinimum> q_theta_min(const RealXState& state);

// Q = min{Q_0, Q_theta, Q_pi/2}; ties within 1e-12 resolve to the
// endpoint branches.
DiscordResult discord(const RealXState& state);

// The two-branch estimate min{Q_0, Q_pi/2}, kept for comparison curves.
double false_discord(const RealXState& state);

}  // namespace xdiscord
