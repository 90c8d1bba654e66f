#pragma once

#include <array>

#include "xdiscord/xstate.hpp"

namespace xdiscord {

// Pieces of the measurement-angle-dependent conditional entropy.
struct CondEntropyTerms {
  double p1{}, p2{};            // outcome probabilities, p1 + p2 = 1
  std::array<double, 4> lam{};  // conditional eigenvalue weights
  double w{};                   // |u| + |v|
  double theta{};
};

// Value of a closed-form second derivative of S_cond at an endpoint.
// `divergent` flags the degenerate-logarithm cases; `value` then carries
// the signed infinity so that sign() stays meaningful.
struct SecondDerivative {
  double value{};
  bool divergent{false};

  int sign() const { return value > 0 ? 1 : (value < 0 ? -1 : 0); }
};

// All entropies are in nats.
double entropy_B(const RealXState& state);
double entropy_AB(const RealXState& state);

CondEntropyTerms cond_entropy_terms(const RealXState& state, double theta);

// Average post-measurement entropy of subsystem A after a von Neumann
// measurement on B along polar angle theta (azimuth folded out for
// canonical states).
double cond_entropy(const RealXState& state, double theta);

// From-definition ground truth: projects B onto (1 +- n.sigma)/2 with
// n = (sin t cos p, sin t sin p, cos t) and averages the entropy of the
// conditional states of A via explicit 4x4 linear algebra.
double cond_entropy_oracle(const RealXState& state, double theta, double phi);

// Analytic d/dtheta of cond_entropy; vanishes at both endpoints.
double cond_entropy_d1(const RealXState& state, double theta);

SecondDerivative cond_entropy_d2_at_0(const RealXState& state);
SecondDerivative cond_entropy_d2_at_pi2(const RealXState& state);

}  // namespace xdiscord
