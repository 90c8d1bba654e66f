#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "xdiscord/discord.hpp"
#include "xdiscord/xstate.hpp"

namespace xdiscord {

// One-parameter path of states; the abstraction the boundary solvers
// bisect along.
struct FamilyCurve {
  std::function<RealXState(double)> evaluate;
  double t_lo{}, t_hi{};
  std::string label;
};

struct SubdomainLabel {
  Branch label{Branch::Q0};
  int sign_d2_0{};    // sign of S''_cond(0)
  int sign_d2_pi2{};  // sign of S''_cond(pi/2)
};

// Thrown when a root search finds no bracket, or more than one where
// exactly one is required; `brackets` lists everything that was found.
class BracketError : public std::runtime_error {
 public:
  BracketError(const std::string& msg,
               std::vector<std::pair<double, double>> found)
      : std::runtime_error(msg), brackets(std::move(found)) {}

  std::vector<std::pair<double, double>> brackets;
};

// Sufficient condition (u+v)^2 <= (a-b)(d-c) for sigma_z optimality.
bool sufficient_sigma_z(const RealXState& state);

// Sufficient condition u+v >= |sqrt(ad) - sqrt(bc)| for sigma_x optimality.
bool sufficient_sigma_x(const RealXState& state);

// ac = bd implies the intermediate subdomain is absent.
bool no_intermediate_region(const RealXState& state);

// Labels the state by its winning branch and records the endpoint
// curvature signs. The interior minimizer is trusted over the signs.
SubdomainLabel classify(const RealXState& state);

// Parameter tolerance for the bisection searches below.
inline constexpr double kParamTol = 1e-9;

// Root of Q_0(t) - Q_pi/2(t); requires exactly one sign change.
double crossing_point(const FamilyCurve& curve);

// Root of S''_cond(0) along the curve (birth/death of the interior
// extremum at theta = 0).
double bifurcation_0(const FamilyCurve& curve);

// Root of S''_cond(pi/2) along the curve.
double bifurcation_pi2(const FamilyCurve& curve);

}  // namespace xdiscord
