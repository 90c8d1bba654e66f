#include "xdiscord/discord.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "math_util.hpp"
#include "xdiscord/entropy.hpp"

namespace xdiscord {

using detail::kHalfPi;
using detail::sq;
using detail::xlnx;

namespace {

constexpr int kGridPoints = 201;
constexpr double kThetaTol = 1e-10;
// An interior minimum must undercut the endpoints by more than this to
// count; filters plateau noise on straight-line profiles.
constexpr double kDepthTol = 1e-12;
constexpr double kTieTol = 1e-12;

double refine_minimum(const RealXState& s, double lo, double hi) {
  // d1(lo) < 0 < d1(hi); bisection on the derivative.
  while (hi - lo > kThetaTol) {
    const double mid = 0.5 * (lo + hi);
    if (cond_entropy_d1(s, mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::Q0:
      return "Q0";
    case Branch::QTheta:
      return "Qtheta";
    case Branch::QPi2:
      return "Qpi2";
  }
  return "?";
}

double q0(const RealXState& s) {
  return -entropy_AB(s) - xlnx(s.a) - xlnx(s.b) - xlnx(s.c) - xlnx(s.d);
}

double q_pi2(const RealXState& s) {
  const double w = std::abs(s.u) + std::abs(s.v);
  const double r =
      std::min(std::sqrt(sq(s.a + s.b - s.c - s.d) + 4.0 * sq(w)), 1.0);
  return -entropy_AB(s) - xlnx(s.a + s.c) - xlnx(s.b + s.d) -
         xlnx((1.0 + r) / 2.0) - xlnx((1.0 - r) / 2.0);
}

double measurement_discord(const RealXState& s, double theta) {
  return entropy_B(s) - entropy_AB(s) + cond_entropy(s, theta);
}

InteriorScan scan_interior_minima(const RealXState& s) {
  std::array<double, kGridPoints> d1{};
  // The first derivative vanishes identically at both endpoints.
  for (int i = 1; i + 1 < kGridPoints; ++i)
    d1[i] = cond_entropy_d1(s, i * kHalfPi / (kGridPoints - 1));

  const double floor =
      std::min(cond_entropy(s, 0.0), cond_entropy(s, kHalfPi)) - kDepthTol;

  InteriorScan scan;
  double best_val = 0.0;
  for (int i = 0; i + 1 < kGridPoints; ++i) {
    if (!(d1[i] < 0.0 && d1[i + 1] > 0.0)) continue;
    const double theta = refine_minimum(s, i * kHalfPi / (kGridPoints - 1),
                                        (i + 1) * kHalfPi / (kGridPoints - 1));
    if (!(theta > 0.0 && theta < kHalfPi)) continue;
    const double val = cond_entropy(s, theta);
    if (val >= floor) continue;  // plateau / endpoint-depth noise
    ++scan.n_minima;
    if (!scan.best || val < best_val) {
      best_val = val;
      scan.best = InteriorMinimum{theta, measurement_discord(s, theta)};
    }
  }
  return scan;
}

std::optional<InteriorMinimum> q_theta_min(const RealXState& s) {
  return scan_interior_minima(s).best;
}

DiscordResult discord(const RealXState& s) {
  const ValidityReport report = validate(s);
  if (!report.valid)
    throw std::invalid_argument("discord: " + report.summary());

  DiscordResult r;
  r.q0 = q0(s);
  r.q_pi2 = q_pi2(s);
  const InteriorScan scan = scan_interior_minima(s);
  r.n_interior_minima = scan.n_minima;
  if (scan.best) r.q_theta = scan.best->q;

  if (r.q0 <= r.q_pi2) {
    r.branch = Branch::Q0;
    r.theta_opt = 0.0;
    r.q = r.q0;
  } else {
    r.branch = Branch::QPi2;
    r.theta_opt = kHalfPi;
    r.q = r.q_pi2;
  }
  // Bifurcation points belong to the closed endpoint subdomains.
  if (scan.best && scan.best->q < r.q - kTieTol) {
    r.branch = Branch::QTheta;
    r.theta_opt = scan.best->theta;
    r.q = scan.best->q;
  }
  return r;
}

double false_discord(const RealXState& s) {
  return std::min(q0(s), q_pi2(s));
}

}  // namespace xdiscord
