#include "xdiscord/boundaries.hpp"

#include <cmath>
#include <sstream>

#include "math_util.hpp"
#include "xdiscord/entropy.hpp"

namespace xdiscord {

using detail::sq;

namespace {

constexpr int kScanIntervals = 100;

std::vector<std::pair<double, double>> scan_brackets(
    const std::function<double(double)>& f, double lo, double hi) {
  std::vector<std::pair<double, double>> brackets;
  double prev_t = lo;
  double prev_f = f(lo);
  for (int i = 1; i <= kScanIntervals; ++i) {
    const double t = lo + (hi - lo) * i / kScanIntervals;
    const double ft = f(t);
    if ((prev_f < 0.0 && ft > 0.0) || (prev_f > 0.0 && ft < 0.0) ||
        prev_f == 0.0)
      brackets.emplace_back(prev_t, t);
    prev_t = t;
    prev_f = ft;
  }
  return brackets;
}

double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  while (hi - lo > kParamTol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((flo < 0.0) == (fm < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double find_single_root(const FamilyCurve& curve,
                        const std::function<double(double)>& f,
                        const char* what) {
  auto brackets = scan_brackets(f, curve.t_lo, curve.t_hi);
  std::ostringstream os;
  if (brackets.empty()) {
    os << what << ": no sign change on [" << curve.t_lo << ", " << curve.t_hi
       << "] for " << curve.label;
    throw BracketError(os.str(), {});
  }
  if (brackets.size() > 1) {
    os << what << ": " << brackets.size() << " sign changes on [" << curve.t_lo
       << ", " << curve.t_hi << "] for " << curve.label << ":";
    for (const auto& b : brackets) os << " [" << b.first << ", " << b.second << "]";
    throw BracketError(os.str(), brackets);
  }
  return bisect(f, brackets[0].first, brackets[0].second);
}

}  // namespace

bool sufficient_sigma_z(const RealXState& s) {
  return sq(s.u + s.v) <= (s.a - s.b) * (s.d - s.c);
}

bool sufficient_sigma_x(const RealXState& s) {
  return s.u + s.v >=
         std::abs(std::sqrt(s.a * s.d) - std::sqrt(s.b * s.c));
}

bool no_intermediate_region(const RealXState& s) {
  return std::abs(s.a * s.c - s.b * s.d) < 1e-12;
}

SubdomainLabel classify(const RealXState& s) {
  // The minimizer decides; the curvature signs are reported alongside.
  const DiscordResult r = discord(s);
  return SubdomainLabel{r.branch, cond_entropy_d2_at_0(s).sign(),
                        cond_entropy_d2_at_pi2(s).sign()};
}

double crossing_point(const FamilyCurve& curve) {
  auto f = [&curve](double t) {
    const RealXState s = curve.evaluate(t);
    return q0(s) - q_pi2(s);
  };
  return find_single_root(curve, f, "crossing_point");
}

double bifurcation_0(const FamilyCurve& curve) {
  auto f = [&curve](double t) {
    return cond_entropy_d2_at_0(curve.evaluate(t)).value;
  };
  return find_single_root(curve, f, "bifurcation_0");
}

double bifurcation_pi2(const FamilyCurve& curve) {
  auto f = [&curve](double t) {
    return cond_entropy_d2_at_pi2(curve.evaluate(t)).value;
  };
  return find_single_root(curve, f, "bifurcation_pi2");
}

}  // namespace xdiscord
