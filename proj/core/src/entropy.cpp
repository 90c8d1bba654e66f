#include "xdiscord/entropy.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "math_util.hpp"

namespace xdiscord {

using detail::sq;
using detail::xlnx;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Removable-singularity threshold for the (1/(x-y)) ln(x/y) terms.
constexpr double kDiffTol = 1e-8;

// ln(x/y) / (x - y), the reciprocal logarithmic mean. Diverges when
// exactly one argument vanishes.
double log_mean_inv(double x, double y, bool& divergent) {
  if (x <= 0.0 && y <= 0.0) {
    divergent = true;
    return std::numeric_limits<double>::quiet_NaN();
  }
  if (x <= 0.0 || y <= 0.0) {
    divergent = true;
    return kInf;
  }
  if (std::abs(x - y) < kDiffTol) return 2.0 / (x + y);
  return std::log(x / y) / (x - y);
}

// Closed form of S''_cond(0) for strictly positive diagonal entries.
double d2_at_0_form(double a, double b, double c, double d, double w) {
  const double s2 = a - b + c - d;
  const double c3 = a - b - c + d;
  double total =
      0.25 * s2 * (2.0 * std::log((b + d) / (a + c)) + std::log(a * c / (b * d))) +
      0.25 * c3 * std::log(a * d / (b * c));
  if (w > 0.0) {
    bool unused = false;
    total += -0.5 * sq(w) * (log_mean_inv(a, c, unused) + log_mean_inv(b, d, unused));
  }
  return total;
}

}  // namespace

double entropy_B(const RealXState& s) {
  return -xlnx(s.a + s.c) - xlnx(s.b + s.d);
}

double entropy_AB(const RealXState& s) {
  const double ru = std::sqrt(sq(s.a - s.d) + 4.0 * sq(s.u));
  const double rv = std::sqrt(sq(s.b - s.c) + 4.0 * sq(s.v));
  return -xlnx((s.a + s.d + ru) / 2.0) - xlnx((s.a + s.d - ru) / 2.0) -
         xlnx((s.b + s.c + rv) / 2.0) - xlnx((s.b + s.c - rv) / 2.0);
}

CondEntropyTerms cond_entropy_terms(const RealXState& state, double theta) {
  const double s1 = state.a + state.b - state.c - state.d;
  const double s2 = state.a - state.b + state.c - state.d;
  const double c3 = state.a - state.b - state.c + state.d;
  const double w = std::abs(state.u) + std::abs(state.v);
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  // Both radicals use the combined magnitude w; u and v enter S_cond only
  // through it.
  const double r1 = std::sqrt(sq(s1 + c3 * ct) + 4.0 * sq(w) * sq(st));
  const double r2 = std::sqrt(sq(s1 - c3 * ct) + 4.0 * sq(w) * sq(st));

  CondEntropyTerms t;
  t.p1 = 0.5 * (1.0 + s2 * ct);
  t.p2 = 0.5 * (1.0 - s2 * ct);
  t.lam[0] = 0.25 * (1.0 + s2 * ct + r1);
  t.lam[1] = 0.25 * (1.0 + s2 * ct - r1);
  t.lam[2] = 0.25 * (1.0 - s2 * ct + r2);
  t.lam[3] = 0.25 * (1.0 - s2 * ct - r2);
  t.w = w;
  t.theta = theta;
  return t;
}

double cond_entropy(const RealXState& state, double theta) {
  const CondEntropyTerms t = cond_entropy_terms(state, theta);
  double sum = xlnx(t.p1) + xlnx(t.p2);
  for (double l : t.lam) sum -= xlnx(l);
  return sum;
}

double cond_entropy_d1(const RealXState& state, double theta) {
  const double s1 = state.a + state.b - state.c - state.d;
  const double s2 = state.a - state.b + state.c - state.d;
  const double c3 = state.a - state.b - state.c + state.d;
  const double w = std::abs(state.u) + std::abs(state.v);
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  const double s2t = std::sin(2.0 * theta);

  const double f1 = s1 + c3 * ct;
  const double f2 = s1 - c3 * ct;
  const double r1 = std::sqrt(sq(f1) + 4.0 * sq(w) * sq(st));
  const double r2 = std::sqrt(sq(f2) + 4.0 * sq(w) * sq(st));
  const double g1 = r1 > 1e-300
                        ? (f1 * (-c3 * st) + 2.0 * sq(w) * s2t) / r1
                        : 0.0;
  const double g2 = r2 > 1e-300
                        ? (f2 * (c3 * st) + 2.0 * sq(w) * s2t) / r2
                        : 0.0;

  const double p1 = 0.5 * (1.0 + s2 * ct);
  const double p2 = 0.5 * (1.0 - s2 * ct);
  const double dp1 = -0.5 * s2 * st;
  const double lam[4] = {0.25 * (1.0 + s2 * ct + r1),
                         0.25 * (1.0 + s2 * ct - r1),
                         0.25 * (1.0 - s2 * ct + r2),
                         0.25 * (1.0 - s2 * ct - r2)};
  const double dlam[4] = {0.25 * (-s2 * st + g1), 0.25 * (-s2 * st - g1),
                          0.25 * (s2 * st + g2), 0.25 * (s2 * st - g2)};

  // A weight frozen at zero stays zero, so its term drops out.
  auto term = [](double dv, double v) {
    return v > 0.0 ? dv * (1.0 + std::log(v)) : 0.0;
  };
  double sum = term(dp1, p1) + term(-dp1, p2);
  for (int i = 0; i < 4; ++i) sum -= term(dlam[i], lam[i]);
  return sum;
}

SecondDerivative cond_entropy_d2_at_0(const RealXState& state) {
  const double a = state.a, b = state.b, c = state.c, d = state.d;
  const double s2 = a - b + c - d;
  const double c3 = a - b - c + d;
  const double w = std::abs(state.u) + std::abs(state.v);

  SecondDerivative out;
  if (a > 0.0 && b > 0.0 && c > 0.0 && d > 0.0) {
    out.value = d2_at_0_form(a, b, c, d, w);
    return out;
  }
  // A vanished diagonal entry makes several logarithms compete; resolve
  // the dominant sign by evaluating at two clamped scales.
  auto clamped = [&](double eps) {
    return d2_at_0_form(std::max(a, eps), std::max(b, eps), std::max(c, eps),
                        std::max(d, eps), w);
  };
  const double t1 = clamped(1e-300);
  const double t2 = clamped(1e-150);
  if (std::abs(t1 - t2) > 1e-6 * (1.0 + std::abs(t2))) {
    out.divergent = true;
    out.value = t1 < t2 ? -kInf : kInf;
  } else {
    out.value = t1;
  }
  return out;
}

SecondDerivative cond_entropy_d2_at_pi2(const RealXState& state) {
  const double a = state.a, b = state.b, c = state.c, d = state.d;
  const double s1 = a + b - c - d;
  const double s2 = a - b + c - d;
  const double c3 = a - b - c + d;
  const double w = std::abs(state.u) + std::abs(state.v);
  const double r = std::sqrt(sq(s1) + 4.0 * sq(w));

  SecondDerivative out;
  if (r < 1e-12) {
    // s1 = 0 and w = 0; the formula's limit collapses to -c3^2.
    out.value = -sq(c3);
    return out;
  }
  if (1.0 - r < 1e-12) {
    const double log_coef = 8.0 * sq(w) * ((a - c) * (b - d) + sq(w));
    const double pole_num = sq(s2 - s1 * c3 / r);
    if (pole_num > 1e-20) {
      // The 1/(1-r) pole dominates the logarithm.
      out.value = -kInf;
      out.divergent = true;
    } else if (std::abs(log_coef) > 1e-20) {
      out.value = log_coef > 0.0 ? kInf : -kInf;
      out.divergent = true;
    } else {
      out.value = sq(s2) - 0.25 * sq(s2 + s1 * c3 / r);
    }
    return out;
  }
  const double t_log = (8.0 * sq(w) / (r * r * r)) *
                       ((a - c) * (b - d) + sq(w)) *
                       std::log((1.0 + r) / (1.0 - r));
  const double plus = s2 + s1 * c3 / r;
  const double minus = s2 - s1 * c3 / r;
  out.value = t_log + sq(s2) - sq(plus) / (2.0 * (1.0 + r)) -
              sq(minus) / (2.0 * (1.0 - r));
  return out;
}

double cond_entropy_oracle(const RealXState& state, double theta, double phi) {
  using cd = std::complex<double>;
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  const cd eip{std::cos(phi), std::sin(phi)};

  // rho in the |A B> product basis {00, 01, 10, 11}.
  cd rho[4][4] = {};
  rho[0][0] = state.a;
  rho[1][1] = state.b;
  rho[2][2] = state.c;
  rho[3][3] = state.d;
  rho[0][3] = rho[3][0] = state.u;
  rho[1][2] = rho[2][1] = state.v;

  double result = 0.0;
  for (int k = 0; k < 2; ++k) {
    const double sign = k == 0 ? 1.0 : -1.0;
    // Projector (1 + sign * n.sigma)/2 on B.
    cd proj[2][2];
    proj[0][0] = 0.5 * (1.0 + sign * ct);
    proj[1][1] = 0.5 * (1.0 - sign * ct);
    proj[0][1] = 0.5 * sign * st * std::conj(eip);
    proj[1][0] = 0.5 * sign * st * eip;

    // A_{ij} = Tr_B[rho (1 x proj)]_{ij} = sum_{m,n} rho_{(i m),(j n)} proj_{n m}
    cd amat[2][2] = {};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int m = 0; m < 2; ++m)
          for (int n = 0; n < 2; ++n)
            amat[i][j] += rho[2 * i + m][2 * j + n] * proj[n][m];

    const double p = std::real(amat[0][0] + amat[1][1]);
    if (p < 1e-15) continue;
    const double tr = p;
    const double det = std::real(amat[0][0] * amat[1][1] -
                                 amat[0][1] * amat[1][0]);
    const double disc = std::sqrt(std::max(tr * tr - 4.0 * det, 0.0));
    const double l1 = (tr + disc) / 2.0 / p;
    const double l2 = (tr - disc) / 2.0 / p;
    result += p * (-xlnx(l1) - xlnx(l2));
  }
  return result;
}

}  // namespace xdiscord
