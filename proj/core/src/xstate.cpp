#include "xdiscord/xstate.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "math_util.hpp"

namespace xdiscord {

using detail::sq;

std::string ValidityReport::summary() const {
  std::ostringstream os;
  os << (valid ? "valid" : "invalid");
  for (const auto& v : violations)
    os << "; violated " << v.constraint << " (residual " << v.residual << ")";
  for (const auto& a : adjustments) os << "; " << a;
  return os.str();
}

RealXState canonicalize(const ComplexXState& s) {
  const double u2 = sq(s.u_re) + sq(s.u_im);
  const double v2 = sq(s.v_re) + sq(s.v_im);
  if (s.a < -kSumTol || s.b < -kSumTol || s.c < -kSumTol || s.d < -kSumTol)
    throw std::invalid_argument("canonicalize: negative diagonal element");
  if (std::abs(s.a + s.b + s.c + s.d - 1.0) > kSumTol)
    throw std::invalid_argument("canonicalize: trace differs from 1");
  if (s.a * s.d - u2 < -kSumTol || s.b * s.c - v2 < -kSumTol)
    throw std::invalid_argument(
        "canonicalize: off-diagonal element too large for a density matrix");
  // The phase rotation composed with the sign-flip conjugations leaves the
  // diagonal untouched and turns the off-diagonals into their moduli, so the
  // closed form is used directly.
  ValidityReport ignored;
  return sanitized(RealXState{s.a, s.b, s.c, s.d, std::sqrt(u2), std::sqrt(v2)},
                   ignored);
}

ValidityReport validate(const RealXState& s) {
  ValidityReport r;
  auto check = [&r](const char* constraint, double residual) {
    if (residual < -kSumTol) {
      r.valid = false;
      r.violations.push_back({constraint, residual});
    }
  };
  check("a >= 0", s.a);
  check("b >= 0", s.b);
  check("c >= 0", s.c);
  check("d >= 0", s.d);
  check("u >= 0", s.u);
  check("v >= 0", s.v);
  check("a*d >= u^2", s.a * s.d - s.u * s.u);
  check("b*c >= v^2", s.b * s.c - s.v * s.v);
  const double excess = std::abs(s.a + s.b + s.c + s.d - 1.0);
  if (excess > kSumTol) {
    r.valid = false;
    r.violations.push_back({"a+b+c+d = 1", -excess});
  }
  return r;
}

RealXState sanitized(const RealXState& s, ValidityReport& report) {
  RealXState out = s;
  auto clamp = [&report](double& x, const char* name) {
    if (x < 0.0 && x >= -kSumTol) {
      std::ostringstream os;
      os << "clamped " << name << " from " << x << " to 0";
      report.adjustments.push_back(os.str());
      x = 0.0;
    }
  };
  clamp(out.a, "a");
  clamp(out.b, "b");
  clamp(out.c, "c");
  clamp(out.d, "d");
  clamp(out.u, "u");
  clamp(out.v, "v");
  const double trace = out.a + out.b + out.c + out.d;
  if (trace != 1.0 && std::abs(trace - 1.0) <= kSumTol && trace > 0.0) {
    std::ostringstream os;
    os << "renormalized trace from " << trace << " to 1";
    report.adjustments.push_back(os.str());
    out.a /= trace;
    out.b /= trace;
    out.c /= trace;
    out.d /= trace;
  }
  return out;
}

BlochXState to_bloch(const RealXState& s) {
  return BlochXState{s.a + s.b - s.c - s.d, s.a - s.b + s.c - s.d,
                     2.0 * (s.v + s.u), 2.0 * (s.v - s.u),
                     s.a - s.b - s.c + s.d};
}

bool bloch_in_domain(const BlochXState& s, double tol) {
  const double lhs1 = sq(1.0 - s.c3);
  const double rhs1 = sq(s.s1 - s.s2) + sq(s.c1 + s.c2);
  const double lhs2 = sq(1.0 + s.c3);
  const double rhs2 = sq(s.s1 + s.s2) + sq(s.c1 - s.c2);
  if (lhs1 - rhs1 < -tol || lhs2 - rhs2 < -tol) return false;
  // The hyperquadrics alone do not pin the diagonal signs.
  const double a = (1.0 + s.s1 + s.s2 + s.c3) / 4.0;
  const double b = (1.0 + s.s1 - s.s2 - s.c3) / 4.0;
  const double c = (1.0 - s.s1 + s.s2 - s.c3) / 4.0;
  const double d = (1.0 - s.s1 - s.s2 + s.c3) / 4.0;
  return a >= -tol && b >= -tol && c >= -tol && d >= -tol;
}

RealXState from_bloch(const BlochXState& s) {
  if (!bloch_in_domain(s))
    throw std::invalid_argument(
        "from_bloch: coordinates outside the physical domain");
  RealXState out{(1.0 + s.s1 + s.s2 + s.c3) / 4.0,
                 (1.0 + s.s1 - s.s2 - s.c3) / 4.0,
                 (1.0 - s.s1 + s.s2 - s.c3) / 4.0,
                 (1.0 - s.s1 - s.s2 + s.c3) / 4.0,
                 std::abs(s.c1 - s.c2) / 4.0,
                 std::abs(s.c1 + s.c2) / 4.0};
  ValidityReport ignored;
  return sanitized(out, ignored);
}

RealXState swap_parties(const RealXState& s) {
  return RealXState{s.a, s.c, s.b, s.d, s.u, s.v};
}

}  // namespace xdiscord
