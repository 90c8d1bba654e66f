#include "xdiscord/models.hpp"

#include <cmath>
#include <stdexcept>

#include "math_util.hpp"
#include "xdiscord/entropy.hpp"

namespace xdiscord {

using detail::sq;

RealXState horodecki(double eps, double m) {
  if (eps < 0.0 || eps > 1.0 || m < 0.0 || m > 1.0)
    throw std::invalid_argument("horodecki: eps and m must lie in [0, 1]");
  return RealXState{eps / 2.0, (1.0 - eps) * m, (1.0 - eps) * (1.0 - m),
                    eps / 2.0, eps / 2.0, 0.0};
}

RealXState phase_flip(double s1, double s2, double c1, double c2, double c3,
                      double p) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("phase_flip: p must lie in [0, 1]");
  if (!bloch_in_domain(BlochXState{s1, s2, c1, c2, c3}))
    throw std::invalid_argument(
        "phase_flip: initial coordinates outside the physical domain");
  // Dephasing only shrinks the transverse correlators, so the output stays
  // physical for every p.
  const double f = sq(1.0 - p);
  return from_bloch(BlochXState{s1, s2, f * c1, f * c2, c3});
}

namespace {

// Scaled hyperbolic pieces of the XYZ Gibbs state. Everything carries a
// common factor exp(-shift) so that beta up to ~1e4 stays finite.
struct GibbsPieces {
  double ch1, sh1, ch2, sh2;  // e^{+-g} cosh/sinh(beta R/2), scaled
  double z;                   // partition function, scaled
  double r1, r2;
  double beta;
  double eg, emg;  // e^{+-g}, scaled
};

GibbsPieces gibbs_pieces(const XYZParams& p) {
  if (!(p.T > 0.0))
    throw std::invalid_argument("xyz_thermal: temperature must be positive");
  GibbsPieces gp;
  gp.beta = 1.0 / p.T;
  gp.r1 = std::hypot(p.B1 + p.B2, p.Jx - p.Jy);
  gp.r2 = std::hypot(p.B1 - p.B2, p.Jx + p.Jy);
  const double g = 0.5 * gp.beta * p.Jz;
  const double t1 = 0.5 * gp.beta * gp.r1;
  const double t2 = 0.5 * gp.beta * gp.r2;
  const double shift = std::max(g + t1, -g + t2);
  auto ex = [shift](double x) { return std::exp(x - shift); };
  gp.ch1 = 0.5 * (ex(g + t1) + ex(g - t1));
  gp.sh1 = 0.5 * (ex(g + t1) - ex(g - t1));
  gp.ch2 = 0.5 * (ex(-g + t2) + ex(-g - t2));
  gp.sh2 = 0.5 * (ex(-g + t2) - ex(-g - t2));
  gp.z = 2.0 * (gp.ch1 + gp.ch2);
  gp.eg = ex(g);
  gp.emg = ex(-g);
  return gp;
}

// (x / R) * scaled sinh term, with the R -> 0 limit beta*x/2 * e^{+-g}.
double sinh_ratio(double x, double r, double sh, double beta, double escale) {
  if (r > 1e-300) return (x / r) * sh;
  return 0.5 * beta * x * escale;
}

}  // namespace

RealXState xyz_thermal(const XYZParams& p) {
  const GibbsPieces gp = gibbs_pieces(p);
  const double tb = sinh_ratio(p.B1 + p.B2, gp.r1, gp.sh1, gp.beta, gp.eg);
  const double tu = sinh_ratio(p.Jx - p.Jy, gp.r1, gp.sh1, gp.beta, gp.eg);
  const double tb2 = sinh_ratio(p.B1 - p.B2, gp.r2, gp.sh2, gp.beta, gp.emg);
  const double tv = sinh_ratio(p.Jx + p.Jy, gp.r2, gp.sh2, gp.beta, gp.emg);
  RealXState out{(gp.ch1 + tb) / gp.z, (gp.ch2 + tb2) / gp.z,
                 (gp.ch2 - tb2) / gp.z, (gp.ch1 - tb) / gp.z,
                 std::abs(tu) / gp.z, std::abs(tv) / gp.z};
  ValidityReport ignored;
  return sanitized(out, ignored);
}

BlochXState xyz_correlators(const XYZParams& p) {
  const GibbsPieces gp = gibbs_pieces(p);
  const double tb = sinh_ratio(p.B1 + p.B2, gp.r1, gp.sh1, gp.beta, gp.eg);
  const double tu = sinh_ratio(p.Jx - p.Jy, gp.r1, gp.sh1, gp.beta, gp.eg);
  const double tb2 = sinh_ratio(p.B1 - p.B2, gp.r2, gp.sh2, gp.beta, gp.emg);
  const double tv = sinh_ratio(p.Jx + p.Jy, gp.r2, gp.sh2, gp.beta, gp.emg);
  BlochXState out;
  out.s1 = 2.0 * (tb + tb2) / gp.z;
  out.s2 = 2.0 * (tb - tb2) / gp.z;
  out.c1 = 2.0 * (tu + tv) / gp.z;
  out.c2 = 2.0 * (-tu + tv) / gp.z;
  out.c3 = 2.0 * (gp.ch1 - gp.ch2) / gp.z;
  return out;
}

RealXState dipolar(const DipolarParams& p) {
  if (p.D == 0.0)
    throw std::invalid_argument("dipolar: coupling constant must be nonzero");
  return xyz_thermal(XYZParams{-p.D, -p.D, 2.0 * p.D, p.gamma1 * p.B0,
                               p.gamma2 * p.B0, p.T});
}

RealXState bell_diagonal(double c1, double c2, double c3) {
  const double tol = kSumTol;
  if (std::abs(c1 + c2) > 1.0 - c3 + tol ||
      std::abs(c1 - c2) > 1.0 + c3 + tol)
    throw std::domain_error(
        "bell_diagonal: (c1, c2, c3) outside the tetrahedron");
  return RealXState{(1.0 + c3) / 4.0, (1.0 - c3) / 4.0, (1.0 - c3) / 4.0,
                    (1.0 + c3) / 4.0, std::abs(c1 - c2) / 4.0,
                    std::abs(c1 + c2) / 4.0};
}

SubdomainLabel bell_subdomain(double c1, double c2, double c3) {
  const RealXState s = bell_diagonal(c1, c2, c3);
  SubdomainLabel out;
  out.label = 2.0 * std::abs(c3) >= std::abs(c1 + c2) + std::abs(c1 - c2)
                  ? Branch::Q0
                  : Branch::QPi2;
  out.sign_d2_0 = cond_entropy_d2_at_0(s).sign();
  out.sign_d2_pi2 = cond_entropy_d2_at_pi2(s).sign();
  return out;
}

}  // namespace xdiscord
