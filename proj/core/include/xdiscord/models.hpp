#pragma once

#include "xdiscord/boundaries.hpp"
#include "xdiscord/xstate.hpp"

namespace xdiscord {

// Two-spin XYZ Hamiltonian parameters, all in the same energy units.
// Temperature uses k_B = 1.
struct XYZParams {
  double Jx{}, Jy{}, Jz{};
  double B1{}, B2{};
  double T{1.0};
};

// Dipolar coupled heteronuclear dimer stretched along z. D is the
// dipolar constant and doubles as the energy unit for normalized scans.
struct DipolarParams {
  double D{1.0};
  double B0{};
  double gamma1{1.0}, gamma2{1.0};
  double T{1.0};
};

// Mixture of a Bell state with two computational-basis projectors:
// a = d = u = eps/2, b = (1-eps)m, c = (1-eps)(1-m), v = 0.
RealXState horodecki(double eps, double m);

// Output of the phase-flip channel at parametrized time p applied to the
// initial correlators (s1, s2, c1, c2, c3): the diagonal is untouched and
// the transverse correlators shrink by (1-p)^2.
RealXState phase_flip(double s1, double s2, double c1, double c2, double c3,
                      double p);

// Gibbs state exp(-H/T)/Z of the XYZ dimer; overflow-safe down to very
// low temperatures.
RealXState xyz_thermal(const XYZParams& params);

// Thermal correlators straight from the partition function.
BlochXState xyz_correlators(const XYZParams& params);

// Delegates to xyz_thermal with Jx = Jy = -D, Jz = 2D and local fields
// B1 = gamma1*B0, B2 = gamma2*B0.
RealXState dipolar(const DipolarParams& params);

// Bell-diagonal state from a point of the (c1, c2, c3) tetrahedron.
// Throws std::domain_error outside the tetrahedron.
RealXState bell_diagonal(double c1, double c2, double c3);

// For Bell-diagonal states both bifurcation boundaries coincide and the
// intermediate subdomain never occurs: Q0 iff 2|c3| >= |c1+c2| + |c1-c2|.
SubdomainLabel bell_subdomain(double c1, double c2, double c3);

}  // namespace xdiscord
