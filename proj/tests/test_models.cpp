#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "test_util.hpp"
#include "xdiscord/discord.hpp"
#include "xdiscord/entropy.hpp"
#include "xdiscord/models.hpp"

using namespace xdiscord;
using namespace xdiscord::testing;

namespace {

// Signed thermal correlators straight from the dense Gibbs matrix, before
// any modulus stripping.
BlochXState signed_correlator_oracle(const XYZParams& p) {
  Eigen::Matrix4d h = Eigen::Matrix4d::Zero();
  h(0, 0) = -0.5 * (p.Jz + p.B1 + p.B2);
  h(1, 1) = -0.5 * (-p.Jz + p.B1 - p.B2);
  h(2, 2) = -0.5 * (-p.Jz - p.B1 + p.B2);
  h(3, 3) = -0.5 * (p.Jz - p.B1 - p.B2);
  h(0, 3) = h(3, 0) = -0.5 * (p.Jx - p.Jy);
  h(1, 2) = h(2, 1) = -0.5 * (p.Jx + p.Jy);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(h);
  Eigen::Vector4d boltz;
  for (int i = 0; i < 4; ++i) boltz[i] = std::exp(-solver.eigenvalues()[i] / p.T);
  const Eigen::Matrix4d rho =
      solver.eigenvectors() * boltz.asDiagonal() *
      solver.eigenvectors().transpose() / boltz.sum();
  BlochXState b;
  b.s1 = rho(0, 0) + rho(1, 1) - rho(2, 2) - rho(3, 3);
  b.s2 = rho(0, 0) - rho(1, 1) + rho(2, 2) - rho(3, 3);
  b.c3 = rho(0, 0) - rho(1, 1) - rho(2, 2) + rho(3, 3);
  b.c1 = 2 * (rho(0, 3) + rho(1, 2));
  b.c2 = 2 * (rho(1, 2) - rho(0, 3));
  return b;
}

XYZParams random_xyz(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  std::uniform_real_distribution<double> temp(0.2, 5.0);
  return XYZParams{unif(rng), unif(rng), unif(rng),
                   unif(rng), unif(rng), temp(rng)};
}

}  // namespace

TEST_CASE("horodecki family") {
  const RealXState bell = horodecki(1.0, 0.3);
  CHECK(bell.a == doctest::Approx(0.5));
  CHECK(bell.u == doctest::Approx(0.5));
  CHECK(bell.b == 0.0);

  const RealXState pure01 = horodecki(0.0, 1.0);
  CHECK(pure01.b == doctest::Approx(1.0));
  CHECK(discord(pure01).q == doctest::Approx(0.0).epsilon(1e-12));

  const RealXState cross = horodecki(0.228, 0.101234);
  CHECK(q0(cross) == doctest::Approx(q_pi2(cross)).epsilon(1e-5));

  CHECK_THROWS_AS(horodecki(-0.1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(horodecki(0.5, 1.5), std::invalid_argument);
}

TEST_CASE("phase_flip family") {
  const RealXState full = phase_flip(0.65, 0.65, 0.249, 0.249, 0.5, 1.0);
  CHECK(full.u == 0.0);
  CHECK(full.v == 0.0);

  const RealXState none = phase_flip(0.65, 0.65, 0.249, 0.249, 0.5, 0.0);
  const RealXState direct =
      from_bloch(BlochXState{0.65, 0.65, 0.249, 0.249, 0.5});
  CHECK(none.a == doctest::Approx(direct.a).epsilon(1e-14));
  CHECK(none.u == doctest::Approx(direct.u).epsilon(1e-14));
  CHECK(none.v == doctest::Approx(direct.v).epsilon(1e-14));

  const RealXState cross = phase_flip(0.65, 0.65, 0.249, 0.249, 0.5, 0.315789);
  CHECK(q0(cross) == doctest::Approx(q_pi2(cross)).epsilon(1e-5));

  // The diagonal never moves; only the off-diagonals shrink by (1-p)^2.
  for (double p : {0.1, 0.5, 0.9}) {
    const RealXState s = phase_flip(0.65, 0.65, 0.249, 0.249, 0.5, p);
    CHECK(s.a == doctest::Approx(none.a).epsilon(1e-14));
    CHECK(s.d == doctest::Approx(none.d).epsilon(1e-14));
    const double f = (1 - p) * (1 - p);
    CHECK(s.u == doctest::Approx(f * none.u).epsilon(1e-13));
    CHECK(s.v == doctest::Approx(f * none.v).epsilon(1e-13));
  }

  CHECK_THROWS_AS(phase_flip(0, 0, 1, 1, 1, 0.5), std::invalid_argument);
}

TEST_CASE("xyz_thermal examples") {
  const RealXState hot = xyz_thermal(XYZParams{1, 1, 1.02, 1, 1, 1e8});
  CHECK(std::abs(hot.a - 0.25) < 1e-6);
  CHECK(std::abs(hot.u) < 1e-6);
  CHECK(std::abs(hot.v) < 1e-6);

  const RealXState cross = xyz_thermal(XYZParams{1, 1, 1.02, 1, 1, 0.81296});
  CHECK(q0(cross) == doctest::Approx(q_pi2(cross)).epsilon(1e-4).scale(1.0));

  CHECK_THROWS_AS(xyz_thermal(XYZParams{1, 1, 1, 0, 0, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("xyz_thermal matches the dense Gibbs oracle") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 500; ++trial) {
    const XYZParams p = random_xyz(rng);
    const RealXState got = xyz_thermal(p);
    const RealXState ref = gibbs_oracle(p);
    CHECK(std::abs(got.a - ref.a) < 1e-10);
    CHECK(std::abs(got.b - ref.b) < 1e-10);
    CHECK(std::abs(got.c - ref.c) < 1e-10);
    CHECK(std::abs(got.d - ref.d) < 1e-10);
    CHECK(std::abs(got.u - ref.u) < 1e-10);
    CHECK(std::abs(got.v - ref.v) < 1e-10);
    CHECK(validate(got).valid);
  }
}

TEST_CASE("xyz_thermal survives very low temperatures") {
  const RealXState cold = xyz_thermal(XYZParams{1, 0.7, 1.02, 1, 1, 1e-4});
  CHECK(std::isfinite(cold.a));
  CHECK(cold.a + cold.b + cold.c + cold.d == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(validate(cold).valid);
  // beta = 1e4: the state is essentially the ground-state projector.
  CHECK(entropy_AB(cold) < 1e-8);
}

TEST_CASE("xyz_thermal degenerate-gap limits") {
  // Jx = Jy with B1 = -B2 drives R1 to zero; Jx = -Jy with B1 = B2
  // drives R2 to zero.
  const RealXState r1zero = xyz_thermal(XYZParams{1.3, 1.3, 0.4, 0.8, -0.8, 1.1});
  const RealXState r1near =
      xyz_thermal(XYZParams{1.3, 1.3 + 1e-13, 0.4, 0.8, -0.8 + 1e-13, 1.1});
  CHECK(std::abs(r1zero.u - r1near.u) < 1e-9);
  CHECK(validate(r1zero).valid);

  const RealXState r2zero = xyz_thermal(XYZParams{1.3, -1.3, 0.4, 0.8, 0.8, 1.1});
  const RealXState r2ref = gibbs_oracle(XYZParams{1.3, -1.3, 0.4, 0.8, 0.8, 1.1});
  CHECK(std::abs(r2zero.v - r2ref.v) < 1e-10);
  CHECK(std::abs(r2zero.b - r2ref.b) < 1e-10);
}

TEST_CASE("xyz_correlators") {
  const BlochXState sym = xyz_correlators(XYZParams{1.1, 1.1, 0.7, 0, 0, 0.9});
  CHECK(sym.s1 == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(sym.s2 == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(sym.c1 == doctest::Approx(sym.c2).epsilon(1e-13));

  const BlochXState hot = xyz_correlators(XYZParams{1, 0.5, 1.02, 1, 1, 1e8});
  CHECK(std::abs(hot.s1) < 1e-6);
  CHECK(std::abs(hot.c1) < 1e-6);
  CHECK(std::abs(hot.c3) < 1e-6);

  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 500; ++trial) {
    const XYZParams p = random_xyz(rng);
    const BlochXState got = xyz_correlators(p);
    const BlochXState ref = signed_correlator_oracle(p);
    CHECK(std::abs(got.s1 - ref.s1) < 1e-10);
    CHECK(std::abs(got.s2 - ref.s2) < 1e-10);
    CHECK(std::abs(got.c1 - ref.c1) < 1e-10);
    CHECK(std::abs(got.c2 - ref.c2) < 1e-10);
    CHECK(std::abs(got.c3 - ref.c3) < 1e-10);
  }
}

TEST_CASE("dipolar delegates to the mapped exchange model") {
  const RealXState field_free = dipolar(DipolarParams{1.0, 0.0, 1.0, 4.0, 1.0});
  const BlochXState b = to_bloch(field_free);
  CHECK(b.s1 == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(b.s2 == doctest::Approx(0.0).epsilon(1e-13));

  const DipolarParams dp{1.0, 0.35, 1.0, 4.0, 1.0};
  const RealXState got = dipolar(dp);
  const RealXState ref = xyz_thermal(XYZParams{-1.0, -1.0, 2.0, 0.35, 1.4, 1.0});
  CHECK(got.a == doctest::Approx(ref.a).epsilon(1e-14));
  CHECK(got.u == doctest::Approx(ref.u).epsilon(1e-14));
  CHECK(got.v == doctest::Approx(ref.v).epsilon(1e-14));
}

TEST_CASE("bell_diagonal geometry") {
  const RealXState v1 = bell_diagonal(-1, 1, 1);
  CHECK(validate(v1).valid);
  CHECK(discord(v1).q == doctest::Approx(kLn2).epsilon(1e-12));

  const RealXState o1 = bell_diagonal(1.0 / 3, 1.0 / 3, 1.0 / 3);
  CHECK(validate(o1).valid);

  CHECK_THROWS_AS(bell_diagonal(1, 1, 1), std::domain_error);
  CHECK_THROWS_AS(bell_diagonal(0.3, 0.25, 0.5), std::domain_error);
}

TEST_CASE("bell_subdomain") {
  CHECK(bell_subdomain(0.3, 0.25, 0.31).label == Branch::Q0);
  CHECK(bell_subdomain(0.3, 0.25, 0.29).label == Branch::QPi2);
  for (double c3 : {-0.6, 0.2, 0.9}) {
    CHECK(bell_subdomain(0, 0, c3).label == Branch::Q0);
    CHECK(discord(bell_diagonal(0, 0, c3)).q ==
          doctest::Approx(0.0).epsilon(1e-10));
  }
  for (double c : {0.1, 0.25, 1.0 / 3})
    CHECK(bell_subdomain(c, c, c).label == Branch::Q0);
  CHECK_THROWS_AS(bell_subdomain(1, 1, 1), std::domain_error);
}

TEST_CASE("bell-diagonal endpoint curvatures share their zero set") {
  std::mt19937_64 rng(127);
  std::uniform_real_distribution<double> unif(-0.8, 0.8);
  int checked = 0;
  while (checked < 100) {
    const double c1 = unif(rng), c2 = unif(rng);
    const double c3 = std::max(std::abs(c1), std::abs(c2));
    if (std::abs(c1 + c2) > 1 - c3 || std::abs(c1 - c2) > 1 + c3) continue;
    ++checked;
    const RealXState s = bell_diagonal(c1, c2, c3);
    CHECK(std::abs(cond_entropy_d2_at_0(s).value) < 1e-9);
    CHECK(std::abs(cond_entropy_d2_at_pi2(s).value) < 1e-9);
  }
}

TEST_CASE("all families generate valid states") {
  std::mt19937_64 rng(131);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::uniform_real_distribution<double> sym(-1.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    CHECK(validate(horodecki(unif(rng), unif(rng))).valid);
    CHECK(validate(xyz_thermal(random_xyz(rng))).valid);
    CHECK(validate(dipolar(DipolarParams{1.0, sym(rng), 1.0,
                                         1.0 + 3 * unif(rng),
                                         0.2 + 2 * unif(rng)}))
              .valid);
    const double c1 = sym(rng), c2 = sym(rng), c3 = sym(rng);
    if (std::abs(c1 + c2) <= 1 - c3 && std::abs(c1 - c2) <= 1 + c3)
      CHECK(validate(bell_diagonal(c1, c2, c3)).valid);
    const double s1 = 0.8 * sym(rng);
    CHECK(validate(phase_flip(s1, 0.5 * s1, 0.1 * sym(rng), 0.1 * sym(rng),
                              0.5, unif(rng)))
              .valid);
  }
}
