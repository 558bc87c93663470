#include <geofreq/error.hpp>
#include <geofreq/park.hpp>
#include <geofreq/signals.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace geofreq;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kW0 = 100.0 * kPi;
constexpr double kThird = 2.0 * kPi / 3.0;

// direct trigonometric evaluation of the amplitude-invariant transform
Vec3 park_by_hand(const Vec3& v, double theta) {
  const double a = v.x1, b = v.x2, c = v.x3;
  return {2.0 / 3.0 * (a * std::sin(theta) + b * std::sin(theta - kThird) + c * std::sin(theta + kThird)),
          2.0 / 3.0 * (a * std::cos(theta) + b * std::cos(theta - kThird) + c * std::cos(theta + kThird)),
          (a + b + c) / 3.0};
}

}  // namespace

TEST(Park, SynchronousBalancedSetIsConstant) {
  const auto m = make_scenario(ScenarioId::E0);
  const ParkConfig cfg{kW0, 0.0};
  for (double t : {0.0, 0.0013, 0.0071, 0.019}) {
    const auto dq = to_dq0(eval_jet(m, t), cfg);
    EXPECT_NEAR(dq.vdq0.x1, 12.0, 1e-12);
    EXPECT_NEAR(dq.vdq0.x2, 0.0, 1e-12);
    EXPECT_NEAR(dq.vdq0.x3, 0.0, 1e-12);
    EXPECT_NEAR(norm(dq.dvdq0), 0.0, 1e-9);
    EXPECT_NEAR(norm(dq.ddvdq0), 0.0, 1e-6);
  }
}

TEST(Park, MatchesDirectTrigonometry) {
  oracle::Rng rng(21);
  for (int k = 0; k < 200; ++k) {
    const Jet2 j = rng.rotating_jet();
    const ParkConfig cfg{rng.uniform(-400, 400), rng.uniform(-3, 3)};
    const auto dq = to_dq0(j, cfg);
    EXPECT_LE(oracle::rel(dq.vdq0, park_by_hand(j.v, cfg.w_dq * j.t + cfg.theta0)), 1e-13);
    // rotating-frame derivative by differencing the transform of v(t) = v + dv s + ddv s^2 / 2
    const double h = 1e-6;
    auto vdq = [&](double s) {
      return park_by_hand(j.v + s * j.dv + 0.5 * s * s * j.ddv, cfg.w_dq * (j.t + s) + cfg.theta0);
    };
    const Vec3 fd = (vdq(h) - vdq(-h)) / (2 * h);
    EXPECT_LE(oracle::len(dq.dvdq0 - fd) / std::max(1.0, oracle::len(fd)), 1e-6);
  }
}

TEST(Park, ClarkeFrameSeesTheRotation) {
  const auto m = make_scenario(ScenarioId::E0);
  const ParkConfig clarke{0.0, 0.0};
  for (double t : {0.0011, 0.0047}) {
    const auto dq = to_dq0(eval_jet(m, t), clarke);
    // (v_d, v_q) = 12 (cos(w t), sin(w t)) rotates at w_o
    EXPECT_NEAR(dq.vdq0.x1, 12 * std::cos(kW0 * t), 1e-12);
    EXPECT_NEAR(dq.vdq0.x2, 12 * std::sin(kW0 * t), 1e-12);
    const auto inv = dq0_invariants(dq, clarke);
    EXPECT_NEAR(inv.delta_omega, kW0, 1e-9 * kW0);
    EXPECT_EQ(derivative_frame_check(dq, clarke).clarke_gap, 0.0);
  }
}

TEST(Park, ZeroInputGivesZeroOutput) {
  const auto dq = to_dq0(Jet2{0.3, {}, {}, {}}, ParkConfig{kW0, 0.4});
  EXPECT_EQ(dq.vdq0, Vec3{});
  EXPECT_EQ(dq.dvdq0, Vec3{});
  try {
    dq0_invariants(dq, ParkConfig{kW0, 0.4});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateSpeed);
  }
  EXPECT_THROW(to_dq0(Jet2{}, ParkConfig{NAN, 0.0}), Error);
}

TEST(ParkInvariants, StationarySynchronous) {
  const DqoJet j{0.0, {12.0, 0.0, 0.0}, {}, {}};
  const ParkConfig cfg{kW0, 0.0};
  const auto inv = dq0_invariants(j, cfg);
  EXPECT_EQ(inv.rho, 0.0);
  EXPECT_EQ(inv.delta_omega, 0.0);
  EXPECT_LE(oracle::rel(inv.omega_vec, kW0 * e3), 1e-15);
  const auto chk = derivative_frame_check(j, cfg);
  EXPECT_TRUE(chk.termwise_equal);
  ASSERT_TRUE(chk.balanced_residual.has_value());
  EXPECT_LE(*chk.balanced_residual, 1e-15);
}

TEST(ParkInvariants, ConstantDqAtOffsetFrameSpeed) {
  // constant (v_d, v_q) in a frame at w_o + 2 pi: the abc signal turns at exactly w_dq
  const ParkConfig cfg{kW0 + 2 * kPi, 0.2};
  const DqoJet j{0.013, {7.0, -3.0, 0.0}, {}, {}};
  const auto inv = dq0_invariants(j, cfg);
  EXPECT_EQ(inv.delta_omega, 0.0);
  EXPECT_LE(oracle::rel(inv.omega_vec, cfg.w_dq * e3), 1e-15);
  const auto g = invariants(from_dq0(j, cfg));
  EXPECT_NEAR(g.omega_mag, cfg.w_dq, 1e-9 * cfg.w_dq);
  EXPECT_NEAR(g.rho, 0.0, 1e-9);
}

TEST(ParkInvariants, InertialDerivativeOracleWithZeroSequence) {
  oracle::Rng rng(31);
  for (int k = 0; k < 1000; ++k) {
    const ParkConfig cfg{rng.uniform(-500, 500), rng.uniform(-3, 3)};
    const DqoJet j{rng.unit(), rng.vec(20), rng.vec(5e3), rng.vec(2e6)};
    if (oracle::len(j.vdq0) < 1.0) continue;
    const auto inv = dq0_invariants(j, cfg);
    const auto [d, q, o] = j.vdq0;
    const auto [d1, q1, o1] = j.dvdq0;
    const Vec3 inertial{d1 - cfg.w_dq * q, q1 + cfg.w_dq * d, o1};
    const Vec3 rebuilt = inv.rho * j.vdq0 + oracle::crs(inv.omega_vec, j.vdq0);
    EXPECT_LE(oracle::rel(rebuilt, inertial), 1e-9);
    const auto chk = derivative_frame_check(j, cfg);
    EXPECT_LE(chk.sum_residual, 1e-9);
    EXPECT_FALSE(chk.termwise_equal);
  }
}

TEST(ParkInvariants, BalancedSplitWithDeviation) {
  oracle::Rng rng(41);
  for (int k = 0; k < 500; ++k) {
    const ParkConfig cfg{rng.uniform(0, 400), 0.0};
    const DqoJet j{rng.unit(), {rng.uniform(-20, 20), rng.uniform(-20, 20), 0.0},
                   {rng.uniform(-5e3, 5e3), rng.uniform(-5e3, 5e3), 0.0}, {}};
    const auto inv = dq0_invariants(j, cfg);
    const auto [d, q, o] = j.vdq0;
    const auto [d1, q1, o1] = j.dvdq0;
    EXPECT_NEAR(inv.delta_omega, (d * q1 - q * d1) / (d * d + q * q), 1e-12 * std::abs(inv.delta_omega) + 1e-12);
    EXPECT_NEAR(inv.omega_vec.x3, cfg.w_dq + inv.delta_omega, 1e-9 * std::abs(inv.omega_vec.x3));
    const auto chk = derivative_frame_check(j, cfg);
    ASSERT_TRUE(chk.balanced_residual.has_value());
    EXPECT_LE(*chk.balanced_residual, 1e-9);
  }
}

TEST(ParkRoundTrip, GeometricInvariantsSurvive) {
  oracle::Rng rng(51);
  for (int k = 0; k < 1000; ++k) {
    const Jet2 j = rng.rotating_jet();
    const ParkConfig cfg{rng.uniform(-500, 500), rng.uniform(-3, 3)};
    const Jet2 back = from_dq0(to_dq0(j, cfg), cfg);
    EXPECT_LE(oracle::rel(back.v, j.v), 1e-12);
    EXPECT_LE(oracle::rel(back.dv, j.dv), 1e-12);
    EXPECT_LE(oracle::rel(back.ddv, j.ddv), 1e-12);
    const auto g0 = invariants(j), g1 = invariants(back);
    const double s = std::max(std::hypot(g0.rho, g0.omega_mag), std::abs(g0.xi));
    EXPECT_LE(std::abs(g0.rho - g1.rho) / s, 1e-9);
    EXPECT_LE(std::abs(g0.omega_mag - g1.omega_mag) / s, 1e-9);
    EXPECT_LE(std::abs(g0.xi - g1.xi) / s, 1e-9);
  }
}
