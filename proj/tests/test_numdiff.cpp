#include <geofreq/error.hpp>
#include <geofreq/frenet.hpp>
#include <geofreq/numdiff.hpp>
#include <geofreq/signals.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace geofreq;

namespace {

constexpr double kW0 = 100.0 * std::numbers::pi;

double e0_worst_error(double dt) {
  const auto jets = differentiate(sample(make_scenario(ScenarioId::E0), 0.0, 0.1, dt));
  double worst = 0.0;
  for (const auto& j : jets) worst = std::max(worst, std::abs(invariants(j).omega_mag - kW0) / kW0);
  return worst;
}

}  // namespace

TEST(Stencil, ExactOnQuartics) {
  const double dt = 0.05;
  std::vector<double> x(30);
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double t = dt * k;
    x[k] = 3 - t + 2 * t * t - 0.7 * t * t * t + 0.1 * t * t * t * t;
  }
  const auto d = differentiate_channel(x, dt);
  ASSERT_EQ(d.first, 2u);
  ASSERT_EQ(d.d1.size(), x.size() - 4);
  for (std::size_t i = 0; i < d.d1.size(); ++i) {
    const double t = dt * (d.first + i);
    EXPECT_NEAR(d.d1[i], -1 + 4 * t - 2.1 * t * t + 0.4 * t * t * t, 1e-11);
    EXPECT_NEAR(d.d2[i], 4 - 4.2 * t + 1.2 * t * t, 1e-9);
  }
}

TEST(Stencil, HandComputedWeights) {
  // samples of t^5 at t = -2..2, h = 1: (-32 + 8 + 8 - 32) / 12 = -4, the
  // stencil's leading error term -h^4 f^(5) / 30 since the true slope is 0
  const std::vector<double> x{-32, -1, 0, 1, 32};
  const auto d = differentiate_channel(x, 1.0);
  ASSERT_EQ(d.d1.size(), 1u);
  EXPECT_DOUBLE_EQ(d.d1[0], -4.0);
  EXPECT_DOUBLE_EQ(d.d2[0], 0.0);
}

TEST(Stencil, TooFewSamples) {
  const std::vector<double> x{1, 2, 3, 4};
  try {
    differentiate_channel(x, 1.0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooFewSamples);
  }
}

TEST(Differentiate, JetsKeepInputTimestamps) {
  const auto s = sample(make_scenario(ScenarioId::E3), 0.0, 0.01, 1e-4);
  const auto jets = differentiate(s);
  ASSERT_EQ(jets.size(), s.size() - 4);
  for (std::size_t i = 0; i < jets.size(); ++i) {
    EXPECT_EQ(jets[i].t, s.time(i + 2));
    EXPECT_EQ(jets[i].v.x2, s.value(i + 2, 1));
  }
  const TimeSeries two({"a", "b"}, {0, 1, 2, 3, 4}, std::vector<double>(10, 1.0));
  EXPECT_THROW(differentiate(two), Error);
}

TEST(Differentiate, E0FrequencyAndFourthOrderConvergence) {
  const double coarse = e0_worst_error(1e-4);
  const double fine = e0_worst_error(5e-5);
  EXPECT_LE(coarse, 1e-3);
  EXPECT_GE(coarse / fine, 8.0);
  EXPECT_GE(e0_worst_error(2e-4) / coarse, 8.0);
}

TEST(Differentiate, JetsApproachExactOnes) {
  const auto m = make_scenario(ScenarioId::E8);
  const auto jets = differentiate(sample(m, 1.0, 1.01, 1e-5));
  for (std::size_t i = 0; i < jets.size(); i += 97) {
    const Jet2 exact = eval_jet(m, jets[i].t);
    EXPECT_LE(oracle::rel(jets[i].dv, exact.dv), 1e-7);
    EXPECT_LE(oracle::rel(jets[i].ddv, exact.ddv), 1e-5);
  }
}

TEST(Lowpass, StepResponseIsGeometric) {
  const double dt = 1e-3, tau = 4e-3;
  std::vector<double> x(50, 1.0);
  x[0] = 0.0;
  const auto y = lowpass_first_order(TimeSeries::uniform({"u"}, 0.0, dt, x), tau);
  const double a = dt / (tau + dt);
  for (std::size_t k = 0; k < x.size(); ++k) {
    EXPECT_NEAR(y.value(k, 0), 1.0 - std::pow(1.0 - a, static_cast<double>(k)), 1e-14);
  }
}

TEST(Lowpass, ConstantPassesAndBadTauRejected) {
  const auto s = TimeSeries::uniform({"a", "b", "c"}, 0.0, 1e-4, std::vector<double>(30, 7.0));
  const auto y = lowpass_first_order(s, 1e-3);
  for (double v : y.values()) EXPECT_EQ(v, 7.0);
  for (double bad : {0.0, -1.0, std::nan("")}) {
    try {
      lowpass_first_order(s, bad);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidParameter);
    }
  }
}

TEST(ZeroSequence, RemovesCommonMode) {
  const auto s = TimeSeries::uniform({"va", "vb", "vc"}, 0.0, 1.0, {1, 2, 6, -3, 0, 3});
  const auto y = remove_zero_sequence(s);
  EXPECT_EQ(y.row(0)[0], -2.0);
  EXPECT_EQ(y.row(0)[1], -1.0);
  EXPECT_EQ(y.row(0)[2], 3.0);
  EXPECT_EQ(y.row(1)[0], -3.0);
  EXPECT_EQ(y.row(1)[2], 3.0);
  EXPECT_THROW(remove_zero_sequence(TimeSeries::uniform({"u"}, 0.0, 1.0, {1, 2})), Error);
}
