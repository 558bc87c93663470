#include <geofreq/numdiff.hpp>

#include <geofreq/error.hpp>

#include <cmath>
#include <sstream>
#include <string>

namespace geofreq {
namespace {

constexpr std::size_t kStencilHalfWidth = 2;

void require_three_channels(const TimeSeries& series) {
  if (series.channel_count() != 3) {
    throw Error(ErrorKind::WrongChannelCount,
                "expected 3 voltage channels, got " + std::to_string(series.channel_count()));
  }
}

}  // namespace

ChannelDerivatives differentiate_channel(std::span<const double> x, double dt) {
  if (x.size() < 2 * kStencilHalfWidth + 1) {
    throw Error(ErrorKind::TooFewSamples,
                "differentiation needs at least 5 samples, got " + std::to_string(x.size()));
  }
  const std::size_t n = x.size() - 2 * kStencilHalfWidth;
  ChannelDerivatives out;
  out.first = kStencilHalfWidth;
  out.d1.resize(n);
  out.d2.resize(n);
  const double h1 = 12.0 * dt;
  const double h2 = 12.0 * dt * dt;
  for (std::size_t i = 0; i < n; ++i) {
    const double xm2 = x[i];
    const double xm1 = x[i + 1];
    const double x0 = x[i + 2];
    const double xp1 = x[i + 3];
    const double xp2 = x[i + 4];
    out.d1[i] = (xm2 - 8.0 * xm1 + 8.0 * xp1 - xp2) / h1;
    out.d2[i] = (-xm2 + 16.0 * xm1 - 30.0 * x0 + 16.0 * xp1 - xp2) / h2;
  }
  return out;
}

std::vector<Jet2> differentiate(const TimeSeries& series) {
  require_three_channels(series);
  std::array<std::vector<double>, 3> raw;
  std::array<ChannelDerivatives, 3> der;
  for (std::size_t c = 0; c < 3; ++c) {
    raw[c] = series.channel(c);
    der[c] = differentiate_channel(raw[c], series.dt());
  }

  const std::size_t first = der[0].first;
  std::vector<Jet2> jets(der[0].d1.size());
  for (std::size_t i = 0; i < jets.size(); ++i) {
    const std::size_t k = first + i;
    jets[i] = Jet2{series.time(k),
                   {raw[0][k], raw[1][k], raw[2][k]},
                   {der[0].d1[i], der[1].d1[i], der[2].d1[i]},
                   {der[0].d2[i], der[1].d2[i], der[2].d2[i]}};
  }
  return jets;
}

TimeSeries lowpass_first_order(const TimeSeries& series, double time_constant) {
  if (!(time_constant > 0.0) || !std::isfinite(time_constant)) {
    std::ostringstream os;
    os << "filter time constant " << time_constant << " s must be positive";
    throw Error(ErrorKind::InvalidParameter, os.str());
  }
  const double alpha = series.dt() / (time_constant + series.dt());
  const std::size_t channels = series.channel_count();
  std::vector<double> y(series.values().begin(), series.values().end());
  for (std::size_t k = 1; k < series.size(); ++k) {
    for (std::size_t c = 0; c < channels; ++c) {
      const double prev = y[(k - 1) * channels + c];
      y[k * channels + c] = prev + alpha * (series.value(k, c) - prev);
    }
  }
  return series.with_values(std::move(y));
}

TimeSeries remove_zero_sequence(const TimeSeries& series) {
  require_three_channels(series);
  std::vector<double> y(series.values().begin(), series.values().end());
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto r = series.row(k);
    const double mean = (r[0] + r[1] + r[2]) / 3.0;
    for (std::size_t c = 0; c < 3; ++c) {
      y[3 * k + c] = r[c] - mean;
    }
  }
  return series.with_values(std::move(y));
}

}  // namespace geofreq
