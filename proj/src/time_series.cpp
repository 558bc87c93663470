#include <geofreq/time_series.hpp>

#include <geofreq/error.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace geofreq {

TimeSeries::TimeSeries(std::vector<std::string> channels, std::vector<double> times,
                       std::vector<double> values)
    : channels_(std::move(channels)), times_(std::move(times)), values_(std::move(values)) {
  if (channels_.empty()) {
    throw Error(ErrorKind::WrongChannelCount, "time series needs at least one channel");
  }
  if (times_.size() < 2) {
    throw Error(ErrorKind::TooFewSamples, "time series needs at least two samples");
  }
  if (values_.size() != times_.size() * channels_.size()) {
    throw Error(ErrorKind::InvalidRange, "value count does not match rows x channels");
  }
  if (!std::all_of(times_.begin(), times_.end(), [](double t) { return std::isfinite(t); }) ||
      !std::all_of(values_.begin(), values_.end(), [](double x) { return std::isfinite(x); })) {
    throw Error(ErrorKind::InvalidRange, "time series contains non-finite values");
  }

  dt_ = (times_.back() - times_.front()) / static_cast<double>(times_.size() - 1);
  if (!(dt_ > 0.0)) {
    throw Error(ErrorKind::InvalidRange, "timestamps must increase");
  }
  for (std::size_t k = 1; k < times_.size(); ++k) {
    const double step = times_[k] - times_[k - 1];
    if (std::abs(step - dt_) > kSpacingJitter * dt_) {
      std::ostringstream os;
      os.precision(17);
      os << "non-uniform spacing at row " << k << ": step " << step << " s against mean " << dt_
         << " s";
      throw Error(ErrorKind::InvalidRange, os.str());
    }
  }
}

TimeSeries TimeSeries::uniform(std::vector<std::string> channels, double t0, double dt,
                               std::vector<double> values) {
  if (channels.empty() || !(dt > 0.0)) {
    throw Error(ErrorKind::InvalidRange, "uniform grid needs channels and dt > 0");
  }
  const std::size_t n = values.size() / channels.size();
  std::vector<double> times(n);
  for (std::size_t k = 0; k < n; ++k) {
    times[k] = t0 + static_cast<double>(k) * dt;
  }
  return TimeSeries(std::move(channels), std::move(times), std::move(values));
}

std::vector<double> TimeSeries::channel(std::size_t ch) const {
  std::vector<double> out(size());
  for (std::size_t k = 0; k < size(); ++k) {
    out[k] = value(k, ch);
  }
  return out;
}

TimeSeries TimeSeries::with_values(std::vector<double> values) const {
  return TimeSeries(channels_, times_, std::move(values));
}

}  // namespace geofreq
