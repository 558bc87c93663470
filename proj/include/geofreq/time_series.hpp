#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace geofreq {

/// Uniformly sampled multi-channel series, stored row-major.
///
/// Timestamps are kept as given so that files read from disk can be echoed
/// back bit for bit. The constructor checks that the spacing is uniform to
/// 1e-9 relative and that every value is finite.
class TimeSeries {
 public:
  static constexpr double kSpacingJitter = 1e-9;

  TimeSeries(std::vector<std::string> channels, std::vector<double> times,
             std::vector<double> values);

  /// Grid t_k = t0 + k dt.
  static TimeSeries uniform(std::vector<std::string> channels, double t0, double dt,
                            std::vector<double> values);

  std::size_t size() const noexcept { return times_.size(); }
  std::size_t channel_count() const noexcept { return channels_.size(); }
  const std::vector<std::string>& channels() const noexcept { return channels_; }

  double t0() const noexcept { return times_.front(); }
  double dt() const noexcept { return dt_; }
  double time(std::size_t k) const { return times_[k]; }
  std::span<const double> times() const noexcept { return times_; }

  double value(std::size_t k, std::size_t ch) const { return values_[k * channels_.size() + ch]; }
  std::span<const double> row(std::size_t k) const {
    return std::span<const double>(values_).subspan(k * channels_.size(), channels_.size());
  }
  std::vector<double> channel(std::size_t ch) const;
  std::span<const double> values() const noexcept { return values_; }

  /// Same grid and channel names, new samples.
  TimeSeries with_values(std::vector<double> values) const;

 private:
  std::vector<std::string> channels_;
  std::vector<double> times_;
  std::vector<double> values_;
  double dt_ = 0.0;
};

}  // namespace geofreq
