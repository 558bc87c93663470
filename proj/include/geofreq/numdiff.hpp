#pragma once

#include <geofreq/frenet.hpp>
#include <geofreq/time_series.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace geofreq {

/// Stencil derivatives of one channel at the retained interior samples
/// [first, first + d1.size()).
struct ChannelDerivatives {
  std::size_t first = 0;
  std::vector<double> d1;
  std::vector<double> d2;
};

/// Centred five-point stencils: fourth-order first derivative and a second
/// derivative exact through quartics. The outermost two samples on each
/// side are dropped. Throws Error{TooFewSamples} below five samples.
ChannelDerivatives differentiate_channel(std::span<const double> x, double dt);

/// Jets of a three-channel voltage series, one per retained sample, with
/// timestamps copied from the input.
/// Throws TooFewSamples or WrongChannelCount.
std::vector<Jet2> differentiate(const TimeSeries& series);

/// Per-channel discrete first-order smoothing
///   y[k] = y[k-1] + dt / (time_constant + dt) * (x[k] - y[k-1]),
/// seeded with y[0] = x[0]. Causal. Throws InvalidParameter unless
/// time_constant > 0.
TimeSeries lowpass_first_order(const TimeSeries& series, double time_constant);

/// Subtracts the instantaneous mean (v_a + v_b + v_c) / 3 from each channel.
/// Throws WrongChannelCount.
TimeSeries remove_zero_sequence(const TimeSeries& series);

}  // namespace geofreq
