#pragma once

#include <geofreq/frenet.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace geofreq {

/// A scalar signal and its discrete Hilbert transform on a uniform grid.
struct AnalyticPair {
  std::vector<double> u;
  std::vector<double> uh;
  double dt = 0.0;
  double t0 = 0.0;
};

/// Spectral Hilbert transform: forward DFT, keep bins 0 and N/2, double the
/// positive half, zero the negative half, inverse DFT, take the imaginary
/// part. Any length >= 16 works; powers of two are fastest.
/// Throws TooShort, or InvalidRange for non-finite input or dt <= 0.
AnalyticPair analytic_embed(std::span<const double> u, double dt, double t0 = 0.0);

/// Samples [first, first + values.size()) of the source window.
struct SampleTrack {
  std::size_t first = 0;
  std::vector<double> values;
};

/// phi' = (uh' u - u' uh) / (u^2 + uh^2) with stencil derivatives.
/// Throws DegenerateEnvelope where u^2 + uh^2 <= envelope_floor.
SampleTrack instantaneous_frequency_classical(const AnalyticPair& p,
                                              double envelope_floor = 1e-18);

struct EquivalenceReport {
  std::size_t first = 0;            // source index of element 0 below
  std::vector<double> times;
  std::vector<double> rho;
  std::vector<double> omega_mag;
  std::vector<double> xi;
  std::vector<double> phi_dot;
  std::size_t mid_begin = 0;        // source indices of the middle half
  std::size_t mid_end = 0;
  double max_rel_deviation_mid = 0.0;  // max ||w| - phi'| / |phi'|
  double max_abs_xi = 0.0;             // over every retained sample
};

/// Runs the planar curve (u, uh, 0) through the generic invariants and
/// compares |w| against the classical instantaneous frequency.
EquivalenceReport geometric_equivalence(const AnalyticPair& p, Thresholds eps = {});

/// Jets (u, uh, 0) at the retained samples.
std::vector<Jet2> embedding_jets(const AnalyticPair& p);

}  // namespace geofreq
