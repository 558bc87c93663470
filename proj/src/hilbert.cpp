#include <geofreq/hilbert.hpp>

#include <geofreq/error.hpp>
#include <geofreq/numdiff.hpp>

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <string>

namespace geofreq {
namespace {

constexpr std::size_t kMinLength = 16;

// Plan creation in FFTW is not reentrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

void run_dft(std::vector<std::complex<double>>& in, std::vector<std::complex<double>>& out,
             int sign) {
  auto* src = reinterpret_cast<fftw_complex*>(in.data());
  auto* dst = reinterpret_cast<fftw_complex*>(out.data());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(in.size()), src, dst, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
}

}  // namespace

AnalyticPair analytic_embed(std::span<const double> u, double dt, double t0) {
  const std::size_t n = u.size();
  if (n < kMinLength) {
    throw Error(ErrorKind::TooShort, "Hilbert transform needs at least 16 samples, got " +
                                         std::to_string(n));
  }
  if (!(dt > 0.0) || !std::isfinite(dt) || !std::isfinite(t0) ||
      !std::all_of(u.begin(), u.end(), [](double x) { return std::isfinite(x); })) {
    throw Error(ErrorKind::InvalidRange, "Hilbert input must be finite with dt > 0");
  }

  std::vector<std::complex<double>> time(n), freq(n);
  std::copy(u.begin(), u.end(), time.begin());
  run_dft(time, freq, FFTW_FORWARD);

  // bins 1..ceil(n/2)-1 doubled, Nyquist (even n) and DC kept
  const std::size_t half = n / 2;
  const std::size_t pos_end = (n % 2 == 0) ? half : half + 1;
  for (std::size_t k = 1; k < pos_end; ++k) freq[k] *= 2.0;
  for (std::size_t k = half + 1; k < n; ++k) freq[k] = 0.0;

  run_dft(freq, time, FFTW_BACKWARD);

  AnalyticPair p;
  p.u.assign(u.begin(), u.end());
  p.uh.resize(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) p.uh[k] = time[k].imag() * scale;
  p.dt = dt;
  p.t0 = t0;
  return p;
}

SampleTrack instantaneous_frequency_classical(const AnalyticPair& p, double envelope_floor) {
  if (p.u.size() != p.uh.size()) {
    throw Error(ErrorKind::InvalidRange, "analytic pair lengths differ");
  }
  const auto du = differentiate_channel(p.u, p.dt);
  const auto duh = differentiate_channel(p.uh, p.dt);

  SampleTrack out;
  out.first = du.first;
  out.values.resize(du.d1.size());
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    const std::size_t k = out.first + i;
    const double env = p.u[k] * p.u[k] + p.uh[k] * p.uh[k];
    if (!(env > envelope_floor)) {
      throw Error(ErrorKind::DegenerateEnvelope,
                  "envelope vanishes at sample " + std::to_string(k));
    }
    out.values[i] = (duh.d1[i] * p.u[k] - du.d1[i] * p.uh[k]) / env;
  }
  return out;
}

std::vector<Jet2> embedding_jets(const AnalyticPair& p) {
  if (p.u.size() != p.uh.size()) {
    throw Error(ErrorKind::InvalidRange, "analytic pair lengths differ");
  }
  const auto du = differentiate_channel(p.u, p.dt);
  const auto duh = differentiate_channel(p.uh, p.dt);
  std::vector<Jet2> jets(du.d1.size());
  for (std::size_t i = 0; i < jets.size(); ++i) {
    const std::size_t k = du.first + i;
    jets[i] = Jet2{p.t0 + static_cast<double>(k) * p.dt,
                   {p.u[k], p.uh[k], 0.0},
                   {du.d1[i], duh.d1[i], 0.0},
                   {du.d2[i], duh.d2[i], 0.0}};
  }
  return jets;
}

EquivalenceReport geometric_equivalence(const AnalyticPair& p, Thresholds eps) {
  const auto phi = instantaneous_frequency_classical(p);
  const auto jets = embedding_jets(p);
  const std::size_t n = p.u.size();

  EquivalenceReport r;
  r.first = phi.first;
  r.phi_dot = phi.values;
  r.mid_begin = n / 4;
  r.mid_end = n - n / 4;
  r.times.reserve(jets.size());
  r.rho.reserve(jets.size());
  r.omega_mag.reserve(jets.size());
  r.xi.reserve(jets.size());
  for (std::size_t i = 0; i < jets.size(); ++i) {
    const auto g = invariants(jets[i], eps);
    r.times.push_back(jets[i].t);
    r.rho.push_back(g.rho);
    r.omega_mag.push_back(g.omega_mag);
    r.xi.push_back(g.xi);
    r.max_abs_xi = std::max(r.max_abs_xi, std::abs(g.xi));

    const std::size_t k = r.first + i;
    if (k >= r.mid_begin && k < r.mid_end) {
      const double ref = std::abs(phi.values[i]);
      const double dev = std::abs(g.omega_mag - ref);
      r.max_rel_deviation_mid =
          std::max(r.max_rel_deviation_mid, ref > 0.0 ? dev / ref : dev);
    }
  }
  return r;
}

}  // namespace geofreq
