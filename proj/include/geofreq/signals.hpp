#pragma once

#include <geofreq/frenet.hpp>
#include <geofreq/three_phase.hpp>
#include <geofreq/time_series.hpp>

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace geofreq {

/// Value and first two time derivatives of a scalar profile.
struct Deriv2 {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

/// constant + ramp * t + amplitude * sin(rate * t + phase)
///
/// Covers constant magnitudes, linear angle growth w t + theta_0 and the
/// sinusoidal angle modulation A sin(B t) of the time-variant cases.
struct Profile {
  double constant = 0.0;
  double ramp = 0.0;
  double amplitude = 0.0;
  double rate = 0.0;
  double phase = 0.0;

  Deriv2 eval(double t) const noexcept;
};

/// magnitude(t) * sin(angle(t))
struct Tone {
  Profile magnitude;
  Profile angle;
};

/// offset(t) + sum of tones.
struct PhaseChannel {
  Profile offset;
  std::vector<Tone> tones;
};

enum class ScenarioId { DC, SinglePhase, E0, E1, E2, E3, E4, E5, E6, E7, E8, Custom };

/// Throws Error{UnknownScenario}.
ScenarioId parse_scenario(std::string_view name);
std::string_view to_string(ScenarioId id) noexcept;

/// Named scalar overrides applied on top of a preset, e.g. {"Vb", 8.0}.
using ParameterMap = std::map<std::string, double, std::less<>>;

/// Keys accepted by make_scenario for the given scenario family.
std::vector<std::string> parameter_keys(ScenarioId id);

/// Immutable closed-form voltage model with three coordinate channels.
class SignalModel {
 public:
  SignalModel(ScenarioId id, double w_o, std::array<PhaseChannel, 3> channels);

  ScenarioId id() const noexcept { return id_; }
  double base_frequency() const noexcept { return w_o_; }
  const std::array<PhaseChannel, 3>& channels() const noexcept { return channels_; }

 private:
  ScenarioId id_;
  double w_o_;
  std::array<PhaseChannel, 3> channels_;
};

/// Preset scenario with optional overrides.
///
/// DC: v = vdc e1. Single phase: v = (V cos(w_o t + alpha), V sin(w_o t + alpha), 0).
/// Three-phase (E0-E8, Custom): v_i = V_i sin(w_o t + theta_i(t) + theta_io)
/// plus an optional harmonic V_ih sin(h w_o t + theta_io_h). Custom starts
/// from the E0 table.
///
/// Throws InvalidParameter for an unknown key, a non-finite value, a negative
/// magnitude, or a harmonic order 0 < h < 2.
SignalModel make_scenario(ScenarioId id, const ParameterMap& overrides = {});

/// Exact (v, v', v'') at t.
Jet2 eval_jet(const SignalModel& model, double t);

/// Samples of v on t_k = t0 + k dt for t_k <= t1, channels va, vb, vc.
/// Throws InvalidRange unless dt > 0 and t1 > t0.
TimeSeries sample(const SignalModel& model, double t0, double t1, double dt);

/// Per-phase magnitude and angle of each channel, taking the instantaneous
/// modulus and argument of the summed phasor when a channel carries more
/// than one tone. Throws InvalidParameter for channels with an offset.
ThreePhaseJet phase_jets(const SignalModel& model, double t);

}  // namespace geofreq
