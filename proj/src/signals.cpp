#include <geofreq/signals.hpp>

#include <geofreq/error.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <utility>

namespace geofreq {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBaseFrequency = 100.0 * kPi;  // rad/s

struct ScenarioName {
  ScenarioId id;
  std::string_view name;
};

constexpr std::array<ScenarioName, 12> kScenarioNames{{
    {ScenarioId::DC, "DC"},
    {ScenarioId::SinglePhase, "SINGLE_PHASE"},
    {ScenarioId::E0, "E0"},
    {ScenarioId::E1, "E1"},
    {ScenarioId::E2, "E2"},
    {ScenarioId::E3, "E3"},
    {ScenarioId::E4, "E4"},
    {ScenarioId::E5, "E5"},
    {ScenarioId::E6, "E6"},
    {ScenarioId::E7, "E7"},
    {ScenarioId::E8, "E8"},
    {ScenarioId::Custom, "CUSTOM"},
}};

enum class Family { Dc, SinglePhase, ThreePhase };

Family family_of(ScenarioId id) {
  switch (id) {
    case ScenarioId::DC: return Family::Dc;
    case ScenarioId::SinglePhase: return Family::SinglePhase;
    default: return Family::ThreePhase;
  }
}

struct DcParams {
  double vdc = 5.0;
};

struct SinglePhaseParams {
  double V = 12.0;
  double w_o = kBaseFrequency;
  double alpha = 0.0;
};

using PerPhase = std::array<double, 3>;

struct ThreePhaseParams {
  double w_o = kBaseFrequency;
  PerPhase V{12.0, 12.0, 12.0};
  PerPhase theta_o{0.0, -2.0 * kPi / 3.0, 2.0 * kPi / 3.0};
  double h = 0.0;
  PerPhase V_h{};
  PerPhase theta_o_h{0.0, -2.0 * kPi / 3.0, 2.0 * kPi / 3.0};
  PerPhase mod_amp{};   // rad, angle modulation A sin(B t)
  PerPhase mod_rate{};  // rad/s
  PerPhase dw{};        // rad/s, constant frequency offset
  PerPhase mag_ramp{};  // V/s
  PerPhase mag_amp{};   // V, magnitude modulation
  PerPhase mag_rate{};  // rad/s
};

using KeyTable = std::vector<std::pair<std::string, double*>>;

KeyTable keys_of(DcParams& p) { return {{"vdc", &p.vdc}}; }

KeyTable keys_of(SinglePhaseParams& p) {
  return {{"V", &p.V}, {"w_o", &p.w_o}, {"alpha", &p.alpha}};
}

KeyTable keys_of(ThreePhaseParams& p) {
  KeyTable t{{"w_o", &p.w_o}, {"h", &p.h}};
  const auto add = [&t](const std::string& prefix, const std::string& suffix, PerPhase& arr) {
    static constexpr std::array<char, 3> kPhase{'a', 'b', 'c'};
    for (std::size_t i = 0; i < 3; ++i) {
      t.emplace_back(prefix + kPhase[i] + suffix, &arr[i]);
    }
  };
  add("V", "", p.V);
  add("theta_", "o", p.theta_o);
  add("V", "_h", p.V_h);
  add("theta_", "o_h", p.theta_o_h);
  add("mod_amp_", "", p.mod_amp);
  add("mod_rate_", "", p.mod_rate);
  add("dw_", "", p.dw);
  add("mag_ramp_", "", p.mag_ramp);
  add("mag_amp_", "", p.mag_amp);
  add("mag_rate_", "", p.mag_rate);
  return t;
}

template <typename Params>
void apply_overrides(Params& params, const ParameterMap& overrides) {
  KeyTable table = keys_of(params);
  for (const auto& [key, value] : overrides) {
    auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == key; });
    if (it == table.end()) {
      throw Error(ErrorKind::InvalidParameter, "unknown scenario parameter '" + key + "'");
    }
    if (!std::isfinite(value)) {
      throw Error(ErrorKind::InvalidParameter, "parameter '" + key + "' is not finite");
    }
    *it->second = value;
  }
}

void require_non_negative(double value, std::string_view what) {
  if (value < 0.0) {
    std::ostringstream os;
    os << what << " = " << value << " must not be negative";
    throw Error(ErrorKind::InvalidParameter, os.str());
  }
}

ThreePhaseParams preset(ScenarioId id) {
  ThreePhaseParams p;
  switch (id) {
    case ScenarioId::E0:
    case ScenarioId::Custom:
      break;
    case ScenarioId::E1:
      p.V[1] = 8.0;
      break;
    case ScenarioId::E2:
      p.theta_o[2] = 1.5 * kPi / 3.0;
      break;
    case ScenarioId::E3:
      p.h = 11.0;
      p.V_h = {0.5, 0.5, 0.5};
      break;
    case ScenarioId::E4:
      p.h = 11.0;
      p.V_h = {0.5, 0.5, 0.5};
      p.theta_o_h = {0.0, -2.7 * kPi / 3.0, 2.7 * kPi / 3.0};
      break;
    case ScenarioId::E5:
      p.h = 11.0;
      p.V_h = {0.5, 0.9, 1.3};
      break;
    case ScenarioId::E6:
      p.mod_amp = {kPi, kPi, kPi};
      p.mod_rate = {0.4 * kPi, 0.4 * kPi, 0.4 * kPi};
      break;
    case ScenarioId::E7:
      p.mod_amp = {kPi, kPi, kPi};
      p.mod_rate = {0.4 * kPi, 0.4 * kPi, 0.44 * kPi};
      break;
    case ScenarioId::E8:
      p.mod_amp = {kPi, kPi, 1.1 * kPi};
      p.mod_rate = {0.4 * kPi, 0.4 * kPi, 0.4 * kPi};
      break;
    case ScenarioId::DC:
    case ScenarioId::SinglePhase:
      break;
  }
  return p;
}

SignalModel build(ScenarioId id, const DcParams& p) {
  std::array<PhaseChannel, 3> ch;
  ch[0].offset.constant = p.vdc;
  return SignalModel(id, 0.0, std::move(ch));
}

SignalModel build(ScenarioId id, const SinglePhaseParams& p) {
  require_non_negative(p.V, "V");
  std::array<PhaseChannel, 3> ch;
  const Profile magnitude{.constant = p.V};
  // cos(x) = sin(x + pi/2)
  ch[0].tones.push_back({magnitude, Profile{.constant = p.alpha + kPi / 2.0, .ramp = p.w_o}});
  ch[1].tones.push_back({magnitude, Profile{.constant = p.alpha, .ramp = p.w_o}});
  return SignalModel(id, p.w_o, std::move(ch));
}

SignalModel build(ScenarioId id, const ThreePhaseParams& p) {
  if (p.h != 0.0 && p.h < 2.0) {
    std::ostringstream os;
    os << "harmonic order h = " << p.h << " must be at least 2";
    throw Error(ErrorKind::InvalidParameter, os.str());
  }
  std::array<PhaseChannel, 3> ch;
  for (std::size_t i = 0; i < 3; ++i) {
    require_non_negative(p.V[i], "phase magnitude");
    require_non_negative(p.V_h[i], "harmonic magnitude");
    const Profile magnitude{.constant = p.V[i],
                            .ramp = p.mag_ramp[i],
                            .amplitude = p.mag_amp[i],
                            .rate = p.mag_rate[i]};
    const Profile angle{.constant = p.theta_o[i],
                        .ramp = p.w_o + p.dw[i],
                        .amplitude = p.mod_amp[i],
                        .rate = p.mod_rate[i]};
    ch[i].tones.push_back({magnitude, angle});
    if (p.h != 0.0 && p.V_h[i] != 0.0) {
      ch[i].tones.push_back({Profile{.constant = p.V_h[i]},
                             Profile{.constant = p.theta_o_h[i], .ramp = p.h * p.w_o}});
    }
  }
  return SignalModel(id, p.w_o, std::move(ch));
}

Deriv2 eval_channel(const PhaseChannel& ch, double t) {
  Deriv2 out = ch.offset.eval(t);
  for (const Tone& tone : ch.tones) {
    const Deriv2 m = tone.magnitude.eval(t);
    const Deriv2 a = tone.angle.eval(t);
    const double s = std::sin(a.value);
    const double c = std::cos(a.value);
    out.value += m.value * s;
    out.d1 += m.d1 * s + m.value * a.d1 * c;
    out.d2 += (m.d2 - m.value * a.d1 * a.d1) * s + (2.0 * m.d1 * a.d1 + m.value * a.d2) * c;
  }
  return out;
}

}  // namespace

Deriv2 Profile::eval(double t) const noexcept {
  const double arg = rate * t + phase;
  const double s = std::sin(arg);
  const double c = std::cos(arg);
  return {constant + ramp * t + amplitude * s, ramp + amplitude * rate * c,
          -amplitude * rate * rate * s};
}

ScenarioId parse_scenario(std::string_view name) {
  for (const auto& entry : kScenarioNames) {
    if (entry.name == name) {
      return entry.id;
    }
  }
  throw Error(ErrorKind::UnknownScenario, "unknown scenario '" + std::string(name) + "'");
}

std::string_view to_string(ScenarioId id) noexcept {
  for (const auto& entry : kScenarioNames) {
    if (entry.id == id) {
      return entry.name;
    }
  }
  return "?";
}

std::vector<std::string> parameter_keys(ScenarioId id) {
  std::vector<std::string> names;
  const auto collect = [&names](auto params) {
    for (const auto& entry : keys_of(params)) {
      names.push_back(entry.first);
    }
  };
  switch (family_of(id)) {
    case Family::Dc: collect(DcParams{}); break;
    case Family::SinglePhase: collect(SinglePhaseParams{}); break;
    case Family::ThreePhase: collect(ThreePhaseParams{}); break;
  }
  return names;
}

SignalModel::SignalModel(ScenarioId id, double w_o, std::array<PhaseChannel, 3> channels)
    : id_(id), w_o_(w_o), channels_(std::move(channels)) {}

SignalModel make_scenario(ScenarioId id, const ParameterMap& overrides) {
  switch (family_of(id)) {
    case Family::Dc: {
      DcParams p;
      apply_overrides(p, overrides);
      return build(id, p);
    }
    case Family::SinglePhase: {
      SinglePhaseParams p;
      apply_overrides(p, overrides);
      return build(id, p);
    }
    case Family::ThreePhase: {
      ThreePhaseParams p = preset(id);
      apply_overrides(p, overrides);
      return build(id, p);
    }
  }
  throw Error(ErrorKind::UnknownScenario, "unhandled scenario");
}

Jet2 eval_jet(const SignalModel& model, double t) {
  const auto& ch = model.channels();
  const Deriv2 a = eval_channel(ch[0], t);
  const Deriv2 b = eval_channel(ch[1], t);
  const Deriv2 c = eval_channel(ch[2], t);
  return {t, {a.value, b.value, c.value}, {a.d1, b.d1, c.d1}, {a.d2, b.d2, c.d2}};
}

TimeSeries sample(const SignalModel& model, double t0, double t1, double dt) {
  if (!std::isfinite(t0) || !std::isfinite(t1) || !std::isfinite(dt) || !(dt > 0.0) ||
      !(t1 > t0)) {
    std::ostringstream os;
    os << "sampling range [" << t0 << ", " << t1 << "] with dt = " << dt << " is empty or invalid";
    throw Error(ErrorKind::InvalidRange, os.str());
  }
  const auto n = static_cast<std::size_t>(std::floor((t1 - t0) / dt + 1e-9)) + 1;
  std::vector<double> values;
  values.reserve(3 * n);
  for (std::size_t k = 0; k < n; ++k) {
    const Jet2 j = eval_jet(model, t0 + static_cast<double>(k) * dt);
    values.insert(values.end(), {j.v.x1, j.v.x2, j.v.x3});
  }
  return TimeSeries::uniform({"va", "vb", "vc"}, t0, dt, std::move(values));
}

ThreePhaseJet phase_jets(const SignalModel& model, double t) {
  using C = std::complex<double>;
  ThreePhaseJet out;
  for (std::size_t i = 0; i < 3; ++i) {
    const PhaseChannel& ch = model.channels()[i];
    const Profile& off = ch.offset;
    if (off.constant != 0.0 || off.ramp != 0.0 || off.amplitude != 0.0) {
      throw Error(ErrorKind::InvalidParameter,
                  "channel with an offset has no magnitude/angle form");
    }
    // Z = sum M e^{j Theta}; the channel value is Im Z = |Z| sin(arg Z).
    C z{}, dz{}, ddz{};
    for (const Tone& tone : ch.tones) {
      const Deriv2 m = tone.magnitude.eval(t);
      const Deriv2 a = tone.angle.eval(t);
      const C e = std::polar(1.0, a.value);
      z += m.value * e;
      dz += C(m.d1, m.value * a.d1) * e;
      ddz += C(m.d2 - m.value * a.d1 * a.d1, 2.0 * m.d1 * a.d1 + m.value * a.d2) * e;
    }
    PhaseJet& p = out[i];
    p.V = std::abs(z);
    if (p.V == 0.0) {
      continue;
    }
    p.theta = std::arg(z);
    const C w1 = dz * std::conj(z) / p.V;   // V' + j V theta'
    const C w2 = ddz * std::conj(z) / p.V;  // V'' - V theta'^2 + j (2 V' theta' + V theta'')
    p.dV = w1.real();
    p.dtheta = w1.imag() / p.V;
    p.ddV = w2.real() + p.V * p.dtheta * p.dtheta;
    p.ddtheta = (w2.imag() - 2.0 * p.dV * p.dtheta) / p.V;
  }
  return out;
}

}  // namespace geofreq
