#include <geofreq/commands.hpp>

#include <geofreq/analysis.hpp>
#include <geofreq/csv.hpp>
#include <geofreq/hilbert.hpp>
#include <geofreq/numdiff.hpp>
#include <geofreq/park.hpp>
#include <geofreq/validate.hpp>

#include <algorithm>
#include <numbers>
#include <ostream>
#include <sstream>

namespace geofreq {
namespace {

constexpr double kDefaultT0 = 0.0;
constexpr double kDefaultT1 = 0.1;
constexpr double kDefaultDt = 1e-4;
constexpr double kDefaultWdq = 100.0 * std::numbers::pi;

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorKind::InvalidParameter, what); }

template <class T>
std::optional<T> pick(const std::optional<T>& cli, const std::optional<T>& cfg) {
  return cli ? cli : cfg;
}

void emit(const CommandOptions& opts, std::ostream& out, const std::string& text) {
  if (opts.out) {
    write_text_file(*opts.out, text);
  } else {
    out << text;
  }
}

SignalModel model_of(const CommandOptions& opts) {
  return make_scenario(parse_scenario(*opts.scenario), opts.params);
}

/// Exactly one of --scenario / --csv.
void require_one_source(const CommandOptions& opts) {
  if (opts.scenario.has_value() == opts.csv.has_value()) {
    usage("give exactly one of --scenario or --csv");
  }
  if (opts.csv && !opts.params.empty()) usage("scenario parameters need --scenario");
}

double t0_of(const CommandOptions& o) { return o.t0.value_or(kDefaultT0); }
double t1_of(const CommandOptions& o) { return o.t1.value_or(kDefaultT1); }
double dt_of(const CommandOptions& o) { return o.dt.value_or(kDefaultDt); }

NumericOptions numeric_options(const CommandOptions& o) {
  NumericOptions n;
  n.filter_tau = o.filter_tau;
  n.remove_zero_sequence = o.remove_zero_sequence.value_or(false);
  return n;
}

std::string mode_of(const CommandOptions& o) {
  const std::string mode = o.mode.value_or(o.csv ? "numeric" : "analytic");
  if (mode != "analytic" && mode != "numeric") usage("--mode must be analytic or numeric");
  if (mode == "analytic" && o.csv) usage("analytic mode needs --scenario, not --csv");
  return mode;
}

/// Waveform from --csv, or sampled from --scenario.
TimeSeries waveform_of(const CommandOptions& o) {
  if (o.csv) return read_waveform_file(*o.csv);
  return sample(model_of(o), t0_of(o), t1_of(o), dt_of(o));
}

/// Analytic jets for a scenario, stencil jets otherwise.
std::vector<Jet2> jets_of(const CommandOptions& o) {
  if (mode_of(o) == "analytic") {
    return analytic_jets(model_of(o), t0_of(o), t1_of(o), dt_of(o));
  }
  TimeSeries x = waveform_of(o);
  const auto n = numeric_options(o);
  if (n.remove_zero_sequence) x = remove_zero_sequence(x);
  if (n.filter_tau) x = lowpass_first_order(x, *n.filter_tau);
  return differentiate(x);
}

}  // namespace

CommandOptions merge(const RunConfig& cfg, const CommandOptions& cli) {
  CommandOptions o = cli;
  o.scenario = pick(cli.scenario, cfg.scenario);
  o.csv = pick(cli.csv, cfg.csv);
  o.out = pick(cli.out, cfg.out);
  o.mode = pick(cli.mode, cfg.mode);
  o.t0 = pick(cli.t0, cfg.t0);
  o.t1 = pick(cli.t1, cfg.t1);
  o.dt = pick(cli.dt, cfg.dt);
  o.filter_tau = pick(cli.filter_tau, cfg.filter_tau);
  o.remove_zero_sequence = pick(cli.remove_zero_sequence, cfg.remove_zero_sequence);
  o.w_dq = pick(cli.w_dq, cfg.w_dq);
  o.theta0 = pick(cli.theta0, cfg.theta0);
  o.params = cfg.params;
  for (const auto& [k, v] : cli.params) o.params[k] = v;
  return o;
}

int cmd_generate(const CommandOptions& opts, std::ostream& out) {
  if (!opts.scenario) usage("generate needs a scenario");
  if (opts.csv) usage("generate does not read --csv");
  const auto series = sample(model_of(opts), t0_of(opts), t1_of(opts), dt_of(opts));
  std::ostringstream os;
  write_waveform_csv(os, series);
  emit(opts, out, os.str());
  return kExitOk;
}

int cmd_analyze(const CommandOptions& opts, std::ostream& out) {
  require_one_source(opts);
  const auto mode = mode_of(opts);
  AnalysisResult r;
  if (mode == "analytic") {
    r = analyze_jets(analytic_jets(model_of(opts), t0_of(opts), t1_of(opts), dt_of(opts)));
  } else {
    r = analyze_numeric(waveform_of(opts), numeric_options(opts));
  }
  emit(opts, out, format_analysis_csv(r));
  return kExitOk;
}

int cmd_validate(const CommandOptions& opts, std::ostream& out) {
  const auto report = run_validation(opts.scope);
  emit(opts, out, report.format());
  return report.passed() ? kExitOk : kExitFailed;
}

int cmd_park(const CommandOptions& opts, std::ostream& out) {
  require_one_source(opts);
  ParkConfig cfg;
  cfg.w_dq = opts.w_dq.value_or(opts.scenario ? model_of(opts).base_frequency() : kDefaultWdq);
  cfg.theta0 = opts.theta0.value_or(0.0);

  const auto jets = jets_of(opts);
  std::string text =
      "t,vd,vq,vo,dvd,dvq,dvo,rho,w1,w2,w3,delta_w,sum_residual,symmetric_gap,antisymmetric_gap\n";
  double worst_sum = 0.0;
  std::size_t termwise = 0, degenerate = 0;
  for (const auto& j : jets) {
    const DqoJet dq = to_dq0(j, cfg);
    append_double(text, dq.t);
    for (double x : {dq.vdq0.x1, dq.vdq0.x2, dq.vdq0.x3, dq.dvdq0.x1, dq.dvdq0.x2, dq.dvdq0.x3}) {
      text += ',';
      append_double(text, x);
    }
    if (!(norm(dq.vdq0) > Thresholds{}.eps_v)) {
      ++degenerate;
      text += ",,,,,,,,\n";
      continue;
    }
    const auto inv = dq0_invariants(dq, cfg);
    const auto chk = derivative_frame_check(dq, cfg);
    worst_sum = std::max(worst_sum, chk.sum_residual);
    if (chk.termwise_equal) ++termwise;
    for (double x : {inv.rho, inv.omega_vec.x1, inv.omega_vec.x2, inv.omega_vec.x3,
                     inv.delta_omega, chk.sum_residual, chk.symmetric_gap, chk.antisymmetric_gap}) {
      text += ',';
      append_double(text, x);
    }
    text += '\n';
  }
  if (degenerate == jets.size()) {
    throw Error(ErrorKind::DegenerateInput, "all rows have degenerate speed");
  }
  text += "# rows=" + std::to_string(jets.size()) + " degenerate_speed=" +
          std::to_string(degenerate) + " termwise_equal=" + std::to_string(termwise) +
          " max_sum_residual=" + format_double(worst_sum) + '\n';
  emit(opts, out, text);
  return worst_sum <= 1e-9 ? kExitOk : kExitFailed;
}

int cmd_hilbert(const CommandOptions& opts, std::ostream& out) {
  require_one_source(opts);
  const TimeSeries x = waveform_of(opts);
  const auto u = x.channel(0);
  const auto p = analytic_embed(u, x.dt(), x.t0());
  const auto rep = geometric_equivalence(p);

  std::string text = "t,u,uh,phi_dot,rho,w,xi\n";
  for (std::size_t i = 0; i < rep.times.size(); ++i) {
    const std::size_t k = rep.first + i;
    append_double(text, x.time(k));
    for (double v : {p.u[k], p.uh[k], rep.phi_dot[i], rep.rho[i], rep.omega_mag[i], rep.xi[i]}) {
      text += ',';
      append_double(text, v);
    }
    text += '\n';
  }
  text += "# rows=" + std::to_string(rep.times.size()) + " mid_begin=" +
          std::to_string(rep.mid_begin) + " mid_end=" + std::to_string(rep.mid_end) +
          " max_rel_deviation_mid=" + format_double(rep.max_rel_deviation_mid) +
          " max_abs_xi=" + format_double(rep.max_abs_xi) + '\n';
  emit(opts, out, text);
  return rep.max_rel_deviation_mid <= 1e-9 && rep.max_abs_xi <= 1e-12 ? kExitOk : kExitFailed;
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::UnknownScenario:
    case ErrorKind::InvalidParameter:
    case ErrorKind::InvalidRange:
      return kExitUsage;
    default:
      return kExitIo;
  }
}

}  // namespace geofreq
