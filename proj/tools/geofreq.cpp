// geofreq: generate, analyze and validate voltage waveforms as space curves.

#include <geofreq/commands.hpp>
#include <geofreq/config.hpp>
#include <geofreq/csv.hpp>
#include <geofreq/error.hpp>

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

using geofreq::CommandOptions;

struct RawFlags {
  std::string scenario, scenario_id, csv, out, mode, config, scope = "all";
  double t0 = 0, t1 = 0, dt = 0, filter_tau = 0, w_dq = 0, theta0 = 0, vdc = 0;
  bool remove_zero_seq = false;
  std::vector<std::string> params;
};

struct Bound {
  CLI::App* cmd = nullptr;
  std::function<int(const CommandOptions&, std::ostream&)> run;
};

void add_common(CLI::App* cmd, RawFlags& f) {
  cmd->add_option("--scenario", f.scenario, "DC, SINGLE_PHASE, E0..E8 or CUSTOM");
  cmd->add_option("--csv", f.csv, "waveform CSV with header t,va,vb,vc");
  cmd->add_option("--t0", f.t0, "start time [s]");
  cmd->add_option("--t1", f.t1, "end time [s]");
  cmd->add_option("--dt", f.dt, "sample spacing [s]");
  cmd->add_option("--mode", f.mode, "analytic or numeric");
  cmd->add_option("--filter-tau", f.filter_tau, "first-order filter time constant [s]");
  cmd->add_flag("--remove-zero-seq", f.remove_zero_seq, "subtract the zero-sequence component");
  cmd->add_option("--wdq", f.w_dq, "Park frame speed [rad/s]");
  cmd->add_option("--theta0", f.theta0, "Park frame angle at t = 0 [rad]");
  cmd->add_option("--out", f.out, "output file (default stdout)");
  cmd->add_option("--config", f.config, "INI experiment definition");
  cmd->add_option("--vdc", f.vdc, "DC scenario voltage [V]");
  cmd->add_option("--param", f.params, "scenario parameter KEY=VALUE (repeatable)");
}

CommandOptions resolve(CLI::App* cmd, const RawFlags& f) {
  auto given = [cmd](const char* name) {
    const auto* opt = cmd->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  CommandOptions o;
  if (given("--scenario")) o.scenario = f.scenario;
  if (given("id")) o.scenario = f.scenario_id;
  if (given("--csv")) o.csv = f.csv;
  if (given("--out")) o.out = f.out;
  if (given("--mode")) o.mode = f.mode;
  if (given("--t0")) o.t0 = f.t0;
  if (given("--t1")) o.t1 = f.t1;
  if (given("--dt")) o.dt = f.dt;
  if (given("--filter-tau")) o.filter_tau = f.filter_tau;
  if (given("--remove-zero-seq")) o.remove_zero_sequence = f.remove_zero_seq;
  if (given("--wdq")) o.w_dq = f.w_dq;
  if (given("--theta0")) o.theta0 = f.theta0;
  if (given("--vdc")) o.params["vdc"] = f.vdc;
  for (const auto& kv : f.params) {
    const auto eq = kv.find('=');
    const auto value = eq == std::string::npos ? std::nullopt
                                               : geofreq::parse_double(std::string_view(kv).substr(eq + 1));
    if (eq == 0 || !value) {
      throw geofreq::Error(geofreq::ErrorKind::InvalidParameter, "--param expects KEY=VALUE, got '" + kv + "'");
    }
    o.params[kv.substr(0, eq)] = *value;
  }
  o.scope = f.scope;
  if (given("--config")) o = geofreq::merge(geofreq::load_config(f.config), o);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric frequency analysis of polyphase voltage waveforms"};
  app.require_subcommand(1);
  RawFlags flags;

  std::vector<Bound> commands;
  auto* gen = app.add_subcommand("generate", "sample a scenario to a waveform CSV");
  gen->add_option("id", flags.scenario_id, "scenario id, same as --scenario");
  commands.push_back({gen, geofreq::cmd_generate});
  commands.push_back({app.add_subcommand("analyze", "invariants per sample as CSV"), geofreq::cmd_analyze});
  auto* val = app.add_subcommand("validate", "run the invariant suites");
  val->add_option("scope", flags.scope, "all or a module name");
  commands.push_back({val, geofreq::cmd_validate});
  commands.push_back({app.add_subcommand("park", "dq0 transform and frame checks"), geofreq::cmd_park});
  commands.push_back({app.add_subcommand("hilbert", "analytic-signal embedding of channel va"),
                      geofreq::cmd_hilbert});
  for (auto& c : commands) add_common(c.cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return geofreq::kExitUsage;
  }

  try {
    for (auto& c : commands) {
      if (c.cmd->parsed()) return c.run(resolve(c.cmd, flags), std::cout);
    }
  } catch (const geofreq::Error& e) {
    std::cerr << "geofreq: " << geofreq::to_string(e.kind()) << ": " << e.what() << '\n';
    return geofreq::exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "geofreq: " << e.what() << '\n';
    return geofreq::kExitIo;
  }
  return geofreq::kExitUsage;
}
