#pragma once

#include <geofreq/config.hpp>
#include <geofreq/error.hpp>
#include <geofreq/signals.hpp>

#include <iosfwd>
#include <optional>
#include <string>

namespace geofreq {

/// Resolved inputs of one CLI invocation. Unset fields fall back to
/// defaults: t0 = 0, t1 = 0.1 s, dt = 1e-4 s, theta0 = 0 and w_dq equal to
/// the scenario base frequency (100 pi for CSV input).
struct CommandOptions {
  std::optional<std::string> scenario;
  std::optional<std::string> csv;
  std::optional<std::string> out;
  std::optional<std::string> mode;  // analytic | numeric
  ParameterMap params;
  std::optional<double> t0, t1, dt;
  std::optional<double> filter_tau;
  std::optional<bool> remove_zero_sequence;
  std::optional<double> w_dq, theta0;
  std::string scope = "all";
};

/// Command-line values win over config values; parameters are merged key by key.
CommandOptions merge(const RunConfig& cfg, const CommandOptions& cli);

/// Each command writes to `out` unless opts.out names a file, and returns
/// the process exit status. Errors propagate as geofreq::Error.
int cmd_generate(const CommandOptions& opts, std::ostream& out);
int cmd_analyze(const CommandOptions& opts, std::ostream& out);
int cmd_validate(const CommandOptions& opts, std::ostream& out);
int cmd_park(const CommandOptions& opts, std::ostream& out);
int cmd_hilbert(const CommandOptions& opts, std::ostream& out);

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// 2 for bad scenario names, parameters and ranges; 3 for I/O, format and
/// degenerate-input errors.
int exit_code(ErrorKind kind) noexcept;

}  // namespace geofreq
