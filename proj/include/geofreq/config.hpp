#pragma once

#include <geofreq/signals.hpp>

#include <iosfwd>
#include <optional>
#include <string>

namespace geofreq {

/// Experiment definition read from an INI file. Every field is optional so
/// that command-line flags can fill or override it.
///
///   [scenario]  name = E8, plus any scenario parameter (Vb = 8, ...)
///   [sampling]  t0, t1, dt
///   [filter]    tau, remove_zero_sequence = true|false
///   [park]      w_dq, theta0
///   [analysis]  mode = analytic|numeric, csv, out
struct RunConfig {
  std::optional<std::string> scenario;
  ParameterMap params;
  std::optional<double> t0, t1, dt;
  std::optional<double> filter_tau;
  std::optional<bool> remove_zero_sequence;
  std::optional<double> w_dq, theta0;
  std::optional<std::string> mode;
  std::optional<std::string> csv;
  std::optional<std::string> out;
};

/// Throws Error{MalformedConfig} for syntax errors, unknown sections or
/// keys, and values of the wrong type.
RunConfig parse_config(std::istream& is, const std::string& origin = "<config>");
RunConfig load_config(const std::string& path);

}  // namespace geofreq
