#pragma once

#include <geofreq/frenet.hpp>
#include <geofreq/signals.hpp>
#include <geofreq/time_series.hpp>

#include <optional>
#include <string>
#include <vector>

namespace geofreq {

/// One output row. Empty optionals become empty CSV cells.
///
/// Degenerate speed leaves every field after v empty. Without rotation the
/// omega components, w and kappa are 0, tau, xi and eta are empty and the
/// rocof columns hold d(omega)/dt.
struct AnalysisRow {
  double t = 0.0;
  double v = 0.0;
  std::optional<double> rho;
  std::optional<double> w1, w2, w3;
  std::optional<double> w;
  std::optional<double> xi;
  std::optional<double> kappa;
  std::optional<double> tau;
  std::optional<double> eta;
  std::optional<double> rocof1, rocof2, rocof3;
  bool rotation_defined = false;
  bool speed_defined = false;
};

struct AnalysisResult {
  std::vector<AnalysisRow> rows;
  std::size_t degenerate_speed = 0;
  std::size_t degenerate_rotation = 0;
};

AnalysisRow analyze_jet(const Jet2& j, Thresholds eps = {});

/// Throws Error{DegenerateInput} when no row has a defined speed.
AnalysisResult analyze_jets(const std::vector<Jet2>& jets, Thresholds eps = {});

struct NumericOptions {
  std::optional<double> filter_tau;  // s
  bool remove_zero_sequence = false;
  Thresholds eps;
};

/// Optional zero-sequence removal, then optional first-order filtering,
/// then stencil differentiation and invariants on the retained samples.
AnalysisResult analyze_numeric(const TimeSeries& series, const NumericOptions& opts = {});

/// Exact jets of the model on t_k = t0 + k dt, t_k <= t1.
std::vector<Jet2> analytic_jets(const SignalModel& model, double t0, double t1, double dt);

inline constexpr std::string_view kAnalysisHeader =
    "t,v,rho,w1,w2,w3,w,xi,kappa,tau,eta,rocof1,rocof2,rocof3,rotation_defined";

/// Header, rows and a footer `# rows=N degenerate_speed=K degenerate_rotation=M`.
std::string format_analysis_csv(const AnalysisResult& r);

}  // namespace geofreq
