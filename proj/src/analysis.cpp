#include <geofreq/analysis.hpp>

#include <geofreq/csv.hpp>
#include <geofreq/error.hpp>
#include <geofreq/numdiff.hpp>

#include <cmath>

namespace geofreq {

AnalysisRow analyze_jet(const Jet2& j, Thresholds eps) {
  AnalysisRow row;
  row.t = j.t;
  row.v = speed(j);
  if (!(row.v > eps.eps_v)) return row;

  const auto g = invariants(j, eps);
  row.speed_defined = true;
  row.rotation_defined = g.rotation_defined;
  row.rho = g.rho;
  row.w1 = g.omega_vec.x1;
  row.w2 = g.omega_vec.x2;
  row.w3 = g.omega_vec.x3;
  row.w = g.omega_mag;
  row.kappa = g.kappa;

  Vec3 omega_dot;
  if (g.rotation_defined) {
    const auto r = rocof(j, eps);
    row.xi = g.xi;
    row.tau = g.tau;
    row.eta = r.eta;
    omega_dot = r.omega_dot;
  } else {
    omega_dot = omega_dot_direct(j, eps);
  }
  row.rocof1 = omega_dot.x1;
  row.rocof2 = omega_dot.x2;
  row.rocof3 = omega_dot.x3;
  return row;
}

AnalysisResult analyze_jets(const std::vector<Jet2>& jets, Thresholds eps) {
  AnalysisResult out;
  out.rows.reserve(jets.size());
  for (const auto& j : jets) {
    out.rows.push_back(analyze_jet(j, eps));
    const auto& r = out.rows.back();
    if (!r.speed_defined) {
      ++out.degenerate_speed;
    } else if (!r.rotation_defined) {
      ++out.degenerate_rotation;
    }
  }
  if (out.degenerate_speed == out.rows.size()) {
    throw Error(ErrorKind::DegenerateInput,
                "all " + std::to_string(out.rows.size()) + " rows have degenerate speed");
  }
  return out;
}

AnalysisResult analyze_numeric(const TimeSeries& series, const NumericOptions& opts) {
  TimeSeries x = series;
  if (opts.remove_zero_sequence) x = remove_zero_sequence(x);
  if (opts.filter_tau) x = lowpass_first_order(x, *opts.filter_tau);
  return analyze_jets(differentiate(x), opts.eps);
}

std::vector<Jet2> analytic_jets(const SignalModel& model, double t0, double t1, double dt) {
  if (!(dt > 0.0) || !(t1 > t0) || !std::isfinite(t0) || !std::isfinite(t1)) {
    throw Error(ErrorKind::InvalidRange, "analysis grid needs dt > 0 and t1 > t0");
  }
  const auto n = static_cast<std::size_t>(std::floor((t1 - t0) / dt + 1e-9)) + 1;
  std::vector<Jet2> jets;
  jets.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    jets.push_back(eval_jet(model, t0 + static_cast<double>(k) * dt));
  }
  return jets;
}

std::string format_analysis_csv(const AnalysisResult& r) {
  std::string out;
  out.reserve(r.rows.size() * 300 + 128);
  out += kAnalysisHeader;
  out += '\n';
  for (const auto& row : r.rows) {
    append_double(out, row.t);
    out += ',';
    append_double(out, row.v);
    for (const auto& cell : {row.rho, row.w1, row.w2, row.w3, row.w, row.xi, row.kappa, row.tau,
                             row.eta, row.rocof1, row.rocof2, row.rocof3}) {
      out += ',';
      append_cell(out, cell);
    }
    out += row.rotation_defined ? ",1\n" : ",0\n";
  }
  out += "# rows=" + std::to_string(r.rows.size()) +
         " degenerate_speed=" + std::to_string(r.degenerate_speed) +
         " degenerate_rotation=" + std::to_string(r.degenerate_rotation) + '\n';
  return out;
}

}  // namespace geofreq
