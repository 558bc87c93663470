#include <geofreq/validate.hpp>

#include <geofreq/analysis.hpp>
#include <geofreq/csv.hpp>
#include <geofreq/error.hpp>
#include <geofreq/hilbert.hpp>
#include <geofreq/numdiff.hpp>
#include <geofreq/park.hpp>
#include <geofreq/signals.hpp>
#include <geofreq/three_phase.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

namespace geofreq {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kW0 = 100.0 * kPi;

constexpr std::array<std::string_view, 8> kModules{
    "geometry", "frenet_core", "threephase_forms", "signals",
    "numdiff",  "hilbert",     "park",             "cli_io"};

constexpr std::array<ScenarioId, 9> kTable{ScenarioId::E0, ScenarioId::E1, ScenarioId::E2,
                                           ScenarioId::E3, ScenarioId::E4, ScenarioId::E5,
                                           ScenarioId::E6, ScenarioId::E7, ScenarioId::E8};

double rel(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s > 0.0 ? std::abs(a - b) / s : 0.0;
}

double rel(const Vec3& a, const Vec3& b) {
  const double s = std::max(norm(a), norm(b));
  return s > 0.0 ? norm(a - b) / s : 0.0;
}

class Suite {
 public:
  Suite(std::string module, ValidationReport& report) : module_(std::move(module)), report_(report) {}

  void at_most(std::string name, double measured, double limit) {
    add(std::move(name), measured, limit, Bound::AtMost, measured <= limit);
  }
  void at_least(std::string name, double measured, double limit) {
    add(std::move(name), measured, limit, Bound::AtLeast, measured >= limit);
  }

 private:
  void add(std::string name, double measured, double limit, Bound b, bool ok) {
    // NaN never passes
    report_.results.push_back({module_, std::move(name), measured, limit, b,
                               ok && !std::isnan(measured)});
  }

  std::string module_;
  ValidationReport& report_;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  Vec3 vec(double scale) { return {uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale)}; }

  /// Jets with |v| >= 1 V and |omega| >= 1 rad/s at power-system scales.
  Jet2 rotating_jet() {
    for (;;) {
      Jet2 j{uniform(0.0, 1.0), vec(20.0), vec(5e3), vec(2e6)};
      const double v = norm(j.v);
      if (v >= 1.0 && norm(cross(j.v, j.dv)) / (v * v) >= 1.0) return j;
    }
  }

 private:
  std::mt19937_64 rng_;
};

std::vector<Jet2> random_jets(const ValidateOptions& opts, std::uint64_t salt) {
  Sampler s(opts.seed ^ salt);
  std::vector<Jet2> out(opts.random_jets);
  for (auto& j : out) j = s.rotating_jet();
  return out;
}

struct ScenarioJets {
  ScenarioId id;
  SignalModel model;
  std::vector<Jet2> jets;
};

std::vector<ScenarioJets> scenario_jets() {
  std::vector<ScenarioJets> out;
  for (ScenarioId id : kTable) {
    auto model = make_scenario(id);
    auto jets = analytic_jets(model, 0.0, 0.02, 1e-4);
    if (id == ScenarioId::E6 || id == ScenarioId::E7 || id == ScenarioId::E8) {
      const auto slow = analytic_jets(model, 0.0, 5.0, 1e-2);
      jets.insert(jets.end(), slow.begin(), slow.end());
    }
    out.push_back({id, std::move(model), std::move(jets)});
  }
  return out;
}

void geometry_suite(ValidationReport& report, const ValidateOptions& opts) {
  Suite s("geometry", report);
  Sampler rng(opts.seed ^ 0x11);
  double anti = 0.0, lagrange = 0.0, cyclic = 0.0, ortho = 0.0;
  for (std::size_t k = 0; k < opts.random_jets; ++k) {
    const Vec3 a = rng.vec(50.0), b = rng.vec(50.0), c = rng.vec(50.0);
    const double ab = norm(a) * norm(b);
    anti = std::max(anti, norm(cross(a, b) + cross(b, a)) / ab);
    lagrange = std::max(lagrange, rel(norm_squared(cross(a, b)) + inner(a, b) * inner(a, b),
                                      norm_squared(a) * norm_squared(b)));
    cyclic = std::max(cyclic, std::abs(triple_scalar(a, b, c) - triple_scalar(b, c, a)) /
                                  (ab * norm(c)));
    const Vec3 axb = cross(a, b);
    ortho = std::max(ortho, (std::abs(inner(axb, a)) + std::abs(inner(axb, b))) / (ab * (norm(a) + norm(b))));
  }
  s.at_most("a x b = -(b x a)", anti, 1e-15);
  s.at_most("|a x b|^2 + (a.b)^2 = |a|^2 |b|^2", lagrange, 1e-12);
  s.at_most("a.(b x c) = b.(c x a)", cyclic, 1e-12);
  s.at_most("a x b is orthogonal to a and b", ortho, 1e-12);
}

void frenet_suite(ValidationReport& report, const ValidateOptions& opts) {
  Suite s("frenet_core", report);
  auto jets = random_jets(opts, 0x22);
  for (const auto& sc : scenario_jets()) jets.insert(jets.end(), sc.jets.begin(), sc.jets.end());

  double velocity = 0.0, n_norm = 0.0, v_rec = 0.0, w_rec = 0.0, kappa = 0.0;
  double frame_err = 0.0, ddv_res = 0.0, a2_err = 0.0, rocof_res = 0.0;
  double b2_listed_hits = 0.0, b2_derived_miss = 0.0, c2_derived_miss = 0.0;
  for (const auto& j : jets) {
    const auto g = opts.invariants(j, Thresholds{});
    velocity = std::max(velocity, rel(j.dv, g.rho * j.v + cross(g.omega_vec, j.v)));
    n_norm = std::max(n_norm, rel(g.n_mag, g.omega_mag * g.v_mag));
    const double w2 = g.omega_mag * g.omega_mag;
    v_rec = std::max(v_rec, rel(j.v, w2 > 0.0 ? cross(g.n_vec, g.omega_vec) / w2 : Vec3{}));
    w_rec = std::max(w_rec, rel(g.omega_vec, cross(j.v, g.n_vec) / (g.v_mag * g.v_mag)));
    kappa = std::max(kappa, rel(g.kappa, norm(cross(j.v, j.dv)) / std::pow(g.v_mag, 3)));

    const auto f = frame(j);
    frame_err = std::max({frame_err, std::abs(inner(f.T, f.N)), std::abs(inner(f.T, f.B)),
                          std::abs(inner(f.N, f.B)), std::abs(norm(f.T) - 1.0),
                          std::abs(norm(f.N) - 1.0), std::abs(norm(f.B) - 1.0),
                          norm(cross(f.T, f.N) - f.B)});

    const auto d = second_derivative_decomposition(j);
    ddv_res = std::max(ddv_res, norm(d.residual) / norm(j.ddv));
    a2_err = std::max(a2_err, rel(d.a2, d.a2_closed));
    b2_listed_hits += d.b2_matches_listed && !d.b2_matches_derived ? 1.0 : 0.0;
    b2_derived_miss += d.b2_matches_derived ? 0.0 : 1.0;
    c2_derived_miss += d.c2_matches_derived ? 0.0 : 1.0;

    // |omega|^2 keeps the scale finite where omega' vanishes
    const auto r = rocof(j);
    rocof_res = std::max(rocof_res, norm(r.residual) / std::max(norm(r.omega_dot), w2));
  }
  s.at_most("velocity identity v' = rho v + omega x v", velocity, 1e-9);
  s.at_most("|n| = |omega| |v|", n_norm, 1e-9);
  s.at_most("v = (n x omega) / |omega|^2", v_rec, 1e-9);
  s.at_most("omega = (v x n) / |v|^2", w_rec, 1e-9);
  s.at_most("kappa = |v x v'| / |v|^3", kappa, 1e-9);
  s.at_most("Frenet frame is orthonormal and right-handed", frame_err, 1e-12);
  s.at_most("v'' = a2 v + b2 n + c2 omega residual", ddv_res, 1e-9);
  s.at_most("a2 = rho' + rho^2 - omega^2", a2_err, 1e-9);
  s.at_most("jets where b2 misses 2 rho + eta", b2_derived_miss, 0.0);
  s.at_most("jets where c2 misses +v xi", c2_derived_miss, 0.0);
  s.at_most("jets favouring b2 = 2 rho - eta", b2_listed_hits, 0.0);
  s.at_most("omega' = eta omega + tau v x omega residual", rocof_res, 1e-9);
}

void threephase_suite(ValidationReport& report, const ValidateOptions& opts) {
  Suite s("threephase_forms", report);
  double rho_err = 0.0, w_err = 0.0, xi_err = 0.0;
  double planar = 0.0;
  double xi_e4 = 0.0, xi_e5 = 0.0;
  for (const auto& sc : scenario_jets()) {
    for (const auto& j : sc.jets) {
      const auto g = opts.invariants(j, Thresholds{});
      const auto cf = closed_form_invariants(phase_jets(sc.model, j.t));
      const double scale = std::hypot(g.rho, g.omega_mag);
      rho_err = std::max(rho_err, std::abs(cf.rho - g.rho) / scale);
      w_err = std::max(w_err, norm(cf.omega_vec - g.omega_vec) / scale);
      xi_err = std::max(xi_err,
                        std::abs(cf.xi_consistent - g.xi) / std::max(scale, std::abs(g.xi)));
      const double axi = std::abs(g.xi);
      switch (sc.id) {
        case ScenarioId::E0:
        case ScenarioId::E1:
        case ScenarioId::E2:
        case ScenarioId::E3: planar = std::max(planar, axi); break;
        case ScenarioId::E4: xi_e4 = std::max(xi_e4, axi); break;
        case ScenarioId::E5: xi_e5 = std::max(xi_e5, axi); break;
        default: break;
      }
    }
  }
  s.at_most("closed-form rho matches generic path (E0-E8)", rho_err, 1e-6);
  s.at_most("closed-form omega matches generic path (E0-E8)", w_err, 1e-6);
  s.at_most("closed-form xi matches generic path (E0-E8)", xi_err, 1e-6);
  s.at_most("max |xi| over E0-E3 (planar)", planar, 1e-8);
  s.at_least("max |xi| over E4 (non-planar)", xi_e4, 1.0);
  s.at_least("max |xi| over E5 (non-planar)", xi_e5, 1.0);

  const double third = 2.0 * kPi / 3.0;
  const auto pos = make_scenario(ScenarioId::E0);
  const auto neg = make_scenario(ScenarioId::E0, {{"theta_bo", third}, {"theta_co", -third}});
  const auto expect_pos = stationary_sequence(Sequence::Positive, 12.0, kW0);
  const auto expect_neg = stationary_sequence(Sequence::Negative, 12.0, kW0);
  double pos_err = 0.0, neg_err = 0.0;
  for (int k = 0; k <= 100; ++k) {
    const double t = 1e-3 * k;
    pos_err = std::max(pos_err, rel(opts.invariants(eval_jet(pos, t), {}).omega_vec, expect_pos.omega_vec));
    neg_err = std::max(neg_err, rel(opts.invariants(eval_jet(neg, t), {}).omega_vec, expect_neg.omega_vec));
  }
  s.at_most("positive sequence omega = (w_o/sqrt3)(1,1,1)", pos_err, 1e-9);
  s.at_most("negative sequence omega = -(w_o/sqrt3)(1,1,1)", neg_err, 1e-9);
}

void signals_suite(ValidationReport& report, const ValidateOptions&) {
  Suite s("signals", report);
  constexpr double h = 1e-6;
  double d1 = 0.0, d2 = 0.0;
  for (ScenarioId id : kTable) {
    const auto m = make_scenario(id);
    for (double t : {0.0013, 0.0071, 0.0132, 1.7, 3.3}) {
      const auto jm = eval_jet(m, t - h), j0 = eval_jet(m, t), jp = eval_jet(m, t + h);
      d1 = std::max(d1, rel(j0.dv, (jp.v - jm.v) / (2.0 * h)));
      d2 = std::max(d2, rel(j0.ddv, (jp.v - 2.0 * j0.v + jm.v) / (h * h)));
    }
  }
  s.at_most("v' matches central difference of v", d1, 1e-5);
  s.at_most("v'' matches central difference of v", d2, 1e-3);

  const auto e0 = sample(make_scenario(ScenarioId::E0), 0.0, 0.04, 1e-4);
  s.at_most("E0 on [0, 0.04] s at 1e-4 s has 401 rows",
            std::abs(static_cast<double>(e0.size()) - 401.0), 0.0);
}

double e0_numeric_error(double dt) {
  const auto jets = differentiate(sample(make_scenario(ScenarioId::E0), 0.0, 0.1, dt));
  double worst = 0.0;
  for (const auto& j : jets) worst = std::max(worst, rel(invariants(j).omega_mag, kW0));
  return worst;
}

void numdiff_suite(ValidationReport& report, const ValidateOptions&) {
  Suite s("numdiff", report);
  constexpr double dt = 0.01;
  std::vector<double> x(40);
  auto f = [](double t) { return 1.0 + 2.0 * t - t * t + 0.5 * t * t * t + 0.25 * t * t * t * t; };
  auto df = [](double t) { return 2.0 - 2.0 * t + 1.5 * t * t + t * t * t; };
  auto ddf = [](double t) { return -2.0 + 3.0 * t + 3.0 * t * t; };
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = f(dt * static_cast<double>(k));
  const auto d = differentiate_channel(x, dt);
  double e1 = 0.0, e2 = 0.0;
  for (std::size_t i = 0; i < d.d1.size(); ++i) {
    const double t = dt * static_cast<double>(d.first + i);
    e1 = std::max(e1, rel(d.d1[i], df(t)));
    e2 = std::max(e2, rel(d.d2[i], ddf(t)));
  }
  s.at_most("first-derivative stencil exact on quartics", e1, 1e-9);
  s.at_most("second-derivative stencil exact on quartics", e2, 1e-9);

  const double coarse = e0_numeric_error(1e-4);
  const double fine = e0_numeric_error(5e-5);
  s.at_most("E0 at 10 kHz: | |omega| - 100 pi | / 100 pi", coarse, 1e-3);
  s.at_least("E0 error ratio when dt is halved", coarse / fine, 8.0);
}

void hilbert_suite(ValidationReport& report, const ValidateOptions&) {
  Suite s("hilbert", report);
  constexpr double dt = 1e-4;
  std::vector<double> u(4000);
  for (std::size_t k = 0; k < u.size(); ++k) u[k] = std::cos(kW0 * dt * static_cast<double>(k));
  const auto rep = geometric_equivalence(analytic_embed(u, dt));
  double freq = 0.0;
  for (std::size_t i = 0; i < rep.phi_dot.size(); ++i) {
    const std::size_t k = rep.first + i;
    if (k >= rep.mid_begin && k < rep.mid_end) freq = std::max(freq, rel(rep.phi_dot[i], kW0));
  }
  s.at_most("|omega| of embedding equals classical phi' (mid-window)", rep.max_rel_deviation_mid, 1e-9);
  s.at_most("|xi| of the planar embedding", rep.max_abs_xi, 1e-12);
  s.at_most("50 Hz tone: phi' = 100 pi (mid-window)", freq, 1e-3);
}

void park_suite(ValidationReport& report, const ValidateOptions& opts) {
  Suite s("park", report);
  Sampler rng(opts.seed ^ 0x77);
  double sum = 0.0, trip = 0.0, balanced_split = 0.0, balanced_match = 0.0;
  for (std::size_t k = 0; k < opts.random_jets; ++k) {
    const ParkConfig cfg{rng.uniform(-500.0, 500.0), rng.uniform(-kPi, kPi)};
    const DqoJet dq{rng.uniform(0.0, 1.0), rng.vec(20.0), rng.vec(5e3), rng.vec(2e6)};
    if (norm(dq.vdq0) < 1.0) continue;
    sum = std::max(sum, derivative_frame_check(dq, cfg).sum_residual);

    const Jet2 abc = rng.rotating_jet();
    const auto g0 = opts.invariants(abc, {});
    const auto g1 = opts.invariants(from_dq0(to_dq0(abc, cfg), cfg), {});
    const double scale = std::max({std::hypot(g0.rho, g0.omega_mag), std::abs(g0.xi)});
    trip = std::max({trip, std::abs(g0.rho - g1.rho) / scale,
                     std::abs(g0.omega_mag - g1.omega_mag) / scale, std::abs(g0.xi - g1.xi) / scale});

    // zero-sequence-free jets: dq0 coordinates are a uniform scaling of abc
    auto strip = [](Vec3 x) {
      const double m = (x.x1 + x.x2 + x.x3) / 3.0;
      return Vec3{x.x1 - m, x.x2 - m, x.x3 - m};
    };
    const Jet2 bal{abc.t, strip(abc.v), strip(abc.dv), strip(abc.ddv)};
    if (norm(bal.v) < 1.0) continue;
    const auto gb = opts.invariants(bal, {});
    if (!gb.rotation_defined) continue;
    const DqoJet bdq = to_dq0(bal, cfg);
    const auto inv = dq0_invariants(bdq, cfg);
    const double bscale = std::hypot(gb.rho, gb.omega_mag);
    balanced_match = std::max({balanced_match, std::abs(inv.rho - gb.rho) / bscale,
                               std::abs(norm(inv.omega_vec) - gb.omega_mag) / bscale});
    const auto chk = derivative_frame_check(bdq, cfg);
    if (chk.balanced_residual) balanced_split = std::max(balanced_split, *chk.balanced_residual);
  }
  s.at_most("v^' + r x v = rho v + omega x v (random dq0 jets)", sum, 1e-9);
  s.at_most("rho, |omega|, xi survive to_dq0 then from_dq0", trip, 1e-9);
  s.at_most("balanced dq0 rho, |omega| equal abc values", balanced_match, 1e-9);
  s.at_most("balanced v^' = rho v + dw e_o x v", balanced_split, 1e-9);

  const auto e0 = make_scenario(ScenarioId::E0);
  const ParkConfig sync{kW0, 0.0};
  const ParkConfig clarke{0.0, 0.0};
  double dw = 0.0, termwise = 0.0, vd = 0.0, cl = 0.0;
  for (int k = 0; k <= 100; ++k) {
    const Jet2 j = eval_jet(e0, 1e-3 * k);
    const DqoJet dq = to_dq0(j, sync);
    dw = std::max(dw, std::abs(dq0_invariants(dq, sync).delta_omega) / kW0);
    const auto chk = derivative_frame_check(dq, sync);
    termwise = std::max({termwise, chk.symmetric_gap, chk.antisymmetric_gap});
    vd = std::max({vd, std::abs(dq.vdq0.x1 - 12.0) / 12.0, std::abs(dq.vdq0.x2) / 12.0,
                   std::abs(dq.vdq0.x3) / 12.0});
    cl = std::max(cl, derivative_frame_check(to_dq0(j, clarke), clarke).clarke_gap);
  }
  s.at_most("synchronous E0: v_d = 12, v_q = v_o = 0", vd, 1e-12);
  s.at_most("synchronous E0: |delta omega| / w_o", dw, 1e-9);
  s.at_most("synchronous E0: termwise split gaps", termwise, 1e-9);
  s.at_most("w_dq = 0: v' = v^'", cl, 1e-15);
}

void cli_io_suite(ValidationReport& report, const ValidateOptions& opts) {
  Suite s("cli_io", report);
  const auto series = sample(make_scenario(ScenarioId::E8), 0.0, 0.01, 1e-4);
  std::ostringstream os;
  write_waveform_csv(os, series);
  std::istringstream is(os.str());
  const auto back = read_waveform_csv(is);
  double mismatches = back.size() == series.size() ? 0.0 : 1.0;
  for (std::size_t k = 0; k < std::min(back.size(), series.size()); ++k) {
    if (back.time(k) != series.time(k)) ++mismatches;
    for (std::size_t c = 0; c < 3; ++c) {
      if (back.value(k, c) != series.value(k, c)) ++mismatches;
    }
  }
  s.at_most("waveform CSV round trip mismatches", mismatches, 0.0);

  const auto result = analyze_numeric(back);
  double tmiss = result.rows.size() + 4 == back.size() ? 0.0 : 1.0;
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    if (result.rows[i].t != back.time(i + 2)) ++tmiss;
  }
  s.at_most("analysis t column equals retained timestamps", tmiss, 0.0);

  Sampler rng(opts.seed ^ 0x99);
  double fmt_miss = 0.0;
  for (std::size_t k = 0; k < opts.random_jets; ++k) {
    const double x = rng.uniform(-1.0, 1.0) * std::pow(10.0, rng.uniform(-300.0, 300.0));
    const auto y = parse_double(format_double(x));
    if (!y || *y != x) ++fmt_miss;
  }
  s.at_most("shortest decimal formatting round-trips", fmt_miss, 0.0);
}

}  // namespace

bool ValidationReport::passed() const noexcept {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

std::string ValidationReport::format() const {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& r : results) {
    os << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(17) << r.module << ' '
       << std::setw(56) << r.name << " measured " << std::setprecision(3) << std::scientific
       << r.measured << (r.bound == Bound::AtMost ? " <= " : " >= ") << r.limit << '\n'
       << std::defaultfloat;
    if (!r.passed) ++failed;
  }
  os << results.size() - failed << '/' << results.size() << " properties passed\n";
  return os.str();
}

std::span<const std::string_view> validation_modules() noexcept { return kModules; }

ValidationReport run_validation(std::string_view scope, const ValidateOptions& opts) {
  using SuiteFn = void (*)(ValidationReport&, const ValidateOptions&);
  constexpr std::array<SuiteFn, 8> suites{geometry_suite, frenet_suite,  threephase_suite,
                                          signals_suite,  numdiff_suite, hilbert_suite,
                                          park_suite,     cli_io_suite};
  ValidationReport report;
  bool found = false;
  for (std::size_t i = 0; i < kModules.size(); ++i) {
    if (scope == "all" || scope == kModules[i]) {
      suites[i](report, opts);
      found = true;
    }
  }
  if (!found) {
    throw Error(ErrorKind::InvalidParameter, "unknown validation scope '" + std::string(scope) + "'");
  }
  return report;
}

}  // namespace geofreq
