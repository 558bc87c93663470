#include <geofreq/frenet.hpp>

#include <geofreq/error.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace geofreq {
namespace {

// Mutation smoke-test builds flip omega; validate must then fail.
#ifdef GEOFREQ_MUTANT_FLIP_OMEGA
constexpr double kOmegaSign = -1.0;
#else
constexpr double kOmegaSign = 1.0;
#endif

// Shared first-order quantities. omega here is never thresholded.
struct FirstOrder {
  double v2;
  double v_mag;
  double rho;
  Vec3 omega;
};

FirstOrder first_order(const Jet2& j, double eps_v) {
  const double v_mag = norm(j.v);
  if (!(v_mag > eps_v)) {
    std::ostringstream os;
    os << "|v| = " << v_mag << " V at t = " << j.t << " s is not above " << eps_v;
    throw Error(ErrorKind::DegenerateSpeed, os.str());
  }
  const double v2 = norm_squared(j.v);
  return {v2, v_mag, inner(j.v, j.dv) / v2, kOmegaSign * cross(j.v, j.dv) / v2};
}

bool close(double a, double b, double floor) {
  return std::abs(a - b) <= 1e-6 * std::max(std::abs(a), std::abs(b)) + floor;
}

GeomInvariants rotating_invariants(const Jet2& j, Thresholds eps) {
  GeomInvariants g = invariants(j, eps);
  if (!g.rotation_defined) {
    std::ostringstream os;
    os << "|omega| at t = " << j.t << " s is not above " << eps.eps_w << " rad/s";
    throw Error(ErrorKind::DegenerateRotation, os.str());
  }
  return g;
}

}  // namespace

bool is_finite(const Jet2& j) noexcept {
  return std::isfinite(j.t) && is_finite(j.v) && is_finite(j.dv) && is_finite(j.ddv);
}

double speed(const Jet2& j) noexcept { return norm(j.v); }

GeomInvariants invariants(const Jet2& j, Thresholds eps) {
  const FirstOrder f = first_order(j, eps.eps_v);

  GeomInvariants g;
  g.v_mag = f.v_mag;
  g.rho = f.rho;

  const double omega_mag = norm(f.omega);
  if (!(omega_mag > eps.eps_w)) {
    g.rotation_defined = false;
    return g;
  }

  g.rotation_defined = true;
  g.omega_vec = f.omega;
  g.omega_mag = omega_mag;
  g.kappa = omega_mag / f.v_mag;

  // |v x v'|^2 = |omega|^2 |v|^4
  const Vec3 vxdv = cross(j.v, j.dv);
  g.tau = triple_scalar(j.v, j.dv, j.ddv) / norm_squared(vxdv);
  g.xi = f.v_mag * g.tau;

  g.n_vec = j.dv - f.rho * j.v;
  g.n_mag = norm(g.n_vec);
  return g;
}

FrenetFrame frame(const Jet2& j, Thresholds eps) {
  const GeomInvariants g = rotating_invariants(j, eps);
  return {j.v / g.v_mag, g.n_vec / g.n_mag, g.omega_vec / g.omega_mag};
}

Vec3 velocity_identity_residual(const Jet2& j, Thresholds eps) {
  const FirstOrder f = first_order(j, eps.eps_v);
  return j.dv - (f.rho * j.v + cross(f.omega, j.v));
}

double rho_prime(const Jet2& j, Thresholds eps) {
  const FirstOrder f = first_order(j, eps.eps_v);
  return inner(j.v, j.ddv) / f.v2 + norm_squared(f.omega) - f.rho * f.rho;
}

Vec3 omega_dot_direct(const Jet2& j, Thresholds eps) {
  const FirstOrder f = first_order(j, eps.eps_v);
  return cross(j.v, j.ddv) / f.v2 - 2.0 * f.rho * f.omega;
}

RocofDecomposition rocof(const Jet2& j, Thresholds eps) {
  const GeomInvariants g = rotating_invariants(j, eps);

  RocofDecomposition r;
  r.omega_dot = omega_dot_direct(j, eps);
  r.eta = inner(g.omega_vec, r.omega_dot) / (g.omega_mag * g.omega_mag);
  r.sym_part = r.eta * g.omega_vec;
  r.antisym_part = g.tau * cross(j.v, g.omega_vec);
  r.residual = r.omega_dot - r.sym_part - r.antisym_part;
  return r;
}

SecondDerivativeDecomposition second_derivative_decomposition(const Jet2& j, Thresholds eps) {
  const GeomInvariants g = rotating_invariants(j, eps);

  // {v, n, omega} is orthogonal, so each coefficient is a plain projection.
  SecondDerivativeDecomposition d;
  d.a2 = inner(j.ddv, j.v) / (g.v_mag * g.v_mag);
  d.b2 = inner(j.ddv, g.n_vec) / (g.n_mag * g.n_mag);
  d.c2 = inner(j.ddv, g.omega_vec) / (g.omega_mag * g.omega_mag);
  d.residual = j.ddv - (d.a2 * j.v + d.b2 * g.n_vec + d.c2 * g.omega_vec);

  const double rho = g.rho;
  const double omega2 = g.omega_mag * g.omega_mag;
  const double eta = rocof(j, eps).eta;
  d.a2_closed = rho_prime(j, eps) + rho * rho - omega2;
  d.b2_listed = 2.0 * rho - eta;
  d.b2_derived = 2.0 * rho + eta;
  d.c2_displayed = -g.v_mag * g.xi;
  d.c2_derived = g.v_mag * g.xi;

  // Rounding floors sized to the projection denominators.
  const double ddv_mag = norm(j.ddv);
  const double b_floor = 1e-9 * ddv_mag / g.n_mag;
  const double c_floor = 1e-9 * ddv_mag / g.omega_mag;
  d.b2_matches_listed = close(d.b2, d.b2_listed, b_floor);
  d.b2_matches_derived = close(d.b2, d.b2_derived, b_floor);
  d.c2_matches_displayed = close(d.c2, d.c2_displayed, c_floor);
  d.c2_matches_derived = close(d.c2, d.c2_derived, c_floor);
  return d;
}

}  // namespace geofreq
