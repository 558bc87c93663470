#pragma once

#include <geofreq/vec3.hpp>

namespace geofreq {

/// Second-order jet of the voltage vector at one instant.
///
/// The voltage is read as the velocity of a flux curve x = -phi, so `v`,
/// `dv` and `ddv` are the first three derivatives of that curve.
struct Jet2 {
  double t = 0.0;  // s
  Vec3 v;          // V
  Vec3 dv;         // V/s
  Vec3 ddv;        // V/s^2
};

bool is_finite(const Jet2& j) noexcept;

/// Degeneracy thresholds. Below eps_v the curve parameterisation breaks
/// down; below eps_w the curve does not rotate and N, B do not exist.
struct Thresholds {
  double eps_v = 1e-9;  // V
  double eps_w = 1e-9;  // rad/s
};

/// Per-instant geometric invariants of the voltage curve.
///
/// When `rotation_defined` is false, omega, kappa, tau, xi and n are all
/// reported as exact zeros.
struct GeomInvariants {
  double v_mag = 0.0;      // V
  double rho = 0.0;        // 1/s, radial frequency
  Vec3 omega_vec;          // rad/s, azimuthal frequency vector
  double omega_mag = 0.0;  // rad/s
  double kappa = 0.0;      // 1/(V s)
  double tau = 0.0;        // 1/(V s)
  double xi = 0.0;         // 1/s, torsional frequency
  Vec3 n_vec;              // V/s, unnormalised normal
  double n_mag = 0.0;      // V/s
  bool rotation_defined = false;
};

/// Tangent, normal and binormal unit vectors.
struct FrenetFrame {
  Vec3 T;
  Vec3 N;
  Vec3 B;
};

/// Split of d(omega)/dt into a part along omega (eta * omega) and a part
/// along v x omega (tau * v x omega).
struct RocofDecomposition {
  Vec3 omega_dot;     // rad/s^2
  double eta = 0.0;   // 1/s
  Vec3 sym_part;      // rad/s^2
  Vec3 antisym_part;  // rad/s^2
  Vec3 residual;      // rad/s^2
};

/// Coefficients of v'' in the orthogonal basis {v, n, omega}.
///
/// `a2`, `b2`, `c2` come from projections. The closed-form candidates are
/// kept next to them so that callers can see which sign convention the data
/// supports: b2 = 2 rho - eta (as listed) against 2 rho + eta (derived), and
/// c2 = -v xi (as displayed in the expanded form) against +v xi.
struct SecondDerivativeDecomposition {
  double a2 = 0.0;  // 1/s^2
  double b2 = 0.0;  // 1/s
  double c2 = 0.0;  // V/s
  Vec3 residual;    // V/s^2, ddv - (a2 v + b2 n + c2 omega)

  double a2_closed = 0.0;     // rho' + rho^2 - omega^2
  double b2_listed = 0.0;     // 2 rho - eta
  double b2_derived = 0.0;    // 2 rho + eta
  double c2_displayed = 0.0;  // -v xi
  double c2_derived = 0.0;    // +v xi

  bool b2_matches_listed = false;
  bool b2_matches_derived = false;
  bool c2_matches_displayed = false;
  bool c2_matches_derived = false;
};

/// Arc-length rate s' = |v|.
double speed(const Jet2& j) noexcept;

/// rho, omega, kappa, tau, xi and n at one instant.
/// Throws Error{DegenerateSpeed} when |v| <= eps_v.
GeomInvariants invariants(const Jet2& j, Thresholds eps = {});

/// Frenet frame (T, N, B) = (v/|v|, n/|n|, omega/|omega|).
/// Throws DegenerateSpeed or DegenerateRotation.
FrenetFrame frame(const Jet2& j, Thresholds eps = {});

/// dv - (rho v + omega x v); the time-derivative operator applied to v.
/// Numerically zero for every valid jet.
Vec3 velocity_identity_residual(const Jet2& j, Thresholds eps = {});

/// d(rho)/dt = v.v''/|v|^2 + |omega|^2 - rho^2.
double rho_prime(const Jet2& j, Thresholds eps = {});

/// d(omega)/dt evaluated from the jet: (v x v'')/|v|^2 - 2 rho omega.
Vec3 omega_dot_direct(const Jet2& j, Thresholds eps = {});

/// Throws DegenerateSpeed or DegenerateRotation.
RocofDecomposition rocof(const Jet2& j, Thresholds eps = {});

/// Throws DegenerateSpeed or DegenerateRotation.
SecondDerivativeDecomposition second_derivative_decomposition(const Jet2& j,
                                                              Thresholds eps = {});

}  // namespace geofreq
