#pragma once

#include <geofreq/frenet.hpp>
#include <geofreq/vec3.hpp>

#include <optional>

namespace geofreq {

/// Frame angle theta(t) = w_dq t + theta0.
struct ParkConfig {
  double w_dq = 0.0;    // rad/s
  double theta0 = 0.0;  // rad
};

/// Components along (e_d, e_q, e_o) and their derivatives in the rotating
/// frame, i.e. v_d', v_q', v_o' rather than the inertial derivative.
struct DqoJet {
  double t = 0.0;
  Vec3 vdq0;
  Vec3 dvdq0;
  Vec3 ddvdq0;
};

/// Amplitude-invariant transform
///   v_d = 2/3 sum v_i sin(theta - phi_i), v_q = 2/3 sum v_i cos(theta - phi_i),
///   v_o = 1/3 sum v_i,  phi = (0, 2 pi/3, -2 pi/3),
/// so that e_d' = w_dq e_q and e_q' = -w_dq e_d. Derivatives follow by the
/// chain rule. Throws InvalidParameter for a non-finite config.
DqoJet to_dq0(const Jet2& abc, const ParkConfig& cfg);

/// Exact inverse of to_dq0.
Jet2 from_dq0(const DqoJet& j, const ParkConfig& cfg);

/// Inertial derivative expressed in dq0 coordinates:
///   (v_d' - w_dq v_q, v_q' + w_dq v_d, v_o').
Vec3 inertial_derivative(const DqoJet& j, const ParkConfig& cfg) noexcept;

struct DqoInvariants {
  double rho = 0.0;
  Vec3 omega_vec;
  /// (v_d v_q' - v_q v_d') / (v_d^2 + v_q^2); 0 when v_d = v_q = 0.
  double delta_omega = 0.0;
};

/// rho and omega of the dq0 coordinate vector, with omega carrying the
/// w_dq terms of the frame rotation. Throws DegenerateSpeed.
DqoInvariants dq0_invariants(const DqoJet& j, const ParkConfig& cfg, Thresholds eps = {});

struct FrameCheckReport {
  Vec3 rotating;          // v^' (derivative seen in the dq0 frame)
  Vec3 transport;         // r x v, r = w_dq e_o
  Vec3 symmetric;         // rho v
  Vec3 antisymmetric;     // omega x v
  double sum_residual = 0.0;        // |(v^' + r x v) - (rho v + omega x v)| / |v'|
  double symmetric_gap = 0.0;       // |v^' - rho v| / |v'|
  double antisymmetric_gap = 0.0;   // |r x v - omega x v| / |v'|
  double clarke_gap = 0.0;          // |v' - v^'| / |v'|
  bool termwise_equal = false;      // both gaps within tolerance
  std::optional<double> balanced_residual;  // |v^' - rho v - dw e_o x v| / |v'| when |v_o| <= tolerance |v|
};

/// Compares the rotating-frame split (v^', r x v) with the geometric split
/// (rho v, omega x v). Relative quantities fall back to absolute when v' = 0.
/// Throws DegenerateSpeed.
FrameCheckReport derivative_frame_check(const DqoJet& j, const ParkConfig& cfg,
                                        double tolerance = 1e-9, Thresholds eps = {});

}  // namespace geofreq
