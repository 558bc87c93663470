#pragma once

#include <geofreq/frenet.hpp>
#include <geofreq/vec3.hpp>

#include <array>

namespace geofreq {

/// Magnitude and angle of one phase, v_i = V sin(theta), with derivatives.
struct PhaseJet {
  double V = 0.0;        // V
  double dV = 0.0;       // V/s
  double ddV = 0.0;      // V/s^2
  double theta = 0.0;    // rad
  double dtheta = 0.0;   // rad/s
  double ddtheta = 0.0;  // rad/s^2
};

/// Phases in (a, b, c) order.
using ThreePhaseJet = std::array<PhaseJet, 3>;

/// Auxiliary sums of the closed forms.
///
/// Pairwise arrays are indexed by the phase that completes the cyclic triple,
/// so index 0 holds jk = bc, index 1 holds ca and index 2 holds ab. With
/// that layout (v x v')_i = r[i] + u[i].
struct PhaseAuxiliaries {
  double v = 0.0;  // |v| in V
  std::array<double, 3> r{};
  std::array<double, 3> u{};
  std::array<double, 3> p{};  // V V'' + V'^2 - V theta'^2
  std::array<double, 3> q{};  // V' theta' - V theta''
  // v_i'' = ddv_sin[i] sin(theta_i) + ddv_cos[i] cos(theta_i)
  std::array<double, 3> ddv_sin{};
  std::array<double, 3> ddv_cos{};
};

struct ClosedFormInvariants {
  double rho = 0.0;  // 1/s
  Vec3 omega_vec;    // rad/s
  /// Torsional frequency with the p, q sums as listed. Kept for
  /// auditability; it only agrees with the generic path in special cases.
  double xi = 0.0;
  /// Torsional frequency built from the exact phase second derivatives.
  double xi_consistent = 0.0;
};

/// Throws Error{DegenerateSpeed} when |v| <= eps_v.
PhaseAuxiliaries auxiliaries(const ThreePhaseJet& phases, Thresholds eps = {});

/// rho, omega and xi from per-phase magnitudes and angles.
///
/// Throws DegenerateSpeed when |v| <= eps_v and DegenerateRotation when
/// |omega| <= eps_w (for instance a pure zero-sequence set, whose three
/// coordinates do not form a basis).
ClosedFormInvariants closed_form_invariants(const ThreePhaseJet& phases, Thresholds eps = {});

enum class Sequence { Positive, Negative };

struct SequenceInvariants {
  double rho = 0.0;
  Vec3 omega_vec;
  double xi = 0.0;
};

/// Stationary balanced positive or negative sequence: rho = xi = 0 and
/// omega = +-(w_o / sqrt 3)(1, 1, 1), independent of the magnitude.
/// Throws InvalidParameter unless V > 0 and w_o != 0.
SequenceInvariants stationary_sequence(Sequence kind, double V, double w_o);

}  // namespace geofreq
