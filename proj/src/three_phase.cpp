#include <geofreq/three_phase.hpp>

#include <geofreq/error.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

namespace geofreq {

PhaseAuxiliaries auxiliaries(const ThreePhaseJet& ph, Thresholds eps) {
  PhaseAuxiliaries aux;

  // |v|^2 = sum V_i^2 sin^2(theta_i) = (1/2) sum V_i^2 (1 - cos 2 theta_i)
  double v2 = 0.0;
  for (const PhaseJet& p : ph) {
    v2 += 0.5 * p.V * p.V * (1.0 - std::cos(2.0 * p.theta));
  }
  aux.v = std::sqrt(v2);
  if (!(aux.v > eps.eps_v)) {
    std::ostringstream os;
    os << "|v| = " << aux.v << " V is not above " << eps.eps_v;
    throw Error(ErrorKind::DegenerateSpeed, os.str());
  }

  for (int i = 0; i < 3; ++i) {
    const PhaseJet& pj = ph[(i + 1) % 3];
    const PhaseJet& pk = ph[(i + 2) % 3];
    const double sj = std::sin(pj.theta);
    const double sk = std::sin(pk.theta);
    aux.r[i] = (pj.V * pk.dV - pk.V * pj.dV) * sj * sk;
    aux.u[i] = pj.V * pk.V *
               (pk.dtheta * sj * std::cos(pk.theta) - pj.dtheta * sk * std::cos(pj.theta));

    const PhaseJet& p = ph[i];
    aux.p[i] = p.V * p.ddV + p.dV * p.dV - p.V * p.dtheta * p.dtheta;
    aux.q[i] = p.dV * p.dtheta - p.V * p.ddtheta;
    aux.ddv_sin[i] = p.ddV - p.V * p.dtheta * p.dtheta;
    aux.ddv_cos[i] = 2.0 * p.dV * p.dtheta + p.V * p.ddtheta;
  }
  return aux;
}

ClosedFormInvariants closed_form_invariants(const ThreePhaseJet& ph, Thresholds eps) {
  const PhaseAuxiliaries aux = auxiliaries(ph, eps);
  const double v2 = aux.v * aux.v;

  ClosedFormInvariants out;

  // Numerator equals 2 v.v'.
  double rho_num = 0.0;
  for (const PhaseJet& p : ph) {
    rho_num += p.V * p.V * p.dtheta * std::sin(2.0 * p.theta) +
               p.V * p.dV * (1.0 - std::cos(2.0 * p.theta));
  }
  out.rho = rho_num / (2.0 * v2);

  const std::array<double, 3> w{aux.r[0] + aux.u[0], aux.r[1] + aux.u[1], aux.r[2] + aux.u[2]};
  out.omega_vec = Vec3{w[0], w[1], w[2]} / v2;

  const double w2 = w[0] * w[0] + w[1] * w[1] + w[2] * w[2];
  const double omega_mag = std::sqrt(w2) / v2;
  if (!(omega_mag > eps.eps_w)) {
    std::ostringstream os;
    os << "|omega| = " << omega_mag << " rad/s; the phase voltages do not span a basis";
    throw Error(ErrorKind::DegenerateRotation, os.str());
  }

  const std::array<double, 3> omega{out.omega_vec.x1, out.omega_vec.x2, out.omega_vec.x3};
  double listed = 0.0;
  double exact = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double s = std::sin(ph[i].theta);
    const double c = std::cos(ph[i].theta);
    listed += (aux.p[i] * s + aux.q[i] * c) * omega[i];
    exact += (aux.ddv_sin[i] * s + aux.ddv_cos[i] * c) * w[i];
  }
  out.xi = aux.v * listed / w2;
  out.xi_consistent = aux.v * exact / w2;
  return out;
}

SequenceInvariants stationary_sequence(Sequence kind, double V, double w_o) {
  if (!(V > 0.0) || !(w_o != 0.0) || !std::isfinite(V) || !std::isfinite(w_o)) {
    throw Error(ErrorKind::InvalidParameter, "stationary sequence needs V > 0 and w_o != 0");
  }
  const double sign = kind == Sequence::Positive ? 1.0 : -1.0;
  const double c = sign * w_o / std::numbers::sqrt3;
  return {0.0, Vec3{c, c, c}, 0.0};
}

}  // namespace geofreq
