#include <geofreq/park.hpp>

#include <geofreq/error.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace geofreq {
namespace {

constexpr double kThird = 2.0 * std::numbers::pi / 3.0;
constexpr std::array<double, 3> kPhaseShift{0.0, kThird, -kThird};

struct Basis {
  std::array<double, 3> s;
  std::array<double, 3> c;
};

Basis basis_at(double t, const ParkConfig& cfg) {
  if (!std::isfinite(cfg.w_dq) || !std::isfinite(cfg.theta0)) {
    std::ostringstream os;
    os << "Park frame needs finite w_dq and theta0, got " << cfg.w_dq << ", " << cfg.theta0;
    throw Error(ErrorKind::InvalidParameter, os.str());
  }
  const double theta = cfg.w_dq * t + cfg.theta0;
  Basis b;
  for (std::size_t i = 0; i < 3; ++i) {
    b.s[i] = std::sin(theta - kPhaseShift[i]);
    b.c[i] = std::cos(theta - kPhaseShift[i]);
  }
  return b;
}

Vec3 project(const Basis& b, const Vec3& x) {
  const std::array<double, 3> a{x.x1, x.x2, x.x3};
  double d = 0.0, q = 0.0, o = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    d += a[i] * b.s[i];
    q += a[i] * b.c[i];
    o += a[i];
  }
  return {2.0 / 3.0 * d, 2.0 / 3.0 * q, o / 3.0};
}

Vec3 expand(const Basis& b, const Vec3& x) {
  return {x.x1 * b.s[0] + x.x2 * b.c[0] + x.x3, x.x1 * b.s[1] + x.x2 * b.c[1] + x.x3,
          x.x1 * b.s[2] + x.x2 * b.c[2] + x.x3};
}

double relative(double num, double scale) { return scale > 0.0 ? num / scale : num; }

}  // namespace

DqoJet to_dq0(const Jet2& abc, const ParkConfig& cfg) {
  const Basis b = basis_at(abc.t, cfg);
  const double w = cfg.w_dq;
  const Vec3 p0 = project(b, abc.v);
  const Vec3 p1 = project(b, abc.dv);
  const Vec3 p2 = project(b, abc.ddv);

  DqoJet j;
  j.t = abc.t;
  j.vdq0 = p0;
  j.dvdq0 = {p1.x1 + w * p0.x2, p1.x2 - w * p0.x1, p1.x3};
  j.ddvdq0 = {p2.x1 + 2.0 * w * p1.x2 - w * w * p0.x1, p2.x2 - 2.0 * w * p1.x1 - w * w * p0.x2,
              p2.x3};
  return j;
}

Jet2 from_dq0(const DqoJet& j, const ParkConfig& cfg) {
  const Basis b = basis_at(j.t, cfg);
  const double w = cfg.w_dq;
  const auto [d, q, o] = j.vdq0;
  const auto [d1, q1, o1] = j.dvdq0;
  const auto [d2, q2, o2] = j.ddvdq0;

  Jet2 abc;
  abc.t = j.t;
  abc.v = expand(b, j.vdq0);
  abc.dv = expand(b, {d1 - w * q, q1 + w * d, o1});
  abc.ddv = expand(b, {d2 - 2.0 * w * q1 - w * w * d, q2 + 2.0 * w * d1 - w * w * q, o2});
  return abc;
}

Vec3 inertial_derivative(const DqoJet& j, const ParkConfig& cfg) noexcept {
  const double w = cfg.w_dq;
  return {j.dvdq0.x1 - w * j.vdq0.x2, j.dvdq0.x2 + w * j.vdq0.x1, j.dvdq0.x3};
}

DqoInvariants dq0_invariants(const DqoJet& j, const ParkConfig& cfg, Thresholds eps) {
  const auto [d, q, o] = j.vdq0;
  const auto [d1, q1, o1] = j.dvdq0;
  const double w = cfg.w_dq;
  const double v2 = d * d + q * q + o * o;
  if (!(std::sqrt(v2) > eps.eps_v)) {
    std::ostringstream os;
    os << "dq0 speed " << std::sqrt(v2) << " V at or below threshold " << eps.eps_v;
    throw Error(ErrorKind::DegenerateSpeed, os.str());
  }

  DqoInvariants out;
  out.rho = (d * d1 + q * q1 + o * o1) / v2;
  out.omega_vec = {(q * o1 - o * q1 - w * o * d) / v2, (o * d1 - d * o1 - w * o * q) / v2,
                   (d * q1 - q * d1 + w * (d * d + q * q)) / v2};
  const double planar = d * d + q * q;
  out.delta_omega = planar > 0.0 ? (d * q1 - q * d1) / planar : 0.0;
  return out;
}

FrameCheckReport derivative_frame_check(const DqoJet& j, const ParkConfig& cfg, double tolerance,
                                        Thresholds eps) {
  const auto inv = dq0_invariants(j, cfg, eps);
  const Vec3& v = j.vdq0;
  const Vec3 inertial = inertial_derivative(j, cfg);
  const double scale = norm(inertial);

  FrameCheckReport r;
  r.rotating = j.dvdq0;
  r.transport = cross(Vec3{0.0, 0.0, cfg.w_dq}, v);
  r.symmetric = inv.rho * v;
  r.antisymmetric = cross(inv.omega_vec, v);
  r.sum_residual =
      relative(norm((r.rotating + r.transport) - (r.symmetric + r.antisymmetric)), scale);
  r.symmetric_gap = relative(norm(r.rotating - r.symmetric), scale);
  r.antisymmetric_gap = relative(norm(r.transport - r.antisymmetric), scale);
  r.clarke_gap = relative(norm(inertial - r.rotating), scale);
  r.termwise_equal = r.symmetric_gap <= tolerance && r.antisymmetric_gap <= tolerance;
  if (std::abs(v.x3) <= tolerance * norm(v)) {
    const Vec3 split = r.symmetric + inv.delta_omega * cross(e3, v);
    r.balanced_residual = relative(norm(r.rotating - split), scale);
  }
  return r;
}

}  // namespace geofreq
