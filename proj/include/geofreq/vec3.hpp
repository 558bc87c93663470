#pragma once

#include <cmath>
#include <ostream>

namespace geofreq {

/// Real 3-vector over the canonical orthonormal basis (e1, e2, e3).
///
/// Used for voltages and their time derivatives as well as for frequency
/// vectors; the unit is implied by context. Values are immutable: every
/// operation returns a new vector.
struct Vec3 {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

inline constexpr Vec3 e1{1.0, 0.0, 0.0};
inline constexpr Vec3 e2{0.0, 1.0, 0.0};
inline constexpr Vec3 e3{0.0, 0.0, 1.0};

constexpr Vec3 operator+(const Vec3& a, const Vec3& b) noexcept {
  return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
}

constexpr Vec3 operator-(const Vec3& a, const Vec3& b) noexcept {
  return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
}

constexpr Vec3 operator-(const Vec3& a) noexcept { return {-a.x1, -a.x2, -a.x3}; }

constexpr Vec3 operator*(double s, const Vec3& a) noexcept {
  return {s * a.x1, s * a.x2, s * a.x3};
}

constexpr Vec3 operator*(const Vec3& a, double s) noexcept { return s * a; }

constexpr Vec3 operator/(const Vec3& a, double s) noexcept {
  return {a.x1 / s, a.x2 / s, a.x3 / s};
}

constexpr double inner(const Vec3& a, const Vec3& b) noexcept {
  return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) noexcept {
  return {a.x2 * b.x3 - a.x3 * b.x2,
          a.x3 * b.x1 - a.x1 * b.x3,
          a.x1 * b.x2 - a.x2 * b.x1};
}

/// a . (b x c), the signed volume spanned by the three vectors.
constexpr double triple_scalar(const Vec3& a, const Vec3& b, const Vec3& c) noexcept {
  return inner(a, cross(b, c));
}

constexpr double norm_squared(const Vec3& a) noexcept { return inner(a, a); }

inline double norm(const Vec3& a) noexcept {
  return std::hypot(a.x1, a.x2, a.x3);
}

inline bool is_finite(const Vec3& a) noexcept {
  return std::isfinite(a.x1) && std::isfinite(a.x2) && std::isfinite(a.x3);
}

inline std::ostream& operator<<(std::ostream& os, const Vec3& a) {
  return os << '(' << a.x1 << ", " << a.x2 << ", " << a.x3 << ')';
}

}  // namespace geofreq
