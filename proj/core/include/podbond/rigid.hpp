#pragma once

#include <cstdint>

#include "podbond/linalg.hpp"
#include "podbond/scalars.hpp"

namespace podbond {

/// Direct isometry v -> M v + y of R^3 over a real scalar backend (Rational or
/// double). x and r of the projective embedding are derived on demand.
template <class R>
class DirectIsometry {
 public:
  /// Identity.
  DirectIsometry() : m_(identity3<R>()), y_{} {}
  /// Validates M^t M = id and det M = 1 (exactly for Rational, within 1e-9
  /// for double).
  DirectIsometry(Mat3<R> m, Vec3<R> y);

  static DirectIsometry translation(const Vec3<R>& s) { return DirectIsometry(identity3<R>(), s, Unchecked{}); }
  static DirectIsometry rotation(const Mat3<R>& m) { return DirectIsometry(m, Vec3<R>{}); }

  const Mat3<R>& M() const { return m_; }
  const Vec3<R>& y() const { return y_; }
  /// x = -M^t y
  Vec3<R> x() const { return neg(matvec(transpose(m_), y_)); }
  /// r = <y, y>
  R r() const { return dot(y_, y_); }

  Vec3<R> apply(const Vec3<R>& p) const { return add(matvec(m_, p), y_); }
  DirectIsometry inverse() const;

  friend bool operator==(const DirectIsometry&, const DirectIsometry&) = default;

 private:
  struct Unchecked {};
  DirectIsometry(Mat3<R> m, Vec3<R> y, Unchecked) : m_(std::move(m)), y_(std::move(y)) {}
  template <class>
  friend class DirectIsometry;
  template <class S>
  friend DirectIsometry<S> compose(const DirectIsometry<S>&, const DirectIsometry<S>&);

  Mat3<R> m_;
  Vec3<R> y_;
};

using ExactIsometry = DirectIsometry<Rational>;
using FloatIsometry = DirectIsometry<double>;

/// sigma1 o sigma2: v -> (M1 M2) v + (M1 y2 + y1).
template <class R>
DirectIsometry<R> compose(const DirectIsometry<R>& a, const DirectIsometry<R>& b);

template <class R>
Vec3<R> apply(const DirectIsometry<R>& s, const Vec3<R>& p) {
  return s.apply(p);
}

/// Rotation matrix of the quaternion (a, b, c, d), divided by its squared
/// norm so the result is exactly orthogonal.
Mat3<Rational> quaternion_rotation(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

/// Deterministic random exact isometry: small-integer quaternion rotation and
/// a rational translation.
ExactIsometry random_rational_isometry(std::uint64_t seed);

/// Half-angle rotation about the z-axis, tan(theta/2) = t.
Mat3<Rational> z_rotation_half_angle(const Rational& t);

FloatIsometry to_float(const ExactIsometry& s);

/// Rotation taking the South pole (0,0,-1) to the unit vector d. Built from
/// half-turns, so it stays rational for rational unit d.
template <class R>
Mat3<R> rotation_south_to(const Vec3<R>& d);

/// Rotation about the z-axis by angle phi (radians).
Mat3<double> z_rotation(double phi);

}  // namespace podbond
