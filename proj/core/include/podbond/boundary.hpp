#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "podbond/rigid.hpp"
#include "podbond/xspace.hpp"

namespace podbond {

enum class BoundaryClass { Vertex, Inversion, Butterfly, Similarity, CollinearityLeft, CollinearityRight };

std::string to_string(BoundaryClass c);
std::optional<BoundaryClass> boundary_class_from_string(std::string_view s);

/// Unit vector in R^3, i.e. a point of S^2.
class Direction {
 public:
  /// South pole.
  Direction() = default;
  /// Normalizes; throws on a (near) zero vector.
  static Direction from_vector(const Vec3<double>& v);
  static Direction south() { return Direction(); }
  static Direction north() { return from_vector({0.0, 0.0, 1.0}); }

  const Vec3<double>& vec() const { return v_; }
  double operator[](std::size_t i) const { return v_[i]; }
  Direction operator-() const { return from_vector(neg(v_)); }
  /// Angle to another direction, in radians.
  double angle_to(const Direction& o) const;
  bool close_to(const Direction& o, double tol = 1e-9) const;

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  Vec3<double> v_{0.0, 0.0, -1.0};
};

/// Boundary class of a point with h = 0 that satisfies the listed generators.
/// Exact points are tested exactly; float points relative to their scale.
template <class K>
BoundaryClass classify(const IsometryPoint<K>& p, double tol = 1e-9);

/// M = v w^t with the largest-magnitude entry of w equal to 1.
template <class K>
std::pair<Vec3<K>, Vec3<K>> rank1_factor(const Mat3<K>& m, double tol = 1e-9);

/// Isotropic vector -> P^1 -> S^2.
template <class K>
Direction direction_from_conic(const Vec3<K>& v, double tol = 1e-9);

/// (L, R) of an inversion, butterfly or similarity point.
template <class K>
std::pair<Direction, Direction> left_right_vectors(const IsometryPoint<K>& p, double tol = 1e-9);

/// Direction of the carrier line of a collinearity point.
template <class K>
Direction collinearity_direction(const IsometryPoint<K>& p, double tol = 1e-9);

struct NormalFormCertificate {
  FloatIsometry sigma_left;
  FloatIsometry sigma_right;
  FloatPoint normal_point;
  BoundaryClass cls;
  std::optional<double> parameter;
};

/// Reduces a non-vertex boundary point to its normal form:
/// act(sigma_left, act(sigma_right, p, right), left) ~ normal_point.
NormalFormCertificate normal_form(const FloatPoint& p, double tol = 1e-9);
NormalFormCertificate normal_form(const ExactPoint& p, double tol = 1e-9);

/// Orthonormal frame used to project along a direction L; complex coordinate
/// q = <p, e1> + i <p, e2>. e1 x e2 = -L, and L = South gives q = a + ib.
struct ProjectionFrame {
  Direction L;
  Vec3<double> e1;
  Vec3<double> e2;

  static ProjectionFrame of(const Direction& L);
  std::complex<double> project(const Vec3<double>& p) const { return {dot(p, e1), dot(p, e2)}; }
  /// Rotation with columns (e1, e2, -L); carries the South pole to L.
  Mat3<double> rotation() const;
};

/// Rotation F with F^t w proportional to (1, i, 0), for isotropic w. Its
/// columns are Re w, Im w and their cross product, normalized.
Mat3<double> isotropic_frame(const Vec3<ComplexApprox>& w);

}  // namespace podbond
