#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "podbond/boundary.hpp"
#include "podbond/pod.hpp"

namespace podbond {

/// q -> (a q + b) / (c q + d), stored with the first largest-magnitude
/// coefficient equal to 1. Degenerate maps (ad = bc) can be represented so
/// that fitted kernels can be reported; `degenerate()` flags them.
class PlanarMobius {
 public:
  using C = std::complex<double>;
  /// Throws Errc::invalid_argument when all four coefficients vanish.
  PlanarMobius(C a, C b, C c, C d);

  const C& a() const { return k_[0]; }
  const C& b() const { return k_[1]; }
  const C& c() const { return k_[2]; }
  const C& d() const { return k_[3]; }
  const std::array<C, 4>& coeffs() const { return k_; }

  C operator()(C q) const { return (k_[0] * q + k_[1]) / (k_[2] * q + k_[3]); }
  /// |ad - bc| of the normalized coefficients.
  double det_abs() const { return std::abs(k_[0] * k_[3] - k_[1] * k_[2]); }
  bool degenerate(double tol = 1e-12) const { return det_abs() <= tol; }
  /// c = 0, i.e. an affine map.
  bool is_similarity(double tol = 1e-12) const { return std::abs(k_[2]) <= tol; }
  /// this o other
  PlanarMobius after(const PlanarMobius& other) const;
  /// Equal as projective coefficient vectors, within tol.
  bool same_map(const PlanarMobius& o, double tol = 1e-9) const;

 private:
  std::array<C, 4> k_;
};

/// Orientation-preserving planar isometry q -> u q + c, |u| = 1.
struct PlanarIsometry {
  std::complex<double> u{1.0, 0.0};
  std::complex<double> c{0.0, 0.0};

  static PlanarIsometry make(double angle, std::complex<double> shift) { return {std::polar(1.0, angle), shift}; }
  std::complex<double> operator()(std::complex<double> q) const { return u * q + c; }
  PlanarMobius as_mobius() const { return {u, c, 0.0, 1.0}; }
  /// Rotation about the z-axis by arg u followed by the shift (Re c, Im c, 0).
  FloatIsometry spatial() const;
};

/// Line through `point` with unit direction `direction` (exactly unit for
/// Rational, within 1e-12 for double).
template <class R>
struct OrientedLine {
  Vec3<R> point;
  Vec3<R> direction;

  OrientedLine(Vec3<R> point, Vec3<R> direction);
  Direction dir() const;
  /// Isometry carrying the z-axis, oriented to the South pole, onto this line.
  DirectIsometry<R> frame() const;
  bool contains(const Vec3<R>& p, double tol = 1e-9) const;
};

enum class MobiusKind { inversion, similarity };

/// A boundary point with its class and the geometric data attached to it.
/// carrier is the line direction of a collinearity point (an extension; the
/// left/right pair is undefined there).
template <class K>
struct Bond {
  IsometryPoint<K> point;
  BoundaryClass cls;
  std::optional<Direction> L;
  std::optional<Direction> R;
  std::optional<Direction> carrier;
  std::optional<PlanarMobius> planar_map;

  static Bond from_point(const IsometryPoint<K>& p, double tol = 1e-9);
};

using ExactBond = Bond<GaussianRational>;
using FloatBond = Bond<ComplexApprox>;

/// Butterfly point whose pseudo-spherical residual vanishes exactly when the
/// platform point lies on `platform_line` or the base point on `base_line`.
/// L is the base-line direction, R the platform-line direction.
template <class R>
Bond<ComplexOf<R>> butterfly_bond(const OrientedLine<R>& platform_line, const OrientedLine<R>& base_line,
                                  double tol = 1e-9);

/// Left collinearity point for side = left (platform points on g), right
/// collinearity point for side = right (base points on g).
template <class R>
Bond<ComplexOf<R>> collinearity_bond(const OrientedLine<R>& g, Side side, double tol = 1e-9);

/// sigma1 beta0 sigma2 for the inversion or similarity normal form beta0,
/// with sigma1 = F_L o tau1 and sigma2 = tau2 o F_R^-1. The planar map is
/// tau1 o kappa0 o tau2, kappa0(q) = (parameter / 2) / q or -parameter q.
FloatBond mobius_bond(const Direction& L, const Direction& R, MobiusKind kind, double parameter,
                      const PlanarIsometry& tau1 = {}, const PlanarIsometry& tau2 = {}, double tol = 1e-9);

struct MobiusDecomposition {
  MobiusKind kind;
  double parameter;
  PlanarIsometry tau1;
  PlanarIsometry tau2;
};

/// kappa = tau1 o kappa0 o tau2. Throws Errc::invalid_argument for degenerate
/// maps, the only ones without such a decomposition.
MobiusDecomposition decompose_mobius(const PlanarMobius& kappa, double tol = 1e-12);

/// mobius_bond for an arbitrary nondegenerate planar map.
FloatBond mobius_bond(const Direction& L, const Direction& R, const PlanarMobius& kappa, double tol = 1e-9);

/// Planar map kappa with kappa(pi_R p) = pi_L P exactly on the residual-zero
/// pairs, in the frames of ProjectionFrame. Inversion and similarity only.
template <class K>
PlanarMobius extract_planar_map(const Bond<K>& bond, double tol = 1e-9);

template <class K>
struct BondVerification {
  std::vector<K> residuals;
  double max_abs = 0.0;
  bool member = false;
};

/// Pseudo-spherical residuals of every leg; member when all vanish (exactly
/// for exact bonds, within tol otherwise).
template <class K>
BondVerification<K> verify_bond(const Bond<K>& bond, const Pod& pod, double tol = 1e-9);

}  // namespace podbond
