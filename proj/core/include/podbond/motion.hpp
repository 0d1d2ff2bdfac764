#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "podbond/bonds.hpp"
#include "podbond/gauss_poly.hpp"

namespace podbond {

/// One-parameter family t -> (h(t) : M(t) : x(t) : y(t) : r(t)) with
/// coordinates in Q(i)[t], kept free of common polynomial factors.
class RationalMotion {
 public:
  /// Divides out the gcd of the coordinates and checks that every listed
  /// generator vanishes identically (Errc::not_on_x otherwise).
  explicit RationalMotion(Coords<GaussPoly> coords);

  const Coords<GaussPoly>& coords() const { return c_; }
  const GaussPoly& h() const { return c_[coord::h]; }
  /// Largest coordinate degree.
  int degree() const;

  Coords<GaussianRational> values(const GaussianRational& t) const;
  /// Normalized point at t; throws Errc::degenerate_parametrization if all
  /// coordinates vanish there.
  ExactPoint at(const GaussianRational& t) const;
  /// The isometry at a real parameter, when h(t) != 0 and the values are real.
  std::optional<ExactIsometry> pose(const Rational& t) const;

  friend bool operator==(const RationalMotion&, const RationalMotion&) = default;

 private:
  Coords<GaussPoly> c_;
};

/// Half-angle rotation family about the axis, right-handed about its
/// direction. For the z-axis: h = 1 + t^2, M = [[1-t^2, -2t, 0], [2t, 1-t^2, 0],
/// [0, 0, 1+t^2]], x = y = r = 0.
RationalMotion rotation_motion(const OrientedLine<Rational>& axis);

/// sigma1 * m(t) * sigma2, gcd-reduced.
RationalMotion transform(const ExactIsometry& sigma1, const RationalMotion& m, const ExactIsometry& sigma2);

/// A bond reached as a root t0 of h. `order` is the number of derivatives
/// taken before the coordinate vector stopped vanishing.
struct LimitBond {
  std::complex<double> t;
  std::optional<GaussianRational> exact_t;
  int order = 0;
  std::optional<ExactBond> exact;
  FloatBond approx;
};

/// Limits of the family at the roots of h, sorted by (Re t, Im t). Roots in
/// Q(i) are handled exactly; others numerically.
std::vector<LimitBond> limit_bonds(const RationalMotion& m, double tol = 1e-9);

/// Square root in Q(i) when it exists.
std::optional<GaussianRational> exact_sqrt(const GaussianRational& z);

}  // namespace podbond
