#pragma once

#include <vector>

#include "podbond/rigid.hpp"
#include "podbond/xspace.hpp"

namespace podbond {

/// Platform points p_i, base points P_i and squared leg lengths d_i^2.
class Pod {
 public:
  Pod() = default;
  /// Throws Errc::invalid_argument on length mismatch or a negative d2.
  Pod(std::vector<Vec3<Rational>> platform, std::vector<Vec3<Rational>> base, std::vector<Rational> d2);
  /// Leg lengths read off a pose: d_i^2 = |sigma(p_i) - P_i|^2.
  static Pod posed(std::vector<Vec3<Rational>> platform, std::vector<Vec3<Rational>> base, const ExactIsometry& sigma);

  std::size_t size() const { return platform_.size(); }
  const std::vector<Vec3<Rational>>& platform() const { return platform_; }
  const std::vector<Vec3<Rational>>& base() const { return base_; }
  const std::vector<Rational>& d2() const { return d2_; }

  friend bool operator==(const Pod&, const Pod&) = default;

 private:
  std::vector<Vec3<Rational>> platform_;
  std::vector<Vec3<Rational>> base_;
  std::vector<Rational> d2_;
};

/// Linear form on P^16 of one leg, indexed like the coordinates.
struct LegForm {
  Coords<Rational> coeffs;
};

/// coeff(h) = <p,p> + <P,P> - d2, coeff(m_jk) = -2 p_k P_j,
/// coeff(x_k) = -2 p_k, coeff(y_j) = -2 P_j, coeff(r) = 1.
LegForm leg_form(const Vec3<Rational>& p, const Vec3<Rational>& P, const Rational& d2);

template <class K>
K eval_leg(const LegForm& l, const IsometryPoint<K>& pt);

std::vector<Rational> spherical_residuals(const Pod& pod, const ExactIsometry& sigma);
std::vector<double> spherical_residuals(const Pod& pod, const FloatIsometry& sigma);

/// r - 2<p,x> - 2<y,P> - 2<Mp,P> per leg. Throws Errc::not_boundary when h != 0.
template <class K>
std::vector<K> pseudo_spherical_residuals(const Pod& pod, const IsometryPoint<K>& beta, double tol = 1e-9);

Vec3<double> to_double(const Vec3<Rational>& v);
Vec3<Rational> exact_vec(const Vec3<double>& v);

}  // namespace podbond
