#include "podbond/pod.hpp"

#include "podbond/error.hpp"

namespace podbond {

Pod::Pod(std::vector<Vec3<Rational>> platform, std::vector<Vec3<Rational>> base, std::vector<Rational> d2)
    : platform_(std::move(platform)), base_(std::move(base)), d2_(std::move(d2)) {
  if (platform_.size() != base_.size() || platform_.size() != d2_.size())
    throw Error(Errc::invalid_argument, "platform, base and d2 must have equal lengths");
  for (const auto& d : d2_)
    if (d.sign() < 0) throw Error(Errc::invalid_argument, "squared leg length must be non-negative");
}

Pod Pod::posed(std::vector<Vec3<Rational>> platform, std::vector<Vec3<Rational>> base, const ExactIsometry& sigma) {
  if (platform.size() != base.size()) throw Error(Errc::invalid_argument, "platform and base must have equal lengths");
  std::vector<Rational> d2;
  d2.reserve(platform.size());
  for (std::size_t i = 0; i < platform.size(); ++i) {
    const Vec3<Rational> d = sub(sigma.apply(platform[i]), base[i]);
    d2.push_back(dot(d, d));
  }
  return Pod(std::move(platform), std::move(base), std::move(d2));
}

LegForm leg_form(const Vec3<Rational>& p, const Vec3<Rational>& P, const Rational& d2) {
  LegForm l;
  l.coeffs[coord::h] = dot(p, p) + dot(P, P) - d2;
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 3; ++k) l.coeffs[coord::m(j, k)] = Rational(-2) * p[k] * P[j];
  for (std::size_t k = 0; k < 3; ++k) {
    l.coeffs[coord::x(k)] = Rational(-2) * p[k];
    l.coeffs[coord::y(k)] = Rational(-2) * P[k];
  }
  l.coeffs[coord::r] = Rational(1);
  return l;
}

template <class K>
K eval_leg(const LegForm& l, const IsometryPoint<K>& pt) {
  K acc{};
  for (std::size_t k = 0; k < kCoordCount; ++k) {
    if (l.coeffs[k].is_zero()) continue;
    if constexpr (ScalarTraits<K>::exact)
      acc += K(l.coeffs[k]) * pt[k];
    else
      acc += ComplexApprox(l.coeffs[k].to_double()) * pt[k];
  }
  return acc;
}

std::vector<Rational> spherical_residuals(const Pod& pod, const ExactIsometry& sigma) {
  std::vector<Rational> out;
  out.reserve(pod.size());
  for (std::size_t i = 0; i < pod.size(); ++i) {
    const Vec3<Rational> d = sub(sigma.apply(pod.platform()[i]), pod.base()[i]);
    out.push_back(dot(d, d) - pod.d2()[i]);
  }
  return out;
}

std::vector<double> spherical_residuals(const Pod& pod, const FloatIsometry& sigma) {
  std::vector<double> out;
  out.reserve(pod.size());
  for (std::size_t i = 0; i < pod.size(); ++i) {
    const Vec3<double> d = sub(sigma.apply(to_double(pod.platform()[i])), to_double(pod.base()[i]));
    out.push_back(dot(d, d) - pod.d2()[i].to_double());
  }
  return out;
}

template <class K>
std::vector<K> pseudo_spherical_residuals(const Pod& pod, const IsometryPoint<K>& beta, double tol) {
  if (!ScalarTraits<K>::is_zero(beta.h(), tol, beta.max_abs())) throw Error(Errc::not_boundary, "not a boundary point");
  std::vector<K> out;
  out.reserve(pod.size());
  for (std::size_t i = 0; i < pod.size(); ++i) {
    LegForm l = leg_form(pod.platform()[i], pod.base()[i], Rational(0));
    l.coeffs[coord::h] = Rational(0);
    out.push_back(eval_leg(l, beta));
  }
  return out;
}

Vec3<double> to_double(const Vec3<Rational>& v) {
  return convert<double>(v, [](const Rational& r) { return r.to_double(); });
}

Vec3<Rational> exact_vec(const Vec3<double>& v) {
  return convert<Rational>(v, [](double d) { return Rational::from_double(d); });
}

template GaussianRational eval_leg(const LegForm&, const ExactPoint&);
template ComplexApprox eval_leg(const LegForm&, const FloatPoint&);
template std::vector<GaussianRational> pseudo_spherical_residuals(const Pod&, const ExactPoint&, double);
template std::vector<ComplexApprox> pseudo_spherical_residuals(const Pod&, const FloatPoint&, double);

}  // namespace podbond
