#include "podbond/bonds.hpp"

#include <algorithm>

#include "podbond/error.hpp"

namespace podbond {

PlanarMobius::PlanarMobius(C a, C b, C c, C d) : k_{a, b, c, d} {
  std::size_t piv = 0;
  for (std::size_t i = 1; i < 4; ++i)
    if (std::abs(k_[i]) > std::abs(k_[piv])) piv = i;
  if (std::abs(k_[piv]) == 0.0) throw Error(Errc::invalid_argument, "Mobius map with all coefficients zero");
  const C s = k_[piv];
  for (auto& v : k_) v /= s;
  k_[piv] = 1.0;
}

PlanarMobius PlanarMobius::after(const PlanarMobius& o) const {
  return {a() * o.a() + b() * o.c(), a() * o.b() + b() * o.d(), c() * o.a() + d() * o.c(), c() * o.b() + d() * o.d()};
}

bool PlanarMobius::same_map(const PlanarMobius& o, double tol) const {
  C num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    num += std::conj(o.k_[i]) * k_[i];
    den += std::norm(o.k_[i]);
  }
  const C alpha = num / den;
  for (std::size_t i = 0; i < 4; ++i)
    if (std::abs(k_[i] - alpha * o.k_[i]) > tol) return false;
  return true;
}

FloatIsometry PlanarIsometry::spatial() const {
  return FloatIsometry(z_rotation(std::arg(u)), {c.real(), c.imag(), 0.0});
}

template <class R>
OrientedLine<R>::OrientedLine(Vec3<R> p, Vec3<R> d) : point(std::move(p)), direction(std::move(d)) {
  if constexpr (std::is_same_v<R, Rational>) {
    if (dot(direction, direction) != Rational(1))
      throw Error(Errc::invalid_argument, "line direction must be an exact unit vector");
  } else {
    const double n = norm(direction);
    if (!(n > 1e-300) || !std::isfinite(n)) throw Error(Errc::invalid_argument, "line direction must be nonzero");
    direction = scale(1.0 / n, direction);
  }
}

template <class R>
Direction OrientedLine<R>::dir() const {
  return Direction::from_vector(convert<double>(direction, [](const R& v) { return to_double(v); }));
}

template <class R>
DirectIsometry<R> OrientedLine<R>::frame() const {
  return DirectIsometry<R>(rotation_south_to(direction), point);
}

template <class R>
bool OrientedLine<R>::contains(const Vec3<R>& p, double tol) const {
  const Vec3<R> c = cross(sub(p, point), direction);
  if constexpr (std::is_same_v<R, Rational>) {
    return c[0].is_zero() && c[1].is_zero() && c[2].is_zero();
  } else {
    return norm(c) <= tol * std::max(1.0, norm(sub(p, point)));
  }
}

template <class K>
Bond<K> Bond<K>::from_point(const IsometryPoint<K>& p, double tol) {
  Bond b{p, classify(p, tol), std::nullopt, std::nullopt, std::nullopt, std::nullopt};
  switch (b.cls) {
    case BoundaryClass::Inversion:
    case BoundaryClass::Similarity:
    case BoundaryClass::Butterfly: {
      const auto [l, r] = left_right_vectors(p, tol);
      b.L = l;
      b.R = r;
      if (b.cls != BoundaryClass::Butterfly) b.planar_map = extract_planar_map(b, tol);
      break;
    }
    case BoundaryClass::CollinearityLeft:
    case BoundaryClass::CollinearityRight:
      b.carrier = collinearity_direction(p, tol);
      break;
    case BoundaryClass::Vertex:
      break;
  }
  return b;
}

template <class R>
Bond<ComplexOf<R>> butterfly_bond(const OrientedLine<R>& platform_line, const OrientedLine<R>& base_line, double tol) {
  using K = ComplexOf<R>;
  const IsometryPoint<K> beta0 = butterfly_normal_form<K>();
  const IsometryPoint<K> beta =
      act(base_line.frame(), act(platform_line.frame().inverse(), beta0, Side::right), Side::left);
  return Bond<K>::from_point(beta, tol);
}

template <class R>
Bond<ComplexOf<R>> collinearity_bond(const OrientedLine<R>& g, Side side, double tol) {
  using K = ComplexOf<R>;
  if (side == Side::left)
    return Bond<K>::from_point(act(g.frame().inverse(), left_collinearity_normal_form<K>(), Side::right), tol);
  return Bond<K>::from_point(act(g.frame(), right_collinearity_normal_form<K>(), Side::left), tol);
}

FloatBond mobius_bond(const Direction& L, const Direction& R, MobiusKind kind, double parameter,
                      const PlanarIsometry& tau1, const PlanarIsometry& tau2, double tol) {
  if (!(parameter > 0.0) || !std::isfinite(parameter))
    throw Error(Errc::invalid_argument, "Mobius bond parameter must be positive");
  const FloatPoint beta0 = kind == MobiusKind::inversion ? inversion_normal_form<ComplexApprox>(parameter)
                                                         : similarity_normal_form<ComplexApprox>(parameter);
  const FloatIsometry fl = FloatIsometry::rotation(ProjectionFrame::of(L).rotation());
  const FloatIsometry fr = FloatIsometry::rotation(ProjectionFrame::of(R).rotation());
  const FloatIsometry s1 = compose(fl, tau1.spatial());
  const FloatIsometry s2 = compose(tau2.spatial(), fr.inverse());
  return FloatBond::from_point(act(s1, act(s2, beta0, Side::right), Side::left), tol);
}

MobiusDecomposition decompose_mobius(const PlanarMobius& k, double tol) {
  using C = std::complex<double>;
  if (k.degenerate(tol)) throw Error(Errc::invalid_argument, "degenerate Mobius map (ad = bc)");
  if (k.is_similarity(tol)) {
    const C alpha = k.a() / k.d(), beta = k.b() / k.d();
    const double gamma = std::abs(alpha);
    return {MobiusKind::similarity, gamma, PlanarIsometry{-alpha / gamma, beta}, PlanarIsometry{}};
  }
  const C A = k.a() / k.c(), B = (k.b() * k.c() - k.a() * k.d()) / (k.c() * k.c()), D = k.d() / k.c();
  return {MobiusKind::inversion, 2.0 * std::abs(B), PlanarIsometry{B / std::abs(B), A}, PlanarIsometry{1.0, D}};
}

FloatBond mobius_bond(const Direction& L, const Direction& R, const PlanarMobius& kappa, double tol) {
  const MobiusDecomposition d = decompose_mobius(kappa);
  return mobius_bond(L, R, d.kind, d.parameter, d.tau1, d.tau2, tol);
}

namespace {

Vec3<std::complex<double>> conj_frame_vector(const Direction& D) {
  const ProjectionFrame f = ProjectionFrame::of(D);
  Vec3<std::complex<double>> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = {f.e1[i], -f.e2[i]};
  return out;
}

}  // namespace

template <class K>
PlanarMobius extract_planar_map(const Bond<K>& bond, double /*tol*/) {
  using C = std::complex<double>;
  if (bond.cls != BoundaryClass::Inversion && bond.cls != BoundaryClass::Similarity)
    throw Error(Errc::wrong_class, "planar map needs an inversion or similarity point");
  FloatPoint p = FloatPoint::vertex();
  if constexpr (ScalarTraits<K>::exact)
    p = to_approx(bond.point);
  else
    p = bond.point;
  const auto fl = conj_frame_vector(*bond.L), fr = conj_frame_vector(*bond.R);
  C m = 0.0, xi = 0.0, eta = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m += fl[i] * p.M()[i][j].value() * fr[j];
    xi += p.x()[i].value() * fr[i];
    eta += p.y()[i].value() * fl[i];
  }
  m /= 4.0;
  xi /= 2.0;
  eta /= 2.0;
  return PlanarMobius(-2.0 * xi, p.r().value(), 2.0 * m, 2.0 * eta);
}

template <class K>
BondVerification<K> verify_bond(const Bond<K>& bond, const Pod& pod, double tol) {
  BondVerification<K> v;
  v.residuals = pseudo_spherical_residuals(pod, bond.point, tol);
  for (const auto& r : v.residuals) v.max_abs = std::max(v.max_abs, ScalarTraits<K>::magnitude(r));
  if constexpr (ScalarTraits<K>::exact) {
    v.member = std::all_of(v.residuals.begin(), v.residuals.end(), [](const K& r) { return r.is_zero(); });
  } else {
    double s = 1.0;
    for (std::size_t i = 0; i < pod.size(); ++i) {
      const double a = norm(to_double(pod.platform()[i])), b = norm(to_double(pod.base()[i]));
      s = std::max({s, a, b, a * b});
    }
    v.member = v.max_abs <= tol * s;
  }
  return v;
}

template struct OrientedLine<Rational>;
template struct OrientedLine<double>;
template struct Bond<GaussianRational>;
template struct Bond<ComplexApprox>;
template ExactBond butterfly_bond(const OrientedLine<Rational>&, const OrientedLine<Rational>&, double);
template FloatBond butterfly_bond(const OrientedLine<double>&, const OrientedLine<double>&, double);
template ExactBond collinearity_bond(const OrientedLine<Rational>&, Side, double);
template FloatBond collinearity_bond(const OrientedLine<double>&, Side, double);
template PlanarMobius extract_planar_map(const ExactBond&, double);
template PlanarMobius extract_planar_map(const FloatBond&, double);
template BondVerification<GaussianRational> verify_bond(const ExactBond&, const Pod&, double);
template BondVerification<ComplexApprox> verify_bond(const FloatBond&, const Pod&, double);

}  // namespace podbond
