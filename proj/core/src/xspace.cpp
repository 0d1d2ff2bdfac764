#include "podbond/xspace.hpp"

#include <algorithm>

#include "podbond/error.hpp"

namespace podbond {

std::string coord::name(std::size_t k) {
  if (k == coord::h) return "h";
  if (k == coord::r) return "r";
  if (k < 10) return "m" + std::to_string((k - 1) / 3 + 1) + std::to_string((k - 1) % 3 + 1);
  if (k < 13) return "x" + std::to_string(k - 9);
  return "y" + std::to_string(k - 12);
}

namespace {

template <class K>
K lift(const RealOf<K>& v) {
  return ScalarTraits<K>::from_real(v);
}

template <class K>
Vec3<K> lift(const Vec3<RealOf<K>>& v) {
  return convert<K>(v, [](const RealOf<K>& a) { return lift<K>(a); });
}

template <class K>
Mat3<K> lift(const Mat3<RealOf<K>>& m) {
  return convert<K>(m, [](const RealOf<K>& a) { return lift<K>(a); });
}

}  // namespace

template <class K>
IsometryPoint<K> IsometryPoint<K>::from_coords(const Coords<K>& c) {
  using T = ScalarTraits<K>;
  std::size_t pivot = kCoordCount;
  if constexpr (T::exact) {
    for (std::size_t k = 0; k < kCoordCount; ++k)
      if (!c[k].is_zero()) {
        pivot = k;
        break;
      }
  } else {
    double best = 0.0;
    for (std::size_t k = 0; k < kCoordCount; ++k)
      if (const double m = T::magnitude(c[k]); m > best) {
        best = m;
        pivot = k;
      }
  }
  if (pivot == kCoordCount) throw Error(Errc::invalid_argument, "all 17 coordinates are zero");
  Coords<K> n = c;
  const K s = c[pivot];
  for (auto& v : n) v = v / s;
  n[pivot] = K(1);
  return IsometryPoint(n);
}

template <class K>
IsometryPoint<K> IsometryPoint<K>::vertex() {
  Coords<K> c{};
  c[coord::r] = K(1);
  return IsometryPoint(c);
}

template <class K>
double IsometryPoint<K>::max_abs() const {
  double m = 0.0;
  for (const auto& v : c_) m = std::max(m, ScalarTraits<K>::magnitude(v));
  return m;
}

template <class R>
IsometryPoint<ComplexOf<R>> embed(const DirectIsometry<R>& s) {
  using K = ComplexOf<R>;
  return IsometryPoint<K>::from_blocks(K(1), lift<K>(s.M()), lift<K>(s.x()), lift<K>(s.y()), lift<K>(s.r()));
}

template <class K>
ResidualReport<K> defining_residuals(const IsometryPoint<K>& p) {
  ResidualReport<K> rep;
  rep.entries = generator_values(p.coords());
  for (const auto& [label, v] : rep.entries) rep.max_abs = std::max(rep.max_abs, ScalarTraits<K>::magnitude(v));
  return rep;
}

template <class K>
IsometryPoint<K> product(const IsometryPoint<K>& a, const IsometryPoint<K>& b) {
  const Coords<K> c = product_coords(a.coords(), b.coords());
  if constexpr (ScalarTraits<K>::exact) {
    if (std::all_of(c.begin(), c.end(), [](const K& v) { return v.is_zero(); }))
      throw Error(Errc::undefined_product, "undefined product");
  } else {
    // Entries are bilinear in two max-abs-normalized points.
    double m = 0.0;
    for (const auto& v : c) m = std::max(m, v.abs());
    if (m <= 1e-12) throw Error(Errc::undefined_product, "undefined product");
  }
  return IsometryPoint<K>::from_coords(c);
}

template <class K>
IsometryPoint<K> act_translation(const Vec3<RealOf<K>>& s_real, const IsometryPoint<K>& p, Side side) {
  const Vec3<K> s = lift<K>(s_real);
  const K& h = p.h();
  const Mat3<K> m = p.M();
  const Vec3<K> x = p.x(), y = p.y();
  const K ss = dot(s, s);
  if (side == Side::left) {
    // (h : M : -M^t s + x : h s + y : h<s,s> + r + 2<s,y>)
    const K sy = dot(s, y);
    return IsometryPoint<K>::from_blocks(h, m, sub(x, matvec(transpose(m), s)), add(scale(h, s), y),
                                         h * ss + p.r() + sy + sy);
  }
  // (h : M : x - h s : y + M s : r + h<s,s> - 2<x,s>)
  const K xs = dot(x, s);
  return IsometryPoint<K>::from_blocks(h, m, sub(x, scale(h, s)), add(y, matvec(m, s)), p.r() + h * ss - xs - xs);
}

template <class K>
IsometryPoint<K> act_rotation(const Mat3<RealOf<K>>& rot_real, const IsometryPoint<K>& p, Side side) {
  const Mat3<K> rot = lift<K>(rot_real);
  if (side == Side::left)  // (h : M'M : x : M'y : r)
    return IsometryPoint<K>::from_blocks(p.h(), matmul(rot, p.M()), p.x(), matvec(rot, p.y()), p.r());
  // (h : MM' : M'^t x : y : r)
  return IsometryPoint<K>::from_blocks(p.h(), matmul(p.M(), rot), matvec(transpose(rot), p.x()), p.y(), p.r());
}

template <class K>
IsometryPoint<K> act(const DirectIsometry<RealOf<K>>& s, const IsometryPoint<K>& p, Side side) {
  // s = T_y o R_M
  if (side == Side::left) return act_translation(s.y(), act_rotation(s.M(), p, Side::left), Side::left);
  return act_rotation(s.M(), act_translation(s.y(), p, Side::right), Side::right);
}

template <class K>
bool proj_eq(const IsometryPoint<K>& a, const IsometryPoint<K>& b, const TolerancePolicy& tol) {
  if constexpr (ScalarTraits<K>::exact) {
    return a == b;
  } else {
    std::complex<double> num{}, den{};
    for (std::size_t k = 0; k < kCoordCount; ++k) {
      num += std::conj(b[k].value()) * a[k].value();
      den += std::norm(b[k].value());
    }
    const std::complex<double> alpha = num / den;
    for (std::size_t k = 0; k < kCoordCount; ++k) {
      const std::complex<double> av = a[k].value(), bv = alpha * b[k].value();
      if (std::abs(av - bv) > tol.abs_tol + tol.rel_tol * std::max(std::abs(av), std::abs(bv))) return false;
    }
    return true;
  }
}

FloatPoint to_approx(const ExactPoint& p) {
  Coords<ComplexApprox> c;
  for (std::size_t k = 0; k < kCoordCount; ++k) c[k] = ScalarTraits<GaussianRational>::approx(p[k]);
  return FloatPoint::from_coords(c);
}

namespace {

template <class K>
Vec3<K> iso_e() {
  return {K(1), K::i(), K(0)};
}

}  // namespace

template <class K>
IsometryPoint<K> butterfly_normal_form() {
  return IsometryPoint<K>::from_blocks(K(0), outer(iso_e<K>(), iso_e<K>()), Vec3<K>{}, Vec3<K>{}, K(0));
}

template <class K>
IsometryPoint<K> inversion_normal_form(const RealOf<K>& r) {
  if (!(r > RealOf<K>(0))) throw Error(Errc::invalid_argument, "inversion parameter must be positive");
  return IsometryPoint<K>::from_blocks(K(0), outer(iso_e<K>(), iso_e<K>()), Vec3<K>{}, Vec3<K>{}, lift<K>(r));
}

template <class K>
IsometryPoint<K> similarity_normal_form(const RealOf<K>& gamma) {
  if (!(gamma > RealOf<K>(0))) throw Error(Errc::invalid_argument, "similarity parameter must be positive");
  return IsometryPoint<K>::from_blocks(K(0), Mat3<K>{}, scale(lift<K>(gamma), iso_e<K>()), iso_e<K>(), K(0));
}

template <class K>
IsometryPoint<K> left_collinearity_normal_form() {
  return IsometryPoint<K>::from_blocks(K(0), Mat3<K>{}, iso_e<K>(), Vec3<K>{}, K(0));
}

template <class K>
IsometryPoint<K> right_collinearity_normal_form() {
  return IsometryPoint<K>::from_blocks(K(0), Mat3<K>{}, Vec3<K>{}, iso_e<K>(), K(0));
}

#define PODBOND_INSTANTIATE_XSPACE(K)                                                                  \
  template class IsometryPoint<K>;                                                                     \
  template ResidualReport<K> defining_residuals(const IsometryPoint<K>&);                              \
  template IsometryPoint<K> product(const IsometryPoint<K>&, const IsometryPoint<K>&);                 \
  template IsometryPoint<K> act_translation(const Vec3<RealOf<K>>&, const IsometryPoint<K>&, Side);    \
  template IsometryPoint<K> act_rotation(const Mat3<RealOf<K>>&, const IsometryPoint<K>&, Side);       \
  template IsometryPoint<K> act(const DirectIsometry<RealOf<K>>&, const IsometryPoint<K>&, Side);      \
  template bool proj_eq(const IsometryPoint<K>&, const IsometryPoint<K>&, const TolerancePolicy&);     \
  template IsometryPoint<K> butterfly_normal_form<K>();                                                \
  template IsometryPoint<K> inversion_normal_form<K>(const RealOf<K>&);                                \
  template IsometryPoint<K> similarity_normal_form<K>(const RealOf<K>&);                               \
  template IsometryPoint<K> left_collinearity_normal_form<K>();                                        \
  template IsometryPoint<K> right_collinearity_normal_form<K>();

PODBOND_INSTANTIATE_XSPACE(GaussianRational)
PODBOND_INSTANTIATE_XSPACE(ComplexApprox)
#undef PODBOND_INSTANTIATE_XSPACE

template IsometryPoint<GaussianRational> embed(const DirectIsometry<Rational>&);
template IsometryPoint<ComplexApprox> embed(const DirectIsometry<double>&);

}  // namespace podbond
