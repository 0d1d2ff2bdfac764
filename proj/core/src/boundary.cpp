#include "podbond/boundary.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "podbond/error.hpp"

namespace podbond {

namespace {

constexpr std::array<std::pair<BoundaryClass, const char*>, 6> kClassNames{{
    {BoundaryClass::Vertex, "Vertex"},
    {BoundaryClass::Inversion, "Inversion"},
    {BoundaryClass::Butterfly, "Butterfly"},
    {BoundaryClass::Similarity, "Similarity"},
    {BoundaryClass::CollinearityLeft, "CollinearityLeft"},
    {BoundaryClass::CollinearityRight, "CollinearityRight"},
}};

template <class K>
bool all_zero(const Vec3<K>& v, double tol, double scale) {
  return std::all_of(v.begin(), v.end(), [&](const K& z) { return ScalarTraits<K>::is_zero(z, tol, scale); });
}

template <class K>
bool all_zero(const Mat3<K>& m, double tol, double scale) {
  return std::all_of(m.begin(), m.end(), [&](const Vec3<K>& row) { return all_zero(row, tol, scale); });
}

// Squared magnitude, comparable within one backend.
template <class K>
auto mag2(const K& z) {
  return ScalarTraits<K>::norm2(z);
}

std::complex<double> cplx(const ComplexApprox& z) { return z.value(); }

Direction stereographic(const std::complex<double>& s, const std::complex<double>& t) {
  const std::complex<double> st = std::conj(s) * t;
  const double ns = std::norm(s), nt = std::norm(t);
  return Direction::from_vector({2.0 * st.real() / (ns + nt), 2.0 * st.imag() / (ns + nt), (nt - ns) / (ns + nt)});
}

}  // namespace

std::string to_string(BoundaryClass c) {
  for (const auto& [k, name] : kClassNames)
    if (k == c) return name;
  return "?";
}

std::optional<BoundaryClass> boundary_class_from_string(std::string_view s) {
  for (const auto& [k, name] : kClassNames)
    if (s == name) return k;
  return std::nullopt;
}

Direction Direction::from_vector(const Vec3<double>& v) {
  const double n = norm(v);
  if (!std::isfinite(n) || n < 1e-300) throw Error(Errc::invalid_argument, "direction must be a nonzero finite vector");
  Direction d;
  d.v_ = scale(1.0 / n, v);
  return d;
}

double Direction::angle_to(const Direction& o) const { return std::atan2(norm(cross(v_, o.v_)), dot(v_, o.v_)); }

bool Direction::close_to(const Direction& o, double tol) const {
  for (std::size_t i = 0; i < 3; ++i)
    if (std::abs(v_[i] - o.v_[i]) > tol) return false;
  return true;
}

template <class K>
BoundaryClass classify(const IsometryPoint<K>& p, double tol) {
  using T = ScalarTraits<K>;
  const double s = p.max_abs();
  if (!T::is_zero(p.h(), tol, s)) throw Error(Errc::not_boundary, "not a boundary point");
  const auto rep = defining_residuals(p);
  const bool on_x = T::exact ? rep.satisfied() : rep.satisfied(tol * s * s * s);
  if (!on_x) throw Error(Errc::not_on_x, "not on X (listed generators)");
  const Mat3<K> m = p.M();
  const Vec3<K> x = p.x(), y = p.y();
  if (all_zero(m, tol, s)) {
    const bool x0 = all_zero(x, tol, s), y0 = all_zero(y, tol, s);
    if (x0 && y0) return BoundaryClass::Vertex;
    if (y0) return BoundaryClass::CollinearityLeft;
    if (x0) return BoundaryClass::CollinearityRight;
    return BoundaryClass::Similarity;
  }
  const Mat3<K> n = matadd(matscale(p.r(), m), matscale(K(2), outer(y, x)));
  return all_zero(n, tol, s * s) ? BoundaryClass::Butterfly : BoundaryClass::Inversion;
}

template <class K>
std::pair<Vec3<K>, Vec3<K>> rank1_factor(const Mat3<K>& m, double tol) {
  using T = ScalarTraits<K>;
  std::size_t pi = 0, pj = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (mag2(m[i][j]) > mag2(m[pi][pj])) pi = i, pj = j;
  if (m[pi][pj].is_zero()) throw Error(Errc::zero_matrix, "zero matrix");
  const K piv = m[pi][pj];
  Vec3<K> w = m[pi];
  Vec3<K> v{m[0][pj] / piv, m[1][pj] / piv, m[2][pj] / piv};
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (mag2(w[i]) > mag2(w[k])) k = i;
  const K wk = w[k];
  for (auto& c : w) c = c / wk;
  v = scale(wk, v);
  const double s = T::magnitude(piv);
  const Mat3<K> rec = outer(v, w);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (!T::is_zero(m[i][j] - rec[i][j], tol, s)) throw Error(Errc::not_rank_one, "not rank one");
  return {v, w};
}

template <class K>
Direction direction_from_conic(const Vec3<K>& v, double tol) {
  using T = ScalarTraits<K>;
  double s = 0.0;
  for (const auto& c : v) s = std::max(s, T::magnitude(c));
  if (s == 0.0) throw Error(Errc::not_isotropic, "not on absolute conic (zero vector)");
  const K i = K::i();
  const K &a = v[0], &b = v[1], &g = v[2];
  if constexpr (T::exact) {
    if (!dot(v, v).is_zero()) throw Error(Errc::not_isotropic, "not on absolute conic");
    K ps, pt;
    if (!(i * a + b).is_zero() || !g.is_zero()) {
      ps = a - i * b;
      pt = g;
    } else {
      ps = g;
      pt = -a - i * b;
    }
    // Homogeneous stereographic map, evaluated exactly.
    const K st = ps.conj() * pt;
    const Rational ns = ps.norm2(), nt = pt.norm2(), d = ns + nt;
    return Direction::from_vector({(Rational(2) * st.re() / d).to_double(), (Rational(2) * st.im() / d).to_double(),
                                   ((nt - ns) / d).to_double()});
  } else {
    if (T::magnitude(dot(v, v)) > tol * s * s) throw Error(Errc::not_isotropic, "not on absolute conic");
    const std::complex<double> s1 = cplx(a - i * b), t1 = cplx(g);
    const std::complex<double> s2 = cplx(g), t2 = cplx(-a - i * b);
    if (std::norm(s1) + std::norm(t1) >= std::norm(s2) + std::norm(t2)) return stereographic(s1, t1);
    return stereographic(s2, t2);
  }
}

template <class K>
std::pair<Direction, Direction> left_right_vectors(const IsometryPoint<K>& p, double tol) {
  switch (classify(p, tol)) {
    case BoundaryClass::Inversion:
    case BoundaryClass::Butterfly: {
      const auto [v, w] = rank1_factor(p.M(), tol);
      return {direction_from_conic(v, tol), direction_from_conic(w, tol)};
    }
    case BoundaryClass::Similarity:
      return {direction_from_conic(p.y(), tol), direction_from_conic(p.x(), tol)};
    default:
      throw Error(Errc::no_left_right, "no left/right vector pair");
  }
}

template <class K>
Direction collinearity_direction(const IsometryPoint<K>& p, double tol) {
  switch (classify(p, tol)) {
    case BoundaryClass::CollinearityLeft:
      return direction_from_conic(p.x(), tol);
    case BoundaryClass::CollinearityRight:
      return direction_from_conic(p.y(), tol);
    default:
      throw Error(Errc::wrong_class, "not a collinearity point");
  }
}

Mat3<double> isotropic_frame(const Vec3<ComplexApprox>& w) {
  const Vec3<double> u1{w[0].re(), w[1].re(), w[2].re()};
  Vec3<double> u2{w[0].im(), w[1].im(), w[2].im()};
  if (norm(u1) < 1e-300) throw Error(Errc::not_isotropic, "not on absolute conic");
  const Vec3<double> f1 = normalized(u1);
  u2 = sub(u2, scale(dot(u2, f1), f1));
  if (norm(u2) < 1e-300) throw Error(Errc::not_isotropic, "not on absolute conic");
  const Vec3<double> f2 = normalized(u2);
  const Vec3<double> f3 = cross(f1, f2);
  return {{{f1[0], f2[0], f3[0]}, {f1[1], f2[1], f3[1]}, {f1[2], f2[2], f3[2]}}};
}

NormalFormCertificate normal_form(const FloatPoint& p, double tol) {
  const BoundaryClass cls = classify(p, tol);
  if (cls == BoundaryClass::Vertex) throw Error(Errc::vertex_no_moduli, "vertex has no moduli");

  FloatIsometry left, right;
  FloatPoint q = p;
  auto on_left = [&](const FloatIsometry& s) {
    q = act(s, q, Side::left);
    left = compose(s, left);
  };
  auto on_right = [&](const FloatIsometry& s) {
    q = act(s, q, Side::right);
    right = compose(right, s);
  };
  auto shift = [](std::complex<double> z) { return FloatIsometry::translation({z.real(), z.imag(), 0.0}); };
  auto rot = [](const Mat3<double>& m) { return FloatIsometry::rotation(m); };

  std::optional<double> parameter;
  FloatPoint ideal = FloatPoint::vertex();
  switch (cls) {
    case BoundaryClass::Inversion:
    case BoundaryClass::Butterfly: {
      const auto [v, w] = rank1_factor(q.M(), tol);
      on_right(rot(isotropic_frame(w)));
      on_left(rot(transpose(isotropic_frame(v))));
      on_left(shift(q.x()[0].value() / q.M()[0][0].value()));
      on_right(shift(-q.y()[0].value() / q.M()[0][0].value()));
      if (cls == BoundaryClass::Inversion) {
        on_left(rot(z_rotation(-std::arg(q.r().value() / q.M()[0][0].value()))));
        parameter = (q.r().value() / q.M()[0][0].value()).real();
        ideal = inversion_normal_form<ComplexApprox>(*parameter);
      } else {
        ideal = butterfly_normal_form<ComplexApprox>();
      }
      break;
    }
    case BoundaryClass::Similarity: {
      on_right(rot(isotropic_frame(q.x())));
      on_left(rot(transpose(isotropic_frame(q.y()))));
      on_left(shift(-q.r().value() / (2.0 * q.y()[0].value())));
      on_left(rot(z_rotation(-std::arg(q.x()[0].value() / q.y()[0].value()))));
      parameter = (q.x()[0].value() / q.y()[0].value()).real();
      ideal = similarity_normal_form<ComplexApprox>(*parameter);
      break;
    }
    case BoundaryClass::CollinearityLeft:
      on_right(rot(isotropic_frame(q.x())));
      on_right(shift(q.r().value() / (2.0 * q.x()[0].value())));
      ideal = left_collinearity_normal_form<ComplexApprox>();
      break;
    case BoundaryClass::CollinearityRight:
      on_left(rot(transpose(isotropic_frame(q.y()))));
      on_left(shift(-q.r().value() / (2.0 * q.y()[0].value())));
      ideal = right_collinearity_normal_form<ComplexApprox>();
      break;
    case BoundaryClass::Vertex:
      break;
  }
  if (!proj_eq(q, ideal, TolerancePolicy{tol, tol}))
    throw Error(Errc::internal, "normal form reduction did not converge to the ideal form");
  return {left, right, ideal, cls, parameter};
}

NormalFormCertificate normal_form(const ExactPoint& p, double tol) {
  if (classify(p, tol) == BoundaryClass::Vertex) throw Error(Errc::vertex_no_moduli, "vertex has no moduli");
  return normal_form(to_approx(p), tol);
}

ProjectionFrame ProjectionFrame::of(const Direction& L) {
  Vec3<double> u{0.0, 0.0, -1.0};
  if (std::abs(dot(u, L.vec())) > 1.0 - 1e-6) u = {1.0, 0.0, 0.0};
  ProjectionFrame f;
  f.L = L;
  f.e1 = normalized(sub(u, scale(dot(u, L.vec()), L.vec())));
  f.e2 = cross(f.e1, L.vec());
  return f;
}

Mat3<double> ProjectionFrame::rotation() const {
  return {{{e1[0], e2[0], -L[0]}, {e1[1], e2[1], -L[1]}, {e1[2], e2[2], -L[2]}}};
}

#define PODBOND_INSTANTIATE_BOUNDARY(K)                                                              \
  template BoundaryClass classify(const IsometryPoint<K>&, double);                                  \
  template std::pair<Vec3<K>, Vec3<K>> rank1_factor(const Mat3<K>&, double);                         \
  template Direction direction_from_conic(const Vec3<K>&, double);                                   \
  template std::pair<Direction, Direction> left_right_vectors(const IsometryPoint<K>&, double);      \
  template Direction collinearity_direction(const IsometryPoint<K>&, double);

PODBOND_INSTANTIATE_BOUNDARY(GaussianRational)
PODBOND_INSTANTIATE_BOUNDARY(ComplexApprox)
#undef PODBOND_INSTANTIATE_BOUNDARY

}  // namespace podbond
