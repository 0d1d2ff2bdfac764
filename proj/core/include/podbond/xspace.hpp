#pragma once

#include <array>
#include <string>
#include <vector>

#include "podbond/linalg.hpp"
#include "podbond/rigid.hpp"
#include "podbond/scalars.hpp"

namespace podbond {

/// Number of homogeneous coordinates (h, m11..m33, x1..x3, y1..y3, r).
inline constexpr std::size_t kCoordCount = 17;

namespace coord {
inline constexpr std::size_t h = 0;
constexpr std::size_t m(std::size_t i, std::size_t j) { return 1 + 3 * i + j; }
constexpr std::size_t x(std::size_t i) { return 10 + i; }
constexpr std::size_t y(std::size_t i) { return 13 + i; }
inline constexpr std::size_t r = 16;
/// Human-readable name of coordinate k ("h", "m12", "x3", ...).
std::string name(std::size_t k);
}  // namespace coord

template <class T>
using Coords = std::array<T, kCoordCount>;

template <class T>
Mat3<T> m_block(const Coords<T>& c) {
  Mat3<T> m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = c[coord::m(i, j)];
  return m;
}
template <class T>
Vec3<T> x_block(const Coords<T>& c) {
  return {c[coord::x(0)], c[coord::x(1)], c[coord::x(2)]};
}
template <class T>
Vec3<T> y_block(const Coords<T>& c) {
  return {c[coord::y(0)], c[coord::y(1)], c[coord::y(2)]};
}
template <class T>
Coords<T> assemble(const T& h, const Mat3<T>& m, const Vec3<T>& x, const Vec3<T>& y, const T& r) {
  Coords<T> c;
  c[coord::h] = h;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) c[coord::m(i, j)] = m[i][j];
    c[coord::x(i)] = x[i];
    c[coord::y(i)] = y[i];
  }
  c[coord::r] = r;
  return c;
}

/// Homogenized product over any commutative ring (scalars or polynomials):
/// (h1h2 : M1M2 : M2^t x1 + h1 x2 : h2 y1 + M1 y2 : h2 r1 + h1 r2 - 2<x1,y2>).
template <class T>
Coords<T> product_coords(const Coords<T>& a, const Coords<T>& b) {
  const T &h1 = a[coord::h], &h2 = b[coord::h];
  const Mat3<T> m1 = m_block(a), m2 = m_block(b);
  const Vec3<T> x1 = x_block(a), x2 = x_block(b), y1 = y_block(a), y2 = y_block(b);
  const T xy = dot(x1, y2);
  return assemble<T>(h1 * h2, matmul(m1, m2), add(matvec(transpose(m2), x1), scale(h1, x2)),
                     add(scale(h2, y1), matvec(m1, y2)), h2 * a[coord::r] + h1 * b[coord::r] - (xy + xy));
}


/// Values of the listed generators of X, each as lhs - rhs:
/// MM^t - h^2 id, M^tM - h^2 id, det M - h^3, M^t y + h x, M x + h y,
/// <x,x> - rh, <y,y> - rh. Ring-generic.
template <class T>
std::vector<std::pair<std::string, T>> generator_values(const Coords<T>& c) {
  std::vector<std::pair<std::string, T>> out;
  out.reserve(27);
  const T& h = c[coord::h];
  const T& r = c[coord::r];
  const Mat3<T> m = m_block(c);
  const Vec3<T> x = x_block(c), y = y_block(c);
  const T h2 = h * h;
  const Mat3<T> mmt = matmul(m, transpose(m)), mtm = matmul(transpose(m), m);
  static const char* idx[3] = {"1", "2", "3"};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      out.emplace_back(std::string("MMt-h2I[") + idx[i] + idx[j] + "]", i == j ? mmt[i][j] - h2 : mmt[i][j]);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      out.emplace_back(std::string("MtM-h2I[") + idx[i] + idx[j] + "]", i == j ? mtm[i][j] - h2 : mtm[i][j]);
  out.emplace_back("detM-h3", det3(m) - h2 * h);
  const Vec3<T> a = add(matvec(transpose(m), y), scale(h, x));
  const Vec3<T> b = add(matvec(m, x), scale(h, y));
  for (std::size_t i = 0; i < 3; ++i) out.emplace_back(std::string("Mty+hx[") + idx[i] + "]", a[i]);
  for (std::size_t i = 0; i < 3; ++i) out.emplace_back(std::string("Mx+hy[") + idx[i] + "]", b[i]);
  out.emplace_back("<x,x>-rh", dot(x, x) - r * h);
  out.emplace_back("<y,y>-rh", dot(y, y) - r * h);
  return out;
}

/// A point of P^16 in the (h, M, x, y, r) coordinates, always normalized:
/// exact backend scales the first nonzero coordinate to 1, float backend the
/// largest-magnitude one.
template <class K>
class IsometryPoint {
 public:
  using Real = RealOf<K>;

  /// Normalizes; throws Errc::invalid_argument when all coordinates vanish.
  static IsometryPoint from_coords(const Coords<K>& c);
  static IsometryPoint from_blocks(const K& h, const Mat3<K>& m, const Vec3<K>& x, const Vec3<K>& y, const K& r) {
    return from_coords(assemble(h, m, x, y, r));
  }
  /// (0 : ... : 0 : 1)
  static IsometryPoint vertex();

  const Coords<K>& coords() const { return c_; }
  const K& operator[](std::size_t k) const { return c_[k]; }
  const K& h() const { return c_[coord::h]; }
  Mat3<K> M() const { return m_block(c_); }
  Vec3<K> x() const { return x_block(c_); }
  Vec3<K> y() const { return y_block(c_); }
  const K& r() const { return c_[coord::r]; }
  /// Largest coordinate magnitude (1 for the float backend).
  double max_abs() const;

  friend bool operator==(const IsometryPoint&, const IsometryPoint&) = default;

 private:
  explicit IsometryPoint(const Coords<K>& c) : c_(c) {}
  Coords<K> c_;
};

using ExactPoint = IsometryPoint<GaussianRational>;
using FloatPoint = IsometryPoint<ComplexApprox>;

template <class K>
struct ResidualReport {
  std::vector<std::pair<std::string, K>> entries;
  double max_abs = 0.0;
  /// True when every entry is zero (exactly for the exact backend, within
  /// `tol` of the point's scale otherwise).
  bool satisfied(double tol = 0.0) const { return max_abs <= tol; }
};

/// Phi: (M, y) -> (1 : M : -M^t y : y : <y,y>).
template <class R>
IsometryPoint<ComplexOf<R>> embed(const DirectIsometry<R>& s);

template <class K>
ResidualReport<K> defining_residuals(const IsometryPoint<K>& p);

/// Normalized product; throws Errc::undefined_product when every coordinate
/// of the bilinear product vanishes.
template <class K>
IsometryPoint<K> product(const IsometryPoint<K>& a, const IsometryPoint<K>& b);

enum class Side { left, right };

/// Translation by s acting on the given side (closed form).
template <class K>
IsometryPoint<K> act_translation(const Vec3<RealOf<K>>& s, const IsometryPoint<K>& p, Side side);
/// Rotation about the origin by Mr acting on the given side (closed form).
template <class K>
IsometryPoint<K> act_rotation(const Mat3<RealOf<K>>& rot, const IsometryPoint<K>& p, Side side);
/// sigma * P (left) or P * sigma (right), via the closed forms.
template <class K>
IsometryPoint<K> act(const DirectIsometry<RealOf<K>>& s, const IsometryPoint<K>& p, Side side);

/// Projective equality. Exact backend compares normalized coordinates
/// exactly; float backend aligns P2 to P1 by the best complex factor and
/// compares entrywise under `tol`.
template <class K>
bool proj_eq(const IsometryPoint<K>& a, const IsometryPoint<K>& b, const TolerancePolicy& tol = {});

FloatPoint to_approx(const ExactPoint& p);

template <class K>
IsometryPoint<K> butterfly_normal_form();
template <class K>
IsometryPoint<K> inversion_normal_form(const RealOf<K>& r);
template <class K>
IsometryPoint<K> similarity_normal_form(const RealOf<K>& gamma);
template <class K>
IsometryPoint<K> left_collinearity_normal_form();
template <class K>
IsometryPoint<K> right_collinearity_normal_form();

}  // namespace podbond
