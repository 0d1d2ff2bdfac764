#include "podbond/rigid.hpp"

#include <random>

#include "podbond/error.hpp"

namespace podbond {

namespace {

template <class R>
bool is_rotation(const Mat3<R>& m) {
  const Mat3<R> mtm = matmul(transpose(m), m);
  const Mat3<R> id = identity3<R>();
  if constexpr (std::is_same_v<R, Rational>) {
    return mtm == id && det3(m) == Rational(1);
  } else {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (std::abs(mtm[i][j] - id[i][j]) > 1e-9) return false;
    return std::abs(det3(m) - 1.0) <= 1e-9;
  }
}

}  // namespace

template <class R>
DirectIsometry<R>::DirectIsometry(Mat3<R> m, Vec3<R> y) : m_(std::move(m)), y_(std::move(y)) {
  if (!is_rotation(m_)) throw Error(Errc::invalid_argument, "matrix is not a rotation (M^t M = id, det M = 1)");
}

template <class R>
DirectIsometry<R> DirectIsometry<R>::inverse() const {
  const Mat3<R> mt = transpose(m_);
  return DirectIsometry(mt, neg(matvec(mt, y_)), Unchecked{});
}

template <class R>
DirectIsometry<R> compose(const DirectIsometry<R>& a, const DirectIsometry<R>& b) {
  return DirectIsometry<R>(matmul(a.m_, b.m_), add(matvec(a.m_, b.y_), a.y_), typename DirectIsometry<R>::Unchecked{});
}

template class DirectIsometry<Rational>;
template class DirectIsometry<double>;
template DirectIsometry<Rational> compose(const DirectIsometry<Rational>&, const DirectIsometry<Rational>&);
template DirectIsometry<double> compose(const DirectIsometry<double>&, const DirectIsometry<double>&);

Mat3<Rational> quaternion_rotation(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  const Rational n = a * a + b * b + c * c + d * d;
  if (n.is_zero()) throw Error(Errc::invalid_argument, "zero quaternion");
  const Rational two(2);
  Mat3<Rational> m{{{a * a + b * b - c * c - d * d, two * (b * c - a * d), two * (b * d + a * c)},
                    {two * (b * c + a * d), a * a - b * b + c * c - d * d, two * (c * d - a * b)},
                    {two * (b * d - a * c), two * (c * d + a * b), a * a - b * b - c * c + d * d}}};
  return matscale(Rational(1) / n, m);
}

ExactIsometry random_rational_isometry(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Raw engine output keeps the sequence identical across standard libraries.
  auto small = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  int q[4];
  do {
    for (int& v : q) v = small(-6, 6);
  } while (q[0] == 0 && q[1] == 0 && q[2] == 0 && q[3] == 0);
  Vec3<Rational> y;
  for (auto& c : y) c = Rational(mpz_class(small(-20, 20)), mpz_class(small(1, 7)));
  return ExactIsometry(quaternion_rotation(q[0], q[1], q[2], q[3]), y);
}

Mat3<Rational> z_rotation_half_angle(const Rational& t) {
  const Rational n = Rational(1) + t * t;
  const Rational c = (Rational(1) - t * t) / n, s = Rational(2) * t / n;
  return {{{c, -s, 0}, {s, c, 0}, {0, 0, 1}}};
}

FloatIsometry to_float(const ExactIsometry& s) {
  auto f = [](const Rational& r) { return r.to_double(); };
  return FloatIsometry(convert<double>(s.M(), f), convert<double>(s.y(), f));
}

namespace {

// Half-turn about the axis a: 2 a a^t / <a,a> - id.
template <class R>
Mat3<R> half_turn(const Vec3<R>& a) {
  const R n = dot(a, a);
  Mat3<R> m = matscale(R(2) / n, outer(a, a));
  for (std::size_t i = 0; i < 3; ++i) m[i][i] = m[i][i] - R(1);
  return m;
}

}  // namespace

template <class R>
Mat3<R> rotation_south_to(const Vec3<R>& d) {
  const Vec3<R> south{R(0), R(0), R(-1)};
  if (d[2] <= R(0)) return half_turn(add(south, d));
  // Northern hemisphere: flip South to North first (half-turn about x), then
  // turn North onto d.
  const Vec3<R> north{R(0), R(0), R(1)};
  const Mat3<R> flip{{{R(1), R(0), R(0)}, {R(0), R(-1), R(0)}, {R(0), R(0), R(-1)}}};
  return matmul(half_turn(add(north, d)), flip);
}

template Mat3<Rational> rotation_south_to(const Vec3<Rational>&);
template Mat3<double> rotation_south_to(const Vec3<double>&);

Mat3<double> z_rotation(double phi) {
  const double c = std::cos(phi), s = std::sin(phi);
  return {{{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}}};
}

}  // namespace podbond
