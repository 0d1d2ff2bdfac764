#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace podbond {

template <class T>
using Vec3 = std::array<T, 3>;
template <class T>
using Mat3 = std::array<std::array<T, 3>, 3>;

template <class T>
Mat3<T> identity3() {
  Mat3<T> m{};
  for (std::size_t i = 0; i < 3; ++i) m[i][i] = T(1);
  return m;
}

template <class T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class T>
Vec3<T> add(const Vec3<T>& a, const Vec3<T>& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

template <class T>
Vec3<T> sub(const Vec3<T>& a, const Vec3<T>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

template <class T, class S>
Vec3<T> scale(const S& s, const Vec3<T>& a) {
  return {s * a[0], s * a[1], s * a[2]};
}

template <class T>
Vec3<T> neg(const Vec3<T>& a) {
  return {-a[0], -a[1], -a[2]};
}

template <class T>
Vec3<T> matvec(const Mat3<T>& m, const Vec3<T>& v) {
  return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}

template <class T>
Mat3<T> transpose(const Mat3<T>& m) {
  Mat3<T> t;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

template <class T>
Mat3<T> matmul(const Mat3<T>& a, const Mat3<T>& b) {
  Mat3<T> c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return c;
}

template <class T>
Mat3<T> matadd(const Mat3<T>& a, const Mat3<T>& b) {
  Mat3<T> c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) c[i][j] = a[i][j] + b[i][j];
  return c;
}

template <class T, class S>
Mat3<T> matscale(const S& s, const Mat3<T>& a) {
  Mat3<T> c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) c[i][j] = s * a[i][j];
  return c;
}

/// a b^t
template <class T>
Mat3<T> outer(const Vec3<T>& a, const Vec3<T>& b) {
  Mat3<T> c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) c[i][j] = a[i] * b[j];
  return c;
}

template <class T>
T det3(const Mat3<T>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Elementwise conversion between scalar types.
template <class To, class From, class F>
Vec3<To> convert(const Vec3<From>& v, F&& f) {
  return {f(v[0]), f(v[1]), f(v[2])};
}

template <class To, class From, class F>
Mat3<To> convert(const Mat3<From>& m, F&& f) {
  Mat3<To> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = convert<To>(m[i], f);
  return out;
}

inline double norm(const Vec3<double>& v) { return std::sqrt(dot(v, v)); }

inline Vec3<double> normalized(const Vec3<double>& v) { return scale(1.0 / norm(v), v); }

}  // namespace podbond
