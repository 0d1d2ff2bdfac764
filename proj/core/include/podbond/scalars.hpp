#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <string>

#include "podbond/rational.hpp"

namespace podbond {

/// Complex number with rational real and imaginary parts, i.e. an element
/// of Q(i). Arithmetic is exact.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  GaussianRational(I v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  /// |z|^2, exact.
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  GaussianRational conj() const { return {re_, -im_}; }
  std::string str() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

 private:
  Rational re_;
  Rational im_;
};

/// Double-precision complex value that is always finite.
class ComplexApprox {
 public:
  ComplexApprox() = default;
  ComplexApprox(double re) : ComplexApprox(re, 0.0) {}  // NOLINT(google-explicit-constructor)
  ComplexApprox(double re, double im);
  ComplexApprox(std::complex<double> z) : ComplexApprox(z.real(), z.imag()) {}  // NOLINT

  static ComplexApprox i() { return {0.0, 1.0}; }

  double re() const { return z_.real(); }
  double im() const { return z_.imag(); }
  double abs() const { return std::abs(z_); }
  double norm2() const { return std::norm(z_); }
  std::complex<double> value() const { return z_; }
  ComplexApprox conj() const { return std::conj(z_); }
  bool is_zero() const { return z_ == std::complex<double>{}; }

  ComplexApprox operator-() const { return -z_; }
  ComplexApprox& operator+=(const ComplexApprox& o) { return *this = ComplexApprox(z_ + o.z_); }
  ComplexApprox& operator-=(const ComplexApprox& o) { return *this = ComplexApprox(z_ - o.z_); }
  ComplexApprox& operator*=(const ComplexApprox& o) { return *this = ComplexApprox(z_ * o.z_); }
  ComplexApprox& operator/=(const ComplexApprox& o);

  friend ComplexApprox operator+(ComplexApprox a, const ComplexApprox& b) { return a += b; }
  friend ComplexApprox operator-(ComplexApprox a, const ComplexApprox& b) { return a -= b; }
  friend ComplexApprox operator*(ComplexApprox a, const ComplexApprox& b) { return a *= b; }
  friend ComplexApprox operator/(ComplexApprox a, const ComplexApprox& b) { return a /= b; }
  friend bool operator==(const ComplexApprox&, const ComplexApprox&) = default;

 private:
  std::complex<double> z_{};
};

/// Closeness test |a-b| <= abs_tol + rel_tol * max(|a|, |b|).
struct TolerancePolicy {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;

  bool close(double a, double b) const {
    return std::abs(a - b) <= abs_tol + rel_tol * std::max(std::abs(a), std::abs(b));
  }
  bool close(const ComplexApprox& a, const ComplexApprox& b) const {
    return (a - b).abs() <= abs_tol + rel_tol * std::max(a.abs(), b.abs());
  }
  /// `value` is negligible against `scale` (used for projective zero tests).
  bool negligible(double value, double scale) const { return value <= abs_tol * std::max(scale, 1e-300); }
};

/// Per-backend scalar contract. Geometric code is written once against this
/// and instantiated for GaussianRational (exact) and ComplexApprox (float).
template <class K>
struct ScalarTraits;

template <>
struct ScalarTraits<GaussianRational> {
  using Real = Rational;
  static constexpr bool exact = true;
  static constexpr const char* backend = "exact";
  static GaussianRational from_real(const Rational& r) { return GaussianRational(r); }
  static Rational norm2(const GaussianRational& z) { return z.norm2(); }
  static double magnitude(const GaussianRational& z) { return std::sqrt(z.norm2().to_double()); }
  static ComplexApprox approx(const GaussianRational& z) { return {z.re().to_double(), z.im().to_double()}; }
  static bool is_zero(const GaussianRational& z, double /*tol*/, double /*scale*/) { return z.is_zero(); }
};

template <>
struct ScalarTraits<ComplexApprox> {
  using Real = double;
  static constexpr bool exact = false;
  static constexpr const char* backend = "float";
  static ComplexApprox from_real(double r) { return ComplexApprox(r); }
  static double norm2(const ComplexApprox& z) { return z.norm2(); }
  static double magnitude(const ComplexApprox& z) { return z.abs(); }
  static ComplexApprox approx(const ComplexApprox& z) { return z; }
  static bool is_zero(const ComplexApprox& z, double tol, double scale) { return z.abs() <= tol * scale; }
};

template <class K>
using RealOf = typename ScalarTraits<K>::Real;

/// Maps a real scalar type to its complex backend.
template <class R>
struct ComplexFor;
template <>
struct ComplexFor<Rational> {
  using type = GaussianRational;
};
template <>
struct ComplexFor<double> {
  using type = ComplexApprox;
};
template <class R>
using ComplexOf = typename ComplexFor<R>::type;

inline double to_double(const Rational& r) { return r.to_double(); }
inline double to_double(double r) { return r; }

}  // namespace podbond
