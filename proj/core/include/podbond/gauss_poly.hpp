#pragma once

#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "podbond/scalars.hpp"

namespace podbond {

/// Univariate polynomial over Q(i), coefficients in ascending degree. The
/// zero polynomial has no coefficients; otherwise the leading one is nonzero.
class GaussPoly {
 public:
  GaussPoly() = default;
  explicit GaussPoly(std::vector<GaussianRational> coeffs);
  GaussPoly(GaussianRational c) : GaussPoly(std::vector<GaussianRational>{std::move(c)}) {}  // NOLINT
  template <std::integral I>
  GaussPoly(I c) : GaussPoly(GaussianRational(c)) {}  // NOLINT

  /// The monomial t.
  static GaussPoly t();

  const std::vector<GaussianRational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const GaussianRational& leading() const { return c_.back(); }
  GaussianRational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : GaussianRational{}; }

  GaussianRational eval(const GaussianRational& t) const;
  std::complex<double> eval(std::complex<double> t) const;
  GaussPoly derivative() const;
  GaussPoly monic() const;
  std::string str() const;

  GaussPoly operator-() const;
  GaussPoly& operator+=(const GaussPoly& o);
  GaussPoly& operator-=(const GaussPoly& o);
  GaussPoly& operator*=(const GaussPoly& o);

  friend GaussPoly operator+(GaussPoly a, const GaussPoly& b) { return a += b; }
  friend GaussPoly operator-(GaussPoly a, const GaussPoly& b) { return a -= b; }
  friend GaussPoly operator*(GaussPoly a, const GaussPoly& b) { return a *= b; }
  friend bool operator==(const GaussPoly&, const GaussPoly&) = default;

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

/// Quotient and remainder of Euclidean division; throws on a zero divisor.
std::pair<GaussPoly, GaussPoly> divmod(const GaussPoly& num, const GaussPoly& den);

/// Monic gcd of two polynomials (zero if both are zero).
GaussPoly gcd(const GaussPoly& a, const GaussPoly& b);

/// Monic gcd of a family. Throws Errc::zero_family if every member is zero.
GaussPoly poly_gcd_many(std::span<const GaussPoly> ps);

/// Free-function spelling of GaussPoly::eval.
inline GaussianRational poly_eval(const GaussPoly& p, const GaussianRational& t) { return p.eval(t); }

}  // namespace podbond
