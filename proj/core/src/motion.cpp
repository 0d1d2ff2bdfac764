#include "podbond/motion.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "podbond/error.hpp"

namespace podbond {

namespace {

Coords<GaussPoly> constant_coords(const ExactPoint& p) {
  Coords<GaussPoly> c;
  for (std::size_t k = 0; k < kCoordCount; ++k) c[k] = GaussPoly(p[k]);
  return c;
}

// Continued-fraction approximation with bounded denominator.
Rational rationalize(double v, long max_den = 1000000) {
  if (!std::isfinite(v)) return Rational(0);
  const double fl = std::floor(v);
  long h0 = 1, h1 = static_cast<long>(fl), k0 = 0, k1 = 1;
  double frac = v - fl;
  for (int it = 0; it < 40 && frac > 1e-15; ++it) {
    const double inv = 1.0 / frac;
    const long a = static_cast<long>(std::floor(inv));
    if (k1 > max_den / std::max(a, 1L)) break;
    const long h2 = a * h1 + h0, k2 = a * k1 + k0;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    frac = inv - std::floor(inv);
  }
  return Rational(mpz_class(h1), mpz_class(k1));
}

std::vector<std::complex<double>> numeric_roots(const GaussPoly& p) {
  const int n = p.degree();
  if (n < 1) return {};
  const GaussPoly q = p.monic();
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) {
    const auto& c = q.coeff(static_cast<std::size_t>(i));
    comp(i, n - 1) = -std::complex<double>(c.re().to_double(), c.im().to_double());
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<std::complex<double>> roots;
  const GaussPoly dq = q.derivative();
  for (int i = 0; i < n; ++i) {
    std::complex<double> t = es.eigenvalues()(i);
    for (int it = 0; it < 8; ++it) {
      const std::complex<double> d = dq.eval(t);
      if (std::abs(d) == 0.0) break;
      t -= q.eval(t) / d;
    }
    roots.push_back(t);
  }
  return roots;
}

std::vector<GaussianRational> exact_quadratic_roots(const GaussPoly& p) {
  if (p.degree() == 1) return {-p.coeff(0) / p.coeff(1)};
  const GaussianRational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
  const auto s = exact_sqrt(b * b - GaussianRational(4) * a * c);
  if (!s) return {};
  return {(-b + *s) / (GaussianRational(2) * a), (-b - *s) / (GaussianRational(2) * a)};
}

// Bound on |p(t)| used as the scale of float zero tests.
double eval_scale(const GaussPoly& p, std::complex<double> t) {
  double s = 0.0, tk = 1.0;
  for (const auto& c : p.coeffs()) {
    s += std::sqrt(c.norm2().to_double()) * tk;
    tk *= std::abs(t);
  }
  return s;
}

}  // namespace

RationalMotion::RationalMotion(Coords<GaussPoly> coords) : c_(std::move(coords)) {
  const GaussPoly g = poly_gcd_many(std::span<const GaussPoly>(c_.data(), c_.size()));
  if (g.degree() > 0)
    for (auto& p : c_) p = divmod(p, g).first;
  // Make the leading coefficient of the first nonzero coordinate 1.
  for (const auto& p : c_)
    if (!p.is_zero()) {
      const GaussianRational s = p.leading();
      for (auto& q : c_) q *= GaussPoly(GaussianRational(1) / s);
      break;
    }
  for (const auto& [label, v] : generator_values(c_))
    if (!v.is_zero()) throw Error(Errc::not_on_x, "motion violates generator " + label + " identically in t");
}

int RationalMotion::degree() const {
  int d = -1;
  for (const auto& p : c_) d = std::max(d, p.degree());
  return d;
}

Coords<GaussianRational> RationalMotion::values(const GaussianRational& t) const {
  Coords<GaussianRational> v;
  for (std::size_t k = 0; k < kCoordCount; ++k) v[k] = c_[k].eval(t);
  return v;
}

ExactPoint RationalMotion::at(const GaussianRational& t) const {
  const auto v = values(t);
  if (std::all_of(v.begin(), v.end(), [](const GaussianRational& z) { return z.is_zero(); }))
    throw Error(Errc::degenerate_parametrization, "degenerate parametrization");
  return ExactPoint::from_coords(v);
}

std::optional<ExactIsometry> RationalMotion::pose(const Rational& t) const {
  const auto v = values(t);
  for (const auto& z : v)
    if (!z.is_real()) return std::nullopt;
  const Rational h = v[coord::h].re();
  if (h.is_zero()) return std::nullopt;
  Mat3<Rational> m;
  Vec3<Rational> y;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = v[coord::m(i, j)].re() / h;
    y[i] = v[coord::y(i)].re() / h;
  }
  return ExactIsometry(m, y);
}

RationalMotion transform(const ExactIsometry& sigma1, const RationalMotion& m, const ExactIsometry& sigma2) {
  return RationalMotion(
      product_coords(product_coords(constant_coords(embed(sigma1)), m.coords()), constant_coords(embed(sigma2))));
}

RationalMotion rotation_motion(const OrientedLine<Rational>& axis) {
  const GaussPoly t = GaussPoly::t(), one(1), two(2), zero;
  const GaussPoly t2 = t * t;
  Coords<GaussPoly> z;
  z[coord::h] = one + t2;
  const Mat3<GaussPoly> m{{{one - t2, zero - two * t, zero}, {two * t, one - t2, zero}, {zero, zero, one + t2}}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) z[coord::m(i, j)] = m[i][j];
  const ExactIsometry frame(rotation_south_to(neg(axis.direction)), axis.point);
  return transform(frame, RationalMotion(z), frame.inverse());
}

std::optional<GaussianRational> exact_sqrt(const GaussianRational& z) {
  const auto n = z.norm2().exact_sqrt();
  if (!n) return std::nullopt;
  const auto re = ((*n + z.re()) / Rational(2)).exact_sqrt();
  const auto im = ((*n - z.re()) / Rational(2)).exact_sqrt();
  if (!re || !im) return std::nullopt;
  return GaussianRational(*re, z.im().sign() < 0 ? -*im : *im);
}

std::vector<LimitBond> limit_bonds(const RationalMotion& m, double tol) {
  const GaussPoly& h = m.h();
  if (h.is_zero()) throw Error(Errc::invalid_argument, "h(t) vanishes identically");
  GaussPoly sf = h;
  if (h.degree() > 0) sf = divmod(h, gcd(h, h.derivative())).first.monic();
  if (sf.degree() < 1) return {};

  std::vector<GaussianRational> exact_roots;
  std::vector<std::complex<double>> float_roots;
  if (sf.degree() <= 2) exact_roots = exact_quadratic_roots(sf);
  if (exact_roots.empty()) {
    for (const auto& t : numeric_roots(sf)) {
      const GaussianRational guess(rationalize(t.real()), rationalize(t.imag()));
      if (sf.eval(guess).is_zero())
        exact_roots.push_back(guess);
      else
        float_roots.push_back(t);
    }
  }

  const int max_order = std::max(m.degree(), 0);
  std::vector<LimitBond> out;
  for (const auto& t0 : exact_roots) {
    Coords<GaussPoly> c = m.coords();
    for (int order = 0; order <= max_order; ++order) {
      Coords<GaussianRational> v;
      for (std::size_t k = 0; k < kCoordCount; ++k) v[k] = c[k].eval(t0);
      if (std::any_of(v.begin(), v.end(), [](const GaussianRational& z) { return !z.is_zero(); })) {
        const ExactBond b = ExactBond::from_point(ExactPoint::from_coords(v), tol);
        out.push_back({{t0.re().to_double(), t0.im().to_double()}, t0, order, b,
                       FloatBond::from_point(to_approx(b.point), tol)});
        break;
      }
      if (order == max_order) throw Error(Errc::degenerate_parametrization, "degenerate parametrization");
      for (auto& p : c) p = p.derivative();
    }
  }
  for (const auto& t0 : float_roots) {
    Coords<GaussPoly> c = m.coords();
    for (int order = 0; order <= max_order; ++order) {
      Coords<ComplexApprox> v;
      double mag = 0.0, scale = 0.0;
      for (std::size_t k = 0; k < kCoordCount; ++k) {
        v[k] = c[k].eval(t0);
        mag = std::max(mag, v[k].abs());
        scale = std::max(scale, eval_scale(c[k], t0));
      }
      if (mag > tol * std::max(scale, 1e-300)) {
        FloatPoint p = FloatPoint::from_coords(v);
        // The root is approximate; h is zero only up to rounding.
        Coords<ComplexApprox> pc = p.coords();
        pc[coord::h] = ComplexApprox(0.0);
        out.push_back({t0, std::nullopt, order, std::nullopt, FloatBond::from_point(FloatPoint::from_coords(pc), tol)});
        break;
      }
      if (order == max_order) throw Error(Errc::degenerate_parametrization, "degenerate parametrization");
      for (auto& p : c) p = p.derivative();
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const LimitBond& a, const LimitBond& b) {
    return a.t.real() != b.t.real() ? a.t.real() < b.t.real() : a.t.imag() < b.t.imag();
  });
  return out;
}

}  // namespace podbond
