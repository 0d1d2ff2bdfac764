#include "podbond/gauss_poly.hpp"

#include "podbond/error.hpp"

namespace podbond {

GaussPoly::GaussPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

GaussPoly GaussPoly::t() { return GaussPoly(std::vector<GaussianRational>{0, 1}); }

void GaussPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussianRational GaussPoly::eval(const GaussianRational& t) const {
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::complex<double> GaussPoly::eval(std::complex<double> t) const {
  std::complex<double> acc{};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * t + std::complex<double>(it->re().to_double(), it->im().to_double());
  return acc;
}

GaussPoly GaussPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<GaussianRational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * GaussianRational(static_cast<long>(k));
  return GaussPoly(std::move(d));
}

GaussPoly GaussPoly::monic() const {
  if (is_zero()) return {};
  const GaussianRational lead = leading();
  std::vector<GaussianRational> m(c_);
  for (auto& c : m) c /= lead;
  return GaussPoly(std::move(m));
}

std::string GaussPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[k].str() + ")";
    if (k == 1) out += "*t";
    if (k > 1) out += "*t^" + std::to_string(k);
  }
  return out;
}

GaussPoly GaussPoly::operator-() const {
  std::vector<GaussianRational> n(c_);
  for (auto& c : n) c = -c;
  return GaussPoly(std::move(n));
}

GaussPoly& GaussPoly::operator+=(const GaussPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

GaussPoly& GaussPoly::operator-=(const GaussPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

GaussPoly& GaussPoly::operator*=(const GaussPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<GaussianRational> prod(c_.size() + o.c_.size() - 1);
  for (std::size_t a = 0; a < c_.size(); ++a) {
    if (c_[a].is_zero()) continue;
    for (std::size_t b = 0; b < o.c_.size(); ++b) prod[a + b] += c_[a] * o.c_[b];
  }
  c_ = std::move(prod);
  trim();
  return *this;
}

std::pair<GaussPoly, GaussPoly> divmod(const GaussPoly& num, const GaussPoly& den) {
  if (den.is_zero()) throw Error(Errc::invalid_argument, "polynomial division by zero");
  std::vector<GaussianRational> rem = num.coeffs();
  const int dd = den.degree();
  if (num.degree() < dd) return {GaussPoly{}, num};
  std::vector<GaussianRational> quo(static_cast<std::size_t>(num.degree() - dd + 1));
  const GaussianRational lead = den.leading();
  for (int k = num.degree(); k >= dd; --k) {
    const GaussianRational f = rem[static_cast<std::size_t>(k)] / lead;
    quo[static_cast<std::size_t>(k - dd)] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= f * den.coeffs()[static_cast<std::size_t>(j)];
  }
  return {GaussPoly(std::move(quo)), GaussPoly(std::move(rem))};
}

GaussPoly gcd(const GaussPoly& a, const GaussPoly& b) {
  GaussPoly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    GaussPoly r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

GaussPoly poly_gcd_many(std::span<const GaussPoly> ps) {
  GaussPoly g;
  bool any = false;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    g = any ? gcd(g, p) : p.monic();
    any = true;
    if (g.degree() == 0) break;
  }
  if (!any) throw Error(Errc::zero_family, "zero family");
  return g;
}

}  // namespace podbond
