#include <cmath>

#include "podbond/error.hpp"
#include "podbond/scalars.hpp"

namespace podbond {

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  if (re_.is_zero()) return im_.str() + "i";
  return re_.str() + (im_.sign() < 0 ? "" : "+") + im_.str() + "i";
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw Error(Errc::invalid_argument, "division by zero");
  const Rational n = o.norm2();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

ComplexApprox::ComplexApprox(double re, double im) : z_(re, im) {
  if (!std::isfinite(re) || !std::isfinite(im))
    throw Error(Errc::invalid_argument, "non-finite complex value");
}

ComplexApprox& ComplexApprox::operator/=(const ComplexApprox& o) {
  if (o.is_zero()) throw Error(Errc::invalid_argument, "division by zero");
  return *this = ComplexApprox(z_ / o.z_);
}

}  // namespace podbond
