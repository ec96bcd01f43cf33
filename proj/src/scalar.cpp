#include "symbc/scalar.hpp"

#include <stdexcept>

namespace symbc {

Scalar::Scalar(long num, long den) : re_(num, den) {
  if (den == 0) throw std::domain_error("zero denominator");
  re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  if (is_real()) return Scalar(mpq_class(1) / re_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(mpq_class(re_ / norm), mpq_class(-im_ / norm));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

std::string Scalar::to_string() const {
  if (is_real()) return rational_to_string(re_);
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = rational_to_string(im_) + "*i";
  }
  if (sgn(re_) == 0) return imag;
  std::string out = "(" + rational_to_string(re_);
  if (sgn(im_) > 0) out += "+";
  return out + imag + ")";
}

}  // namespace symbc
