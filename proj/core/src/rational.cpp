#include "groupoidal/rational.hpp"

namespace groupoidal {

std::string QComplex::to_string() const {
  if (sgn(im) == 0) return re.get_str();
  if (sgn(re) == 0) return im.get_str() + "i";
  return re.get_str() + (sgn(im) > 0 ? "+" : "") + im.get_str() + "i";
}

QComplex& QComplex::operator+=(const QComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

QComplex& QComplex::operator-=(const QComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

QComplex& QComplex::operator*=(const QComplex& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

}  // namespace groupoidal
