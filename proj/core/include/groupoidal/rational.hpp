#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace groupoidal {

using Rational = mpq_class;

// Exact complex number with rational parts.
struct QComplex {
  Rational re;
  Rational im;

  QComplex() = default;
  QComplex(long r) : re(r), im(0) {}
  QComplex(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  QComplex conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }
  std::complex<double> to_double() const { return {re.get_d(), im.get_d()}; }
  std::string to_string() const;

  QComplex& operator+=(const QComplex& o);
  QComplex& operator-=(const QComplex& o);
  QComplex& operator*=(const QComplex& o);

  friend QComplex operator+(QComplex a, const QComplex& b) { return a += b; }
  friend QComplex operator-(QComplex a, const QComplex& b) { return a -= b; }
  friend QComplex operator*(QComplex a, const QComplex& b) { return a *= b; }
  friend QComplex operator-(const QComplex& a) { return {-a.re, -a.im}; }
  friend bool operator==(const QComplex& a, const QComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

}  // namespace groupoidal
