#include "aurum/big_complex.hpp"

#include <stdexcept>

namespace aurum {

BigComplex BigComplex::polar(const BigReal& r, const BigReal& theta) {
  return {r * cos(theta), r * sin(theta)};
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
  BigReal real = re * rhs.re - im * rhs.im;
  BigReal imag = re * rhs.im + im * rhs.re;
  re = std::move(real);
  im = std::move(imag);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigReal& rhs) {
  re *= rhs;
  im *= rhs;
  return *this;
}

BigComplex& BigComplex::operator/=(const BigReal& rhs) {
  re /= rhs;
  im /= rhs;
  return *this;
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  const BigReal den = square(b.re) + square(b.im);
  if (den.is_zero()) throw std::domain_error("complex division by zero");
  BigComplex q{a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im};
  q /= den;
  return q;
}

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigReal abs(const BigComplex& z) {
  BigReal r(z.precision());
  mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
  return r;
}

BigReal arg(const BigComplex& z) {
  // Signed zeros would put the negative real axis at -pi.
  if (z.im.is_zero()) return atan2(BigReal(z.precision()), z.re);
  return atan2(z.im, z.re);
}

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw std::domain_error("logarithm of zero");
  return {log(abs(z)), arg(z)};
}

}  // namespace aurum
