#pragma once

#include "aurum/big_real.hpp"

namespace aurum {

/// Arbitrary-precision complex number in Cartesian form.
struct BigComplex {
  BigReal re;
  BigReal im;

  BigComplex() = default;
  explicit BigComplex(mpfr_prec_t bits) : re(bits), im(bits) {}
  explicit BigComplex(BigReal real) : re(std::move(real)), im(re.precision()) {}
  BigComplex(BigReal real, BigReal imag) : re(std::move(real)), im(std::move(imag)) {}

  /// r * e^{i theta}
  static BigComplex polar(const BigReal& r, const BigReal& theta);

  mpfr_prec_t precision() const { return re.precision(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  BigComplex operator-() const { return {-re, -im}; }
  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator*=(const BigReal& rhs);
  BigComplex& operator/=(const BigReal& rhs);
  template <std::integral I>
  BigComplex& operator/=(I rhs) {
    re /= rhs;
    im /= rhs;
    return *this;
  }
  template <std::integral I>
  BigComplex& operator*=(I rhs) {
    re *= rhs;
    im *= rhs;
    return *this;
  }

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator*(BigComplex a, const BigReal& b) { return a *= b; }
  friend BigComplex operator*(const BigReal& b, BigComplex a) { return a *= b; }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  template <std::integral I>
  friend BigComplex operator-(I a, const BigComplex& z) {
    return {a - z.re, -z.im};
  }
};

BigComplex conj(const BigComplex& z);
/// |z|
BigReal abs(const BigComplex& z);
/// Principal argument in (-pi, pi].
BigReal arg(const BigComplex& z);
/// Principal-branch logarithm. Throws std::domain_error for z = 0.
BigComplex log(const BigComplex& z);

}  // namespace aurum
