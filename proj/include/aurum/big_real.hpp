#pragma once

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

#include "aurum/precision.hpp"

namespace aurum {

/// Arbitrary-precision real number (RAII wrapper over mpfr_t).
///
/// Every value carries its own binary precision. Arithmetic between two
/// values is carried out at the larger of the two precisions; mixed
/// arithmetic with machine integers keeps the precision of the BigReal
/// operand. All rounding is to nearest.
class BigReal {
 public:
  BigReal();
  explicit BigReal(mpfr_prec_t bits);
  explicit BigReal(const PrecisionContext& ctx);
  BigReal(long value, mpfr_prec_t bits);
  BigReal(const mpz_class& value, mpfr_prec_t bits);
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  /// Parses a decimal literal such as "-1.25e-3". Throws std::invalid_argument.
  static BigReal from_string(std::string_view text, mpfr_prec_t bits);
  /// Exact quotient num/den rounded at `bits`.
  static BigReal ratio(long num, long den, mpfr_prec_t bits);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  /// Copy rounded to a new precision.
  BigReal with_precision(mpfr_prec_t bits) const;

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// log10(|x|) as a double; -infinity for zero.
  double log10_abs() const;

  /// `significant` decimal digits, rounded to nearest, positional notation.
  std::string to_decimal(int significant) const;

  BigReal operator-() const;
  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);

  template <std::integral I>
  BigReal& operator+=(I rhs) {
    mpfr_add_si(value_, value_, static_cast<long>(rhs), MPFR_RNDN);
    return *this;
  }
  template <std::integral I>
  BigReal& operator-=(I rhs) {
    mpfr_sub_si(value_, value_, static_cast<long>(rhs), MPFR_RNDN);
    return *this;
  }
  template <std::integral I>
  BigReal& operator*=(I rhs) {
    mpfr_mul_si(value_, value_, static_cast<long>(rhs), MPFR_RNDN);
    return *this;
  }
  template <std::integral I>
  BigReal& operator/=(I rhs) {
    mpfr_div_si(value_, value_, static_cast<long>(rhs), MPFR_RNDN);
    return *this;
  }

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);

  template <std::integral I>
  friend BigReal operator+(BigReal a, I b) { return a += b; }
  template <std::integral I>
  friend BigReal operator+(I a, BigReal b) { return b += a; }
  template <std::integral I>
  friend BigReal operator-(BigReal a, I b) { return a -= b; }
  template <std::integral I>
  friend BigReal operator-(I a, const BigReal& b) {
    BigReal r(b.precision());
    mpfr_si_sub(r.value_, static_cast<long>(a), b.value_, MPFR_RNDN);
    return r;
  }
  template <std::integral I>
  friend BigReal operator*(BigReal a, I b) { return a *= b; }
  template <std::integral I>
  friend BigReal operator*(I a, BigReal b) { return b *= a; }
  template <std::integral I>
  friend BigReal operator/(BigReal a, I b) { return a /= b; }
  template <std::integral I>
  friend BigReal operator/(I a, const BigReal& b) {
    BigReal r(b.precision());
    mpfr_si_div(r.value_, static_cast<long>(a), b.value_, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  template <std::integral I>
  friend std::partial_ordering operator<=>(const BigReal& a, I b) {
    const int c = mpfr_cmp_si(a.value_, static_cast<long>(b));
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  template <std::integral I>
  friend bool operator==(const BigReal& a, I b) {
    return mpfr_cmp_si(a.value_, static_cast<long>(b)) == 0;
  }

 private:
  mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal square(const BigReal& x);
BigReal pow(const BigReal& x, long n);
BigReal log(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal floor(const BigReal& x);
BigReal max(const BigReal& a, const BigReal& b);
/// Round to nearest integer.
mpz_class round_to_integer(const BigReal& x);
/// 10^(-digits) at the given precision.
BigReal pow10_neg(int digits, mpfr_prec_t bits);

/// Number of correct decimal digits of `approx` relative to `exact`,
/// i.e. floor(-log10|approx - exact|), clamped to [0, cap].
int digits_agreeing(const BigReal& approx, const BigReal& exact, int cap);

}  // namespace aurum
