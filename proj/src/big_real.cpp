#include "aurum/big_real.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace aurum {

namespace {

constexpr mpfr_prec_t kDefaultBits = 128;

mpfr_prec_t wider(const BigReal& a, const BigReal& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

BigReal::BigReal() : BigReal(kDefaultBits) {}

BigReal::BigReal(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(const PrecisionContext& ctx) : BigReal(ctx.bits()) {}

BigReal::BigReal(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const mpz_class& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  // Leave `other` as a valid minimal-precision zero.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::from_string(std::string_view text, mpfr_prec_t bits) {
  BigReal r(bits);
  const std::string owned(text);
  if (owned.empty() || mpfr_set_str(r.value_, owned.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a decimal number: '" + owned + "'");
  }
  return r;
}

BigReal BigReal::ratio(long num, long den, mpfr_prec_t bits) {
  if (den == 0) throw std::invalid_argument("ratio with zero denominator");
  BigReal r(num, bits);
  r /= den;
  return r;
}

BigReal BigReal::with_precision(mpfr_prec_t bits) const {
  BigReal r(bits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

double BigReal::log10_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  // Exponent-split to avoid double underflow for tiny values.
  long exp2 = 0;
  const double mant = mpfr_get_d_2exp(&exp2, value_, MPFR_RNDN);
  return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * std::log10(2.0);
}

std::string BigReal::to_decimal(int significant) const {
  if (significant < 1) throw std::invalid_argument("significant digits must be >= 1");
  if (!is_finite()) throw std::domain_error("cannot format a non-finite value");
  if (is_zero()) return "0";

  mpfr_exp_t exp10 = 0;
  char* raw_digits = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(significant),
                                  value_, MPFR_RNDN);
  std::string digits(raw_digits);
  mpfr_free_str(raw_digits);

  std::string out;
  if (!digits.empty() && digits.front() == '-') {
    out.push_back('-');
    digits.erase(digits.begin());
  }
  // value = 0.d1d2d3... * 10^exp10
  const long n = static_cast<long>(digits.size());
  if (exp10 <= 0) {
    out += "0.";
    out.append(static_cast<size_t>(-exp10), '0');
    out += digits;
  } else if (exp10 >= n) {
    out += digits;
    out.append(static_cast<size_t>(exp10 - n), '0');
  } else {
    out += digits.substr(0, static_cast<size_t>(exp10));
    out.push_back('.');
    out += digits.substr(static_cast<size_t>(exp10));
  }
  return out;
}

BigReal BigReal::operator-() const {
  BigReal r(precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r(wider(a, b));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r(wider(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r(wider(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal r(wider(a, b));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigReal abs(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal sqrt(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal square(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_sqr(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, long n) {
  BigReal r(x.precision());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

BigReal log(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal exp(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal sin(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_sin(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal cos(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_cos(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(std::max(x.precision(), y.precision()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal floor(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_floor(r.raw(), x.raw());
  return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

mpz_class round_to_integer(const BigReal& x) {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), x.raw(), MPFR_RNDN);
  return z;
}

BigReal pow10_neg(int digits, mpfr_prec_t bits) {
  BigReal r(10, bits);
  mpfr_pow_si(r.raw(), r.raw(), -static_cast<long>(digits), MPFR_RNDN);
  return r;
}

int digits_agreeing(const BigReal& approx, const BigReal& exact, int cap) {
  const BigReal diff = approx - exact;
  if (diff.is_zero()) return cap;
  const double d = std::floor(-diff.log10_abs());
  if (d <= 0) return 0;
  return d >= cap ? cap : static_cast<int>(d);
}

}  // namespace aurum
