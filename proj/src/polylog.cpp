#include "aurum/polylog.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "aurum/constants.hpp"

namespace aurum {

namespace {

constexpr mpfr_prec_t kSpareBits = 16;
constexpr int kTailDigits = 2;

void require_order(int s) {
  if (s < 1) throw std::invalid_argument("polylog order must be >= 1, got " + std::to_string(s));
}

bool outside_radius(const BigReal& modulus) {
  return modulus > BigReal::from_string("0.99", modulus.precision());
}

template <typename T>
void divide_by_power(T& value, long k, int s) {
  for (int i = 0; i < s; ++i) value /= k;
}

BigReal pi_squared_over_6(const PrecisionContext& ctx) { return square(const_pi(ctx)) / 6; }

}  // namespace

long polylog_terms(int s, double r, int digits) {
  if (r <= 0.0) return 0;
  const double target = -digits * std::log(10.0);
  const double log_r = std::log(r);
  const double log_gap = std::log1p(-r);
  auto log_bound = [&](long k) {
    const double n = static_cast<double>(k + 1);
    return n * log_r - s * std::log(n) - log_gap;
  };
  long lo = 0;
  long hi = static_cast<long>(std::ceil((target - log_gap) / log_r)) + 1;
  if (hi < 1) hi = 1;
  while (lo < hi) {
    const long mid = lo + (hi - lo) / 2;
    if (log_bound(mid) < target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

BigReal li(int s, const BigReal& x, const PrecisionContext& ctx) {
  require_order(s);
  const BigReal modulus = abs(x);
  if (outside_radius(modulus)) {
    throw std::domain_error("li: |z| > 0.99 is outside the direct-series disk");
  }
  const mpfr_prec_t bits = ctx.bits() + kSpareBits;
  const long terms = polylog_terms(s, modulus.to_double(), ctx.working_digits() + kTailDigits);
  const BigReal z = x.with_precision(bits);
  BigReal power(1, bits);
  BigReal sum(bits);
  for (long k = 1; k <= terms; ++k) {
    power *= z;
    BigReal term = power;
    divide_by_power(term, k, s);
    sum += term;
  }
  return sum.with_precision(ctx.bits());
}

BigComplex li(int s, const BigComplex& z, const PrecisionContext& ctx) {
  require_order(s);
  if (z.is_real()) return BigComplex(li(s, z.re, ctx));
  const BigReal modulus = abs(z);
  if (outside_radius(modulus)) {
    throw std::domain_error("li: |z| > 0.99 is outside the direct-series disk");
  }
  const mpfr_prec_t bits = ctx.bits() + kSpareBits;
  const long terms = polylog_terms(s, modulus.to_double(), ctx.working_digits() + kTailDigits);
  const BigComplex w{z.re.with_precision(bits), z.im.with_precision(bits)};
  BigComplex power{BigReal(1, bits), BigReal(bits)};
  BigComplex sum(bits);
  for (long k = 1; k <= terms; ++k) {
    power *= w;
    BigComplex term = power;
    divide_by_power(term, k, s);
    sum += term;
  }
  return {sum.re.with_precision(ctx.bits()), sum.im.with_precision(ctx.bits())};
}

BigComplex li1_closed(const BigComplex& z, const PrecisionContext& ctx) {
  const BigComplex w{z.re.with_precision(ctx.bits()), z.im.with_precision(ctx.bits())};
  const BigComplex one_minus = 1 - w;
  if (one_minus.is_zero()) throw std::domain_error("li1_closed: singular at z = 1");
  return -log(one_minus);
}

BigReal clausen_cos_sum(const BigReal& theta, const PrecisionContext& ctx) {
  const BigReal pi = const_pi(ctx);
  const BigReal t = theta.with_precision(ctx.bits());
  if (t.sign() < 0 || t > 2 * pi) {
    throw std::domain_error("clausen_cos_sum: theta must lie in [0, 2 pi]");
  }
  return square(pi) / 6 - pi * t / 2 + square(t) / 4;
}

BigReal check_landen(const BigComplex& z, const PrecisionContext& ctx) {
  const BigComplex w{z.re.with_precision(ctx.bits()), z.im.with_precision(ctx.bits())};
  const BigComplex one_minus = 1 - w;
  if (outside_radius(abs(w)) || outside_radius(abs(one_minus))) {
    throw std::domain_error("check_landen: need |z| <= 0.99 and |1 - z| <= 0.99");
  }
  const BigComplex lhs = li(2, w, ctx) + li(2, one_minus, ctx) + log(w) * log(one_minus);
  BigComplex diff = lhs;
  diff.re -= pi_squared_over_6(ctx);
  return abs(diff);
}

BigReal li2_negative_real(const BigReal& x, const PrecisionContext& ctx) {
  if (x.sign() >= 0) throw std::domain_error("li2_negative_real: argument must be negative");
  const mpfr_prec_t bits = ctx.bits();
  const BigReal v = x.with_precision(bits);
  const BigReal one_minus = 1 - v;
  const BigReal w = v / (v - 1);  // in (0, 1)

  BigReal li2_w(bits);
  if (w <= BigReal::ratio(1, 2, bits)) {
    li2_w = li(2, w, ctx);
  } else {
    const BigReal w_c = 1 - w;
    li2_w = pi_squared_over_6(ctx) - log(w) * log(w_c) - li(2, w_c, ctx);
  }
  return -li2_w - square(log(one_minus)) / 2;
}

BigReal check_inversion(const BigComplex& z, const PrecisionContext& ctx) {
  const BigReal limit = -BigReal::from_string("0.99", ctx.bits());
  if (!z.is_real() || z.re.sign() >= 0 || z.re < limit) {
    throw std::domain_error("check_inversion: only real z in [-0.99, 0) is supported");
  }
  const BigReal x = z.re.with_precision(ctx.bits());
  const BigReal lhs = li(2, x, ctx) + li2_negative_real(1 / x, ctx) + pi_squared_over_6(ctx) +
                      square(log(-x)) / 2;
  return abs(lhs);
}

}  // namespace aurum
