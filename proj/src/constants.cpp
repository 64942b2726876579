#include "aurum/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace aurum {

namespace {

constexpr int kExtraDigits = 5;
constexpr unsigned long kFixedPointSpareBits = 32;

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// arctan(1/x) * 2^scale_bits, truncated.
mpz_class arctan_inverse_fixed(unsigned long x, unsigned long scale_bits) {
  const unsigned long x2 = x * x;
  mpz_class power = mpz_class(1) << scale_bits;
  power /= x;  // 1/x
  mpz_class sum = power;
  for (unsigned long k = 1; power != 0; ++k) {
    power /= x2;
    mpz_class term = power / (2 * k + 1);
    if (k & 1U) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

}  // namespace

mpz_class isqrt(const mpz_class& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  if (n < 2) return n;
  // Start above the root; Newton's iterate then decreases monotonically.
  mpz_class x = mpz_class(1) << (mpz_sizeinbase(n.get_mpz_t(), 2) / 2 + 1);
  while (true) {
    mpz_class next = (x + n / x) >> 1;
    if (next >= x) return x;
    x = std::move(next);
  }
}

BigReal const_phi(const PrecisionContext& ctx) {
  const auto digits = static_cast<unsigned long>(ctx.working_digits() + kExtraDigits);
  const mpz_class scale = pow10(digits);
  const mpz_class root5 = isqrt(5 * scale * scale);
  BigReal phi(mpz_class(scale + root5), ctx.bits() + 16);
  phi /= BigReal(mpz_class(2 * scale), ctx.bits() + 16);
  return phi.with_precision(ctx.bits());
}

BigReal const_pi(const PrecisionContext& ctx) {
  const unsigned long scale_bits = static_cast<unsigned long>(ctx.bits()) + kFixedPointSpareBits;
  const mpz_class fixed = 16 * arctan_inverse_fixed(5, scale_bits) -
                          4 * arctan_inverse_fixed(239, scale_bits);
  BigReal pi(fixed, ctx.bits() + 16);
  mpfr_div_2ui(pi.raw(), pi.raw(), scale_bits, MPFR_RNDN);
  return pi.with_precision(ctx.bits());
}

BigReal const_ln_phi(const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits() + 16;
  const BigReal phi = const_phi(ctx.widened(kExtraDigits));
  const BigReal x = (2 - phi).with_precision(bits);  // phi^-2 = 2 - phi
  const BigReal eps = pow10_neg(ctx.working_digits() + kExtraDigits, bits);

  BigReal power = x;
  BigReal sum = x;
  for (long k = 2;; ++k) {
    power *= x;
    const BigReal term = power / k;
    if (term < eps) break;
    sum += term;
  }
  return sum.with_precision(ctx.bits());
}

}  // namespace aurum
