#include "aurum/precision.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace aurum {

namespace {
constexpr double kLog2Of10 = 3.321928094887362;
constexpr int kMinGuard = 10;
}  // namespace

mpfr_prec_t PrecisionContext::bits() const {
  return static_cast<mpfr_prec_t>(std::ceil(working_digits() * kLog2Of10)) + 8;
}

PrecisionContext PrecisionContext::widened(int extra) const {
  return PrecisionContext{decimal_digits + extra, guard_digits};
}

int default_guard_digits(int decimal_digits) {
  const int tenth = (decimal_digits + 9) / 10;
  return tenth > kMinGuard ? tenth : kMinGuard;
}

PrecisionContext make_context(int decimal_digits) {
  if (decimal_digits < 1) {
    throw std::invalid_argument("decimal_digits must be >= 1, got " +
                                std::to_string(decimal_digits));
  }
  return PrecisionContext{decimal_digits, default_guard_digits(decimal_digits)};
}

PrecisionContext make_context(int decimal_digits, int guard_digits) {
  if (guard_digits < kMinGuard) {
    throw std::invalid_argument("guard_digits must be >= 10, got " +
                                std::to_string(guard_digits));
  }
  PrecisionContext ctx = make_context(decimal_digits);
  ctx.guard_digits = guard_digits;
  return ctx;
}

}  // namespace aurum
