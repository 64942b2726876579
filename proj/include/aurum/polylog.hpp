#pragma once

#include "aurum/big_complex.hpp"
#include "aurum/precision.hpp"

namespace aurum {

/// Largest |z| accepted by the direct power series.
inline constexpr double kPolylogRadius = 0.99;

/// Number of series terms K such that the geometric tail bound
/// r^(K+1) / ((K+1)^s (1 - r)) < 10^-digits. Returns 0 for r == 0.
long polylog_terms(int s, double r, int digits);

/// Li_s(z) = sum_{k>=1} z^k / k^s on |z| <= 0.99.
/// Throws std::domain_error for |z| > 0.99, std::invalid_argument for s < 1.
BigComplex li(int s, const BigComplex& z, const PrecisionContext& ctx);
/// Real-argument fast path of li().
BigReal li(int s, const BigReal& x, const PrecisionContext& ctx);

/// Li_1(z) = -ln(1 - z), principal branch. Throws std::domain_error at z = 1.
BigComplex li1_closed(const BigComplex& z, const PrecisionContext& ctx);

/// Closed form of sum_{k>=1} cos(k theta)/k^2 = pi^2/6 - pi theta/2 + theta^2/4
/// on 0 <= theta <= 2 pi. Throws std::domain_error outside that range.
BigReal clausen_cos_sum(const BigReal& theta, const PrecisionContext& ctx);

/// |Li2(z) + Li2(1-z) - pi^2/6 + ln(z) ln(1-z)|.
/// Requires |z| <= 0.99, |1-z| <= 0.99 (hence z not 0 or 1).
BigReal check_landen(const BigComplex& z, const PrecisionContext& ctx);

/// Li2(x) for real x < 0 with |x| > 0.99, via the Euler transform
/// Li2(x) = -Li2(x/(x-1)) - ln^2(1-x)/2 and reflection. Throws std::domain_error
/// for x >= 0.
BigReal li2_negative_real(const BigReal& x, const PrecisionContext& ctx);

/// |Li2(z) + Li2(1/z) + pi^2/6 + ln^2(-z)/2| for real z in [-0.99, 0).
/// Li2(1/z) comes from li2_negative_real. Throws std::domain_error for any
/// other z (the check is confined to the negative real segment).
BigReal check_inversion(const BigComplex& z, const PrecisionContext& ctx);

}  // namespace aurum
