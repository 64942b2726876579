#pragma once

#include <gmpxx.h>

#include "aurum/big_real.hpp"
#include "aurum/precision.hpp"

namespace aurum {

/// floor(sqrt(n)) by integer Newton iteration. Throws std::domain_error for n < 0.
mpz_class isqrt(const mpz_class& n);

/// Golden ratio (1 + sqrt 5)/2, with sqrt 5 from isqrt(5 * 10^(2D)).
BigReal const_phi(const PrecisionContext& ctx);

/// pi = 16 arctan(1/5) - 4 arctan(1/239), evaluated in fixed point.
BigReal const_pi(const PrecisionContext& ctx);

/// ln(phi) = Li_1(phi^-2) = sum_{k>=1} phi^(-2k) / k.
BigReal const_ln_phi(const PrecisionContext& ctx);

}  // namespace aurum
