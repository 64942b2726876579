#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "aurum/big_real.hpp"
#include "aurum/precision.hpp"

namespace aurum {

struct RelationCandidate {
  std::vector<mpz_class> coefficients;
  BigReal residual;  // |sum coefficients[i] * values[i]|
  mpz_class max_abs_coeff;
};

/// No relation exists whose largest coefficient is <= exclusion_bound.
struct NotFound {
  BigReal exclusion_bound;
  long iterations = 0;
};

using PslqResult = std::variant<RelationCandidate, NotFound>;

class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// PSLQ (gamma = 2/sqrt(3)) at the context's working precision. A relation is
/// reported once some |y_j| < 10^-D,
/// D = max(working_digits / 2, working_digits - 20); NotFound once the
/// norm bound 1/max|H_jj|, divided by sqrt(n), exceeds max_norm.
/// Throws std::invalid_argument for fewer than two values, a zero value or
/// max_norm < 1. Throws PrecisionExhausted if the integer matrix outgrows the
/// working precision, or if the detected candidate's residual is far above
/// rounding level (10^-(W-5) sum |c_i x_i|): such a candidate only reflects
/// the detection threshold, not an exact relation.
PslqResult pslq(const std::vector<BigReal>& values, const PrecisionContext& ctx,
                const mpz_class& max_norm);

/// Divide by the gcd and make the first nonzero coefficient positive.
std::vector<mpz_class> normalize_relation(std::vector<mpz_class> coefficients);

/// True when `found` is a nonzero integer multiple of `expected`.
bool is_integer_multiple(const std::vector<mpz_class>& found,
                         const std::vector<mpz_class>& expected);

/// T_r = sum_{k>=0} 1 / (phi^(5k+r) (5k+r)^2), r = 1..5.
std::vector<BigReal> golden_basis_sums(const PrecisionContext& ctx);

/// [lead, T_1..T_5, phi T_1..phi T_5]
std::vector<BigReal> rediscovery_basis(const BigReal& lead, const PrecisionContext& ctx);

/// Coefficients over [pi^2, T_1..T_5, phi T_1..phi T_5] obtained by expanding
/// each c_r phi^r of the pi^2/50 series exactly as a + b phi; normalized.
std::vector<mpz_class> expected_pi2_relation();

/// pslq on rediscovery_basis(lead) with the given bound.
PslqResult rediscover(const BigReal& lead, const PrecisionContext& ctx, const mpz_class& max_norm);

/// rediscover(pi^2) with max_norm 10^4, normalized. Throws std::runtime_error
/// if no relation is found or it is not a multiple of expected_pi2_relation().
RelationCandidate rediscover_pi2(const PrecisionContext& ctx);

}  // namespace aurum
