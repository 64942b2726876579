#pragma once

#include <array>

#include "aurum/big_complex.hpp"
#include "aurum/golden.hpp"
#include "aurum/precision.hpp"
#include "aurum/residuals.hpp"

namespace aurum {

/// Golden-ratio BBP series for pi^2:
///
///   pi^2/50 = sum_{j>=0} phi^(-5j) sum_{r=1..5} c_r / (5j + r)^2
///
/// with (c_1..c_5) = (phi^-2, -phi^-1, -phi^-2, phi^-5, 2 phi^-5).
/// Each c_r is stored exactly and also as multiplier * phi^exponent, which
/// is the form digit extraction needs.
struct BBPFormula {
  int base_exponent = 5;
  int period = 5;
  int weight = 2;
  std::array<GoldenRational, 5> coefficients;
  std::array<int, 5> multipliers{};
  std::array<int, 5> phi_exponents{};

  /// The pi^2/50 instance. Coefficients are cross-checked against golden_pow
  /// on construction.
  static const BBPFormula& pi2();
};

struct PartialSumReport {
  long terms_used = 0;
  BigReal value;
  BigReal tail_bound;
};

/// Exact cos(2 pi r / 5) for r = 1..5 (index r - 1):
/// (phi-1)/2, -phi/2, -phi/2, (phi-1)/2, 1.
const std::array<GoldenRational, 5>& pentagon_cosines();

/// sum_r c_r / (5j + r)^2
BigReal bbp_inner(long j, const PrecisionContext& ctx);

/// First K outer terms. tail_bound = C phi^(-5K) / (1 - phi^-5), C = sum_r |c_r| < 2.
/// Throws std::invalid_argument for K < 1.
PartialSumReport bbp_sum(long terms, const PrecisionContext& ctx);

/// ceil(digits / (5 log10 phi)) + 5
long bbp_terms_for_digits(int digits);

/// 50 * bbp_sum(bbp_terms_for_digits(digits)) with value and tail scaled by 50.
PartialSumReport pi2_via_bbp_report(int digits, const PrecisionContext& ctx);
BigReal pi2_via_bbp(int digits);

struct GeometricResidual {
  BigReal vector;     // |(1 - z) - e^{-i pi/5}|
  BigReal real_part;  // |Re(1 - z) - phi/2|
  BigReal imag_part;  // |Im(1 - z) + sin(pi/5)|
};

/// Residuals of 1 - z = e^{-i pi / 5} at an arbitrary z.
GeometricResidual geometric_identity_residual(const BigComplex& z, const PrecisionContext& ctx);
/// The same at z = phi^-1 e^{2 pi i / 5}.
GeometricResidual verify_geometric_identity(const PrecisionContext& ctx);
/// phi^-1 e^{2 pi i / 5}
BigComplex pentagon_point(const PrecisionContext& ctx);

/// sum_{k=1..K} cos(2 pi k / 5) / (phi^k k^2), cosines from pentagon_cosines().
BigReal cosine_sum(long terms, const PrecisionContext& ctx);
/// Terms after which the cosine-sum tail is below 10^-(working digits).
long cosine_sum_terms(const PrecisionContext& ctx);

/// Named residuals: clausen_pi_over_5, clausen_via_landen, log_z,
/// log_one_minus_z, log_term, two_s_series, rational_assembly.
ResidualTable verify_lemma3_decomposition(const PrecisionContext& ctx);

struct DissectionReport {
  BigReal max_group_residual;  // max_j |sum_r cos_r/(phi^r (5j+r)^2) - bbp_inner(j)/2|, j <= 20
  long worst_group = 0;
  bool exact_coefficients = false;  // 2 cos_r phi^-r == c_r in Q(phi) for every r
  BigReal total_residual;           // |cosine sum - (BBP sum)/2|
};

DissectionReport verify_dissection(const PrecisionContext& ctx, long max_group = 20);

/// |sum_j 2 phi^-5 / (phi^(5j) (5j+5)^2) - (2/25) Li2(phi^-5)|
BigReal verify_remark(const PrecisionContext& ctx);

}  // namespace aurum
