#include "aurum/bbp_pi2.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "aurum/constants.hpp"
#include "aurum/polylog.hpp"

namespace aurum {

namespace {

constexpr double kLog10Phi = 0.20898764024997873;
constexpr double kPhiInverse = 0.6180339887498949;
constexpr double kPhiMinus5 = 0.09016994374947424;
// Accumulator headroom for long sums.
constexpr mpfr_prec_t kAccumulatorBits = 64;
constexpr int kCoefficientGuard = 20;

BBPFormula build_pi2_formula() {
  BBPFormula f;
  f.multipliers = {1, -1, -1, 1, 2};
  f.phi_exponents = {-2, -1, -2, -5, -5};
  f.coefficients = {GoldenRational(GoldenInt(2, -1)), GoldenRational(GoldenInt(1, -1)),
                    GoldenRational(GoldenInt(-2, 1)), GoldenRational(GoldenInt(-8, 5)),
                    GoldenRational(GoldenInt(-16, 10))};
  for (std::size_t r = 0; r < f.coefficients.size(); ++r) {
    const GoldenRational expected(golden_pow(f.phi_exponents[r]) * mpz_class(f.multipliers[r]));
    if (!(expected == f.coefficients[r])) {
      throw std::logic_error("BBP coefficient " + std::to_string(r + 1) +
                             " disagrees with golden_pow");
    }
  }
  if (f.period != static_cast<int>(f.coefficients.size())) {
    throw std::logic_error("BBP period must equal the number of coefficients");
  }
  return f;
}

struct CoefficientValues {
  std::array<BigReal, 5> coefficient;
  BigReal abs_sum;
  BigReal phi_minus_5;
};

CoefficientValues coefficient_values(const PrecisionContext& ctx) {
  const PrecisionContext wide = ctx.widened(kCoefficientGuard);
  const BBPFormula& f = BBPFormula::pi2();
  CoefficientValues v;
  v.abs_sum = BigReal(wide);
  for (std::size_t r = 0; r < 5; ++r) {
    v.coefficient[r] = golden_to_real(f.coefficients[r], wide);
    v.abs_sum += abs(v.coefficient[r]);
  }
  v.phi_minus_5 = golden_to_real(golden_pow(-5), wide);
  return v;
}

BigReal inner_sum(long j, const std::array<BigReal, 5>& coefficient, mpfr_prec_t bits) {
  BigReal sum(bits);
  for (long r = 1; r <= 5; ++r) {
    const long n = 5 * j + r;
    BigReal term = coefficient[static_cast<std::size_t>(r - 1)].with_precision(bits);
    term /= n;
    term /= n;
    sum += term;
  }
  return sum;
}

}  // namespace

const BBPFormula& BBPFormula::pi2() {
  static const BBPFormula formula = build_pi2_formula();
  return formula;
}

const std::array<GoldenRational, 5>& pentagon_cosines() {
  static const std::array<GoldenRational, 5> table = {
      GoldenRational(GoldenInt(-1, 1), 2),  // (phi - 1)/2
      GoldenRational(GoldenInt(0, -1), 2),  // -phi/2
      GoldenRational(GoldenInt(0, -1), 2),  // -phi/2
      GoldenRational(GoldenInt(-1, 1), 2),  // (phi - 1)/2
      GoldenRational(GoldenInt(1, 0)),      // 1
  };
  return table;
}

BigReal bbp_inner(long j, const PrecisionContext& ctx) {
  if (j < 0) throw std::invalid_argument("bbp_inner: j must be >= 0");
  const CoefficientValues v = coefficient_values(ctx);
  return inner_sum(j, v.coefficient, ctx.bits() + kAccumulatorBits).with_precision(ctx.bits());
}

PartialSumReport bbp_sum(long terms, const PrecisionContext& ctx) {
  if (terms < 1) throw std::invalid_argument("bbp_sum: need at least one term");
  const mpfr_prec_t acc_bits = ctx.bits() + kAccumulatorBits;
  const CoefficientValues v = coefficient_values(ctx);

  BigReal scale(1, acc_bits);  // phi^(-5j)
  BigReal sum(acc_bits);
  for (long j = 0; j < terms; ++j) {
    sum += scale * inner_sum(j, v.coefficient, acc_bits);
    scale *= v.phi_minus_5;
  }
  PartialSumReport report;
  report.terms_used = terms;
  report.value = sum.with_precision(ctx.bits());
  report.tail_bound = (v.abs_sum * scale / (1 - v.phi_minus_5)).with_precision(ctx.bits());
  return report;
}

long bbp_terms_for_digits(int digits) {
  return static_cast<long>(std::ceil(digits / (5.0 * kLog10Phi))) + 5;
}

PartialSumReport pi2_via_bbp_report(int digits, const PrecisionContext& ctx) {
  if (digits < 1) throw std::invalid_argument("pi2_via_bbp: digits must be >= 1");
  PartialSumReport report = bbp_sum(bbp_terms_for_digits(digits), ctx);
  report.value *= 50;
  report.tail_bound *= 50;
  return report;
}

BigReal pi2_via_bbp(int digits) { return pi2_via_bbp_report(digits, make_context(digits)).value; }

BigComplex pentagon_point(const PrecisionContext& ctx) {
  const BigReal phi = const_phi(ctx);
  const BigReal pi = const_pi(ctx);
  return BigComplex::polar(1 / phi, 2 * pi / 5);
}

GeometricResidual geometric_identity_residual(const BigComplex& z, const PrecisionContext& ctx) {
  const BigReal phi = const_phi(ctx);
  const BigReal pi = const_pi(ctx);
  const BigReal angle = pi / 5;
  const BigComplex target{cos(angle), -sin(angle)};
  const BigComplex one_minus = 1 - z;
  return GeometricResidual{abs(one_minus - target), abs(one_minus.re - phi / 2),
                           abs(one_minus.im + sin(angle))};
}

GeometricResidual verify_geometric_identity(const PrecisionContext& ctx) {
  return geometric_identity_residual(pentagon_point(ctx), ctx);
}

BigReal cosine_sum(long terms, const PrecisionContext& ctx) {
  if (terms < 1) throw std::invalid_argument("cosine_sum: need at least one term");
  const mpfr_prec_t acc_bits = ctx.bits() + kAccumulatorBits;
  const PrecisionContext wide = ctx.widened(kCoefficientGuard);
  std::array<BigReal, 5> cosines;
  for (std::size_t r = 0; r < 5; ++r) {
    cosines[r] = golden_to_real(pentagon_cosines()[r], wide).with_precision(acc_bits);
  }
  const BigReal phi_inverse = (const_phi(wide) - 1).with_precision(acc_bits);

  BigReal power(1, acc_bits);
  BigReal sum(acc_bits);
  for (long k = 1; k <= terms; ++k) {
    power *= phi_inverse;
    BigReal term = cosines[static_cast<std::size_t>((k - 1) % 5)] * power;
    term /= k;
    term /= k;
    sum += term;
  }
  return sum.with_precision(ctx.bits());
}

long cosine_sum_terms(const PrecisionContext& ctx) {
  return polylog_terms(2, kPhiInverse, ctx.working_digits() + 2);
}

ResidualTable verify_lemma3_decomposition(const PrecisionContext& ctx) {
  const BigReal pi = const_pi(ctx);
  const BigReal pi2 = square(pi);
  const BigReal ln_phi = const_ln_phi(ctx);
  const BigReal clausen_target = pi2 * 23 / 150;
  ResidualTable table;

  // (i) 2 Re Li2(e^{i pi/5}) = 23 pi^2 / 150, first from the closed form ...
  table.push_back({"clausen_pi_over_5", abs(2 * clausen_cos_sum(pi / 5, ctx) - clausen_target)});

  // ... then from the disk series: 1 - conj(z) = e^{i pi/5}, so Landen gives
  // Li2(e^{i pi/5}) = pi^2/6 - ln(zbar) ln(1 - zbar) - Li2(zbar).
  const BigComplex z = pentagon_point(ctx);
  const BigComplex zbar = conj(z);
  const BigComplex landen_value = BigComplex(pi2 / 6) - log(zbar) * log(1 - zbar) - li(2, zbar, ctx);
  table.push_back({"clausen_via_landen", abs(2 * landen_value.re - clausen_target)});

  // (ii) the logarithm term.
  const BigComplex log_z = log(z);
  const BigComplex log_one_minus_z = log(1 - z);
  table.push_back({"log_z", abs(log_z - BigComplex(-ln_phi, 2 * pi / 5))});
  table.push_back({"log_one_minus_z", abs(log_one_minus_z - BigComplex(BigReal(ctx), -pi / 5))});
  const BigComplex log_term = log_z * log_one_minus_z + log(zbar) * log(1 - zbar);
  table.push_back({"log_term", abs(log_term - BigComplex(pi2 * 4 / 25))});

  // 2S = Li2(z) + Li2(zbar) = pi^2/50.
  const BigComplex two_s = li(2, z, ctx) + li(2, zbar, ctx);
  table.push_back({"two_s_series", abs(two_s - BigComplex(pi2 / 50))});

  // (iii) 1/3 - 23/150 - 4/25 = 1/50 exactly.
  const mpq_class assembly = mpq_class(1, 3) - mpq_class(23, 150) - mpq_class(4, 25) - mpq_class(1, 50);
  BigReal exact_gap(ctx);
  mpfr_set_q(exact_gap.raw(), assembly.get_mpq_t(), MPFR_RNDN);
  table.push_back({"rational_assembly", abs(exact_gap)});
  return table;
}

DissectionReport verify_dissection(const PrecisionContext& ctx, long max_group) {
  if (max_group < 0) throw std::invalid_argument("verify_dissection: max_group must be >= 0");
  const BBPFormula& formula = BBPFormula::pi2();
  const auto& cos_table = pentagon_cosines();
  const mpfr_prec_t acc_bits = ctx.bits() + kAccumulatorBits;
  const PrecisionContext wide = ctx.widened(kCoefficientGuard);
  const BigReal phi = const_phi(wide);

  DissectionReport report;
  report.exact_coefficients = true;
  for (std::size_t r = 0; r < 5; ++r) {
    const GoldenRational twice = cos_table[r] * GoldenRational(golden_pow(-static_cast<long>(r + 1))) *
                                 GoldenRational(GoldenInt(2, 0));
    report.exact_coefficients = report.exact_coefficients && twice == formula.coefficients[r];
  }

  // Left side from the real cosine values and real phi powers, independent
  // of the exact coefficient table used by bbp_inner.
  std::array<BigReal, 5> weighted;
  for (std::size_t r = 0; r < 5; ++r) {
    weighted[r] = (golden_to_real(cos_table[r], wide) * pow(phi, -static_cast<long>(r + 1)))
                      .with_precision(acc_bits);
  }
  report.max_group_residual = BigReal(ctx);
  for (long j = 0; j <= max_group; ++j) {
    const BigReal left = inner_sum(j, weighted, acc_bits);
    const BigReal right = bbp_inner(j, ctx) / 2;
    const BigReal gap = abs(left - right).with_precision(ctx.bits());
    if (gap > report.max_group_residual) {
      report.max_group_residual = gap;
      report.worst_group = j;
    }
  }

  const long groups = bbp_terms_for_digits(ctx.working_digits());
  const BigReal cos_total = cosine_sum(5 * groups, ctx);
  const BigReal bbp_total = bbp_sum(groups, ctx).value;
  report.total_residual = abs(cos_total - bbp_total / 2);
  return report;
}

BigReal verify_remark(const PrecisionContext& ctx) {
  const mpfr_prec_t acc_bits = ctx.bits() + kAccumulatorBits;
  const BigReal phi_minus_5 =
      golden_to_real(golden_pow(-5), ctx.widened(kCoefficientGuard)).with_precision(acc_bits);
  const long groups = polylog_terms(2, kPhiMinus5, ctx.working_digits() + 2) + 1;

  BigReal scale = 2 * phi_minus_5;  // 2 phi^-5 phi^(-5j)
  BigReal lhs(acc_bits);
  for (long j = 0; j < groups; ++j) {
    BigReal term = scale;
    term /= 5 * j + 5;
    term /= 5 * j + 5;
    lhs += term;
    scale *= phi_minus_5;
  }
  const BigReal rhs = 2 * li(2, phi_minus_5.with_precision(ctx.bits()), ctx) / 25;
  return abs(lhs - rhs).with_precision(ctx.bits());
}

}  // namespace aurum
