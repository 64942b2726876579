#include <cmath>
#include <stdexcept>

#include "aurum/bbp_pi2.hpp"
#include "aurum/constants.hpp"
#include "doctest.h"

using namespace aurum;

namespace {

BigReal tol(const PrecisionContext& ctx, int digits) { return pow10_neg(digits, ctx.bits()); }

BigReal pi_squared(const PrecisionContext& ctx) { return square(const_pi(ctx)); }

}  // namespace

TEST_CASE("BBPFormula invariants") {
  const BBPFormula& f = BBPFormula::pi2();
  CHECK(f.base_exponent == 5);
  CHECK(f.period == 5);
  CHECK(f.weight == 2);
  CHECK(f.coefficients.size() == static_cast<std::size_t>(f.period));
  CHECK(f.coefficients[0] == GoldenRational(golden_pow(-2)));
  CHECK(f.coefficients[1] == GoldenRational(-golden_pow(-1)));
  CHECK(f.coefficients[2] == GoldenRational(-golden_pow(-2)));
  CHECK(f.coefficients[3] == GoldenRational(golden_pow(-5)));
  CHECK(f.coefficients[4] == GoldenRational(golden_pow(-5) * mpz_class(2)));
  CHECK(f.coefficients[0].num() == GoldenInt(2, -1));
  CHECK(f.coefficients[1].num() == GoldenInt(1, -1));
  CHECK(f.coefficients[3].num() == GoldenInt(-8, 5));
}

TEST_CASE("pentagon cosine table is exact") {
  const auto& t = pentagon_cosines();
  const GoldenRational half(GoldenInt(1, 0), 2);
  CHECK(t[0] == GoldenRational(golden_pow(-1)) * half);
  CHECK(t[1] == GoldenRational(-golden_pow(1)) * half);
  CHECK(t[2] == GoldenRational(-golden_pow(1)) * half);
  CHECK(t[3] == GoldenRational(golden_pow(-1)) * half);
  CHECK(t[4] == GoldenRational(golden_pow(0)));
  CHECK(t[0] * GoldenRational(GoldenInt(2, 0)) == GoldenRational(GoldenInt(-1, 1)));

  const PrecisionContext ctx = make_context(15);
  for (int r = 1; r <= 5; ++r) {
    const double expected = std::cos(2.0 * M_PI * r / 5.0);
    CHECK(golden_to_real(t[static_cast<std::size_t>(r - 1)], ctx).to_double() ==
          doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("bbp_inner") {
  const PrecisionContext ctx = make_context(30);
  // Direct evaluation with an independent phi (mpmath, 30 digits).
  CHECK(abs(bbp_inner(0, ctx) -
            BigReal::from_string("0.197866063130253168890544224791", ctx.bits())) <
        tol(ctx, 29));
  CHECK(abs(bbp_inner(1, ctx) -
            BigReal::from_string("-0.00505438243544776743787235139662", ctx.bits())) <
        tol(ctx, 31));
  CHECK_THROWS_AS(bbp_inner(-1, ctx), std::invalid_argument);

  // Large j: inner ~ (sum of coefficients) / (25 j^2), and the coefficient sum
  // 3 phi^-5 - phi^-1 is negative.
  const BigReal phi = const_phi(ctx);
  const BigReal coefficient_sum = 3 * pow(phi, -5) - 1 / phi;
  CHECK(coefficient_sum.sign() < 0);
  const long j = 100000;
  const BigReal scaled = bbp_inner(j, ctx) * 25 * j * j;
  CHECK(abs(scaled / coefficient_sum - 1) < BigReal::ratio(1, 1000, ctx.bits()));
}

TEST_CASE("bbp_sum") {
  const PrecisionContext ctx = make_context(50);
  const PartialSumReport one = bbp_sum(1, ctx);
  CHECK(one.terms_used == 1);
  CHECK(abs(one.value - bbp_inner(0, ctx)) < tol(ctx, 50));
  CHECK(abs(one.tail_bound - BigReal::from_string("0.16377086329672592625", ctx.bits())) <
        tol(ctx, 19));
  CHECK_THROWS_AS(bbp_sum(0, ctx), std::invalid_argument);

  const long k = bbp_terms_for_digits(ctx.working_digits());
  const PartialSumReport full = bbp_sum(k, ctx);
  CHECK(abs(50 * full.value - pi_squared(ctx)) < tol(ctx, 50));

  const PrecisionContext hi = make_context(120);
  const BigReal exact = pi_squared(hi) / 50;
  for (long terms : {1L, 2L, 5L, 17L, 40L}) {
    const PartialSumReport a = bbp_sum(terms, ctx);
    const PartialSumReport b = bbp_sum(terms + 1, ctx);
    CHECK(abs(b.value - a.value) <= a.tail_bound);
    CHECK(a.tail_bound.sign() >= 0);
    CHECK(abs(exact - a.value.with_precision(hi.bits())) <= a.tail_bound);
    // Tail shrinks by exactly phi^5 per outer term.
    const double ratio = (a.tail_bound / b.tail_bound).to_double();
    CHECK(ratio == doctest::Approx(std::pow(1.6180339887498949, 5)).epsilon(0.01));
  }
}

TEST_CASE("pi2_via_bbp") {
  CHECK(bbp_terms_for_digits(50) == 53);
  CHECK(pi2_via_bbp(12).to_decimal(12) == "9.86960440109");
  for (int digits : {1, 20, 50, 100, 200}) {
    const PrecisionContext ctx = make_context(digits);
    const BigReal got = pi2_via_bbp(digits);
    CHECK(abs(got - pi_squared(ctx)) < tol(ctx, digits));
  }
  CHECK_THROWS_AS(pi2_via_bbp(0), std::invalid_argument);
}

TEST_CASE("geometric identity") {
  const PrecisionContext ctx = make_context(50);
  const GeometricResidual r = verify_geometric_identity(ctx);
  CHECK(r.vector < tol(ctx, 48));
  CHECK(r.real_part < tol(ctx, 48));
  CHECK(r.imag_part < tol(ctx, 48));
  CHECK(abs(abs(pentagon_point(ctx)) - (const_phi(ctx) - 1)) < tol(ctx, 50));

  const BigComplex perturbed = pentagon_point(ctx) * BigReal::from_string("1.01", ctx.bits());
  CHECK(geometric_identity_residual(perturbed, ctx).vector > tol(ctx, 3));
}

TEST_CASE("cosine_sum") {
  const PrecisionContext ctx = make_context(50);
  const BigReal phi = const_phi(ctx);
  CHECK(abs(cosine_sum(1, ctx) - pow(phi, -2) / 2) < tol(ctx, 50));
  CHECK(cosine_sum(1, ctx).to_decimal(6) == "0.190983");

  // Floating trig oracle.
  double brute = 0.0;
  for (int k = 1; k <= 5; ++k) {
    brute += std::cos(2.0 * M_PI * k / 5.0) / (std::pow(1.6180339887498949, k) * k * k);
  }
  CHECK(cosine_sum(5, ctx).to_double() == doctest::Approx(brute).epsilon(1e-10));

  const BigReal full = cosine_sum(cosine_sum_terms(ctx), ctx);
  CHECK(abs(full - pi_squared(ctx) / 100) < tol(ctx, 48));
  CHECK_THROWS_AS(cosine_sum(0, ctx), std::invalid_argument);
}

TEST_CASE("pentagon dilogarithm decomposition residuals") {
  const PrecisionContext ctx = make_context(50);
  const ResidualTable table = verify_lemma3_decomposition(ctx);
  CHECK(table.size() == 7);
  for (const auto& entry : table) {
    INFO(entry.name);
    CHECK(entry.value < tol(ctx, 48));
  }
  CHECK(residual(table, "rational_assembly").is_zero());
}

TEST_CASE("dissection") {
  const PrecisionContext ctx = make_context(50);
  const DissectionReport report = verify_dissection(ctx);
  CHECK(report.exact_coefficients);
  CHECK(report.max_group_residual < tol(ctx, 48));
  CHECK(report.total_residual < tol(ctx, 48));
  CHECK(report.worst_group >= 0);
  CHECK(report.worst_group <= 20);
}

TEST_CASE("the r = 5 column is a dilogarithm") {
  const PrecisionContext ctx = make_context(50);
  CHECK(verify_remark(ctx) < tol(ctx, 48));
}

TEST_CASE("50 * BBP sum = pi^2 across precisions") {
  for (int digits : {20, 50, 100, 200}) {
    const PrecisionContext ctx = make_context(digits);
    const PartialSumReport r = bbp_sum(bbp_terms_for_digits(ctx.working_digits()), ctx);
    CHECK(abs(50 * r.value - pi_squared(ctx)) < tol(ctx, digits));
  }
}
