#include <cmath>
#include <stdexcept>

#include <gmpxx.h>

#include "aurum/constants.hpp"
#include "aurum/polylog.hpp"
#include "aurum/zeta3.hpp"
#include "doctest.h"

using namespace aurum;

namespace {

BigReal tol(const PrecisionContext& ctx, int digits) { return pow10_neg(digits, ctx.bits()); }

BigReal phi_inv(const PrecisionContext& ctx) { return const_phi(ctx) - 1; }
BigReal phi_inv2(const PrecisionContext& ctx) { return 2 - const_phi(ctx); }

}  // namespace

TEST_CASE("level truncation") {
  CHECK(level_terms(0, 0.3819660112501051, 60) > level_terms(1, 0.3819660112501051, 60));
  CHECK(level_terms(3, 0.3819660112501051, 60) == 3);
  // 5^-3 * w^125 at w = phi^-2 is ~1e-54: level 3 is useful at 60 digits, level 4 is not.
  CHECK(max_useful_level(3, 0.3819660112501051, 60) == 3);
  CHECK(max_useful_level(3, 0.3819660112501051, 40) == 2);
}

TEST_CASE("m_sum") {
  const PrecisionContext ctx = make_context(50);
  const BigReal a = phi_inv2(ctx);
  const BigReal ln_phi = m_sum(HierarchicalSumSpec{1, a, 6, ctx});
  CHECK(abs(ln_phi - const_ln_phi(ctx)) < tol(ctx, 49));
  CHECK(ln_phi.to_decimal(12) == "0.481211825060");

  const BigReal tiny = pow10_neg(60, ctx.bits());
  CHECK(m_sum(HierarchicalSumSpec{2, tiny, 3, ctx}) < tol(ctx, 59));

  // The level-2 term of M3(phi^-2) is about 2.27e-15.
  const std::vector<BigReal> levels = m_levels(HierarchicalSumSpec{3, a, 3, ctx});
  REQUIRE(levels.size() == 4);
  CHECK(levels[2].to_decimal(4) == "0.000000000000002274");
  const BigReal j2 = m_sum(HierarchicalSumSpec{3, a, 2, ctx});
  const BigReal j3 = m_sum(HierarchicalSumSpec{3, a, 3, ctx});
  CHECK(abs(j3 - j2) < BigReal::from_string("1e-15", ctx.bits()));

  CHECK_THROWS_AS(m_sum(HierarchicalSumSpec{2, BigReal(0, ctx.bits()), 2, ctx}), std::domain_error);
  CHECK_THROWS_AS(m_sum(HierarchicalSumSpec{2, BigReal(1, ctx.bits()), 2, ctx}), std::domain_error);
  CHECK_THROWS_AS(m_sum(HierarchicalSumSpec{0, a, 2, ctx}), std::invalid_argument);
  CHECK_THROWS_AS(m_sum(HierarchicalSumSpec{2, a, -1, ctx}), std::invalid_argument);
}

TEST_CASE("M_s(w) = Li_s(w)") {
  const PrecisionContext ctx = make_context(50);
  const BigReal points[] = {BigReal::from_string("0.1", ctx.bits()),
                            BigReal::from_string("0.5", ctx.bits()), phi_inv(ctx),
                            phi_inv2(ctx)};
  for (int s = 1; s <= 3; ++s) {
    for (const auto& w : points) {
      INFO("s = " << s << ", w = " << w.to_decimal(10));
      CHECK(verify_m_equals_li(s, w, ctx) < tol(ctx, 48));
    }
  }
  CHECK_THROWS_AS(verify_m_equals_li(2, BigReal::from_string("0.995", ctx.bits()), ctx),
                  std::domain_error);
}

TEST_CASE("zeta3_oracle") {
  CHECK(zeta3_oracle(make_context(13)).to_decimal(13) == "1.202056903160");
  const PrecisionContext ctx = make_context(60);
  CHECK(abs(zeta3_oracle(ctx) -
            BigReal::from_string("1.20205690315959428539973816151144999076498629234049888179227",
                                 ctx.bits())) < tol(ctx, 59));

  // Direct sum to 10^6 plus the Euler-Maclaurin tail 1/(2N^2) - 1/(2N^3).
  double direct = 0.0;
  const long n_max = 1000000;
  for (long n = n_max; n >= 1; --n) direct += 1.0 / (static_cast<double>(n) * n * n);
  const double nd = static_cast<double>(n_max);
  direct += 1.0 / (2.0 * nd * nd) - 1.0 / (2.0 * nd * nd * nd);
  CHECK(std::fabs(direct - zeta3_oracle(ctx).to_double()) < 1e-12);
}

TEST_CASE("zeta3 assembly") {
  for (int digits : {12, 30, 50, 100}) {
    INFO("digits = " << digits);
    const Zeta3Report report = zeta3(digits);
    const PrecisionContext ctx = make_context(digits);
    CHECK(abs(report.value - zeta3_oracle(ctx)) < tol(ctx, digits));
    REQUIRE(report.per_level_values.size() >= 3);
    CHECK(report.per_level_values.size() == report.digits_correct.size());
    CHECK(abs(report.per_level_values.back() - report.value).is_zero());
    for (std::size_t j = 1; j < report.digits_correct.size(); ++j) {
      CHECK(report.digits_correct[j] >= report.digits_correct[j - 1]);
    }
    CHECK(report.digits_correct.back() == digits);
  }

  // Truncated assemblies (independently evaluated, 80 digits).
  const Zeta3Report report = zeta3(50);
  CHECK(report.per_level_values[0].to_decimal(13) == "1.196800387657");
  CHECK(report.per_level_values[1].to_decimal(13) == "1.202056898567");
  CHECK(report.digits_correct[0] == 2);
  CHECK(report.digits_correct[1] == 8);
  CHECK(report.digits_correct[2] >= 30);
  CHECK_THROWS_AS(zeta3(0), std::invalid_argument);
}

TEST_CASE("assembly is invariant under M -> Li") {
  for (int digits : {20, 50}) {
    const PrecisionContext ctx = make_context(digits);
    const BigReal a = phi_inv2(ctx);
    const BigReal b = phi_inv(ctx);
    const BigReal with_li = BigReal::ratio(5, 4, ctx.bits()) * li(3, a, ctx) +
                            (li(2, b, ctx) + li(2, a, ctx)) * li(1, a, ctx) +
                            BigReal::ratio(7, 6, ctx.bits()) * pow(li(1, a, ctx), 3);
    CHECK(abs(zeta3(digits, ctx).value - with_li) < tol(ctx, digits));
  }
}

TEST_CASE("trilogarithm identity") {
  const PrecisionContext ctx50 = make_context(50);
  CHECK(verify_li3_identity(ctx50) < tol(ctx50, 48));
  CHECK(li3_identity_residual(ctx50, -1) > BigReal::from_string("1e-2", ctx50.bits()));
  const PrecisionContext ctx100 = make_context(100);
  CHECK(verify_li3_identity(ctx100) < tol(ctx100, 98));
}

TEST_CASE("golden dilogarithm values") {
  const PrecisionContext ctx = make_context(50);
  const ResidualTable table = verify_dilog_golden_values(ctx);
  CHECK(table.size() == 4);
  for (const auto& entry : table) {
    INFO(entry.name);
    CHECK(entry.value < tol(ctx, 48));
  }
  // identity_3 is 6 (eq_a1 + eq_a2) up to rounding.
  const BigReal bound = 6 * (residual(table, "eq_a1") + residual(table, "eq_a2")) + tol(ctx, 55);
  CHECK(residual(table, "identity_3") <= bound);
}

TEST_CASE("bootstrap assembly") {
  const PrecisionContext ctx50 = make_context(50);
  CHECK(verify_bootstrap_assembly(ctx50) < tol(ctx50, 48));
  const PrecisionContext ctx20 = make_context(20);
  CHECK(verify_bootstrap_assembly(ctx20) < tol(ctx20, 18));
  CHECK(mpq_class(-5, 6) + mpq_class(2) == mpq_class(7, 6));
}

TEST_CASE("convergence report") {
  const PrecisionContext ctx = make_context(60);
  const ConvergenceReport report = convergence_report(3, ctx);
  CHECK(report.all_ok);
  CHECK(report.rows.size() == 12);
  for (const auto& row : report.rows) {
    INFO("s = " << row.s << ", J = " << row.level);
    CHECK(row.meets_floor);
    if (row.level > 0 && row.resolved) {
      CHECK(row.gain >= row.s * std::log10(5.0) - 0.5);
    }
  }
  // s = 3, level 2 contribution ~ 2.27e-15.
  const double order = std::floor(report.rows[2 * 4 + 2].level_contribution.log10_abs());
  CHECK(order == -15.0);

  REQUIRE(report.assembly_corrections.size() == 3);
  CHECK(report.assembly_corrections[1].to_decimal(3) == "0.00000000459");
  CHECK_THROWS_AS(convergence_report(1, ctx), std::invalid_argument);
}
