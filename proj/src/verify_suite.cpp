#include "aurum/verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aurum/bbp_pi2.hpp"
#include "aurum/constants.hpp"
#include "aurum/polylog.hpp"
#include "aurum/zeta3.hpp"

namespace aurum {

namespace {

BigReal real(const char* text, const PrecisionContext& ctx) {
  return BigReal::from_string(text, ctx.bits());
}

BigComplex point(const char* re, const char* im, const PrecisionContext& ctx) {
  return BigComplex{real(re, ctx), real(im, ctx)};
}

ResidualTable landen_rows(const PrecisionContext& ctx) {
  static const char* const kNames[] = {"z=0.5", "z=phi^-2", "z=0.3+0.2i", "z=0.6-0.3i",
                                       "z=0.5+0.5i"};
  ResidualTable table;
  const auto points = landen_sample_points(ctx);
  for (std::size_t i = 0; i < points.size(); ++i) {
    table.push_back({kNames[i], check_landen(points[i], ctx)});
  }
  return table;
}

ResidualTable inversion_rows(const PrecisionContext& ctx) {
  static const char* const kNames[] = {"z=-0.5", "z=-0.25", "z=-0.9"};
  ResidualTable table;
  const auto points = inversion_sample_points(ctx);
  for (std::size_t i = 0; i < points.size(); ++i) {
    table.push_back({kNames[i], check_inversion(points[i], ctx)});
  }
  return table;
}

ResidualTable m_equals_li_rows(const PrecisionContext& ctx) {
  const BigReal phi = const_phi(ctx);
  const std::vector<std::pair<std::string, BigReal>> points = {
      {"0.1", real("0.1", ctx)}, {"0.5", real("0.5", ctx)}, {"phi^-1", phi - 1}, {"phi^-2", 2 - phi}};
  ResidualTable table;
  for (int s = 1; s <= 3; ++s) {
    for (const auto& [name, w] : points) {
      table.push_back({"s=" + std::to_string(s) + ",w=" + name, verify_m_equals_li(s, w, ctx)});
    }
  }
  return table;
}

}  // namespace

const std::vector<std::string>& verify_targets() {
  static const std::vector<std::string> targets = {
      "landen", "inversion",   "geometric", "lemma3",        "dissection", "remark",
      "m-equals-li", "li3", "dilog-values", "bootstrap", "convergence"};
  return targets;
}

std::vector<BigComplex> landen_sample_points(const PrecisionContext& ctx) {
  const BigReal zero(ctx);
  return {BigComplex{real("0.5", ctx), zero}, BigComplex{2 - const_phi(ctx), zero},
          point("0.3", "0.2", ctx), point("0.6", "-0.3", ctx), point("0.5", "0.5", ctx)};
}

std::vector<BigComplex> inversion_sample_points(const PrecisionContext& ctx) {
  const BigReal zero(ctx);
  return {BigComplex{real("-0.5", ctx), zero}, BigComplex{real("-0.25", ctx), zero},
          BigComplex{real("-0.9", ctx), zero}};
}

SuiteRow run_verify_target(const std::string& target, const PrecisionContext& ctx,
                           const BigReal& threshold) {
  SuiteRow row;
  row.target = target;
  bool extra_condition = true;
  if (target == "landen") {
    row.residuals = landen_rows(ctx);
  } else if (target == "inversion") {
    row.residuals = inversion_rows(ctx);
  } else if (target == "geometric") {
    const GeometricResidual g = verify_geometric_identity(ctx);
    row.residuals = {{"vector", g.vector}, {"real_part", g.real_part}, {"imag_part", g.imag_part}};
  } else if (target == "lemma3") {
    row.residuals = verify_lemma3_decomposition(ctx);
    const BigReal pi2 = square(const_pi(ctx));
    row.residuals.push_back(
        {"cosine_sum", abs(cosine_sum(cosine_sum_terms(ctx), ctx) - pi2 / 100)});
  } else if (target == "dissection") {
    const DissectionReport d = verify_dissection(ctx);
    row.residuals = {{"max_group", d.max_group_residual}, {"total", d.total_residual}};
    extra_condition = d.exact_coefficients;
  } else if (target == "remark") {
    row.residuals = {{"remark", verify_remark(ctx)}};
  } else if (target == "m-equals-li") {
    row.residuals = m_equals_li_rows(ctx);
  } else if (target == "li3") {
    row.residuals = {{"li3_identity", verify_li3_identity(ctx)}};
  } else if (target == "dilog-values") {
    row.residuals = verify_dilog_golden_values(ctx);
  } else if (target == "bootstrap") {
    row.residuals = {{"bootstrap", verify_bootstrap_assembly(ctx)}};
  } else if (target == "convergence") {
    const ConvergenceReport report = convergence_report(3, ctx);
    double shortfall = 0.0;
    for (const auto& r : report.rows) {
      if (r.level == 0 || !r.resolved) continue;
      shortfall = std::max(shortfall, r.s * std::log10(5.0) - 0.5 - r.gain);
    }
    BigReal value(ctx);
    mpfr_set_d(value.raw(), shortfall, MPFR_RNDN);
    row.residuals = {{"gain_shortfall", value}};
    extra_condition = report.all_ok;
  } else {
    throw std::invalid_argument("unknown verify target: " + target);
  }
  row.pass = extra_condition && max_residual(row.residuals) < threshold;
  return row;
}

}  // namespace aurum
