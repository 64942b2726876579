#include "aurum/zeta3.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "aurum/constants.hpp"
#include "aurum/polylog.hpp"

namespace aurum {

namespace {

constexpr mpfr_prec_t kSpareBits = 32;
constexpr int kMaxLevel = 40;
const double kLog10Of5 = std::log10(5.0);

void check_spec(int s, const BigReal& w, int levels) {
  if (s < 1) throw std::invalid_argument("hierarchical sum weight must be >= 1");
  if (levels < 0) throw std::invalid_argument("outer_levels must be >= 0");
  if (w.sign() <= 0 || !(w < 1)) throw std::domain_error("hierarchical sum needs 0 < w < 1");
}

// x * num / den with the exact rational kept as an integer pair.
BigReal scale(const BigReal& x, long num, long den) { return x * num / den; }

BigReal assemble(const BigReal& m3_a, const BigReal& m2_b, const BigReal& m2_a,
                 const BigReal& m1_a) {
  return scale(m3_a, 5, 4) + (m2_b + m2_a) * m1_a + scale(m1_a * m1_a * m1_a, 7, 6);
}

std::vector<BigReal> prefix_sums(const std::vector<BigReal>& levels) {
  std::vector<BigReal> out;
  out.reserve(levels.size());
  for (const auto& level : levels) {
    if (out.empty()) {
      out.push_back(level);
    } else {
      out.push_back(out.back() + level);
    }
  }
  return out;
}

// The four hierarchical series of the zeta(3) assembly, prefix-summed by level.
struct AssemblyPrefixes {
  std::vector<BigReal> m3_a, m2_b, m2_a, m1_a;

  BigReal at(std::size_t level) const {
    return assemble(m3_a[level], m2_b[level], m2_a[level], m1_a[level]);
  }
};

AssemblyPrefixes assembly_prefixes(int levels, const PrecisionContext& ctx) {
  const BigReal phi = const_phi(ctx);
  const BigReal a = 2 - phi;  // phi^-2
  const BigReal b = phi - 1;  // phi^-1
  auto prefixes = [&](int s, const BigReal& w) {
    return prefix_sums(m_levels(HierarchicalSumSpec{s, w, levels, ctx}));
  };
  return AssemblyPrefixes{prefixes(3, a), prefixes(2, b), prefixes(2, a), prefixes(1, a)};
}

int assembly_levels(const PrecisionContext& ctx) {
  const double a = 0.3819660112501051;
  const double b = 0.6180339887498949;
  const int w = ctx.working_digits();
  return std::max({2, max_useful_level(3, a, w), max_useful_level(2, b, w),
                   max_useful_level(2, a, w), max_useful_level(1, a, w)});
}

}  // namespace

long level_terms(int level, double w, int working_digits) {
  const double per_term = 5.0 * std::pow(5.0, level) * std::log(1.0 / w);
  return static_cast<long>(std::ceil(working_digits * std::log(10.0) / per_term)) + 2;
}

int max_useful_level(int s, double w, int working_digits) {
  int level = 0;
  while (level < kMaxLevel) {
    const int next = level + 1;
    const double magnitude = -s * next * kLog10Of5 + std::pow(5.0, next) * std::log10(w);
    if (magnitude < -(working_digits + 2)) break;
    level = next;
  }
  return level;
}

std::vector<BigReal> m_levels(const HierarchicalSumSpec& spec) {
  check_spec(spec.s, spec.w, spec.outer_levels);
  const PrecisionContext& ctx = spec.ctx;
  const mpfr_prec_t bits = ctx.bits() + kSpareBits;
  const double w_double = spec.w.to_double();
  const int useful = max_useful_level(spec.s, w_double, ctx.working_digits());

  std::vector<BigReal> levels;
  levels.reserve(static_cast<std::size_t>(spec.outer_levels) + 1);
  BigReal base = spec.w.with_precision(bits);  // w^(5^j)
  for (int j = 0; j <= spec.outer_levels; ++j) {
    if (j > useful) {
      levels.emplace_back(ctx);
      continue;
    }
    if (j > 0) base = pow(base, 5);
    const long k_max = level_terms(j, w_double, ctx.working_digits());
    const long n_max = 5 * k_max + 4;

    BigReal power(1, bits);
    BigReal inner(bits);
    for (long n = 1; n <= n_max; ++n) {
      power *= base;
      if (n % 5 == 0) continue;
      BigReal term = power;
      for (int i = 0; i < spec.s; ++i) term /= n;
      inner += term;
    }
    BigReal weight(5, bits);
    weight = pow(weight, -static_cast<long>(spec.s) * j);
    levels.push_back((inner * weight).with_precision(ctx.bits()));
  }
  return levels;
}

BigReal m_sum(const HierarchicalSumSpec& spec) {
  BigReal total(spec.ctx);
  for (const auto& level : m_levels(spec)) total += level;
  return total;
}

BigReal verify_m_equals_li(int s, const BigReal& w, const PrecisionContext& ctx) {
  if (w > BigReal::from_string("0.99", w.precision())) {
    throw std::domain_error("verify_m_equals_li: w must be <= 0.99");
  }
  const int levels = max_useful_level(s, w.to_double(), ctx.working_digits());
  const BigReal m = m_sum(HierarchicalSumSpec{s, w, levels, ctx});
  return abs(m - li(s, w, ctx));
}

BigReal zeta3_oracle(const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits() + kSpareBits;
  const BigReal eps = pow10_neg(ctx.working_digits() + 3, bits);
  BigReal inverse_binomial = BigReal::ratio(1, 2, bits);  // 1 / binom(2, 1)
  BigReal sum = inverse_binomial;
  for (long k = 2;; ++k) {
    // binom(2k, k) = binom(2k-2, k-1) * 2 (2k - 1) / k
    inverse_binomial *= k;
    inverse_binomial /= 2 * (2 * k - 1);
    BigReal term = inverse_binomial;
    term /= k;
    term /= k;
    term /= k;
    // Alternating with decreasing terms: the tail is below the first omitted term.
    if (term < eps) break;
    if (k % 2 == 0) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return (sum * 5 / 2).with_precision(ctx.bits());
}

Zeta3Report zeta3(int digits, const PrecisionContext& ctx) {
  if (digits < 1) throw std::invalid_argument("zeta3: digits must be >= 1");
  const int levels = assembly_levels(ctx);
  const AssemblyPrefixes prefixes = assembly_prefixes(levels, ctx);
  const BigReal oracle = zeta3_oracle(ctx);

  Zeta3Report report;
  for (int j = 0; j <= levels; ++j) {
    BigReal value = prefixes.at(static_cast<std::size_t>(j));
    report.digits_correct.push_back(digits_agreeing(value, oracle, digits));
    report.per_level_values.push_back(std::move(value));
  }
  report.value = report.per_level_values.back();
  return report;
}

Zeta3Report zeta3(int digits) { return zeta3(digits, make_context(digits)); }

BigReal li3_identity_residual(const PrecisionContext& ctx, int sign) {
  const BigReal phi = const_phi(ctx);
  const BigReal ln_phi = const_ln_phi(ctx);
  const BigReal pi2 = square(const_pi(ctx));
  const BigReal li3 = li(3, 2 - phi, ctx);
  const BigReal rhs = scale(zeta3_oracle(ctx), 4, 5) + scale(ln_phi * ln_phi * ln_phi, 2, 3) -
                      sign * scale(pi2 * ln_phi, 2, 15);
  return abs(li3 - rhs);
}

BigReal verify_li3_identity(const PrecisionContext& ctx) { return li3_identity_residual(ctx, 1); }

ResidualTable verify_dilog_golden_values(const PrecisionContext& ctx) {
  const BigReal phi = const_phi(ctx);
  const BigReal a = 2 - phi;
  const BigReal b = phi - 1;
  const BigReal ln_phi = const_ln_phi(ctx);
  const BigReal ln2 = square(ln_phi);
  const BigReal pi2 = square(const_pi(ctx));
  const BigReal li2_a = li(2, a, ctx);
  const BigReal li2_b = li(2, b, ctx);

  ResidualTable table;
  table.push_back({"eq_a1", abs(li2_a - (pi2 / 15 - ln2))});
  table.push_back({"eq_a2", abs(li2_b - (pi2 / 10 - ln2))});
  // Library logarithm, independent of the series behind const_ln_phi.
  table.push_back({"identity_2", abs(li(1, a, ctx) - log(phi))});
  table.push_back({"identity_3", abs(pi2 - 6 * (li2_b + li2_a + 2 * ln2))});
  return table;
}

BigReal verify_bootstrap_assembly(const PrecisionContext& ctx) {
  const BigReal phi = const_phi(ctx);
  const BigReal a = 2 - phi;
  const BigReal b = phi - 1;
  const BigReal assembled = assemble(li(3, a, ctx), li(2, b, ctx), li(2, a, ctx), li(1, a, ctx));
  return abs(zeta3_oracle(ctx) - assembled);
}

ConvergenceReport convergence_report(int max_levels, const PrecisionContext& ctx) {
  if (max_levels < 2) throw std::invalid_argument("convergence_report: max_levels must be >= 2");
  const double cap = ctx.working_digits();
  const BigReal a = 2 - const_phi(ctx);
  const int levels = std::max(max_levels, assembly_levels(ctx));

  ConvergenceReport report;
  for (int s = 1; s <= 3; ++s) {
    const std::vector<BigReal> contributions = m_levels(HierarchicalSumSpec{s, a, levels, ctx});
    const double floor_gain = s * kLog10Of5 - 0.5;
    double previous = 0.0;
    for (int j = 0; j <= max_levels; ++j) {
      BigReal error(ctx);
      for (std::size_t t = static_cast<std::size_t>(j) + 1; t < contributions.size(); ++t) {
        error += contributions[t];
      }
      const double digits = error.is_zero() ? cap : std::min(cap, -error.log10_abs());
      ConvergenceRow row;
      row.s = s;
      row.level = j;
      row.level_contribution = contributions[static_cast<std::size_t>(j)];
      row.digits = digits;
      if (j > 0) {
        row.gain = digits - previous;
        row.resolved = previous < cap;
        row.meets_floor = !row.resolved || row.gain >= floor_gain;
      }
      report.all_ok = report.all_ok && row.meets_floor;
      previous = digits;
      report.rows.push_back(std::move(row));
    }
  }

  const AssemblyPrefixes prefixes = assembly_prefixes(levels, ctx);
  for (int j = 0; j <= max_levels; ++j) {
    report.assembly_values.push_back(prefixes.at(static_cast<std::size_t>(j)));
    if (j > 0) {
      report.assembly_corrections.push_back(
          abs(report.assembly_values[static_cast<std::size_t>(j)] -
              report.assembly_values[static_cast<std::size_t>(j - 1)]));
    }
  }
  return report;
}

}  // namespace aurum
