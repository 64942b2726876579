#pragma once

#include <vector>

#include "aurum/big_real.hpp"
#include "aurum/precision.hpp"
#include "aurum/residuals.hpp"

namespace aurum {

/// Parameters of the hierarchical sum
///
///   M_s(w) = sum_{j=0..J} 5^(-sj) sum_{r=1..4} sum_{k>=0} (w^(5^j))^(5k+r) / (5k+r)^s
///
/// which regroups Li_s(w) by the largest power of 5 dividing the index.
struct HierarchicalSumSpec {
  int s = 1;
  BigReal w;
  int outer_levels = 0;  // J, inclusive
  PrecisionContext ctx;
};

/// Inner truncation K_j = ceil(W ln 10 / (5 * 5^j * ln(1/w))) + 2.
long level_terms(int level, double w, int working_digits);

/// Deepest level whose leading magnitude 5^(-sj) w^(5^j) is above 10^-(W+2).
int max_useful_level(int s, double w, int working_digits);

/// Per-level contributions for j = 0..outer_levels; levels past
/// max_useful_level() are reported as exact zeros.
/// Throws std::domain_error unless 0 < w < 1, std::invalid_argument for s < 1
/// or outer_levels < 0.
std::vector<BigReal> m_levels(const HierarchicalSumSpec& spec);

BigReal m_sum(const HierarchicalSumSpec& spec);

/// |M_s(w) - Li_s(w)| with M_s summed to max_useful_level(). Requires 0 < w <= 0.99.
BigReal verify_m_equals_li(int s, const BigReal& w, const PrecisionContext& ctx);

struct Zeta3Report {
  BigReal value;
  std::vector<BigReal> per_level_values;  // assembly truncated at J = 0, 1, 2, ...
  std::vector<int> digits_correct;        // against zeta3_oracle, capped at `digits`
};

/// (5/4) M3(phi^-2) + (M2(phi^-1) + M2(phi^-2)) M1(phi^-2) + (7/6) M1(phi^-2)^3.
/// per_level_values always holds at least J = 0, 1, 2; its last entry is `value`.
Zeta3Report zeta3(int digits);
Zeta3Report zeta3(int digits, const PrecisionContext& ctx);

/// zeta(3) = (5/2) sum_{k>=1} (-1)^(k-1) / (k^3 binom(2k, k)).
BigReal zeta3_oracle(const PrecisionContext& ctx);

/// Li3(phi^-2) - (4/5) zeta(3) - (2/3) ln^3 phi + sign * (2/15) pi^2 ln phi, unsigned.
/// sign = +1 is the true identity; sign = -1 is a non-vacuity control.
BigReal li3_identity_residual(const PrecisionContext& ctx, int sign);
BigReal verify_li3_identity(const PrecisionContext& ctx);

/// Named residuals: eq_a1 (Li2(phi^-2) = pi^2/15 - ln^2 phi),
/// eq_a2 (Li2(phi^-1) = pi^2/10 - ln^2 phi), identity_2 (ln phi = Li1(phi^-2)),
/// identity_3 (pi^2 = 6 (Li2(phi^-1) + Li2(phi^-2) + 2 ln^2 phi)).
ResidualTable verify_dilog_golden_values(const PrecisionContext& ctx);

/// |zeta3_oracle - [(5/4) Li3(phi^-2) + (Li2(phi^-1) + Li2(phi^-2)) Li1(phi^-2) + (7/6) Li1(phi^-2)^3]|
BigReal verify_bootstrap_assembly(const PrecisionContext& ctx);

struct ConvergenceRow {
  int s = 0;
  int level = 0;               // J: series truncated after level J
  BigReal level_contribution;  // 5^(-sJ) * inner sum of level J
  double digits = 0.0;         // -log10 of the truncation error, capped at working digits
  double gain = 0.0;           // digits(J) - digits(J-1); 0 for J = 0
  bool resolved = true;        // false when both digit counts hit the cap
  bool meets_floor = true;     // gain >= s log10 5 - 0.5 (vacuous for J = 0 or unresolved)
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  std::vector<BigReal> assembly_values;       // zeta(3) assembly truncated at J = 0..max_J
  std::vector<BigReal> assembly_corrections;  // |A_J - A_{J-1}| for J = 1..max_J
  bool all_ok = true;
};

/// Digit gain per level for s in {1,2,3} at w = phi^-2. Throws
/// std::invalid_argument for max_levels < 2.
ConvergenceReport convergence_report(int max_levels, const PrecisionContext& ctx);

}  // namespace aurum
