// Acceptance checks. Usage: acceptance [criterion ...]  (default: 1..7)
// Prints one "criterion N: PASS|FAIL" line per criterion, preceded by its sub-checks.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "aurum/bbp_pi2.hpp"
#include "aurum/constants.hpp"
#include "aurum/golden.hpp"
#include "aurum/phi_digits.hpp"
#include "aurum/polylog.hpp"
#include "aurum/relation.hpp"
#include "aurum/verify_suite.hpp"
#include "aurum/zeta3.hpp"

using namespace aurum;

namespace {

// Pinned tolerances.
constexpr int kC1Digits = 100;
constexpr long kC1Terms = 110;
constexpr double kC1Seconds = 5.0;
constexpr double kC1RatioTolerance = 0.01;
constexpr int kC2MinDigits = 30;
constexpr int kC3Digits = 50;
constexpr int kC3Threshold = 45;
constexpr double kControlFloor = 1e-3;
constexpr int kC4Count = 10;
constexpr int kC4MaxEscalations = 2;
constexpr double kC4Seconds = 10.0;
constexpr int kC5Digits = 120;
constexpr int kC5Residual = 100;
constexpr long kC5ControlNorm = 10000;
constexpr int kPlantedCases = 50;

class Criterion {
 public:
  explicit Criterion(int id) : id_(id) {}

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    all_ok_ = all_ok_ && ok;
    std::printf("  [%s] %s%s%s\n", ok ? "ok" : "FAIL", name.c_str(), detail.empty() ? "" : ": ",
                detail.c_str());
  }

  bool finish(const char* title) const {
    std::printf("criterion %d: %s (%s)\n", id_, all_ok_ ? "PASS" : "FAIL", title);
    std::fflush(stdout);
    return all_ok_;
  }

 private:
  int id_;
  bool all_ok_ = true;
};

std::string sci(const BigReal& x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.3e", x.to_double());
  if (x.is_zero() || x.to_double() != 0.0) return buffer;
  return "10^" + std::to_string(static_cast<long>(x.log10_abs()));
}

std::string fixed(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.4f", x);
  return buffer;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

BigReal control(double value, const PrecisionContext& ctx) {
  BigReal out(ctx);
  mpfr_set_d(out.raw(), value, MPFR_RNDN);
  return out;
}

BigReal random_real(gmp_randclass& rng, mpfr_prec_t bits) {
  const mpz_class numerator = rng.get_z_bits(bits);
  mpz_class denominator = 1;
  denominator <<= bits;
  return BigReal(numerator, bits) / BigReal(denominator, bits) + 1;
}

// 1. pi^2 series reproduction and tail rate.
bool criterion1() {
  Criterion c(1);
  const PrecisionContext ctx = make_context(kC1Digits);
  const PrecisionContext oracle_ctx = make_context(kC1Digits + 40);
  const BigReal pi2 = square(const_pi(oracle_ctx));

  const auto start = std::chrono::steady_clock::now();
  const PartialSumReport report = bbp_sum(kC1Terms, ctx);
  const double elapsed = seconds_since(start);
  const BigReal error = abs(50 * report.value.with_precision(oracle_ctx.bits()) - pi2);
  c.check("50 * bbp_sum(110) vs Machin pi squared < 1e-100", error < pow10_neg(kC1Digits, oracle_ctx.bits()),
          "error " + sci(error));
  c.check("runtime < 5 s", elapsed < kC1Seconds, fixed(elapsed) + " s");

  const double phi5 = std::pow(1.6180339887498949, 5);
  bool bound_ratio_ok = true;
  for (long k = 1; k <= kC1Terms; ++k) {
    const double ratio = (bbp_sum(k, ctx).tail_bound / bbp_sum(k + 1, ctx).tail_bound).to_double();
    bound_ratio_ok = bound_ratio_ok && std::fabs(ratio / phi5 - 1) < kC1RatioTolerance;
  }
  c.check("tail bound shrinks by phi^5 +- 1% per term, K = 1..110", bound_ratio_ok);

  // Observed truncation error; its ratio is phi^5 (1 + 1/K)^2 asymptotically.
  const PrecisionContext deep = make_context(330);
  const BigReal exact = square(const_pi(deep)) / 50;
  for (long k : {240L, 250L, 260L}) {
    const BigReal e0 = abs(exact - bbp_sum(k, deep).value);
    const BigReal e1 = abs(exact - bbp_sum(k + 1, deep).value);
    const double ratio = (e0 / e1).to_double();
    c.check("observed tail ratio at K = " + std::to_string(k) + " within 1% of phi^5",
            std::fabs(ratio / phi5 - 1) < kC1RatioTolerance, fixed(ratio) + " vs " + fixed(phi5));
  }
  return c.finish("pi^2 series reproduction");
}

// 2. Truncated zeta(3) assemblies.
bool criterion2() {
  Criterion c(2);
  const Zeta3Report report = zeta3(40);
  const std::string j0 = report.per_level_values.at(0).to_decimal(30);
  const std::string j1 = report.per_level_values.at(1).to_decimal(30);
  c.check("J = 0 has prefix 1.202041", j0.rfind("1.202041", 0) == 0, j0.substr(0, 16));
  c.check("J = 1 has prefix 1.202056902", j1.rfind("1.202056902", 0) == 0, j1.substr(0, 16));
  c.check("J = 2 agrees with the Apery oracle to >= 30 digits",
          report.digits_correct.at(2) >= kC2MinDigits,
          std::to_string(report.digits_correct.at(2)) + " digits");
  const BigReal correction = abs(report.per_level_values.at(2) - report.per_level_values.at(1));
  const mpfr_prec_t bits = correction.precision();
  const bool in_range = correction >= pow10_neg(34, bits) && correction <= pow10_neg(32, bits);
  c.check("J = 1 -> 2 correction in [1e-34, 1e-32]", in_range, sci(correction));
  return c.finish("truncated zeta(3) assemblies");
}

// 3. Residual suite and perturbed controls.
bool criterion3() {
  Criterion c(3);
  const PrecisionContext ctx = make_context(kC3Digits);
  const BigReal threshold = pow10_neg(kC3Threshold, ctx.bits());
  for (const char* target : {"geometric", "lemma3", "dissection", "remark", "landen", "m-equals-li",
                             "li3", "dilog-values"}) {
    const SuiteRow row = run_verify_target(target, ctx, threshold);
    for (const auto& r : row.residuals) {
      c.check(std::string(target) + "/" + r.name + " < 1e-45", r.value < threshold, sci(r.value));
    }
    c.check(std::string(target) + " row", row.pass);
  }

  const BigReal floor = control(kControlFloor, ctx);
  const BigReal phi = const_phi(ctx);
  const BigReal pi2 = square(const_pi(ctx));
  const BigReal ln_phi = const_ln_phi(ctx);
  const BigReal half = BigReal::from_string("0.5", ctx.bits());
  std::map<std::string, BigReal> controls;
  controls.emplace("geometric at 1.01 z",
                   geometric_identity_residual(pentagon_point(ctx) * BigReal::from_string("1.01", ctx.bits()), ctx)
                       .vector);
  controls.emplace("cosine sum vs pi^2/90",
                   abs(cosine_sum(cosine_sum_terms(ctx), ctx) - pi2 / 90));
  const BigReal w2 = BigReal::from_string("0.6", ctx.bits());
  controls.emplace("Landen with 1 - z replaced by 0.6",
                   abs(li(2, half, ctx) + li(2, w2, ctx) - pi2 / 6 + log(half) * log(w2)));
  controls.emplace("M2(0.5) vs Li2(0.52)",
                   abs(m_sum(HierarchicalSumSpec{2, half, 8, ctx}) -
                       li(2, BigReal::from_string("0.52", ctx.bits()), ctx)));
  controls.emplace("Li3 identity with flipped sign", li3_identity_residual(ctx, -1));
  controls.emplace("Li2(phi^-2) vs pi^2/14 - ln^2 phi",
                   abs(li(2, 2 - phi, ctx) - (pi2 / 14 - square(ln_phi))));
  controls.emplace("r = 5 column with Li2(phi^-4)",
                   abs(2 * li(2, pow(phi, -4), ctx) / 25 - 2 * li(2, pow(phi, -5), ctx) / 25));
  for (const auto& [name, value] : controls) {
    c.check("control: " + name + " > 1e-3", value > floor, sci(value));
  }
  return c.finish("identity residual suite at 50 digits");
}

// 4. Spot digits against the greedy oracle.
bool criterion4() {
  Criterion c(4);
  std::vector<long> positions = {1, 2, 5, 10, 50};
  for (long d = 100; d <= 460; d += 20) positions.push_back(d);
  positions.push_back(500);
  c.check("25 positions", positions.size() == 25);

  const auto start = std::chrono::steady_clock::now();
  const std::string oracle = greedy_oracle_pi2(520).to_string();
  const PrecisionContext ctx = make_context(20);
  int max_escalations = 0;
  bool all_equal = true;
  bool ambiguous = false;
  for (long d : positions) {
    try {
      const SpotResult r = spot_with_escalation(d, kC4Count, ctx, kC4MaxEscalations);
      max_escalations = std::max(max_escalations, r.stats.escalations);
      const std::string expected = oracle.substr(static_cast<std::size_t>(d - 1), kC4Count);
      if (r.expansion.to_string() != expected) {
        all_equal = false;
        c.check("d = " + std::to_string(d), false, r.expansion.to_string() + " vs " + expected);
      }
    } catch (const AmbiguousDigit& e) {
      ambiguous = true;
      c.check("d = " + std::to_string(d), false, e.what());
    }
  }
  const double elapsed = seconds_since(start);
  c.check("spot_fractional(d, 10) equals the oracle at every position", all_equal);
  c.check("no AmbiguousDigit after <= 2 escalations", !ambiguous,
          "max escalations " + std::to_string(max_escalations));
  c.check("runtime < 10 s", elapsed < kC4Seconds, fixed(elapsed) + " s");
  return c.finish("digit extraction oracle equivalence");
}

// 5. PSLQ rediscovery.
bool criterion5() {
  Criterion c(5);
  const PrecisionContext ctx = make_context(kC5Digits);
  const std::vector<mpz_class> expected = expected_pi2_relation();
  try {
    const RelationCandidate found = rediscover_pi2(ctx);
    std::string coeffs;
    for (const auto& v : found.coefficients) coeffs += " " + v.get_str();
    c.check("relation proportional to the symbolic expansion",
            is_integer_multiple(found.coefficients, expected), "[" + coeffs + " ]");
    c.check("residual < 1e-100", found.residual < pow10_neg(kC5Residual, ctx.bits()), sci(found.residual));
  } catch (const std::exception& e) {
    c.check("rediscover_pi2", false, e.what());
  }

  gmp_randclass rng(gmp_randinit_default);
  rng.seed(20240611);
  std::mt19937 pick(12345);
  std::uniform_int_distribution<int> size(3, 6);
  std::uniform_int_distribution<long> coeff(-100, 100);
  const PrecisionContext pctx = make_context(60);
  int recovered = 0;
  for (int trial = 0; trial < kPlantedCases; ++trial) {
    const int n = size(pick);
    std::vector<BigReal> values;
    BigReal planted(pctx.bits());
    for (int i = 0; i + 1 < n; ++i) {
      values.push_back(random_real(rng, pctx.bits()));
      long k = coeff(pick);
      if (k == 0) k = 1;
      planted += k * values.back();
    }
    values.push_back(planted);
    try {
      const PslqResult r = pslq(values, pctx, mpz_class(1000000));
      const auto* found = std::get_if<RelationCandidate>(&r);
      if (found != nullptr && found->residual < pow10_neg(45, pctx.bits())) ++recovered;
    } catch (const PrecisionExhausted&) {
    }
  }
  c.check("planted relations recovered 50/50", recovered == kPlantedCases,
          std::to_string(recovered) + "/" + std::to_string(kPlantedCases));

  const PslqResult control = rediscover(const_pi(ctx), ctx, mpz_class(kC5ControlNorm));
  const auto* nf = std::get_if<NotFound>(&control);
  c.check("pi in place of pi^2 gives NotFound at max_norm 1e4",
          nf != nullptr && nf->exclusion_bound >= BigReal(kC5ControlNorm, ctx.bits()),
          nf != nullptr ? "exclusion bound " + sci(nf->exclusion_bound) : "relation returned");
  return c.finish("integer-relation rediscovery");
}

// 6. Property suites.
bool criterion6() {
  Criterion c(6);
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<long> exponent(-300, 300);
  int homomorphic = 0;
  for (int i = 0; i < 500; ++i) {
    const long m = exponent(rng);
    const long n = exponent(rng);
    if (golden_pow(m) * golden_pow(n) == golden_pow(m + n)) ++homomorphic;
  }
  c.check("phi^m phi^n = phi^(m+n) on 500 random pairs", homomorphic == 500,
          std::to_string(homomorphic) + "/500");

  const PhiExpansion oracle = greedy_oracle_pi2(1200);
  bool no_adjacent = !oracle.has_adjacent_ones();
  const PrecisionContext ctx = make_context(20);
  const PrecisionContext hi = make_context(300);
  const BigReal s = square(const_pi(hi)) / 50;
  const BigReal phi = const_phi(hi);
  bool spot_bounds = true;
  for (long d = 1; d <= 1000; d += 37) {
    const SpotResult r = spot_with_escalation(d, 64, ctx);
    no_adjacent = no_adjacent && !r.expansion.has_adjacent_ones();
    // Remainder of S after digit d-1, from the oracle digits.
    PhiExpansion prefix{1, std::vector<int>(oracle.digits.begin(), oracle.digits.begin() + (d - 1))};
    const BigReal remainder = d > 1 ? s - reconstruct(prefix, hi) : s;
    const BigReal err = remainder - reconstruct(r.expansion, hi);
    spot_bounds = spot_bounds && err.sign() >= 0 && err < pow(phi, -(d + 64 - 1));
  }
  c.check("no adjacent ones in the oracle and 28 spot expansions", no_adjacent);

  bool greedy_bounds = true;
  for (int n : {1, 10, 64, 200, 1000}) {
    const PhiExpansion e = greedy_expand(s, n, hi);
    const BigReal err = s - reconstruct(e, hi);
    greedy_bounds = greedy_bounds && err.sign() >= 0 && err < pow(phi, -n);
  }
  c.check("reconstruction bound for greedy expansions", greedy_bounds);
  c.check("reconstruction bound for spot expansions", spot_bounds);

  bool monotone = true;
  for (int digits : {12, 30, 50, 100}) {
    const Zeta3Report report = zeta3(digits);
    for (std::size_t j = 1; j < report.digits_correct.size(); ++j) {
      monotone = monotone && report.digits_correct[j] >= report.digits_correct[j - 1];
    }
  }
  c.check("zeta3 digits_correct nondecreasing in J (12, 30, 50, 100 digits)", monotone);
  return c.finish("property suites");
}

// 7. Digit gain per level.
bool criterion7() {
  Criterion c(7);
  const ConvergenceReport report = convergence_report(3, make_context(60));
  for (const auto& row : report.rows) {
    if (row.level == 0) continue;
    const double floor = row.s * std::log10(5.0) - 0.5;
    c.check("s = " + std::to_string(row.s) + ", J = " + std::to_string(row.level) +
                ": gain >= " + fixed(floor),
            row.meets_floor,
            row.resolved ? "gain " + fixed(row.gain) : "capped at working precision");
  }
  c.check("all levels meet the floor", report.all_ok);
  return c.finish("per-level digit gain");
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<bool()>> criteria = {criterion1, criterion2, criterion3,
                                                       criterion4, criterion5, criterion6,
                                                       criterion7};
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const int id = std::atoi(argv[i]);
    if (id < 1 || id > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "unknown criterion: %s\n", argv[i]);
      return 2;
    }
    selected.push_back(id);
  }
  if (selected.empty()) {
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) selected.push_back(i);
  }
  bool all = true;
  for (int id : selected) all = criteria[static_cast<std::size_t>(id - 1)]() && all;
  return all ? 0 : 1;
}
