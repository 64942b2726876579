#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

#include <mpfr.h>

#include "CLI11.hpp"
#include "aurum/bbp_pi2.hpp"
#include "aurum/constants.hpp"
#include "aurum/phi_digits.hpp"
#include "aurum/relation.hpp"
#include "aurum/verify_suite.hpp"
#include "aurum/zeta3.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace aurum;

namespace {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNumeric = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<int> guard_from_env() {
  const char* raw = std::getenv("AURUM_GUARD_DIGITS");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const int guard = std::stoi(raw, &used);
    if (used != std::string(raw).size() || guard < 10) throw std::invalid_argument(raw);
    return guard;
  } catch (const std::exception&) {
    throw UsageError("AURUM_GUARD_DIGITS must be an integer >= 10");
  }
}

PrecisionContext context_for(int digits) {
  const std::optional<int> guard = guard_from_env();
  return guard ? make_context(digits, *guard) : make_context(digits);
}

std::string sci(const BigReal& x) {
  if (x.is_zero()) return "0";
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.3Re", x.raw());
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

json integer(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

class Timer {
 public:
  explicit Timer(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  long long elapsed_ms() const {
    if (!enabled_) return 0;
    const auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

struct CommonOptions {
  bool json = false;
  bool no_timing = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_flag("--json", opts.json, "Emit a JSON report");
  cmd->add_flag("--no-timing", opts.no_timing, "Report elapsed_ms as 0 (byte-identical output)");
}

// compute

struct ComputeOptions {
  CommonOptions common;
  std::string constant;
  int digits = 50;
  std::string method;
};

int run_compute(const ComputeOptions& o) {
  const Timer timer(!o.common.no_timing);
  std::string method = o.method;
  if (method.empty()) method = o.constant == "pi2" ? "bbp" : "machin";
  if (o.constant == "zeta3" && method == "bbp") {
    throw UsageError("zeta3 has no BBP-type method; use machin or oracle");
  }
  const PrecisionContext ctx = context_for(o.digits);

  BigReal value;
  json terms_used = nullptr;
  json tail_bound = nullptr;
  if (o.constant == "pi2") {
    if (method == "bbp") {
      const PartialSumReport report = pi2_via_bbp_report(o.digits, ctx);
      value = report.value;
      terms_used = report.terms_used;
      tail_bound = sci(report.tail_bound);
    } else if (method == "machin") {
      value = square(const_pi(ctx));
    } else {
      BigReal pi(ctx);
      mpfr_const_pi(pi.raw(), MPFR_RNDN);
      value = square(pi);
    }
  } else if (method == "machin") {
    const Zeta3Report report = zeta3(o.digits, ctx);
    value = report.value;
    terms_used = static_cast<long>(report.per_level_values.size());
  } else {
    value = zeta3_oracle(ctx);
  }
  if (!value.is_finite()) throw std::runtime_error("non-finite result");

  const std::string text = value.to_decimal(o.digits);
  if (o.common.json) {
    json out;
    out["command"] = "compute";
    out["params"] = {{"constant", o.constant}, {"digits", o.digits}, {"method", method},
                     {"guard_digits", ctx.guard_digits}};
    out["value"] = text;
    out["terms_used"] = terms_used;
    out["tail_bound"] = tail_bound;
    out["elapsed_ms"] = timer.elapsed_ms();
    out["precision_digits"] = ctx.working_digits();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
  return kOk;
}

// verify

struct VerifyOptions {
  CommonOptions common;
  std::string target = "all";
  int digits = 50;
};

int run_verify(const VerifyOptions& o) {
  const Timer timer(!o.common.no_timing);
  const PrecisionContext ctx = context_for(o.digits);
  const BigReal threshold = pow10_neg(o.digits - 5, ctx.bits());
  std::vector<std::string> targets;
  if (o.target == "all") {
    targets = verify_targets();
  } else {
    targets = {o.target};
  }

  bool all_pass = true;
  json rows = json::array();
  std::ostringstream table;
  table << "threshold 1e-" << (o.digits - 5) << "\n";
  for (const auto& target : targets) {
    const SuiteRow row = run_verify_target(target, ctx, threshold);
    all_pass = all_pass && row.pass;
    const std::string worst = sci(max_residual(row.residuals));
    char line[128];
    std::snprintf(line, sizeof line, "%-14s %-12s %s\n", target.c_str(), worst.c_str(),
                  row.pass ? "PASS" : "FAIL");
    table << line;
    json entries = json::object();
    for (const auto& r : row.residuals) entries[r.name] = sci(r.value);
    rows.push_back({{"target", target},
                    {"max_residual", worst},
                    {"pass", row.pass},
                    {"entries", entries}});
  }

  if (o.common.json) {
    json out;
    out["command"] = "verify";
    out["params"] = {{"target", o.target}, {"digits", o.digits}, {"guard_digits", ctx.guard_digits}};
    out["residuals"] = rows;
    out["threshold"] = "1e-" + std::to_string(o.digits - 5);
    out["pass"] = all_pass;
    out["elapsed_ms"] = timer.elapsed_ms();
    out["precision_digits"] = ctx.working_digits();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << table.str();
  }
  return all_pass ? kOk : kVerifyFailed;
}

// digits

struct DigitsOptions {
  CommonOptions common;
  long position = 1;
  int count = 10;
};

int run_digits(const DigitsOptions& o) {
  const Timer timer(!o.common.no_timing);
  const PrecisionContext ctx = context_for(20);
  SpotResult result;
  try {
    result = spot_with_escalation(o.position, o.count, ctx);
  } catch (const AmbiguousDigit& e) {
    std::cerr << "error: " << e.what() << " (after retries)\n";
    return kNumeric;
  }
  const std::string digits = result.expansion.to_string();
  if (o.common.json) {
    json out;
    out["command"] = "digits";
    out["params"] = {{"position", o.position}, {"count", o.count},
                     {"guard_digits", ctx.guard_digits}};
    out["digits"] = digits;
    out["base"] = "phi";
    out["constant"] = "pi2/50";
    out["escalations"] = result.stats.escalations;
    out["head_terms"] = result.stats.head_terms;
    out["modular_multiplications"] = result.stats.modular_multiplications;
    out["elapsed_ms"] = timer.elapsed_ms();
    out["precision_digits"] = result.stats.working_digits;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "base=phi constant=pi2/50 start=" << o.position << "\n" << digits << "\n";
  }
  return kOk;
}

// discover

struct DiscoverOptions {
  CommonOptions common;
  int precision = 120;
  std::string max_norm = "10000";
};

int run_discover(const DiscoverOptions& o) {
  const Timer timer(!o.common.no_timing);
  mpz_class max_norm;
  if (max_norm.set_str(o.max_norm, 10) != 0 || max_norm < 1) {
    throw UsageError("--max-norm must be a positive integer");
  }
  const PrecisionContext ctx = context_for(o.precision);
  const std::vector<mpz_class> expected = expected_pi2_relation();

  json relation = nullptr;
  std::string status;
  std::ostringstream text;
  bool match = false;
  try {
    const PslqResult result = rediscover(square(const_pi(ctx)), ctx, max_norm);
    if (const auto* found = std::get_if<RelationCandidate>(&result)) {
      const std::vector<mpz_class> c = normalize_relation(found->coefficients);
      match = is_integer_multiple(c, expected);
      status = match ? "MATCH" : "NO-MATCH";
      json coeffs = json::array();
      text << "basis: [pi^2, T1..T5, phi*T1..phi*T5]\nrelation:";
      for (const auto& v : c) {
        coeffs.push_back(integer(v));
        text << " " << v;
      }
      text << "\nresidual: " << sci(found->residual) << "\n";
      relation = {{"coefficients", coeffs}, {"residual", sci(found->residual)}};
    } else {
      const auto& nf = std::get<NotFound>(result);
      status = "NOT-FOUND";
      text << "no relation with max coefficient <= " << sci(nf.exclusion_bound) << "\n";
      relation = {{"exclusion_bound", sci(nf.exclusion_bound)}};
    }
  } catch (const PrecisionExhausted& e) {
    status = "PRECISION-EXHAUSTED";
    text << "note: " << e.what() << "\n";
  }

  json expected_json = json::array();
  text << "expected:";
  for (const auto& v : expected) {
    expected_json.push_back(integer(v));
    text << " " << v;
  }
  text << "\n" << status << "\n";

  if (o.common.json) {
    json out;
    out["command"] = "discover";
    out["params"] = {{"precision", o.precision}, {"max_norm", o.max_norm},
                     {"guard_digits", ctx.guard_digits}};
    out["relation"] = relation;
    out["expected"] = expected_json;
    out["status"] = status;
    out["elapsed_ms"] = timer.elapsed_ms();
    out["precision_digits"] = ctx.working_digits();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text.str();
  }
  return match ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "aurum: golden-ratio series for pi^2 and zeta(3), identity checks, base-phi digits\n"
      "Decimal values are rounded to the requested significant digits; guard digits\n"
      "(default max(10, digits/10), override with AURUM_GUARD_DIGITS >= 10) make the\n"
      "last printed digit correct.\n"
      "Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numeric failure."};
  app.require_subcommand(1);

  ComputeOptions compute;
  auto* compute_cmd = app.add_subcommand("compute", "Evaluate pi^2 or zeta(3)");
  compute_cmd->add_option("constant", compute.constant, "pi2 or zeta3")
      ->required()
      ->check(CLI::IsMember({"pi2", "zeta3"}));
  compute_cmd->add_option("--digits", compute.digits, "Significant digits")
      ->check(CLI::Range(1, 10000))
      ->capture_default_str();
  compute_cmd
      ->add_option("--method", compute.method,
                   "bbp (pi2), machin (Machin pi or hierarchical zeta3), oracle (library pi / Apery)")
      ->check(CLI::IsMember({"bbp", "machin", "oracle"}));
  add_common(compute_cmd, compute.common);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Residual checks at threshold 10^-(digits-5)");
  std::vector<std::string> target_names = verify_targets();
  target_names.insert(target_names.begin(), "all");
  verify_cmd->add_option("--target", verify.target, "Check to run")
      ->check(CLI::IsMember(target_names))
      ->capture_default_str();
  verify_cmd->add_option("--digits", verify.digits, "Working digits")
      ->check(CLI::Range(10, 2000))
      ->capture_default_str();
  add_common(verify_cmd, verify.common);

  DigitsOptions digits;
  auto* digits_cmd = app.add_subcommand("digits", "Greedy base-phi digits of pi^2/50 at a position");
  digits_cmd->add_option("--position", digits.position, "First digit position (1-based)")
      ->required()
      ->check(CLI::Range(1L, 100000000L));
  digits_cmd->add_option("--count", digits.count, "Number of digits")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  add_common(digits_cmd, digits.common);

  DiscoverOptions discover;
  auto* discover_cmd = app.add_subcommand("discover", "Rediscover the pi^2 series with PSLQ");
  discover_cmd->add_option("--precision", discover.precision, "Decimal digits")
      ->check(CLI::Range(30, 10000))
      ->capture_default_str();
  discover_cmd->add_option("--max-norm", discover.max_norm, "Coefficient bound")
      ->capture_default_str();
  add_common(discover_cmd, discover.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*compute_cmd) return run_compute(compute);
    if (*verify_cmd) return run_verify(verify);
    if (*digits_cmd) return run_digits(digits);
    return run_discover(discover);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumeric;
  }
}
