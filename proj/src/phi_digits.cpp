#include "aurum/phi_digits.hpp"

#include <algorithm>
#include <cmath>

#include "aurum/bbp_pi2.hpp"
#include "aurum/constants.hpp"

namespace aurum {

namespace {

constexpr double kLog10Phi = 0.20898764024997873;

void check_count(int n_digits, int max_digits) {
  if (n_digits < 1 || n_digits > max_digits) {
    throw std::invalid_argument("digit count must be in [1, " + std::to_string(max_digits) + "]");
  }
}

// log10 of the distance from a digit boundary below which a step is undecidable.
double ambiguity_log10(const PrecisionContext& ctx, int step) {
  const double guard_margin = -ctx.guard_digits / 2.0;
  const double rounding = 2.0 - ctx.working_digits() + step * kLog10Phi;
  return std::max(guard_margin, rounding);
}

struct Candidate {
  BigReal x;
  BigReal y;
};

// Membership in the natural-extension domain, shrunk (margin > 0) or
// expanded (margin < 0) by |margin|.
bool in_domain(const Candidate& c, const BigReal& margin, const BigReal& phi_inv,
               const BigReal& phi) {
  if (c.x < margin || !(c.x < 1 - margin)) return false;
  if (c.y > 1 - margin) return false;
  const BigReal lower = c.x < phi_inv - margin ? -phi : -phi_inv;
  return c.y >= lower + margin;
}

}  // namespace

std::string PhiExpansion::to_string() const {
  std::string out;
  out.reserve(digits.size());
  for (int digit : digits) out.push_back(static_cast<char>('0' + digit));
  return out;
}

bool PhiExpansion::has_adjacent_ones() const {
  for (std::size_t i = 1; i < digits.size(); ++i) {
    if (digits[i] == 1 && digits[i - 1] == 1) return true;
  }
  return false;
}

PhiExpansion greedy_expand(const BigReal& x, int n_digits, const PrecisionContext& ctx) {
  if (n_digits < 1) throw std::invalid_argument("greedy_expand: n_digits must be >= 1");
  if (x.sign() < 0 || !(x < 1)) throw std::invalid_argument("greedy_expand: x must be in [0, 1)");
  const BigReal phi = const_phi(ctx);
  BigReal t = x.with_precision(ctx.bits());

  PhiExpansion out;
  out.digits.reserve(static_cast<std::size_t>(n_digits));
  for (int i = 0; i < n_digits; ++i) {
    BigReal scaled = phi * t;
    BigReal diff = scaled - 1;
    if (diff.is_zero() || diff.log10_abs() < ambiguity_log10(ctx, i)) {
      throw AmbiguousDigit(i + 1, "greedy_expand: digit " + std::to_string(i + 1) +
                                      " is within the precision margin of a boundary");
    }
    if (diff.sign() > 0) {
      out.digits.push_back(1);
      t = std::move(diff);
    } else {
      out.digits.push_back(0);
      t = std::move(scaled);
    }
  }
  return out;
}

PhiExpansion greedy_expand(const GoldenRational& x, int n_digits) {
  if (n_digits < 1) throw std::invalid_argument("greedy_expand: n_digits must be >= 1");
  const GoldenRational one(GoldenInt(1, 0));
  const GoldenRational phi(GoldenInt::phi());
  if (sign(x) < 0 || sign(x - one) >= 0) {
    throw std::invalid_argument("greedy_expand: x must be in [0, 1)");
  }
  GoldenRational t = x;
  PhiExpansion out;
  out.digits.reserve(static_cast<std::size_t>(n_digits));
  for (int i = 0; i < n_digits; ++i) {
    GoldenRational scaled = t * phi;
    GoldenRational diff = scaled - one;
    if (sign(diff) >= 0) {
      out.digits.push_back(1);
      t = std::move(diff);
    } else {
      out.digits.push_back(0);
      t = std::move(scaled);
    }
  }
  return out;
}

BigReal reconstruct(const PhiExpansion& expansion, const PrecisionContext& ctx) {
  const BigReal phi = const_phi(ctx);
  const BigReal phi_inv = 1 / phi;
  BigReal weight = pow(phi, -expansion.start_position);
  BigReal total(ctx);
  for (int digit : expansion.digits) {
    if (digit != 0) total += weight;
    weight *= phi_inv;
  }
  return total;
}

PhiExpansion greedy_oracle_pi2(int n_digits) {
  if (n_digits < 1) throw std::invalid_argument("greedy_oracle_pi2: n_digits must be >= 1");
  const int needed = static_cast<int>(std::ceil(n_digits * kLog10Phi)) + 10;
  const PrecisionContext ctx = make_context(2 * needed);
  const BigReal s = square(const_pi(ctx)) / 50;
  return greedy_expand(s, n_digits, ctx);
}

SpotResult spot_fractional_report(long d, int count, const PrecisionContext& ctx) {
  if (d < 1) throw std::invalid_argument("spot_fractional: d must be >= 1");
  check_count(count, 64);

  const int extra = static_cast<int>(std::ceil(count * kLog10Phi + std::log10(static_cast<double>(d)))) + 5;
  const PrecisionContext wctx = ctx.widened(extra);
  const mpfr_prec_t bits = wctx.bits();
  const int budget = wctx.working_digits() + 2;
  const BigReal phi = const_phi(wctx);
  const BigReal phibar = 1 - phi;
  const BBPFormula& formula = BBPFormula::pi2();

  SpotResult result;
  SpotStats& stats = result.stats;
  stats.working_digits = wctx.working_digits();
  BigReal p1(bits);
  BigReal p2(bits);

  for (long j = 0;; ++j) {
    const long group_top = d - 1 - 5 * j - 1;
    if (group_top < 0 && -group_top * kLog10Phi > budget) break;
    for (int r = 1; r <= 5; ++r) {
      const int mult = formula.multipliers[static_cast<std::size_t>(r - 1)];
      const long m = d - 1 - 5 * j + formula.phi_exponents[static_cast<std::size_t>(r - 1)];
      const long n = 5 * j + r;
      const std::uint64_t q = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
      if (m >= 0) {
        ++stats.head_terms;
        const auto [rho1, rho0] =
            fib_pair_mod(static_cast<std::uint64_t>(m), q, &stats.modular_multiplications);
        const BigReal r1(static_cast<long>(rho1), bits);
        const BigReal r0(static_cast<long>(rho0), bits);
        BigReal conj = r1 * phibar + r0;
        if (m * kLog10Phi <= budget) conj -= pow(phibar, m);
        p1 += mult * ((r1 * phi + r0) / static_cast<long>(q));
        p2 += mult * (conj / static_cast<long>(q));
      } else if (-m * kLog10Phi <= budget) {
        ++stats.tail_terms;
        p1 += mult * (pow(phi, m) / static_cast<long>(q));
      }
    }
  }

  // Lattice point (a + b phi, a + b phibar) carrying (p1, p2) into the domain.
  const BigReal sqrt5 = 2 * phi - 1;
  const BigReal phi_inv = phi - 1;
  const mpz_class b0 = round_to_integer((p1 - p2 - BigReal::from_string("0.809", bits)) / sqrt5);
  const BigReal margin = pow10_neg((ctx.guard_digits + 1) / 2, bits);
  const BigReal loose = -margin;
  int hits = 0;
  bool clean = false;
  for (int db = -2; db <= 2; ++db) {
    const mpz_class b = b0 + db;
    const BigReal b_real(b, bits);
    const mpz_class a0 = round_to_integer(p1 - BigReal::ratio(1, 2, bits) - b_real * phi);
    for (int da = -3; da <= 3; ++da) {
      const BigReal a_real(mpz_class(a0 + da), bits);
      Candidate c{p1 - a_real - b_real * phi, p2 - a_real - b_real * phibar};
      if (!in_domain(c, loose, phi_inv, phi)) continue;
      ++hits;
      if (in_domain(c, margin, phi_inv, phi)) {
        clean = true;
        result.start_value = std::move(c.x);
      }
    }
  }
  if (hits != 1 || !clean) {
    throw AmbiguousDigit(d, "spot_fractional: position " + std::to_string(d) +
                                " lies within the precision margin of a domain boundary");
  }

  try {
    result.expansion = greedy_expand(result.start_value, count, wctx);
  } catch (const AmbiguousDigit& e) {
    const long position = d - 1 + e.position();
    throw AmbiguousDigit(position, "spot_fractional: digit " + std::to_string(position) +
                                       " is within the precision margin of a boundary");
  }
  result.expansion.start_position = d;
  return result;
}

PhiExpansion spot_fractional(long d, int count, const PrecisionContext& ctx) {
  return spot_fractional_report(d, count, ctx).expansion;
}

SpotResult spot_with_escalation(long d, int count, const PrecisionContext& ctx, int max_retries) {
  PrecisionContext attempt = ctx;
  for (int retry = 0;; ++retry) {
    try {
      SpotResult result = spot_fractional_report(d, count, attempt);
      result.stats.escalations = retry;
      return result;
    } catch (const AmbiguousDigit&) {
      if (retry >= max_retries) throw;
      attempt.guard_digits *= 2;
    }
  }
}

}  // namespace aurum
