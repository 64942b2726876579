#include "aurum/relation.hpp"

#include <algorithm>
#include <cmath>

#include "aurum/bbp_pi2.hpp"
#include "aurum/constants.hpp"
#include "aurum/golden.hpp"

namespace aurum {

namespace {

constexpr long kMaxIterations = 200000;

class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, mpfr_prec_t bits)
      : cols_(cols), data_(rows * cols, BigReal(bits)) {}
  BigReal& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

 private:
  std::size_t cols_;
  std::vector<BigReal> data_;
};

using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

BigReal relation_residual(const std::vector<BigReal>& values, const std::vector<mpz_class>& c,
                          mpfr_prec_t bits) {
  BigReal sum(bits);
  for (std::size_t i = 0; i < values.size(); ++i) {
    sum += BigReal(c[i], bits) * values[i].with_precision(bits);
  }
  return abs(sum);
}

RelationCandidate make_candidate(const std::vector<BigReal>& values, std::vector<mpz_class> c,
                                 mpfr_prec_t bits) {
  RelationCandidate out;
  out.residual = relation_residual(values, c, bits);
  out.max_abs_coeff = 0;
  for (const auto& v : c) out.max_abs_coeff = std::max<mpz_class>(out.max_abs_coeff, abs(v));
  out.coefficients = std::move(c);
  return out;
}

// An exact relation leaves only rounding error, about 10^-W sum |c_i x_i|; allow a 10^5 margin.
bool consistent_with_rounding(const std::vector<BigReal>& values, const RelationCandidate& c,
                              int working_digits) {
  const mpfr_prec_t bits = c.residual.precision();
  BigReal scale(bits);
  for (std::size_t i = 0; i < values.size(); ++i) {
    scale += abs(BigReal(c.coefficients[i], bits) * values[i]);
  }
  return c.residual <= scale * pow10_neg(working_digits - 5, bits);
}

}  // namespace

PslqResult pslq(const std::vector<BigReal>& values, const PrecisionContext& ctx,
                const mpz_class& max_norm) {
  const std::size_t n = values.size();
  if (n < 2) throw std::invalid_argument("pslq: need at least two values");
  if (max_norm < 1) throw std::invalid_argument("pslq: max_norm must be >= 1");
  for (const auto& v : values) {
    if (v.is_zero()) throw std::invalid_argument("pslq: values must be nonzero");
  }

  const mpfr_prec_t bits = ctx.bits();
  const int working = ctx.working_digits();
  const int detection = std::max(working / 2, working - 20);
  const BigReal threshold = pow10_neg(detection, bits);
  const mpz_class a_limit = [&] {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(detection));
    return p;
  }();
  const BigReal gamma = 2 / sqrt(BigReal(3, bits));
  const BigReal sqrt_n = sqrt(BigReal(static_cast<long>(n), bits));

  // Normalized y and partial norms s_k = |(x_k, ..., x_n)|.
  std::vector<BigReal> x;
  for (const auto& v : values) x.push_back(v.with_precision(bits));
  std::vector<BigReal> s(n, BigReal(bits));
  BigReal acc(bits);
  for (std::size_t k = n; k-- > 0;) {
    acc += square(x[k]);
    s[k] = sqrt(acc);
  }
  const BigReal norm = s[0];
  std::vector<BigReal> y(n, BigReal(bits));
  for (std::size_t k = 0; k < n; ++k) {
    y[k] = x[k] / norm;
    s[k] /= norm;
  }

  Matrix h(n, n - 1, bits);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n - 1; ++j) {
      if (i == j) {
        h.at(i, j) = s[j + 1] / s[j];
      } else if (i > j) {
        h.at(i, j) = -(y[i] * y[j]) / (s[j] * s[j + 1]);
      }
    }
  }

  IntMatrix a = identity(n);
  IntMatrix b = identity(n);

  auto reduce = [&](std::size_t from_row) {
    for (std::size_t i = from_row; i < n; ++i) {
      for (std::size_t j = std::min(i, n - 1); j-- > 0;) {
        if (h.at(j, j).is_zero()) continue;
        const mpz_class t = round_to_integer(h.at(i, j) / h.at(j, j));
        if (t == 0) continue;
        const BigReal tr(t, bits);
        y[j] += tr * y[i];
        for (std::size_t k = 0; k <= j; ++k) h.at(i, k) -= tr * h.at(j, k);
        for (std::size_t k = 0; k < n; ++k) {
          a[i][k] -= t * a[j][k];
          b[k][j] += t * b[k][i];
        }
      }
    }
  };

  auto relation_from_column = [&](std::size_t col) {
    std::vector<mpz_class> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = b[k][col];
    return make_candidate(values, std::move(c), bits + 64);
  };

  auto small_y = [&]() -> long {
    for (std::size_t j = 0; j < n; ++j) {
      if (abs(y[j]) < threshold) return static_cast<long>(j);
    }
    return -1;
  };

  reduce(1);
  BigReal best_bound(bits);
  for (long iteration = 1; iteration <= kMaxIterations; ++iteration) {
    // Step 1: exchange the rows maximizing gamma^i |H_ii|.
    std::size_t m = 0;
    BigReal best(bits);
    BigReal gp(1, bits);
    for (std::size_t i = 0; i < n - 1; ++i) {
      gp *= gamma;
      const BigReal v = gp * abs(h.at(i, i));
      if (v > best) {
        best = v;
        m = i;
      }
    }
    std::swap(y[m], y[m + 1]);
    std::swap(a[m], a[m + 1]);
    for (std::size_t k = 0; k < n; ++k) std::swap(b[k][m], b[k][m + 1]);
    for (std::size_t k = 0; k < n - 1; ++k) std::swap(h.at(m, k), h.at(m + 1, k));

    // Step 2: restore the lower trapezoidal shape.
    if (m + 2 < n) {
      const BigReal t0 = sqrt(square(h.at(m, m)) + square(h.at(m, m + 1)));
      const BigReal t1 = h.at(m, m) / t0;
      const BigReal t2 = h.at(m, m + 1) / t0;
      for (std::size_t i = m; i < n; ++i) {
        const BigReal t3 = h.at(i, m);
        const BigReal t4 = h.at(i, m + 1);
        h.at(i, m) = t1 * t3 + t2 * t4;
        h.at(i, m + 1) = t1 * t4 - t2 * t3;
      }
    }

    // Step 3: reduction.
    reduce(m + 1);

    // Step 4: termination tests.
    const long hit = small_y();
    if (hit >= 0) {
      RelationCandidate found = relation_from_column(static_cast<std::size_t>(hit));
      if (!consistent_with_rounding(values, found, working)) {
        throw PrecisionExhausted("pslq: candidate after " + std::to_string(iteration) +
                                 " iterations only holds to the detection threshold");
      }
      return found;
    }

    BigReal h_max(bits);
    bool zero_diagonal = false;
    for (std::size_t j = 0; j < n - 1; ++j) {
      if (h.at(j, j).is_zero()) zero_diagonal = true;
      h_max = max(h_max, abs(h.at(j, j)));
    }
    if (zero_diagonal) return relation_from_column(n - 1);
    best_bound = max(best_bound, 1 / (h_max * sqrt_n));
    if (best_bound > BigReal(max_norm, bits)) return NotFound{best_bound, iteration};

    for (const auto& row : a) {
      for (const auto& v : row) {
        if (abs(v) > a_limit) {
          throw PrecisionExhausted("pslq: integer matrix exceeds working precision after " +
                                   std::to_string(iteration) + " iterations");
        }
      }
    }
  }
  throw PrecisionExhausted("pslq: iteration limit reached");
}

std::vector<mpz_class> normalize_relation(std::vector<mpz_class> coefficients) {
  mpz_class g = 0;
  for (const auto& c : coefficients) g = gcd(g, c);
  if (g == 0) return coefficients;
  for (const auto& c : coefficients) {
    if (c != 0) {
      if (c < 0) g = -g;
      break;
    }
  }
  for (auto& c : coefficients) c /= g;
  return coefficients;
}

bool is_integer_multiple(const std::vector<mpz_class>& found,
                         const std::vector<mpz_class>& expected) {
  if (found.size() != expected.size()) return false;
  mpz_class scale = 0;
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (expected[i] == 0) {
      if (found[i] != 0) return false;
      continue;
    }
    if (found[i] % expected[i] != 0) return false;
    const mpz_class k = found[i] / expected[i];
    if (k == 0 || (scale != 0 && k != scale)) return false;
    scale = k;
  }
  return scale != 0;
}

std::vector<BigReal> golden_basis_sums(const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits() + 32;
  const BigReal phi = const_phi(ctx).with_precision(bits);
  const BigReal eps = pow10_neg(ctx.working_digits() + 5, bits);
  const BigReal step = pow(phi, -5);
  std::vector<BigReal> sums;
  for (long r = 1; r <= 5; ++r) {
    BigReal power = pow(phi, -r);
    BigReal sum(bits);
    for (long n = r;; n += 5) {
      BigReal term = power / (n * n);
      sum += term;
      if (term < eps) break;
      power *= step;
    }
    sums.push_back(sum.with_precision(ctx.bits()));
  }
  return sums;
}

std::vector<BigReal> rediscovery_basis(const BigReal& lead, const PrecisionContext& ctx) {
  const std::vector<BigReal> t = golden_basis_sums(ctx);
  const BigReal phi = const_phi(ctx);
  std::vector<BigReal> basis{lead.with_precision(ctx.bits())};
  for (const auto& v : t) basis.push_back(v);
  for (const auto& v : t) basis.push_back(phi * v);
  return basis;
}

std::vector<mpz_class> expected_pi2_relation() {
  // pi^2 / 50 = sum_r (c_r phi^r) T_r, with c_r phi^r = a_r + b_r phi.
  const BBPFormula& f = BBPFormula::pi2();
  std::vector<mpz_class> out(11, 0);
  out[0] = 1;
  for (int r = 1; r <= 5; ++r) {
    const GoldenRational weight = f.coefficients[static_cast<std::size_t>(r - 1)] *
                                  GoldenRational(golden_pow(r));
    if (weight.den() != 1) throw std::logic_error("expected_pi2_relation: non-integral weight");
    out[static_cast<std::size_t>(r)] = -50 * weight.num().a;
    out[static_cast<std::size_t>(r + 5)] = -50 * weight.num().b;
  }
  return normalize_relation(out);
}

PslqResult rediscover(const BigReal& lead, const PrecisionContext& ctx, const mpz_class& max_norm) {
  return pslq(rediscovery_basis(lead, ctx), ctx, max_norm);
}

RelationCandidate rediscover_pi2(const PrecisionContext& ctx) {
  const PslqResult result = rediscover(square(const_pi(ctx)), ctx, mpz_class(10000));
  const auto* found = std::get_if<RelationCandidate>(&result);
  if (found == nullptr) throw std::runtime_error("rediscover_pi2: no relation found");
  RelationCandidate out = *found;
  out.coefficients = normalize_relation(std::move(out.coefficients));
  if (!is_integer_multiple(out.coefficients, expected_pi2_relation())) {
    throw std::runtime_error("rediscover_pi2: relation is not a multiple of the expected one");
  }
  return out;
}

}  // namespace aurum
