#include "aurum/golden.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "aurum/constants.hpp"

namespace aurum {

GoldenInt& GoldenInt::operator+=(const GoldenInt& rhs) {
  a += rhs.a;
  b += rhs.b;
  return *this;
}

GoldenInt& GoldenInt::operator-=(const GoldenInt& rhs) {
  a -= rhs.a;
  b -= rhs.b;
  return *this;
}

// (a + b phi)(c + d phi) = (ac + bd) + (ad + bc + bd) phi
GoldenInt& GoldenInt::operator*=(const GoldenInt& rhs) {
  const mpz_class bd = b * rhs.b;
  mpz_class next_b = a * rhs.b + b * rhs.a + bd;
  a = a * rhs.a + bd;
  b = std::move(next_b);
  return *this;
}

GoldenInt& GoldenInt::operator*=(const mpz_class& k) {
  a *= k;
  b *= k;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GoldenInt& g) {
  return os << '(' << g.a << ", " << g.b << ')';
}

int sign(const GoldenInt& g) {
  // 2(a + b phi) = (2a + b) + b sqrt5
  const mpz_class p = 2 * g.a + g.b;
  const int sp = sgn(p);
  const int sq = sgn(g.b);
  if (sp == 0) return sq;
  if (sq == 0 || sp == sq) return sp;
  const int cmp_sq = cmp(p * p, 5 * g.b * g.b);
  return cmp_sq > 0 ? sp : sq;
}

GoldenRational::GoldenRational(GoldenInt num) : num_(std::move(num)), den_(1) {}

GoldenRational::GoldenRational(GoldenInt num, mpz_class den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::invalid_argument("GoldenRational with zero denominator");
  reduce();
}

void GoldenRational::reduce() {
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num_.a.get_mpz_t(), num_.b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
  if (g > 1) {
    num_.a /= g;
    num_.b /= g;
    den_ /= g;
  }
}

GoldenRational& GoldenRational::operator+=(const GoldenRational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  reduce();
  return *this;
}

GoldenRational& GoldenRational::operator-=(const GoldenRational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  reduce();
  return *this;
}

GoldenRational& GoldenRational::operator*=(const GoldenRational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  reduce();
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GoldenRational& g) {
  return os << g.num() << '/' << g.den();
}

int sign(const GoldenRational& g) { return sign(g.num()); }

std::pair<mpz_class, mpz_class> fib_pair(std::uint64_t n) {
  if (n == 0) return {mpz_class(0), mpz_class(1)};
  mpz_class fn;
  mpz_class fn_minus_1;
  mpz_fib2_ui(fn.get_mpz_t(), fn_minus_1.get_mpz_t(), n);
  return {fn, fn_minus_1};
}

GoldenInt golden_pow(long n) {
  if (n >= 0) {
    auto [fn, fn1] = fib_pair(static_cast<std::uint64_t>(n));
    return {fn1, fn};
  }
  const std::uint64_t k = static_cast<std::uint64_t>(-(n + 1)) + 1;  // |n| without overflow
  auto [fk, fk1] = fib_pair(k);
  mpz_class fk_plus_1 = fk + fk1;
  const bool odd = (k & 1U) != 0;
  // (-1)^n F_{k+1}, (-1)^{n+1} F_k
  if (odd) return {-fk_plus_1, fk};
  return {fk_plus_1, -fk};
}

namespace {

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % m);
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> fib_pair_mod(std::uint64_t n, std::uint64_t m,
                                                     std::uint64_t* mul_count) {
  if (m == 0) throw std::invalid_argument("fib_pair_mod: modulus must be positive");
  if (m == 1) return {0, 0};

  // Invariant: (f0, f1) = (F_k, F_{k+1}) mod m for the prefix k of n's bits.
  std::uint64_t f0 = 0;
  std::uint64_t f1 = 1;
  std::uint64_t muls = 0;
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    // F_2k = F_k (2 F_{k+1} - F_k),  F_{2k+1} = F_k^2 + F_{k+1}^2
    const auto twice = static_cast<std::uint64_t>((2 * static_cast<unsigned __int128>(f1)) % m);
    const std::uint64_t diff = (twice + m - f0) % m;
    const std::uint64_t even = mul_mod(f0, diff, m);
    const std::uint64_t odd =
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(mul_mod(f0, f0, m)) +
                                    mul_mod(f1, f1, m)) % m);
    muls += 3;
    if ((n >> bit) & 1U) {
      f0 = odd;
      f1 = static_cast<std::uint64_t>((static_cast<unsigned __int128>(even) + odd) % m);
    } else {
      f0 = even;
      f1 = odd;
    }
  }
  if (mul_count != nullptr) *mul_count += muls;
  return {f0, (f1 + m - f0) % m};
}

std::pair<std::uint64_t, std::uint64_t> fib_pair_mod(std::uint64_t n, std::uint64_t m) {
  return fib_pair_mod(n, m, nullptr);
}

BigReal golden_to_real(const GoldenInt& g, const PrecisionContext& ctx) {
  // a + b*phi cancels catastrophically for large negative powers; widen by
  // the coefficient size so the result is accurate to ctx.
  const std::size_t coeff_bits =
      std::max(mpz_sizeinbase(g.a.get_mpz_t(), 2), mpz_sizeinbase(g.b.get_mpz_t(), 2));
  const PrecisionContext wide = ctx.widened(static_cast<int>(coeff_bits * 30103 / 100000) + 2);
  const BigReal phi = const_phi(wide);
  const BigReal value = BigReal(g.a, wide.bits()) + BigReal(g.b, wide.bits()) * phi;
  return value.with_precision(ctx.bits());
}

BigReal golden_to_real(const GoldenRational& g, const PrecisionContext& ctx) {
  BigReal value = golden_to_real(g.num(), ctx);
  value /= BigReal(g.den(), ctx.bits());
  return value;
}

}  // namespace aurum
