#pragma once

#include <cstdint>
#include <ostream>
#include <utility>

#include <gmpxx.h>

#include "aurum/big_real.hpp"

namespace aurum {

/// Exact element a + b*phi of Z[phi], with phi^2 = phi + 1.
struct GoldenInt {
  mpz_class a;
  mpz_class b;

  GoldenInt() = default;
  GoldenInt(mpz_class a_, mpz_class b_) : a(std::move(a_)), b(std::move(b_)) {}
  GoldenInt(long a_, long b_) : a(a_), b(b_) {}

  static GoldenInt phi() { return {0, 1}; }

  bool is_zero() const { return a == 0 && b == 0; }

  /// Galois conjugate a + b*phibar, phibar = 1 - phi = -1/phi.
  GoldenInt conjugate() const { return {a + b, -b}; }
  /// Field norm (a + b phi)(a + b phibar) = a^2 + ab - b^2.
  mpz_class norm() const { return a * a + a * b - b * b; }

  GoldenInt operator-() const { return {-a, -b}; }
  GoldenInt& operator+=(const GoldenInt& rhs);
  GoldenInt& operator-=(const GoldenInt& rhs);
  GoldenInt& operator*=(const GoldenInt& rhs);
  GoldenInt& operator*=(const mpz_class& k);

  friend GoldenInt operator+(GoldenInt x, const GoldenInt& y) { return x += y; }
  friend GoldenInt operator-(GoldenInt x, const GoldenInt& y) { return x -= y; }
  friend GoldenInt operator*(GoldenInt x, const GoldenInt& y) { return x *= y; }
  friend GoldenInt operator*(GoldenInt x, const mpz_class& k) { return x *= k; }
  friend GoldenInt operator*(const mpz_class& k, GoldenInt x) { return x *= k; }
  friend bool operator==(const GoldenInt& x, const GoldenInt& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend std::ostream& operator<<(std::ostream& os, const GoldenInt& g);
};

/// Exact sign of a + b*phi as a real number (-1, 0, +1).
int sign(const GoldenInt& g);

/// Element num / den of Q(phi) with den > 0, kept in lowest terms.
class GoldenRational {
 public:
  GoldenRational() : num_(0, 0), den_(1) {}
  GoldenRational(GoldenInt num);  // NOLINT(google-explicit-constructor)
  /// Throws std::invalid_argument for den == 0. Negative den is normalized.
  GoldenRational(GoldenInt num, mpz_class den);

  const GoldenInt& num() const { return num_; }
  const mpz_class& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  GoldenRational& operator+=(const GoldenRational& rhs);
  GoldenRational& operator-=(const GoldenRational& rhs);
  GoldenRational& operator*=(const GoldenRational& rhs);

  friend GoldenRational operator+(GoldenRational x, const GoldenRational& y) { return x += y; }
  friend GoldenRational operator-(GoldenRational x, const GoldenRational& y) { return x -= y; }
  friend GoldenRational operator*(GoldenRational x, const GoldenRational& y) { return x *= y; }
  friend bool operator==(const GoldenRational& x, const GoldenRational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::ostream& operator<<(std::ostream& os, const GoldenRational& g);

 private:
  void reduce();

  GoldenInt num_;
  mpz_class den_;
};

int sign(const GoldenRational& g);

/// Exact phi^n for any integer n:
///   n >= 0:  (F_{n-1}, F_n)
///   n <  0:  ((-1)^n F_{|n|+1}, (-1)^{n+1} F_{|n|})
GoldenInt golden_pow(long n);

/// Exact (F_n, F_{n-1}) for n >= 0 (F_{-1} = 1), by fast doubling.
std::pair<mpz_class, mpz_class> fib_pair(std::uint64_t n);

/// (F_n mod m, F_{n-1} mod m) in O(log n) modular multiplications.
/// Throws std::invalid_argument for m == 0.
std::pair<std::uint64_t, std::uint64_t> fib_pair_mod(std::uint64_t n, std::uint64_t m);

/// As fib_pair_mod, additionally adding the number of modular
/// multiplications performed to `*mul_count`.
std::pair<std::uint64_t, std::uint64_t> fib_pair_mod(std::uint64_t n, std::uint64_t m,
                                                     std::uint64_t* mul_count);

BigReal golden_to_real(const GoldenInt& g, const PrecisionContext& ctx);
BigReal golden_to_real(const GoldenRational& g, const PrecisionContext& ctx);

}  // namespace aurum
