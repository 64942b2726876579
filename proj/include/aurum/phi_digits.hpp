#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "aurum/big_real.hpp"
#include "aurum/golden.hpp"
#include "aurum/precision.hpp"

namespace aurum {

/// Fractional base-phi digits of a real number, positions start_position,
/// start_position + 1, ... (1-based: position i has weight phi^-i).
/// Digit semantics are the greedy (Renyi) expansion: t_0 = x,
/// digit_i = floor(phi t_{i-1}), t_i = phi t_{i-1} - digit_i.
struct PhiExpansion {
  long start_position = 1;
  std::vector<int> digits;

  std::string to_string() const;
  bool has_adjacent_ones() const;
};

/// A digit boundary was too close to decide at the available precision.
class AmbiguousDigit : public std::runtime_error {
 public:
  AmbiguousDigit(long position, const std::string& what)
      : std::runtime_error(what), position_(position) {}
  long position() const { return position_; }

 private:
  long position_;
};

/// Greedy expansion of 0 <= x < 1. Throws std::invalid_argument for x out of
/// range or n_digits < 1, and AmbiguousDigit when phi t is within
/// max(10^-(guard/2), accumulated rounding) of 1.
PhiExpansion greedy_expand(const BigReal& x, int n_digits, const PrecisionContext& ctx);

/// Exact greedy expansion of an element of Q(phi) in [0, 1).
PhiExpansion greedy_expand(const GoldenRational& x, int n_digits);

/// sum_i digits[i] phi^-(start_position + i)
BigReal reconstruct(const PhiExpansion& expansion, const PrecisionContext& ctx);

/// Greedy digits 1..n_digits of pi^2/50 with pi from const_pi at roughly twice
/// the precision the expansion needs. Reference oracle for spot extraction.
PhiExpansion greedy_oracle_pi2(int n_digits);

struct SpotStats {
  long head_terms = 0;
  long tail_terms = 0;
  std::uint64_t modular_multiplications = 0;
  int escalations = 0;
  int working_digits = 0;
};

struct SpotResult {
  PhiExpansion expansion;
  BigReal start_value;  // T^(d-1)(pi^2/50), the greedy remainder before digit d
  SpotStats stats;
};

/// Digits d .. d+count-1 of pi^2/50 = sum_j phi^(-5j) sum_r c_r / (5j+r)^2
/// without earlier digits.
///
/// phi^(d-1) S splits into head terms with phi^m, m >= 0, reduced through
/// fib_pair_mod modulo (5j+r)^2, and a tail summed directly. Together with the
/// Galois conjugate of the discarded Z[phi] part this gives a point of R^2,
/// which is reduced modulo the lattice {(a + b phi, a + b phibar)} into the
/// natural-extension domain
///   [0, 1/phi) x [-phi, 1]  U  [1/phi, 1) x [-1/phi, 1]
/// of the greedy map. Its first coordinate is T^(d-1)(S).
///
/// Throws std::invalid_argument unless d >= 1 and 1 <= count <= 64, and
/// AmbiguousDigit near a digit or domain boundary.
SpotResult spot_fractional_report(long d, int count, const PrecisionContext& ctx);
PhiExpansion spot_fractional(long d, int count, const PrecisionContext& ctx);

/// spot_fractional_report, doubling the guard digits after each
/// AmbiguousDigit, at most max_retries times.
SpotResult spot_with_escalation(long d, int count, const PrecisionContext& ctx,
                                int max_retries = 4);

}  // namespace aurum
