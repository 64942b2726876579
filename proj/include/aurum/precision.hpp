#pragma once

#include <mpfr.h>

namespace aurum {

/// Working precision for every numeric operation in the library.
///
/// Results are guaranteed to `decimal_digits`; internally every operation
/// runs at `decimal_digits + guard_digits` so that accumulated round-off and
/// cancellation stay below the output precision.
struct PrecisionContext {
  int decimal_digits = 0;
  int guard_digits = 0;

  int working_digits() const { return decimal_digits + guard_digits; }

  /// Binary precision corresponding to working_digits(), with a few spare bits.
  mpfr_prec_t bits() const;

  /// A context carrying `extra` additional target digits, same guard.
  PrecisionContext widened(int extra) const;

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;
};

/// Guard policy: max(10, ceil(0.1 * decimal_digits)).
int default_guard_digits(int decimal_digits);

/// Throws std::invalid_argument for decimal_digits < 1.
PrecisionContext make_context(int decimal_digits);

/// Explicit guard override. Throws std::invalid_argument if guard_digits < 10.
PrecisionContext make_context(int decimal_digits, int guard_digits);

}  // namespace aurum
