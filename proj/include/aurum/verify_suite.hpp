#pragma once

#include <string>
#include <vector>

#include "aurum/big_complex.hpp"
#include "aurum/precision.hpp"
#include "aurum/residuals.hpp"

namespace aurum {

struct SuiteRow {
  std::string target;
  ResidualTable residuals;
  bool pass = false;
};

/// Targets in reporting order (excluding "all").
const std::vector<std::string>& verify_targets();

/// Sample points for the Landen check: 0.5, phi^-2, 0.3+0.2i, 0.6-0.3i, 0.5+0.5i.
std::vector<BigComplex> landen_sample_points(const PrecisionContext& ctx);
/// Sample points for the inversion check: -0.5, -0.25, -0.9.
std::vector<BigComplex> inversion_sample_points(const PrecisionContext& ctx);

/// Runs one target. A row passes when every residual is below `threshold`;
/// "dissection" also needs exact coefficients, and "convergence" reports the
/// digit-gain shortfall (0 when every level meets the floor).
/// Throws std::invalid_argument for an unknown target.
SuiteRow run_verify_target(const std::string& target, const PrecisionContext& ctx,
                           const BigReal& threshold);

}  // namespace aurum
