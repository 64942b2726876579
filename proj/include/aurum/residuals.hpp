#pragma once

#include <string>
#include <vector>

#include "aurum/big_real.hpp"

namespace aurum {

struct NamedResidual {
  std::string name;
  BigReal value;
};

using ResidualTable = std::vector<NamedResidual>;

/// Largest residual in the table (zero for an empty table).
BigReal max_residual(const ResidualTable& table);

/// Residual with the given name; throws std::out_of_range if absent.
const BigReal& residual(const ResidualTable& table, const std::string& name);

}  // namespace aurum
