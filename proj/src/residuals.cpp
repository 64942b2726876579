#include "aurum/residuals.hpp"

#include <stdexcept>

namespace aurum {

BigReal max_residual(const ResidualTable& table) {
  BigReal worst;
  for (const auto& entry : table) {
    if (worst.precision() < entry.value.precision()) worst = worst.with_precision(entry.value.precision());
    if (entry.value > worst) worst = entry.value;
  }
  return worst;
}

const BigReal& residual(const ResidualTable& table, const std::string& name) {
  for (const auto& entry : table) {
    if (entry.name == name) return entry.value;
  }
  throw std::out_of_range("no residual named '" + name + "'");
}

}  // namespace aurum
