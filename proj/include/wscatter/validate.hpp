#pragma once

#include <string>
#include <vector>

#include "wscatter/scattering.hpp"

namespace wscatter {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;  // failing points or worst-case numbers
};

// Built-in validation suites: oracle equivalence (sech^2, step, square
// barrier), symplecticity, unitarity, parity quartet and RK4 order.  The
// integration/plateau configs come from the caller so the CLI can override
// h, tolerance, window and range.
std::vector<SuiteResult> run_validation(const IntegrationConfig& cfg,
                                        const PlateauConfig& pcfg);

}  // namespace wscatter
