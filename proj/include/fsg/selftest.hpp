#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace fsg {

struct CriterionResult {
  std::string name;
  bool pass;
  std::string detail;
};

// The eight acceptance checks; deterministic for a fixed seed.
std::vector<CriterionResult> run_acceptance(std::uint32_t seed = 20260823);

}  // namespace fsg
