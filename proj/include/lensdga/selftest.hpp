#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lensdga/lens_arith.hpp"

namespace lensdga {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Random valid specs (q != 1, h normalized) with p in [3, p_max].
/// With `k1_primitive` only specs with k = 1 and gcd(h,p) = 1 are drawn.
std::vector<GridOneSpec> sample_specs(std::mt19937_64& rng, std::size_t count, int p_max, bool k1_primitive);

/// Every property the library guarantees, one result per property.
std::vector<CheckResult> run_invariant_suite(std::uint64_t seed = 20240611);

}  // namespace lensdga
