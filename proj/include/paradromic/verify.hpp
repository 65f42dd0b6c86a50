#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "paradromic/colorings.hpp"
#include "paradromic/int_matrix.hpp"

namespace paradromic {

struct VerifyOptions {
  std::size_t max_m = 8;
  std::size_t max_n = 7;
  std::vector<std::uint64_t> primes{2, 3, 5, 7};
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
  /// Source of the odd transfer matrices; replaced in tests by a corrupted one.
  std::function<IntMatrix(std::size_t)> transfer_s;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  /// First failing case, empty on success.
  std::string detail;
};

/// Runs every cross-check over the (m <= max_m, 1 <= n <= max_n) grid.
/// Throws std::invalid_argument if a listed prime is not prime.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace paradromic
