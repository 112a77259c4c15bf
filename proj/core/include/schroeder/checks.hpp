#ifndef SCHROEDER_CHECKS_HPP_
#define SCHROEDER_CHECKS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace schroeder {

struct CheckOptions {
  /// 0 keeps each check's pinned chain-size range; a positive value
  /// lowers the ceilings for quicker runs (never raises them).
  int max_n = 0;
  unsigned threads = 0;  // 0 = hardware concurrency
  std::uint64_t seed = 12345;
};

struct CheckResult {
  std::string id;    // "C01".."C13"
  std::string name;
  bool pass = false;
  std::string detail;  // summary, or the smallest failing witness
  double millis = 0.0;
};

/// All check ids in execution order.
const std::vector<std::string>& check_ids();

/// Suites: all, counts, green, starred, factorize, rank.
const std::vector<std::string>& suite_names();

CheckResult run_check(std::string_view id, const CheckOptions& options = {});

std::vector<CheckResult> run_suite(std::string_view suite,
                                   const CheckOptions& options = {});

}  // namespace schroeder

#endif  // SCHROEDER_CHECKS_HPP_
