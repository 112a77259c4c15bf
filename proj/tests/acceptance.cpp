// Acceptance suite: every criterion at its pinned size, one line each.
// Exit code 0 only when all criteria pass.

#include <cstdio>

#include "schroeder/checks.hpp"

int main() {
  const schroeder::CheckOptions options;  // pinned sizes
  std::size_t passed = 0;
  const auto& ids = schroeder::check_ids();
  for (const auto& id : ids) {
    const schroeder::CheckResult result = schroeder::run_check(id, options);
    passed += result.pass ? 1 : 0;
    std::printf("[%s] %s %s\n", result.pass ? "PASS" : "FAIL",
                result.id.c_str(), result.name.c_str());
    if (!result.detail.empty()) {
      std::printf("       %s\n", result.detail.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", passed, ids.size());
  return passed == ids.size() ? 0 : 1;
}
