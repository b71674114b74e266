// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Time limits live with each check in the verify module; the whole
// run must also finish within five minutes.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>

#include "spgame/verify.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  constexpr double kTotalLimitSeconds = 300.0;

  const auto start = clock::now();
  const auto results = spg::run_regression_checks({});
  const double total = std::chrono::duration<double>(clock::now() - start).count();

  int failed = 0;
  for (const auto& r : results) {
    const bool criterion = r.id.find_first_not_of("0123456789") == std::string::npos;
    std::cout << (criterion ? (r.passed() ? "PASS" : "FAIL") : (r.passed() ? "  ok" : "  no")) << "  "
              << (criterion ? "criterion " : "supplement ") << std::left << std::setw(3) << r.id << ' '
              << r.name << " | expected: " << r.expected << " | got: " << r.got << std::fixed
              << std::setprecision(4) << " | " << r.seconds << "s";
    if (r.limit_seconds > 0) std::cout << " (limit " << r.limit_seconds << "s)";
    std::cout << '\n';
    if (criterion && !r.passed()) ++failed;
  }
  const bool fast = total < kTotalLimitSeconds;
  std::cout << (fast ? "PASS" : "FAIL") << "  total runtime " << std::fixed << std::setprecision(3) << total
            << "s (limit " << kTotalLimitSeconds << "s)\n";
  if (!fast) ++failed;
  std::cout << failed << " criteria failed\n";
  return failed == 0 ? 0 : 1;
}
