// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Usage: acceptance [--profile quick|full]   (default: full)

#include <cstring>
#include <iomanip>
#include <iostream>

#include "qbern/verify.hpp"

int main(int argc, char** argv) {
  qbern::Profile profile = qbern::Profile::Full;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--profile") == 0 && i + 1 < argc) {
      try {
        profile = qbern::parse_profile(argv[++i]);
      } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
      }
    } else {
      std::cerr << "usage: acceptance [--profile quick|full]\n";
      return 2;
    }
  }
  int failures = 0;
  double total = 0;
  qbern::run_acceptance(profile, [&](const qbern::CriterionResult& r) {
    failures += !r.passed;
    total += r.seconds;
    std::cout << qbern::format_result(r) << "  [" << std::fixed << std::setprecision(2) << r.seconds
              << " s]" << std::endl;
  });
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << " in " << std::fixed << std::setprecision(2) << total << " s\n";
  return failures == 0 ? 0 : 1;
}
