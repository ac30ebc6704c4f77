// Runs every acceptance criterion and prints one line per criterion.
// Usage: acceptance [workers] [criterion ids...]

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "polycensus/acceptance.hpp"

int main(int argc, char** argv) {
  polycensus::AcceptanceOptions options;
  if (argc > 1) options.workers = std::stoi(argv[1]);
  std::vector<int> ids;
  for (int i = 2; i < argc; ++i) ids.push_back(std::stoi(argv[i]));
  if (ids.empty()) {
    for (int id = 1; id <= polycensus::acceptance_count(); ++id) ids.push_back(id);
  }
  int failed = 0;
  polycensus::run_acceptance(ids, options, [&](const polycensus::CriterionResult& r) {
    std::cout << polycensus::format_result(r) << std::endl;
    failed += r.passed ? 0 : 1;
  });
  std::cout << (ids.size() - static_cast<std::size_t>(failed)) << "/" << ids.size() << " criteria passed" << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
