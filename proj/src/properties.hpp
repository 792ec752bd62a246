#pragma once

// Randomized property suites over the library's invariants. Each suite
// compares a library route against an independent dense eigensolve.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace modspec {

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  double worst = 0.0;      // largest observed violation measure
  double tolerance = 0.0;
  std::string detail;
};

struct PropertyOptions {
  std::uint64_t seed = 20150509;
  std::size_t graphs = 40;
  std::size_t min_nodes = 10;
  std::size_t max_nodes = 80;
};

std::vector<PropertyResult> run_property_suites(const PropertyOptions& opts);

}  // namespace modspec
