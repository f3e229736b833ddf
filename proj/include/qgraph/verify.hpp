#pragma once

#include <string>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph::verify {

struct Check {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct Report {
  std::string graph;
  std::size_t level = 0;
  std::vector<Check> checks;

  bool passed() const noexcept;
};

/// Runs the invariant suites of every module on one graph at refinement level N
/// (a power of two). Random inputs come from a fixed seed.
Report run_suite(const Graph& graph, std::size_t level, unsigned seed = 20240611);

}  // namespace qgraph::verify
