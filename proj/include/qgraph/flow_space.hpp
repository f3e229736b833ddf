#pragma once

#include <cstdint>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

/// Integral basis of Z_1 = { f : E -> C | sum of f over the edges at v is 0 for every v }.
struct FlowBasis {
  std::vector<std::vector<std::int64_t>> vectors;  // one row per basis element, indexed by edge

  std::size_t dimension() const noexcept { return vectors.size(); }
};

/// Null space of the unsigned vertex-edge incidence matrix, computed by exact
/// rational elimination (pivots in ascending column order), then cleared of
/// denominators and divided by the gcd of each row.
FlowBasis flow_space(const Graph& graph);

/// Exact rank of an integer matrix (rows of equal length).
std::size_t exact_rank(const std::vector<std::vector<std::int64_t>>& rows);

}  // namespace qgraph
