#pragma once

#include "qgraph/graph.hpp"

namespace qgraph::generators {

/// Complete bipartite K(m, n). The m "blue" vertices are 0..m-1 and the n "red"
/// vertices follow, so every edge has its blue end at x = 0.
Graph complete_bipartite(std::size_t m, std::size_t n);

/// Cycle on `vertices` vertices, edges (i, i+1) followed by the closing edge (0, V-1).
Graph cycle(std::size_t vertices);

/// Two triangles {0,1,2} and {3,4,5} joined by the bridge (2,3).
Graph bowtie();

}  // namespace qgraph::generators
