#include "qgraph/generators.hpp"

#include <stdexcept>
#include <string>

namespace qgraph::generators {

Graph complete_bipartite(std::size_t m, std::size_t n) {
  if (m < 3 || n < 2)
    throw std::invalid_argument("K(m,n) needs m >= 3 and n >= 2, got K(" + std::to_string(m) +
                                "," + std::to_string(n) + ")");
  std::vector<Edge> edges;
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t r = 0; r < n; ++r) edges.push_back({b, m + r});
  return Graph::create("K(" + std::to_string(m) + "," + std::to_string(n) + ")", m + n,
                       std::move(edges));
}

Graph cycle(std::size_t vertices) {
  if (vertices < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < vertices; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, vertices - 1});
  return Graph::create("C" + std::to_string(vertices), vertices, std::move(edges));
}

Graph bowtie() {
  return Graph::create("bowtie", 6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

}  // namespace qgraph::generators
