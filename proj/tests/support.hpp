#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "qgraph/generators.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/sampling.hpp"

namespace testing {

using qgraph::Complex;
using qgraph::Edge;
using qgraph::Graph;

inline std::vector<Graph> named_graphs() {
  return {qgraph::generators::cycle(3), qgraph::generators::cycle(4), qgraph::generators::bowtie(),
          qgraph::generators::complete_bipartite(4, 2)};
}

// Hamiltonian cycle through a random permutation plus random chords, so the
// result is connected with every degree >= 2. With `bipartite`, the cycle has
// even length and chords only join positions of opposite parity.
inline Graph random_graph(std::mt19937& rng, std::size_t max_vertices = 9, bool bipartite = false) {
  std::uniform_int_distribution<std::size_t> size(3, max_vertices);
  std::size_t nv = size(rng);
  if (bipartite && nv % 2) ++nv;
  std::vector<std::size_t> order(nv);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<Edge> edges;
  auto add = [&](std::size_t pu, std::size_t pv) {
    std::size_t u = order[pu], v = order[pv];
    if (u == v) return;
    if (u > v) std::swap(u, v);
    const Edge e{u, v};
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  };
  for (std::size_t i = 0; i < nv; ++i) add(i, (i + 1) % nv);
  std::uniform_int_distribution<std::size_t> pick(0, nv - 1);
  const std::size_t chords = std::uniform_int_distribution<std::size_t>(0, nv)(rng);
  for (std::size_t c = 0; c < chords; ++c) {
    const std::size_t a = pick(rng), b = pick(rng);
    if (bipartite && (a + b) % 2 == 0) continue;
    add(a, b);
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.tail, x.head) < std::tie(y.tail, y.head); });
  return Graph::create("random", nv, std::move(edges));
}

inline qgraph::VertexSignal random_signal(const Graph& graph, std::size_t level, std::mt19937& rng) {
  std::normal_distribution<double> normal;
  qgraph::VertexSignal f{level, std::vector<Complex>(qgraph::Refinement(graph, level).size())};
  for (auto& x : f.values) x = {normal(rng), normal(rng)};
  return f;
}

inline double norm2(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

inline double max_abs_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double out = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) out = std::max(out, std::abs(a[i] - b[i]));
  return out;
}

}  // namespace testing
