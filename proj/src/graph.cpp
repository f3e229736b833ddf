#include "qgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace qgraph {

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::EmptyGraph: return "empty graph";
    case ViolationKind::IndexOutOfRange: return "vertex index out of range";
    case ViolationKind::Orientation: return "edge not in canonical orientation (tail < head)";
    case ViolationKind::DuplicateEdge: return "duplicate edge";
    case ViolationKind::NotConnected: return "not connected";
    case ViolationKind::LowDegree: return "degree < 2";
  }
  return "unknown";
}

ValidationError::ValidationError(GraphViolation violation)
    : std::runtime_error(violation.message), violation_(std::move(violation)) {}

namespace {

GraphViolation make_violation(ViolationKind kind, std::string detail,
                              std::vector<std::size_t> vertices = {},
                              std::vector<std::size_t> edges = {}) {
  std::string message = to_string(kind);
  if (!detail.empty()) message += ": " + detail;
  return {kind, std::move(message), std::move(vertices), std::move(edges)};
}

std::string join(const std::vector<std::size_t>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i];
  return out.str();
}

}  // namespace

std::optional<GraphViolation> validate(std::size_t vertex_count, std::span<const Edge> edges) {
  if (vertex_count == 0 || edges.empty())
    return make_violation(ViolationKind::EmptyGraph, "need at least one vertex and one edge");

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [t, h] = edges[e];
    if (t >= vertex_count || h >= vertex_count)
      return make_violation(ViolationKind::IndexOutOfRange,
                            "edge " + std::to_string(e) + " = (" + std::to_string(t) + ", " +
                                std::to_string(h) + ")",
                            {}, {e});
    if (t >= h)
      return make_violation(ViolationKind::Orientation,
                            "edge " + std::to_string(e) + " = (" + std::to_string(t) + ", " +
                                std::to_string(h) + ")",
                            {t, h}, {e});
    if (!seen.emplace(t, h).second)
      return make_violation(ViolationKind::DuplicateEdge,
                            "(" + std::to_string(t) + ", " + std::to_string(h) + ")", {t, h},
                            {e});
  }

  std::vector<std::vector<std::size_t>> adjacency(vertex_count);
  for (const auto& [t, h] : edges) {
    adjacency[t].push_back(h);
    adjacency[h].push_back(t);
  }

  std::vector<bool> reached(vertex_count, false);
  std::deque<std::size_t> queue{0};
  reached[0] = true;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto u : adjacency[v])
      if (!reached[u]) {
        reached[u] = true;
        queue.push_back(u);
      }
  }
  std::vector<std::size_t> unreached;
  for (std::size_t v = 0; v < vertex_count; ++v)
    if (!reached[v]) unreached.push_back(v);
  if (!unreached.empty())
    return make_violation(ViolationKind::NotConnected,
                          "vertices unreachable from 0: " + join(unreached), unreached);

  std::vector<std::size_t> low;
  for (std::size_t v = 0; v < vertex_count; ++v)
    if (adjacency[v].size() < 2) low.push_back(v);
  if (!low.empty())
    return make_violation(ViolationKind::LowDegree, "at vertices " + join(low), low);

  return std::nullopt;
}

Graph::Graph(std::string name, std::size_t vertex_count, std::vector<Edge> edges)
    : name_(std::move(name)),
      vertex_count_(vertex_count),
      edges_(std::move(edges)),
      incident_(vertex_count) {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    incident_[edges_[e].tail].push_back(e);
    incident_[edges_[e].head].push_back(e);
  }
}

Graph Graph::create(std::string name, std::size_t vertex_count, std::vector<Edge> edges) {
  if (auto violation = validate(vertex_count, edges)) throw ValidationError(std::move(*violation));
  return Graph(std::move(name), vertex_count, std::move(edges));
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (auto e : incident_.at(v)) out.push_back(other_end(e, v));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Graph::other_end(std::size_t e, std::size_t v) const {
  const auto& edge = edges_.at(e);
  if (edge.tail == v) return edge.head;
  if (edge.head == v) return edge.tail;
  throw std::invalid_argument("vertex " + std::to_string(v) + " is not on edge " +
                              std::to_string(e));
}

namespace {

struct BfsTree {
  std::vector<std::size_t> parent;       // parent vertex; root points to itself
  std::vector<std::size_t> parent_edge;  // edge to parent
  std::vector<std::size_t> depth;
  std::vector<bool> tree_edge;
};

// Breadth-first from vertex 0; neighbours visited in ascending vertex index.
BfsTree bfs_tree(const Graph& graph) {
  const auto nv = graph.vertex_count();
  BfsTree tree{std::vector<std::size_t>(nv, nv), std::vector<std::size_t>(nv, 0),
               std::vector<std::size_t>(nv, 0), std::vector<bool>(graph.edge_count(), false)};
  tree.parent[0] = 0;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    std::vector<std::pair<std::size_t, std::size_t>> next;  // (neighbour, edge)
    for (auto e : graph.incident_edges(v)) next.emplace_back(graph.other_end(e, v), e);
    std::sort(next.begin(), next.end());
    for (auto [u, e] : next) {
      if (tree.parent[u] != nv) continue;
      tree.parent[u] = v;
      tree.parent_edge[u] = e;
      tree.depth[u] = tree.depth[v] + 1;
      tree.tree_edge[e] = true;
      queue.push_back(u);
    }
  }
  return tree;
}

// Tree path from `from` up to the common ancestor and down to `to`, as vertices.
std::vector<std::size_t> tree_path(const BfsTree& tree, std::size_t from, std::size_t to) {
  std::vector<std::size_t> up{from}, down{to};
  auto a = from, b = to;
  while (a != b) {
    if (tree.depth[a] >= tree.depth[b]) {
      a = tree.parent[a];
      up.push_back(a);
    } else {
      b = tree.parent[b];
      down.push_back(b);
    }
  }
  down.pop_back();  // common ancestor already in `up`
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

std::size_t edge_between(const Graph& graph, std::size_t u, std::size_t v) {
  for (auto e : graph.incident_edges(u))
    if (graph.other_end(e, u) == v) return e;
  throw std::logic_error("no edge between consecutive walk vertices");
}

}  // namespace

CycleBasis spanning_tree_cycles(const Graph& graph) {
  const auto tree = bfs_tree(graph);
  CycleBasis basis;
  for (std::size_t chord = 0; chord < graph.edge_count(); ++chord) {
    if (tree.tree_edge[chord]) continue;
    const auto [t, h] = graph.edge(chord);
    CycleBasis::Cycle cycle;
    cycle.chord = chord;
    // t -> h along the chord, then back to t through the tree.
    cycle.vertices.push_back(t);
    auto back = tree_path(tree, h, t);
    cycle.vertices.insert(cycle.vertices.end(), back.begin(), back.end());
    cycle.signed_incidence.assign(graph.edge_count(), 0);
    for (std::size_t i = 0; i + 1 < cycle.vertices.size(); ++i) {
      const auto u = cycle.vertices[i], w = cycle.vertices[i + 1];
      const auto e = edge_between(graph, u, w);
      cycle.edges.push_back(e);
      cycle.signed_incidence[e] += graph.edge(e).tail == u ? 1 : -1;
    }
    basis.cycles.push_back(std::move(cycle));
  }
  return basis;
}

Bipartition bipartition(const Graph& graph) {
  const auto tree = bfs_tree(graph);
  std::vector<int> classes(graph.vertex_count());
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) classes[v] = static_cast<int>(tree.depth[v] % 2);
  for (const auto& [t, h] : graph.edges()) {
    if (classes[t] != classes[h]) continue;
    // Same BFS parity on both ends: the tree path plus this edge is an odd closed walk.
    Bipartition result;
    result.odd_cycle = tree_path(tree, t, h);
    result.odd_cycle.push_back(t);
    return result;
  }
  return Bipartition{std::move(classes), {}};
}

Refinement::Refinement(const Graph& graph, std::size_t level) : graph_(&graph), level_(level) {
  if (level == 0) throw std::invalid_argument("refinement level must be >= 1");
}

std::size_t Refinement::size() const noexcept {
  return graph_->vertex_count() + (level_ - 1) * graph_->edge_count();
}

std::size_t Refinement::index(std::size_t e, std::size_t n) const {
  const auto& edge = graph_->edge(e);
  if (n == 0) return edge.tail;
  if (n == level_) return edge.head;
  if (n > level_) throw std::out_of_range("sample index beyond edge end");
  return graph_->vertex_count() + e * (level_ - 1) + (n - 1);
}

std::size_t Refinement::degree(std::size_t i) const {
  return i < graph_->vertex_count() ? graph_->degree(i) : 2;
}

double Refinement::total_weight() const noexcept {
  return 2.0 * static_cast<double>(level_) * static_cast<double>(graph_->edge_count());
}

std::vector<std::size_t> Refinement::neighbors(std::size_t i) const {
  std::vector<std::size_t> out;
  const auto nv = graph_->vertex_count();
  if (i < nv) {
    for (auto e : graph_->incident_edges(i))
      out.push_back(graph_->edge(e).tail == i ? index(e, 1) : index(e, level_ - 1));
  } else {
    const auto e = (i - nv) / (level_ - 1);
    const auto n = (i - nv) % (level_ - 1) + 1;
    out = {index(e, n - 1), index(e, n + 1)};
  }
  return out;
}

Complex vertex_inner_product(std::span<const Complex> f, std::span<const Complex> g,
                             const Refinement& refinement) {
  const auto size = refinement.size();
  if (f.size() != size || g.size() != size)
    throw ShapeError("signal length " + std::to_string(f.size()) + "/" + std::to_string(g.size()) +
                     " does not match refinement size " + std::to_string(size));
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < size; ++i)
    sum += static_cast<double>(refinement.degree(i)) * f[i] * std::conj(g[i]);
  return sum / refinement.total_weight();
}

}  // namespace qgraph
