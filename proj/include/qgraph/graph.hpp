#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgraph {

using Complex = std::complex<double>;

/// An edge in canonical orientation: tail < head, local coordinate x = 0 at the tail.
struct Edge {
  std::size_t tail = 0;
  std::size_t head = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Which standing assumption a graph violates.
enum class ViolationKind {
  EmptyGraph,
  IndexOutOfRange,
  Orientation,  // tail >= head, including loops
  DuplicateEdge,
  NotConnected,
  LowDegree,
};

std::string to_string(ViolationKind kind);

struct GraphViolation {
  ViolationKind kind;
  std::string message;
  std::vector<std::size_t> witness_vertices;
  std::vector<std::size_t> witness_edges;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(GraphViolation violation);
  const GraphViolation& violation() const noexcept { return violation_; }

 private:
  GraphViolation violation_;
};

/// Raised when vectors, signals or transform blocks do not fit the graph or level.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Reports the first violated invariant (connected, simple, min degree 2), or nothing.
std::optional<GraphViolation> validate(std::size_t vertex_count, std::span<const Edge> edges);

/// A finite simple connected graph with unit edge lengths and every degree >= 2.
///
/// Instances can only be obtained through `create`, so every Graph in the
/// program satisfies the invariants checked by `validate`.
class Graph {
 public:
  static Graph create(std::string name, std::size_t vertex_count, std::vector<Edge> edges);

  const std::string& name() const noexcept { return name_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  std::size_t degree(std::size_t v) const { return incident_.at(v).size(); }
  /// Incident edge indices of v in ascending order.
  const std::vector<std::size_t>& incident_edges(std::size_t v) const { return incident_.at(v); }
  /// Neighbours of v in ascending order.
  std::vector<std::size_t> neighbors(std::size_t v) const;
  std::size_t other_end(std::size_t e, std::size_t v) const;

  /// Number of independent cycles, N_E - N_V + 1.
  std::size_t cycle_rank() const noexcept { return edges_.size() + 1 - vertex_count_; }

 private:
  Graph(std::string name, std::size_t vertex_count, std::vector<Edge> edges);

  std::string name_;
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Fundamental cycles of the breadth-first spanning tree rooted at vertex 0.
struct CycleBasis {
  struct Cycle {
    std::size_t chord;                  // distinguishing non-tree edge
    std::vector<std::size_t> vertices;  // closed walk, first == last
    std::vector<std::size_t> edges;     // edges in traversal order
    std::vector<int> signed_incidence;  // per graph edge, in {-1, 0, +1}
  };
  std::vector<Cycle> cycles;
};

CycleBasis spanning_tree_cycles(const Graph& graph);

/// Two-colouring with class(0) = 0, if one exists.
struct Bipartition {
  std::optional<std::vector<int>> classes;
  /// Closed walk of odd length when the graph is not bipartite.
  std::vector<std::size_t> odd_cycle;

  bool bipartite() const noexcept { return classes.has_value(); }
};

Bipartition bipartition(const Graph& graph);

/// Vertex numbering of the N-fold refinement G_N.
///
/// Original vertices come first, then for each edge in list order the interior
/// samples x_1..x_{N-1} from tail to head.
class Refinement {
 public:
  Refinement(const Graph& graph, std::size_t level);

  const Graph& graph() const noexcept { return *graph_; }
  std::size_t level() const noexcept { return level_; }
  std::size_t size() const noexcept;

  /// Index of sample n (0..N) on edge e; n = 0 and n = N map to the endpoints.
  std::size_t index(std::size_t e, std::size_t n) const;
  /// Degree in G_N: original vertices keep their degree, samples have degree 2.
  std::size_t degree(std::size_t i) const;
  /// Sum of G_N degrees, 2 N N_E.
  double total_weight() const noexcept;
  std::vector<std::size_t> neighbors(std::size_t i) const;

 private:
  const Graph* graph_;
  std::size_t level_;
};

/// <f, g>_N = (1/W) sum_v deg(v) f(v) conj(g(v)) on G_N.
Complex vertex_inner_product(std::span<const Complex> f, std::span<const Complex> g,
                             const Refinement& refinement);

}  // namespace qgraph
