#pragma once

#include <span>
#include <vector>

#include "qgraph/edge_wave.hpp"
#include "qgraph/graph.hpp"

namespace qgraph {

/// Values on the vertices of G_N in canonical order (see Refinement).
struct VertexSignal {
  std::size_t level = 1;
  std::vector<Complex> values;
};

/// Throws ShapeError unless the signal fits the graph at its level.
void check_signal(const VertexSignal& signal, const Graph& graph);

/// R_N psi: psi evaluated at the original vertices and at x_n = n / N on every edge.
VertexSignal restrict_to_samples(const EdgeWaveFunction& psi, const Graph& graph, std::size_t level);

/// The N + 1 samples psi_e(x_0..x_N) on one edge.
std::vector<Complex> edge_samples(const EdgeWaveFunction& psi, std::size_t e, std::size_t level);

/// T_N(f) = (1 / 2N) [f(x_0) + f(x_N) + 2 sum_{0<n<N} f(x_n)] from N + 1 samples.
Complex trapezoid(std::span<const Complex> samples);

/// T_N applied to exp(i theta x), in closed form.
Complex trapezoid_exp(double theta, std::size_t level);

/// z cot z, the frequency response of T_N. Requires |z| < pi.
double m0(double z);
/// 1 - z cot z - z^2 / 3 = O(z^4). Requires |z| < pi.
double m1(double z);

struct InnerProductComparison {
  Complex discrete;    // <R_N f, R_N g>_N
  Complex continuous;  // <f, g>_inf
  Complex error() const noexcept { return discrete - continuous; }
};

/// Compares the sampled and continuous inner products of two eigenfunctions
/// from the same eigenspace with 0 < lambda <= N^2 pi^2.
InnerProductComparison inner_product_error(const EdgeWaveFunction& f, const EdgeWaveFunction& g,
                                           const Graph& graph, std::size_t level);

}  // namespace qgraph
