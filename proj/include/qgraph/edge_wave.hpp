#pragma once

#include <utility>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

/// Per-edge coefficients of a wave. For omega > 0 the edge function is
/// a exp(i omega x) + b exp(-i omega x); for omega == 0 it is the linear form a + b x.
struct EdgeCoefficients {
  Complex a{0.0, 0.0};
  Complex b{0.0, 0.0};
};

/// A function on the continuous graph that solves -f'' = omega^2 f on every edge.
///
/// Coordinates follow the canonical orientation: x = 0 at the tail and
/// x = edge_length at the head.
struct EdgeWaveFunction {
  double omega = 0.0;
  double edge_length = 1.0;
  std::vector<EdgeCoefficients> coefficients;

  double eigenvalue() const noexcept { return omega * omega; }
  Complex value(std::size_t e, double x) const;
  Complex derivative(std::size_t e, double x) const;
  /// Value at vertex v read from its lowest-index incident edge.
  Complex vertex_value(const Graph& graph, std::size_t v) const;
  std::vector<Complex> vertex_values(const Graph& graph) const;
};

EdgeWaveFunction constant_function(const Graph& graph, Complex value = 1.0);

/// Real combinations stored in exponential form.
EdgeCoefficients cosine_coefficients(double amplitude);
EdgeCoefficients sine_coefficients(double amplitude);

struct VertexConditionResidual {
  double continuity = 0.0;  // max spread of edge values at a vertex
  double kirchhoff = 0.0;   // max |sum of outward derivatives|
};

VertexConditionResidual vertex_condition_residual(const EdgeWaveFunction& f, const Graph& graph);

/// <f, g>_inf = (1/N_E) int f conj(g), evaluated in closed form edge by edge.
Complex continuous_inner_product(const EdgeWaveFunction& f, const EdgeWaveFunction& g);

/// int_0^1 x^p exp(i theta x) dx for p in {0, 1, 2}.
Complex exp_moment(double theta, int power);

/// The same eigenfunction on the graph whose edges have length L.
/// Returns the rescaled function and its eigenvalue lambda / L^2.
std::pair<EdgeWaveFunction, double> rescale(const EdgeWaveFunction& f, double length);

/// c f + d g; both must share omega and edge length.
EdgeWaveFunction linear_combination(Complex c, const EdgeWaveFunction& f, Complex d,
                                    const EdgeWaveFunction& g);

}  // namespace qgraph
