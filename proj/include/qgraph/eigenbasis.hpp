#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qgraph/discrete_spectrum.hpp"
#include "qgraph/edge_wave.hpp"
#include "qgraph/flow_space.hpp"
#include "qgraph/graph.hpp"

namespace qgraph {

/// arccos(1 - mu) lies in (0, pi); its reflection 2 pi - arccos(1 - mu) in (pi, 2 pi).
enum class Branch { Low, High };

double branch_frequency(double mu, Branch branch);

/// Extends an eigenvector of T^-1 A (eigenvalue 1 - mu) along every edge by
/// y(x) = y(0) cos(w x) + (y(1) - y(0) cos w) sin(w x) / sin w.
EdgeWaveFunction lift(const Graph& graph, std::span<const Complex> vertex_values, double mu,
                      Branch branch, double residual_tolerance = 1e-9);

/// Same edge coefficients at frequency omega + 2 pi m.
EdgeWaveFunction shift(const EdgeWaveFunction& psi, std::size_t m);

/// One eigenfunction per fundamental cycle at omega = 2 pi n: +-sin(2 pi n x) on
/// the cycle's edges (sign from the traversal direction), zero elsewhere.
std::vector<EdgeWaveFunction> cycle_eigenspace(const Graph& graph, std::size_t n);

/// f(e) sin((2n - 1) pi x) for each integral flow f.
std::vector<EdgeWaveFunction> odd_eigenspace(const Graph& graph, std::size_t n);

/// cos(n pi x) on every edge for even n; for odd n the bipartite version with
/// vertex value +1 on class 0 and -1 on class 1, or nothing.
std::optional<EdgeWaveFunction> cosine_eigenfunction(const Graph& graph, std::size_t n);

/// How a primitive basis function was constructed.
enum class WaveKind { Lifted, Flow, Cycle, Cosine };

struct PrimitiveBlock {
  double omega = 0.0;
  /// Orthonormal under <.,.>_inf.
  std::vector<EdgeWaveFunction> functions;
  /// Construction source of each function (prior to orthonormalization).
  std::vector<WaveKind> kinds;

  std::size_t dimension() const noexcept { return functions.size(); }
};

/// Eigenbasis of the continuous Laplacian for 0 <= omega <= 2 pi.
struct PrimitiveSpectrum {
  EdgeWaveFunction zero_mode;
  std::vector<PrimitiveBlock> blocks;  // ascending omega, last one at 2 pi
  DiscreteSpectrum discrete;

  std::size_t dimension() const noexcept;
};

struct EigenbasisOptions {
  SpectrumOptions spectrum;
  /// Eigenvalues of Delta_1 within this distance of 0 or 2 are treated as exactly 0 or 2.
  double endpoint_tolerance = 1e-8;
  /// Gram-Schmidt drops (and reports) vectors whose residual norm falls below this.
  double rank_tolerance = 1e-10;
};

PrimitiveSpectrum primitive_spectrum(const Graph& graph, const EigenbasisOptions& options = {});

/// Modified Gram-Schmidt with one reorthogonalization pass under <.,.>_inf.
/// Throws NumericalError if the inputs are dependent.
std::vector<EdgeWaveFunction> orthonormalize(std::vector<EdgeWaveFunction> functions,
                                             double rank_tolerance = 1e-10);

/// max_v |cos(w) y(v) - mean of y over the neighbours of v|.
double vertex_relation_residual(const EdgeWaveFunction& f, const Graph& graph);

}  // namespace qgraph
