#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpectrumOptions {
  /// Eigenvalues closer than cluster_tolerance * max(1, |mu|) form one eigenspace.
  double cluster_tolerance = 1e-8;
  /// Largest accepted residual ||(I - T^-1 A) v - mu v||_inf per eigenpair.
  double residual_tolerance = 1e-10;
};

/// Spectrum of Delta_1 = I - T^-1 A, grouped into eigenspaces.
struct DiscreteSpectrum {
  struct Eigenspace {
    double mu = 0.0;
    /// Orthonormal under the degree-weighted vertex inner product <.,.>_1.
    std::vector<std::vector<Complex>> vectors;

    std::size_t multiplicity() const noexcept { return vectors.size(); }
  };
  std::vector<Eigenspace> eigenspaces;  // ascending mu

  std::size_t dimension() const noexcept;
};

/// Dense eigendecomposition through the symmetric form I - T^-1/2 A T^-1/2.
///
/// Eigenvectors are canonical: inside each eigenspace the basis is obtained by
/// Gram-Schmidt on the projections of the coordinate vectors e_0, e_1, ... and
/// each vector is scaled so its first non-negligible entry is positive real.
DiscreteSpectrum eigensolve_delta1(const Graph& graph, const SpectrumOptions& options = {});

/// Eigenvalue N^2 (1 - cos(sqrt(lambda) / N)) of Delta_N matching lambda of the continuous Laplacian.
double delta_n_eigenvalue(double lambda, std::size_t level);

/// (Delta_N f)(v) = N^2 (f(v) - mean of f over the G_N neighbours of v).
std::vector<Complex> apply_delta_n(std::span<const Complex> f, const Refinement& refinement);

/// max_v |((I - T^-1 A) y)(v) - mu y(v)| on the original graph.
double delta1_residual(const Graph& graph, std::span<const Complex> y, double mu);

}  // namespace qgraph
