#pragma once

#include <vector>

#include "qgraph/edge_wave.hpp"
#include "qgraph/sampling.hpp"
#include "qgraph/transform.hpp"

// Slow reference implementations. Plain left-to-right sums throughout, no
// reuse of the fast paths they are meant to check.
namespace qgraph::oracle {

/// Every <f, Phi_j>_N as a literal degree-weighted sum over the vertices of G_N.
GraphDFT naive_forward(const VertexSignal& f, const SpectralBasis& basis);

/// Solves each block's Gram system (Gram assembled from sampled basis vectors)
/// and sums c_j Phi_j(x) point by point.
VertexSignal naive_inverse(const GraphDFT& dft, const SpectralBasis& basis);

/// <f, g>_inf by composite Simpson with `points_per_edge` (even, >= 100) subintervals.
Complex quadrature_inner_product(const EdgeWaveFunction& f, const EdgeWaveFunction& g,
                                 std::size_t points_per_edge);

/// O(N^2) DFT, X_m = sum_n v_n exp(-2 pi i m n / N), any length.
std::vector<Complex> direct_dft(const std::vector<Complex>& v);

}  // namespace qgraph::oracle
