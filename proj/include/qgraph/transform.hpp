#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "qgraph/eigenbasis.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/sampling.hpp"

namespace qgraph {

/// One eigenspace of Delta_N: the restrictions Phi_j(omega_{m,k}) = R_N Psi_j(omega_{0,k} + 2 pi m).
struct BasisBlock {
  std::size_t k = 0;  // primitive index
  std::size_t m = 0;  // shift
  double omega = 0.0;
  double mu = 0.0;  // Delta_N eigenvalue N^2 (1 - cos(omega / N))
  /// gram(i, j) = <Phi_i, Phi_j>_N.
  Eigen::MatrixXcd gram;
  /// Rows of B give the orthonormal eta_i = sum_j B(i, j) Phi_j, so B gram B^* = I.
  Eigen::MatrixXcd orthonormalizer;
  /// B^* B; expansion coefficients are c = (B^* B)^T X for raw inner products X.
  Eigen::MatrixXcd recovery;

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(gram.rows()); }
  double eigenvalue() const noexcept { return omega * omega; }
};

/// Raw transform values <f, Phi_j>_N, block by block.
struct GraphDFT {
  Complex zero{0.0, 0.0};
  std::vector<std::vector<Complex>> blocks;
  Complex nyquist{0.0, 0.0};
};

/// Coefficients c with f = c_0 + sum_blocks sum_j c_j Phi_j + c_nyq Phi_nyq.
struct Expansion {
  Complex zero{0.0, 0.0};
  std::vector<std::vector<Complex>> blocks;
  Complex nyquist{0.0, 0.0};
};

/// Block-structured eigenbasis of the vertex space of G_N with the per-block
/// Gram and change-of-basis matrices. Built once per (graph, N), immutable afterwards.
class SpectralBasis {
 public:
  /// N must be a power of two, at least 2.
  static SpectralBasis build(const Graph& graph, std::size_t level,
                             const EigenbasisOptions& options = {});

  const Graph& graph() const noexcept { return graph_; }
  std::size_t level() const noexcept { return level_; }
  /// N_V + (N - 1) N_E.
  std::size_t size() const noexcept;
  const PrimitiveSpectrum& primitives() const noexcept { return primitives_; }
  const std::vector<BasisBlock>& blocks() const noexcept { return blocks_; }
  /// Number of shifts kept for primitive k (N/2, or N/2 - 1 for the 2 pi primitive).
  std::size_t shift_count(std::size_t k) const;
  /// Position of block (m, k) in blocks().
  std::size_t block_index(std::size_t m, std::size_t k) const;

  /// Psi_j(omega_{m,k}) for blocks()[block].
  EdgeWaveFunction function(std::size_t block, std::size_t j) const;
  /// The normalized cos(N pi x) eigenfunction spanning the Nyquist block.
  const EdgeWaveFunction& nyquist_function() const noexcept { return nyquist_function_; }
  /// R_N of nyquist_function().
  const std::vector<Complex>& nyquist_samples() const noexcept { return nyquist_samples_; }
  /// <Phi_nyq, Phi_nyq>_N.
  double nyquist_norm_squared() const noexcept { return nyquist_norm_squared_; }
  double nyquist_mu() const noexcept;

  /// exp(-i omega_{0,k} n / N) for n = 0..N.
  const std::vector<Complex>& modulation(std::size_t k) const { return modulation_.at(k); }

 private:
  SpectralBasis(Graph graph, std::size_t level) : graph_(std::move(graph)), level_(level) {}

  Graph graph_;
  std::size_t level_;
  PrimitiveSpectrum primitives_;
  std::vector<BasisBlock> blocks_;
  std::vector<std::vector<std::size_t>> block_lookup_;  // [k][m]
  EdgeWaveFunction nyquist_function_;
  std::vector<Complex> nyquist_samples_;
  double nyquist_norm_squared_ = 0.0;
  std::vector<std::vector<Complex>> modulation_;
};

/// Throws ShapeError unless the transform has the basis' block shapes.
void check_dft(const GraphDFT& dft, const SpectralBasis& basis);

/// All inner products <f, Phi_j(omega_{m,k})>_N via per-edge radix-2 FFTs, O(N log N).
GraphDFT fft_forward(const VertexSignal& f, const SpectralBasis& basis);

/// Blockwise c = (B^* B)^T X.
Expansion coefficients(const GraphDFT& dft, const SpectralBasis& basis);

/// Evaluates an expansion on G_N with per-edge FFTs, O(N log N).
VertexSignal synthesize(const Expansion& expansion, const SpectralBasis& basis);

/// synthesize(coefficients(dft)).
VertexSignal fft_inverse(const GraphDFT& dft, const SpectralBasis& basis);

/// ||f||_N^2 recovered from the transform: |X_0|^2 + sum ||conj(B) X||^2 + |X_nyq|^2 / <Phi_nyq, Phi_nyq>.
double parseval_norm(const GraphDFT& dft, const SpectralBasis& basis);

/// Forward transform, drop every eigenspace whose lambda = omega^2 fails `keep`, inverse transform.
VertexSignal spectral_filter(const VertexSignal& f, const SpectralBasis& basis,
                             const std::function<bool(double)>& keep);

}  // namespace qgraph
