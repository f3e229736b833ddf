#include "qgraph/oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qgraph::oracle {

namespace {

Complex weighted_sum(const std::vector<Complex>& f, const std::vector<Complex>& g,
                     const Refinement& refinement) {
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < f.size(); ++i)
    sum += static_cast<double>(refinement.degree(i)) * f[i] * std::conj(g[i]);
  return sum / refinement.total_weight();
}

std::vector<Complex> sampled(const EdgeWaveFunction& psi, const SpectralBasis& basis) {
  return restrict_to_samples(psi, basis.graph(), basis.level()).values;
}

}  // namespace

GraphDFT naive_forward(const VertexSignal& f, const SpectralBasis& basis) {
  if (f.level != basis.level()) throw ShapeError("signal level does not match basis level");
  check_signal(f, basis.graph());
  const Refinement refinement(basis.graph(), basis.level());

  GraphDFT out;
  out.zero = weighted_sum(f.values, std::vector<Complex>(f.values.size(), 1.0), refinement);
  for (std::size_t b = 0; b < basis.blocks().size(); ++b) {
    std::vector<Complex> block;
    for (std::size_t j = 0; j < basis.blocks()[b].dimension(); ++j)
      block.push_back(weighted_sum(f.values, sampled(basis.function(b, j), basis), refinement));
    out.blocks.push_back(std::move(block));
  }
  out.nyquist = weighted_sum(f.values, sampled(basis.nyquist_function(), basis), refinement);
  return out;
}

VertexSignal naive_inverse(const GraphDFT& dft, const SpectralBasis& basis) {
  check_dft(dft, basis);
  const Refinement refinement(basis.graph(), basis.level());
  VertexSignal out{basis.level(), std::vector<Complex>(refinement.size(), dft.zero)};

  for (std::size_t b = 0; b < basis.blocks().size(); ++b) {
    const auto dim = static_cast<Eigen::Index>(basis.blocks()[b].dimension());
    std::vector<std::vector<Complex>> phis;
    for (Eigen::Index j = 0; j < dim; ++j) phis.push_back(sampled(basis.function(b, j), basis));
    // X_j = <f, Phi_j> = sum_l c_l <Phi_l, Phi_j>
    Eigen::MatrixXcd system(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j)
      for (Eigen::Index l = 0; l < dim; ++l) system(j, l) = weighted_sum(phis[l], phis[j], refinement);
    Eigen::VectorXcd rhs(dim);
    for (Eigen::Index j = 0; j < dim; ++j) rhs(j) = dft.blocks[b][j];
    const Eigen::VectorXcd c = system.fullPivLu().solve(rhs);
    for (std::size_t i = 0; i < out.values.size(); ++i)
      for (Eigen::Index l = 0; l < dim; ++l) out.values[i] += c(l) * phis[l][i];
  }

  const auto nyq = sampled(basis.nyquist_function(), basis);
  const Complex c_nyq = dft.nyquist / weighted_sum(nyq, nyq, refinement);
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += c_nyq * nyq[i];
  return out;
}

Complex quadrature_inner_product(const EdgeWaveFunction& f, const EdgeWaveFunction& g,
                                 std::size_t points_per_edge) {
  if (points_per_edge < 100 || points_per_edge % 2 != 0)
    throw std::invalid_argument("Simpson rule needs an even number (>= 100) of subintervals");
  if (f.coefficients.size() != g.coefficients.size()) throw ShapeError("functions on different graphs");
  const double h = f.edge_length / static_cast<double>(points_per_edge);
  Complex total{0.0, 0.0};
  for (std::size_t e = 0; e < f.coefficients.size(); ++e) {
    Complex edge{0.0, 0.0};
    for (std::size_t i = 0; i <= points_per_edge; ++i) {
      const double x = h * static_cast<double>(i);
      const double w = (i == 0 || i == points_per_edge) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      edge += w * f.value(e, x) * std::conj(g.value(e, x));
    }
    total += edge * h / 3.0;
  }
  return total / static_cast<double>(f.coefficients.size());
}

std::vector<Complex> direct_dft(const std::vector<Complex>& v) {
  const auto n = v.size();
  std::vector<Complex> out(n);
  for (std::size_t m = 0; m < n; ++m) {
    Complex sum{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k)
      sum += v[k] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>((m * k) % n) /
                                        static_cast<double>(n));
    out[m] = sum;
  }
  return out;
}

}  // namespace qgraph::oracle
