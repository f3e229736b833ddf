#include "qgraph/discrete_spectrum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace qgraph {

std::size_t DiscreteSpectrum::dimension() const noexcept {
  std::size_t total = 0;
  for (const auto& space : eigenspaces) total += space.multiplicity();
  return total;
}

namespace {

// Canonical orthonormal basis of span(columns) under the weight diag(degree) / W.
// Columns of `basis` must already be weighted-orthonormal.
Eigen::MatrixXd canonical_basis(const Eigen::MatrixXd& basis, const Eigen::VectorXd& weight) {
  const auto n = basis.rows();
  const auto dim = basis.cols();
  Eigen::MatrixXd out(n, dim);
  Eigen::Index found = 0;
  for (Eigen::Index i = 0; i < n && found < dim; ++i) {
    // Weighted projection of e_i onto the eigenspace: sum_c col_c <e_i, col_c>.
    Eigen::VectorXd v = basis * (basis.row(i).transpose() * weight(i));
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index c = 0; c < found; ++c)
        v -= out.col(c) * (out.col(c).cwiseProduct(weight).dot(v));
    const double norm = std::sqrt(v.cwiseProduct(weight).dot(v));
    if (norm < 1e-6) continue;
    out.col(found++) = v / norm;
  }
  if (found != dim) throw NumericalError("could not canonicalize eigenspace basis");

  for (Eigen::Index c = 0; c < dim; ++c) {
    const double scale = out.col(c).cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < n; ++i)
      if (std::abs(out(i, c)) > 1e-9 * scale) {
        if (out(i, c) < 0) out.col(c) = -out.col(c);
        break;
      }
  }
  return out;
}

}  // namespace

DiscreteSpectrum eigensolve_delta1(const Graph& graph, const SpectrumOptions& options) {
  const auto nv = static_cast<Eigen::Index>(graph.vertex_count());
  Eigen::VectorXd inv_sqrt_deg(nv);
  for (Eigen::Index v = 0; v < nv; ++v)
    inv_sqrt_deg(v) = 1.0 / std::sqrt(static_cast<double>(graph.degree(v)));

  Eigen::MatrixXd normalized = Eigen::MatrixXd::Identity(nv, nv);
  for (const auto& [t, h] : graph.edges()) {
    const double a = inv_sqrt_deg(t) * inv_sqrt_deg(h);
    normalized(t, h) -= a;
    normalized(h, t) -= a;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(normalized);
  if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigensolver did not converge");

  // w -> sqrt(W) T^-1/2 w is orthonormal for <f,g>_1 = (1/W) sum deg f conj(g).
  const double total_weight = 2.0 * static_cast<double>(graph.edge_count());
  Eigen::MatrixXd vectors = (inv_sqrt_deg * std::sqrt(total_weight)).asDiagonal() * solver.eigenvectors();
  Eigen::VectorXd weight(nv);
  for (Eigen::Index v = 0; v < nv; ++v) weight(v) = graph.degree(v) / total_weight;

  const auto& values = solver.eigenvalues();  // ascending
  DiscreteSpectrum spectrum;
  Eigen::Index start = 0;
  while (start < nv) {
    Eigen::Index stop = start + 1;
    const double tol = options.cluster_tolerance * std::max(1.0, std::abs(values(start)));
    while (stop < nv && values(stop) - values(start) <= tol) ++stop;

    const double mu = values.segment(start, stop - start).mean();
    const Eigen::MatrixXd block =
        canonical_basis(vectors.middleCols(start, stop - start), weight);

    DiscreteSpectrum::Eigenspace space;
    space.mu = mu;
    for (Eigen::Index c = 0; c < block.cols(); ++c) {
      std::vector<Complex> v(block.col(c).data(), block.col(c).data() + nv);
      const double residual = delta1_residual(graph, v, mu);
      if (residual > options.residual_tolerance) {
        std::ostringstream msg;
        msg << "eigenpair residual " << residual << " exceeds " << options.residual_tolerance
            << " at mu = " << mu;
        throw NumericalError(msg.str());
      }
      space.vectors.push_back(std::move(v));
    }
    spectrum.eigenspaces.push_back(std::move(space));
    start = stop;
  }
  return spectrum;
}

double delta_n_eigenvalue(double lambda, std::size_t level) {
  if (lambda < 0) throw std::invalid_argument("eigenvalue must be non-negative");
  const double n = static_cast<double>(level);
  // 1 - cos(t) = 2 sin^2(t/2) keeps full relative precision for small lambda.
  const double s = std::sin(std::sqrt(lambda) / (2.0 * n));
  return 2.0 * n * n * s * s;
}

std::vector<Complex> apply_delta_n(std::span<const Complex> f, const Refinement& refinement) {
  if (f.size() != refinement.size())
    throw ShapeError("signal length " + std::to_string(f.size()) + " does not match refinement size " +
                     std::to_string(refinement.size()));
  const double scale = static_cast<double>(refinement.level()) * static_cast<double>(refinement.level());
  std::vector<Complex> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto nbrs = refinement.neighbors(i);
    Complex mean{0.0, 0.0};
    for (auto j : nbrs) mean += f[j];
    mean /= static_cast<double>(nbrs.size());
    out[i] = scale * (f[i] - mean);
  }
  return out;
}

double delta1_residual(const Graph& graph, std::span<const Complex> y, double mu) {
  if (y.size() != graph.vertex_count()) throw ShapeError("vertex vector length mismatch");
  double worst = 0.0;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    Complex mean{0.0, 0.0};
    for (auto u : graph.neighbors(v)) mean += y[u];
    mean /= static_cast<double>(graph.degree(v));
    worst = std::max(worst, std::abs(y[v] - mean - mu * y[v]));
  }
  return worst;
}

}  // namespace qgraph
