#include "qgraph/eigenbasis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qgraph {

using std::numbers::pi;

double branch_frequency(double mu, Branch branch) {
  if (!(mu > 0.0 && mu < 2.0)) throw std::invalid_argument("mu must lie strictly inside (0, 2)");
  const double low = std::acos(1.0 - mu);
  return branch == Branch::Low ? low : 2.0 * pi - low;
}

EdgeWaveFunction lift(const Graph& graph, std::span<const Complex> vertex_values, double mu,
                      Branch branch, double residual_tolerance) {
  const double omega = branch_frequency(mu, branch);
  if (vertex_values.size() != graph.vertex_count()) throw ShapeError("vertex vector length mismatch");
  double scale = 0.0;
  for (const auto& y : vertex_values) scale = std::max(scale, std::abs(y));
  const double residual = delta1_residual(graph, vertex_values, mu);
  if (residual > residual_tolerance * std::max(1.0, scale)) {
    std::ostringstream msg;
    msg << "vertex values are not an eigenvector for mu = " << mu << " (residual " << residual << ")";
    throw NumericalError(msg.str());
  }

  const double c = std::cos(omega);
  const double s = std::sin(omega);
  EdgeWaveFunction f{omega, 1.0, {}};
  f.coefficients.reserve(graph.edge_count());
  for (const auto& [t, h] : graph.edges()) {
    const Complex y0 = vertex_values[t];
    const Complex sine_part = (vertex_values[h] - y0 * c) / s;
    // y0 cos(w x) + sine_part sin(w x) in exponential form
    f.coefficients.push_back({y0 / 2.0 + sine_part / Complex(0.0, 2.0),
                              y0 / 2.0 - sine_part / Complex(0.0, 2.0)});
  }
  return f;
}

EdgeWaveFunction shift(const EdgeWaveFunction& psi, std::size_t m) {
  EdgeWaveFunction out = psi;
  out.omega = psi.omega + 2.0 * pi * static_cast<double>(m);
  return out;
}

std::vector<EdgeWaveFunction> cycle_eigenspace(const Graph& graph, std::size_t n) {
  if (n == 0) throw std::invalid_argument("cycle eigenspace needs n >= 1");
  std::vector<EdgeWaveFunction> out;
  for (const auto& cycle : spanning_tree_cycles(graph).cycles) {
    EdgeWaveFunction f{2.0 * pi * static_cast<double>(n), 1.0,
                       std::vector<EdgeCoefficients>(graph.edge_count())};
    // Against the orientation sin(2 pi n (1 - x)) = -sin(2 pi n x).
    for (std::size_t e = 0; e < graph.edge_count(); ++e)
      if (cycle.signed_incidence[e] != 0)
        f.coefficients[e] = sine_coefficients(static_cast<double>(cycle.signed_incidence[e]));
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<EdgeWaveFunction> odd_eigenspace(const Graph& graph, std::size_t n) {
  if (n == 0) throw std::invalid_argument("odd eigenspace needs n >= 1");
  std::vector<EdgeWaveFunction> out;
  for (const auto& flow : flow_space(graph).vectors) {
    EdgeWaveFunction f{(2.0 * static_cast<double>(n) - 1.0) * pi, 1.0, {}};
    for (auto amplitude : flow) f.coefficients.push_back(sine_coefficients(static_cast<double>(amplitude)));
    out.push_back(std::move(f));
  }
  return out;
}

std::optional<EdgeWaveFunction> cosine_eigenfunction(const Graph& graph, std::size_t n) {
  if (n == 0) throw std::invalid_argument("cosine eigenfunction needs n >= 1");
  EdgeWaveFunction f{pi * static_cast<double>(n), 1.0, {}};
  if (n % 2 == 0) {
    f.coefficients.assign(graph.edge_count(), cosine_coefficients(1.0));
    return f;
  }
  const auto colors = bipartition(graph);
  if (!colors.bipartite()) return std::nullopt;
  for (const auto& edge : graph.edges())
    f.coefficients.push_back(cosine_coefficients((*colors.classes)[edge.tail] == 0 ? 1.0 : -1.0));
  return f;
}

std::size_t PrimitiveSpectrum::dimension() const noexcept {
  std::size_t total = 0;
  for (const auto& block : blocks) total += block.dimension();
  return total;
}

std::vector<EdgeWaveFunction> orthonormalize(std::vector<EdgeWaveFunction> functions,
                                             double rank_tolerance) {
  for (std::size_t i = 0; i < functions.size(); ++i) {
    const double original = std::sqrt(std::abs(continuous_inner_product(functions[i], functions[i])));
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t j = 0; j < i; ++j) {
        const Complex overlap = continuous_inner_product(functions[i], functions[j]);
        functions[i] = linear_combination(1.0, functions[i], -overlap, functions[j]);
      }
    const double norm = std::sqrt(std::abs(continuous_inner_product(functions[i], functions[i])));
    if (!(norm > rank_tolerance * std::max(1.0, original))) {
      std::ostringstream msg;
      msg << "dependent eigenfunction " << i << " at omega = " << functions[i].omega
          << " (residual norm " << norm << ")";
      throw NumericalError(msg.str());
    }
    for (auto& c : functions[i].coefficients) {
      c.a /= norm;
      c.b /= norm;
    }
  }
  return functions;
}

PrimitiveSpectrum primitive_spectrum(const Graph& graph, const EigenbasisOptions& options) {
  PrimitiveSpectrum result;
  result.zero_mode = constant_function(graph);
  result.discrete = eigensolve_delta1(graph, options.spectrum);

  auto add_block = [&](double omega, std::vector<EdgeWaveFunction> functions,
                       std::vector<WaveKind> kinds) {
    if (functions.empty()) return;
    result.blocks.push_back(
        {omega, orthonormalize(std::move(functions), options.rank_tolerance), std::move(kinds)});
  };

  for (const auto& space : result.discrete.eigenspaces) {
    if (space.mu < options.endpoint_tolerance || space.mu > 2.0 - options.endpoint_tolerance) continue;
    for (auto branch : {Branch::Low, Branch::High}) {
      std::vector<EdgeWaveFunction> lifted;
      for (const auto& v : space.vectors) lifted.push_back(lift(graph, v, space.mu, branch));
      add_block(branch_frequency(space.mu, branch), std::move(lifted),
                std::vector<WaveKind>(space.multiplicity(), WaveKind::Lifted));
    }
  }

  {
    auto functions = odd_eigenspace(graph, 1);
    std::vector<WaveKind> kinds(functions.size(), WaveKind::Flow);
    if (auto cosine = cosine_eigenfunction(graph, 1)) {
      functions.push_back(std::move(*cosine));
      kinds.push_back(WaveKind::Cosine);
    }
    add_block(pi, std::move(functions), std::move(kinds));
  }
  {
    auto functions = cycle_eigenspace(graph, 1);
    std::vector<WaveKind> kinds(functions.size(), WaveKind::Cycle);
    functions.push_back(*cosine_eigenfunction(graph, 2));
    kinds.push_back(WaveKind::Cosine);
    add_block(2.0 * pi, std::move(functions), std::move(kinds));
  }

  std::stable_sort(result.blocks.begin(), result.blocks.end(),
                   [](const PrimitiveBlock& a, const PrimitiveBlock& b) { return a.omega < b.omega; });

  if (result.dimension() != 2 * graph.edge_count())
    throw NumericalError("primitive eigenbasis has dimension " + std::to_string(result.dimension()) +
                         ", expected 2 N_E = " + std::to_string(2 * graph.edge_count()));
  return result;
}

double vertex_relation_residual(const EdgeWaveFunction& f, const Graph& graph) {
  const auto y = f.vertex_values(graph);
  const double c = std::cos(f.omega);
  double worst = 0.0;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    Complex mean{0.0, 0.0};
    for (auto u : graph.neighbors(v)) mean += y[u];
    mean /= static_cast<double>(graph.degree(v));
    worst = std::max(worst, std::abs(c * y[v] - mean));
  }
  return worst;
}

}  // namespace qgraph
