#include "qgraph/sampling.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qgraph {

using std::numbers::pi;

void check_signal(const VertexSignal& signal, const Graph& graph) {
  if (signal.level == 0) throw ShapeError("signal level must be >= 1");
  const auto expected = graph.vertex_count() + (signal.level - 1) * graph.edge_count();
  if (signal.values.size() != expected)
    throw ShapeError("signal has " + std::to_string(signal.values.size()) + " values, G_" +
                     std::to_string(signal.level) + " of '" + graph.name() + "' has " +
                     std::to_string(expected) + " vertices");
}

VertexSignal restrict_to_samples(const EdgeWaveFunction& psi, const Graph& graph, std::size_t level) {
  if (psi.coefficients.size() != graph.edge_count()) throw ShapeError("function does not live on this graph");
  const Refinement refinement(graph, level);
  VertexSignal out{level, std::vector<Complex>(refinement.size())};
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) out.values[v] = psi.vertex_value(graph, v);
  const double step = psi.edge_length / static_cast<double>(level);
  for (std::size_t e = 0; e < graph.edge_count(); ++e)
    for (std::size_t n = 1; n < level; ++n)
      out.values[refinement.index(e, n)] = psi.value(e, step * static_cast<double>(n));
  return out;
}

std::vector<Complex> edge_samples(const EdgeWaveFunction& psi, std::size_t e, std::size_t level) {
  std::vector<Complex> out(level + 1);
  const double step = psi.edge_length / static_cast<double>(level);
  for (std::size_t n = 0; n <= level; ++n) out[n] = psi.value(e, step * static_cast<double>(n));
  return out;
}

Complex trapezoid(std::span<const Complex> samples) {
  if (samples.size() < 2) throw std::invalid_argument("trapezoid needs at least two samples");
  const auto n = samples.size() - 1;
  Complex interior{0.0, 0.0};
  for (std::size_t i = 1; i < n; ++i) interior += samples[i];
  return (samples.front() + samples.back() + 2.0 * interior) / (2.0 * static_cast<double>(n));
}

Complex trapezoid_exp(double theta, std::size_t level) {
  const double n = static_cast<double>(level);
  // The samples exp(i theta k / N) are 2 pi N periodic in theta.
  const double reduced = std::remainder(theta, 2.0 * pi * n);
  return m0(reduced / (2.0 * n)) * exp_moment(reduced, 0);
}

namespace {

// Taylor coefficients of z cot z in powers of z^2.
constexpr std::array<double, 12> kCotSeries = {
    1.0,
    -1.0 / 3.0,
    -1.0 / 45.0,
    -2.0 / 945.0,
    -1.0 / 4725.0,
    -2.0 / 93555.0,
    -1382.0 / 638512875.0,
    -4.0 / 18243225.0,
    -3617.0 / 162820783125.0,
    -87734.0 / 38979295480125.0,
    -349222.0 / 1531329465290625.0,
    -310732.0 / 13447856940643125.0,
};

double cot_series(double z, std::size_t first) {
  const double z2 = z * z;
  double sum = 0.0;
  for (std::size_t k = kCotSeries.size(); k-- > first;) sum = sum * z2 + kCotSeries[k];
  return sum * std::pow(z2, static_cast<double>(first));
}

void check_pole(double z) {
  if (!(std::abs(z) < pi)) throw std::domain_error("z cot z evaluated at or beyond its pole |z| = pi");
}

}  // namespace

double m0(double z) {
  check_pole(z);
  if (std::abs(z) < 1e-2) return cot_series(z, 0);
  return z / std::tan(z);
}

double m1(double z) {
  check_pole(z);
  // The leading terms cancel; sum the tail of the series directly where it converges fast.
  if (std::abs(z) < 0.5) return -cot_series(z, 2);
  return 1.0 - z / std::tan(z) - z * z / 3.0;
}

InnerProductComparison inner_product_error(const EdgeWaveFunction& f, const EdgeWaveFunction& g,
                                           const Graph& graph, std::size_t level) {
  const double omega = f.omega;
  if (std::abs(f.omega - g.omega) > 1e-12 * std::max(1.0, omega))
    throw ShapeError("inner_product_error needs both functions in one eigenspace");
  if (!(omega > 0.0)) throw std::invalid_argument("inner_product_error needs lambda > 0");
  if (omega > pi * static_cast<double>(level) * (1.0 + 1e-12))
    throw std::invalid_argument("lambda exceeds N^2 pi^2");
  const Refinement refinement(graph, level);
  const auto rf = restrict_to_samples(f, graph, level);
  const auto rg = restrict_to_samples(g, graph, level);
  return {vertex_inner_product(rf.values, rg.values, refinement), continuous_inner_product(f, g)};
}

}  // namespace qgraph
