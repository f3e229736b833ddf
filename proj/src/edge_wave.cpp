#include "qgraph/edge_wave.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace qgraph {

namespace {

constexpr Complex kI{0.0, 1.0};

struct Term {
  Complex coefficient;
  int power;
  double frequency;
};

std::array<Term, 2> terms(const EdgeWaveFunction& f, std::size_t e) {
  const auto& c = f.coefficients.at(e);
  if (f.omega == 0.0) return {Term{c.a, 0, 0.0}, Term{c.b, 1, 0.0}};
  return {Term{c.a, 0, f.omega}, Term{c.b, 0, -f.omega}};
}

}  // namespace

Complex EdgeWaveFunction::value(std::size_t e, double x) const {
  const auto& c = coefficients.at(e);
  if (omega == 0.0) return c.a + c.b * x;
  const Complex phase = std::polar(1.0, omega * x);
  return c.a * phase + c.b * std::conj(phase);
}

Complex EdgeWaveFunction::derivative(std::size_t e, double x) const {
  const auto& c = coefficients.at(e);
  if (omega == 0.0) return c.b;
  const Complex phase = std::polar(1.0, omega * x);
  return kI * omega * (c.a * phase - c.b * std::conj(phase));
}

Complex EdgeWaveFunction::vertex_value(const Graph& graph, std::size_t v) const {
  const auto e = graph.incident_edges(v).front();
  return value(e, graph.edge(e).tail == v ? 0.0 : edge_length);
}

std::vector<Complex> EdgeWaveFunction::vertex_values(const Graph& graph) const {
  std::vector<Complex> out(graph.vertex_count());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = vertex_value(graph, v);
  return out;
}

EdgeWaveFunction constant_function(const Graph& graph, Complex value) {
  return {0.0, 1.0, std::vector<EdgeCoefficients>(graph.edge_count(), {value, 0.0})};
}

EdgeCoefficients cosine_coefficients(double amplitude) {
  return {Complex{amplitude / 2, 0.0}, Complex{amplitude / 2, 0.0}};
}

// sin(w x) = (exp(i w x) - exp(-i w x)) / (2i)
EdgeCoefficients sine_coefficients(double amplitude) {
  return {Complex{0.0, -amplitude / 2}, Complex{0.0, amplitude / 2}};
}

VertexConditionResidual vertex_condition_residual(const EdgeWaveFunction& f, const Graph& graph) {
  if (f.coefficients.size() != graph.edge_count()) throw ShapeError("coefficient count != edge count");
  VertexConditionResidual r;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    const Complex reference = f.vertex_value(graph, v);
    Complex outward{0.0, 0.0};
    for (auto e : graph.incident_edges(v)) {
      const bool at_tail = graph.edge(e).tail == v;
      const double x = at_tail ? 0.0 : f.edge_length;
      r.continuity = std::max(r.continuity, std::abs(f.value(e, x) - reference));
      outward += at_tail ? f.derivative(e, x) : -f.derivative(e, x);
    }
    r.kirchhoff = std::max(r.kirchhoff, std::abs(outward));
  }
  return r;
}

Complex exp_moment(double theta, int power) {
  if (power < 0 || power > 2) throw std::invalid_argument("exp_moment supports powers 0..2");
  if (std::abs(theta) < 1.0) {
    // sum_k (i theta)^k / (k! (k + p + 1)); 30 terms reach double precision for |theta| < 1.
    Complex sum{0.0, 0.0};
    Complex term{1.0, 0.0};
    for (int k = 0; k < 30; ++k) {
      sum += term / static_cast<double>(k + power + 1);
      term *= kI * theta / static_cast<double>(k + 1);
    }
    return sum;
  }
  const Complex itheta = kI * theta;
  const Complex end = std::polar(1.0, theta);
  Complex moment = (end - 1.0) / itheta;
  for (int p = 1; p <= power; ++p) moment = end / itheta - static_cast<double>(p) / itheta * moment;
  return moment;
}

Complex continuous_inner_product(const EdgeWaveFunction& f, const EdgeWaveFunction& g) {
  if (f.coefficients.size() != g.coefficients.size())
    throw ShapeError("inner product of functions on different graphs");
  if (f.edge_length != g.edge_length) throw ShapeError("inner product across edge lengths");
  const double length = f.edge_length;
  Complex sum{0.0, 0.0};
  for (std::size_t e = 0; e < f.coefficients.size(); ++e) {
    for (const auto& tf : terms(f, e))
      for (const auto& tg : terms(g, e)) {
        const int p = tf.power + tg.power;
        // int_0^L x^p e^{i theta x} dx = L^{p+1} int_0^1 u^p e^{i theta L u} du
        const double theta = (tf.frequency - tg.frequency) * length;
        sum += tf.coefficient * std::conj(tg.coefficient) * std::pow(length, p + 1) *
               exp_moment(theta, p);
      }
  }
  return sum / static_cast<double>(f.coefficients.size());
}

std::pair<EdgeWaveFunction, double> rescale(const EdgeWaveFunction& f, double length) {
  if (!(length > 0.0)) throw std::invalid_argument("edge length must be positive");
  EdgeWaveFunction out = f;
  out.omega = f.omega / length;
  out.edge_length = f.edge_length * length;
  if (f.omega == 0.0)
    for (auto& c : out.coefficients) c.b /= length;
  const double lambda = out.eigenvalue();
  return {std::move(out), lambda};
}

EdgeWaveFunction linear_combination(Complex c, const EdgeWaveFunction& f, Complex d,
                                    const EdgeWaveFunction& g) {
  if (f.omega != g.omega || f.edge_length != g.edge_length ||
      f.coefficients.size() != g.coefficients.size())
    throw ShapeError("linear combination of functions from different eigenspaces");
  EdgeWaveFunction out = f;
  for (std::size_t e = 0; e < out.coefficients.size(); ++e) {
    out.coefficients[e].a = c * f.coefficients[e].a + d * g.coefficients[e].a;
    out.coefficients[e].b = c * f.coefficients[e].b + d * g.coefficients[e].b;
  }
  return out;
}

}  // namespace qgraph
