#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <numbers>

#include "qgraph/discrete_spectrum.hpp"
#include "qgraph/eigenbasis.hpp"
#include "support.hpp"

using namespace qgraph;
using std::numbers::pi;

namespace {

std::vector<std::pair<double, std::size_t>> profile(const DiscreteSpectrum& s) {
  std::vector<std::pair<double, std::size_t>> out;
  for (const auto& space : s.eigenspaces) out.emplace_back(space.mu, space.multiplicity());
  return out;
}

// Eigenvalues of I - T^-1 A from a general (non-symmetric) dense solver, sorted.
std::vector<double> general_solver_mu(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  for (const auto& [t, h] : g.edges()) {
    m(t, h) -= 1.0 / static_cast<double>(g.degree(t));
    m(h, t) -= 1.0 / static_cast<double>(g.degree(h));
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  std::vector<double> mu;
  for (Eigen::Index i = 0; i < n; ++i) mu.push_back(solver.eigenvalues()[i].real());
  std::sort(mu.begin(), mu.end());
  return mu;
}

// Delta_N by walking an explicit edge list of G_N.
std::vector<Complex> delta_n_by_edge_list(const std::vector<Complex>& f, const Graph& g, std::size_t level) {
  const Refinement r(g, level);
  std::vector<std::vector<std::size_t>> adjacency(r.size());
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    for (std::size_t n = 0; n < level; ++n) {
      const auto a = r.index(e, n), b = r.index(e, n + 1);
      adjacency[a].push_back(b);
      adjacency[b].push_back(a);
    }
  std::vector<Complex> out(r.size());
  const double scale = static_cast<double>(level * level);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Complex sum = 0.0;
    for (auto j : adjacency[i]) sum += f[j];
    out[i] = scale * (f[i] - sum / static_cast<double>(adjacency[i].size()));
  }
  return out;
}

}  // namespace

TEST_SUITE("discrete-spectrum") {

TEST_CASE("K(4,2) spectrum is 0, 1 x 4, 2") {
  const auto s = eigensolve_delta1(generators::complete_bipartite(4, 2));
  const auto p = profile(s);
  REQUIRE(p.size() == 3);
  CHECK(std::abs(p[0].first) < 1e-10);
  CHECK(std::abs(p[1].first - 1.0) < 1e-10);
  CHECK(std::abs(p[2].first - 2.0) < 1e-10);
  CHECK(p[0].second == 1);
  CHECK(p[1].second == 4);
  CHECK(p[2].second == 1);
}

TEST_CASE("cycles match the closed form 1 - cos(2 pi j / V)") {
  for (std::size_t v : {3u, 4u, 5u, 6u, 7u, 8u}) {
    CAPTURE(v);
    const auto s = eigensolve_delta1(generators::cycle(v));
    std::vector<double> computed, expected;
    for (const auto& space : s.eigenspaces)
      for (std::size_t i = 0; i < space.multiplicity(); ++i) computed.push_back(space.mu);
    for (std::size_t j = 0; j < v; ++j) expected.push_back(1.0 - std::cos(2.0 * pi * j / v));
    std::sort(expected.begin(), expected.end());
    REQUIRE(computed.size() == v);
    for (std::size_t i = 0; i < v; ++i) CHECK(std::abs(computed[i] - expected[i]) < 1e-12);
    // Nonzero, non-Nyquist cycle eigenvalues come in pairs.
    for (const auto& space : s.eigenspaces) {
      const bool single = std::abs(space.mu) < 1e-9 || std::abs(space.mu - 2.0) < 1e-9;
      CHECK(space.multiplicity() == (single ? 1u : 2u));
    }
  }
  const auto c3 = profile(eigensolve_delta1(generators::cycle(3)));
  REQUIRE(c3.size() == 2);
  CHECK(std::abs(c3[1].first - 1.5) < 1e-12);
  const auto c4 = profile(eigensolve_delta1(generators::cycle(4)));
  REQUIRE(c4.size() == 3);
  CHECK(c4[1].second == 2);
}

TEST_CASE("eigenvectors are canonical and orthonormal") {
  const auto g = generators::bowtie();
  const auto s = eigensolve_delta1(g);
  const Refinement r1(g, 1);
  for (const auto& space : s.eigenspaces)
    for (const auto& v : space.vectors) {
      CHECK(delta1_residual(g, v, space.mu) < 1e-10);
      CHECK(std::abs(vertex_inner_product(v, v, r1) - 1.0) < 1e-12);
      const auto first = std::find_if(v.begin(), v.end(), [](Complex z) { return std::abs(z) > 1e-8; });
      REQUIRE(first != v.end());
      CHECK(first->real() > 0.0);
      CHECK(std::abs(first->imag()) < 1e-14);
    }
  const auto& constant = s.eigenspaces.front().vectors.front();
  for (const auto& x : constant) CHECK(std::abs(x - 1.0) < 1e-12);
}

TEST_CASE("output is deterministic") {
  const auto g = generators::complete_bipartite(5, 2);
  const auto a = eigensolve_delta1(g), b = eigensolve_delta1(g);
  REQUIRE(a.eigenspaces.size() == b.eigenspaces.size());
  for (std::size_t i = 0; i < a.eigenspaces.size(); ++i) {
    CHECK(a.eigenspaces[i].mu == b.eigenspaces[i].mu);
    CHECK(a.eigenspaces[i].vectors == b.eigenspaces[i].vectors);
  }
}

TEST_CASE("delta_n_eigenvalue") {
  CHECK(delta_n_eigenvalue(0.0, 8) == 0.0);
  for (std::size_t n : {4u, 16u, 64u})
    CHECK(delta_n_eigenvalue(n * n * pi * pi, n) == doctest::Approx(2.0 * n * n).epsilon(1e-14));
  CHECK(std::abs(delta_n_eigenvalue(0.01, 64) / 0.005 - 1.0) < 1e-6);
  CHECK_THROWS_AS(delta_n_eigenvalue(-1.0, 4), std::invalid_argument);
}

TEST_CASE("apply_delta_n") {
  const auto c4 = generators::cycle(4);
  const Refinement r(c4, 2);
  const std::vector<Complex> ones(r.size(), 2.5);
  for (const auto& x : apply_delta_n(ones, r)) CHECK(std::abs(x) < 1e-14);

  std::mt19937 rng(3);
  const auto f = testing::random_signal(c4, 2, rng);
  CHECK(testing::max_abs_diff(apply_delta_n(f.values, r), delta_n_by_edge_list(f.values, c4, 2)) < 1e-13);
  CHECK_THROWS_AS(apply_delta_n(std::vector<Complex>(3), r), ShapeError);
}

TEST_CASE("restricted eigenfunctions are Delta_N eigenvectors") {
  const auto g = generators::complete_bipartite(4, 2);
  const auto primitives = primitive_spectrum(g);
  const std::size_t level = 8;
  const Refinement r(g, level);
  for (const auto& block : primitives.blocks)
    for (std::size_t m = 0; m < level / 2; ++m) {
      const auto f = shift(block.functions.front(), m);
      if (f.omega >= level * pi) continue;
      const auto y = restrict_to_samples(f, g, level).values;
      const auto applied = apply_delta_n(y, r);
      const double mu = delta_n_eigenvalue(f.eigenvalue(), level);
      double err = 0.0;
      for (std::size_t i = 0; i < y.size(); ++i) err = std::max(err, std::abs(applied[i] - mu * y[i]));
      CHECK(err <= 1e-9 * std::max(1.0, mu));
    }
}

TEST_CASE("property: random graphs agree with a general eigensolver") {
  std::mt19937 rng(202);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = testing::random_graph(rng, 10, trial % 4 == 0);
    const auto s = eigensolve_delta1(g);
    CHECK(s.dimension() == g.vertex_count());
    const auto reference = general_solver_mu(g);
    std::vector<double> computed;
    for (const auto& space : s.eigenspaces)
      for (std::size_t i = 0; i < space.multiplicity(); ++i) computed.push_back(space.mu);
    for (std::size_t i = 0; i < computed.size(); ++i) CHECK(std::abs(computed[i] - reference[i]) < 1e-9);
    CHECK(s.eigenspaces.front().multiplicity() == 1);
    const bool has_two = std::abs(s.eigenspaces.back().mu - 2.0) < 1e-8;
    CHECK(has_two == bipartition(g).bipartite());

    const Refinement r(g, 4);
    const auto f = testing::random_signal(g, 4, rng), h = testing::random_signal(g, 4, rng);
    const auto lhs = vertex_inner_product(apply_delta_n(f.values, r), h.values, r);
    const auto rhs = vertex_inner_product(f.values, apply_delta_n(h.values, r), r);
    CHECK(std::abs(lhs - rhs) < 1e-11 * std::max(1.0, std::abs(lhs)));
    CHECK(testing::max_abs_diff(apply_delta_n(f.values, r), delta_n_by_edge_list(f.values, g, 4)) < 1e-12);
  }
}

}  // TEST_SUITE
