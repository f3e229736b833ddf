#include "qgraph/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qgraph/discrete_spectrum.hpp"
#include "qgraph/eigenbasis.hpp"
#include "qgraph/flow_space.hpp"
#include "qgraph/oracle.hpp"
#include "qgraph/sampling.hpp"
#include "qgraph/transform.hpp"

namespace qgraph::verify {

using std::numbers::pi;

bool Report::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

class Recorder {
 public:
  explicit Recorder(Report& report) : report_(report) {}
  void residual(std::string name, double measured, double tolerance) {
    report_.checks.push_back({std::move(name), measured, tolerance, measured <= tolerance});
  }
  void count(std::string name, std::size_t got, std::size_t expected) {
    const double diff = std::abs(static_cast<double>(got) - static_cast<double>(expected));
    report_.checks.push_back({std::move(name), diff, 0.0, got == expected});
  }

 private:
  Report& report_;
};

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double out = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) out = std::max(out, std::abs(a[i] - b[i]));
  return out;
}

double max_diff(const GraphDFT& a, const GraphDFT& b) {
  double out = std::max(std::abs(a.zero - b.zero), std::abs(a.nyquist - b.nyquist));
  for (std::size_t i = 0; i < a.blocks.size(); ++i) out = std::max(out, max_diff(a.blocks[i], b.blocks[i]));
  return out;
}

double norm(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

VertexSignal random_signal(const Graph& graph, std::size_t level, std::mt19937& rng) {
  std::normal_distribution<double> normal;
  VertexSignal f{level, std::vector<Complex>(Refinement(graph, level).size())};
  for (auto& x : f.values) x = {normal(rng), normal(rng)};
  return f;
}

}  // namespace

Report run_suite(const Graph& graph, std::size_t level, unsigned seed) {
  Report report{graph.name(), level, {}};
  Recorder rec(report);
  std::mt19937 rng(seed);

  // graph-model
  const auto cycles = spanning_tree_cycles(graph);
  rec.count("cycle basis size = N_E - N_V + 1", cycles.cycles.size(), graph.cycle_rank());
  {
    long long boundary = 0;
    for (const auto& cycle : cycles.cycles) {
      std::vector<long long> net(graph.vertex_count(), 0);
      for (std::size_t e = 0; e < graph.edge_count(); ++e) {
        net[graph.edge(e).tail] -= cycle.signed_incidence[e];
        net[graph.edge(e).head] += cycle.signed_incidence[e];
      }
      for (auto x : net) boundary = std::max(boundary, std::abs(x));
    }
    rec.residual("cycle boundaries vanish", static_cast<double>(boundary), 0.0);
  }
  const auto colors = bipartition(graph);
  {
    std::size_t bad = 0;
    if (colors.bipartite()) {
      for (const auto& [t, h] : graph.edges()) bad += (*colors.classes)[t] == (*colors.classes)[h];
    } else {
      bad = colors.odd_cycle.size() % 2 == 0 ? 0 : 1;  // closed walk of k edges has k + 1 entries
    }
    rec.count("bipartition consistent", bad, 0);
  }

  // discrete-spectrum
  const auto spectrum = eigensolve_delta1(graph);
  rec.count("sum of multiplicities = N_V", spectrum.dimension(), graph.vertex_count());
  rec.residual("mu = 0 first", std::abs(spectrum.eigenspaces.front().mu), 1e-10);
  rec.count("mu = 0 simple", spectrum.eigenspaces.front().multiplicity(), 1);
  const bool has_two = std::abs(spectrum.eigenspaces.back().mu - 2.0) < 1e-8;
  rec.count("mu = 2 present iff bipartite", has_two, colors.bipartite());
  {
    double residual = 0.0, gram = 0.0;
    const Refinement g1(graph, 1);
    std::vector<const std::vector<Complex>*> all;
    for (const auto& space : spectrum.eigenspaces)
      for (const auto& v : space.vectors) {
        residual = std::max(residual, delta1_residual(graph, v, space.mu));
        all.push_back(&v);
      }
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j)
        gram = std::max(gram, std::abs(vertex_inner_product(*all[i], *all[j], g1) - (i == j ? 1.0 : 0.0)));
    rec.residual("Delta_1 eigenpair residual", residual, 1e-10);
    rec.residual("Delta_1 eigenvectors orthonormal", gram, 1e-10);
  }
  {
    const Refinement refinement(graph, level);
    const auto f = random_signal(graph, level, rng), g = random_signal(graph, level, rng);
    const auto lhs = vertex_inner_product(apply_delta_n(f.values, refinement), g.values, refinement);
    const auto rhs = vertex_inner_product(f.values, apply_delta_n(g.values, refinement), refinement);
    rec.residual("Delta_N self-adjoint", std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)), 1e-10);
  }

  // eigenbasis
  const auto primitives = primitive_spectrum(graph);
  rec.count("primitive dimension = 2 N_E", primitives.dimension(), 2 * graph.edge_count());
  rec.count("dim Z_1 = N_E - N_V + [bipartite]", flow_space(graph).dimension(),
            graph.edge_count() - graph.vertex_count() + (colors.bipartite() ? 1 : 0));
  {
    double continuity = 0.0, kirchhoff = 0.0, relation = 0.0, ortho = 0.0, dichotomy = 0.0;
    for (const auto& block : primitives.blocks) {
      for (std::size_t i = 0; i < block.dimension(); ++i) {
        const auto& f = block.functions[i];
        const auto r = vertex_condition_residual(f, graph);
        continuity = std::max(continuity, r.continuity);
        kirchhoff = std::max(kirchhoff, r.kirchhoff / std::max(1.0, f.omega));
        if (block.kinds[i] == WaveKind::Lifted) relation = std::max(relation, vertex_relation_residual(f, graph));
        for (std::size_t j = 0; j < block.dimension(); ++j)
          ortho = std::max(ortho, std::abs(continuous_inner_product(f, block.functions[j]) - (i == j ? 1.0 : 0.0)));
        if (block.kinds[i] != WaveKind::Lifted) {
          const auto y = f.vertex_values(graph);
          double lo = INFINITY, hi = 0.0;
          for (const auto& v : y) {
            lo = std::min(lo, std::abs(v));
            hi = std::max(hi, std::abs(v));
          }
          // Either all vertex values vanish or none does.
          dichotomy = std::max(dichotomy, hi < 1e-10 ? 0.0 : (lo > 1e-10 ? 0.0 : hi));
        }
      }
    }
    rec.residual("eigenfunction continuity", continuity, 1e-10);
    rec.residual("eigenfunction Kirchhoff condition", kirchhoff, 1e-9);
    rec.residual("vertex relation cos(w) y(v) = neighbour mean", relation, 1e-9);
    rec.residual("primitive blocks orthonormal", ortho, 1e-10);
    rec.residual("vanishing dichotomy at pi and 2 pi", dichotomy, 1e-10);
  }

  // sampling
  {
    const Refinement refinement(graph, level);
    double nip = 0.0, eigen = 0.0;
    for (const auto& block : primitives.blocks) {
      const auto& f = block.functions.front();
      const auto& g = block.functions.back();
      const auto rf = restrict_to_samples(f, graph, level), rg = restrict_to_samples(g, graph, level);
      Complex trapezoids{0.0, 0.0};
      for (std::size_t e = 0; e < graph.edge_count(); ++e) {
        auto fs = edge_samples(f, e, level);
        const auto gs = edge_samples(g, e, level);
        for (std::size_t n = 0; n <= level; ++n) fs[n] *= std::conj(gs[n]);
        trapezoids += trapezoid(fs);
      }
      trapezoids /= static_cast<double>(graph.edge_count());
      nip = std::max(nip, std::abs(vertex_inner_product(rf.values, rg.values, refinement) - trapezoids));
      const auto applied = apply_delta_n(rf.values, refinement);
      const double mu = delta_n_eigenvalue(f.eigenvalue(), level);
      std::vector<Complex> expected(rf.values.size());
      for (std::size_t i = 0; i < expected.size(); ++i) expected[i] = mu * rf.values[i];
      eigen = std::max(eigen, max_diff(applied, expected) / std::max(1.0, mu * norm(rf.values)));
    }
    rec.residual("sampled inner product = trapezoid sums", nip, 1e-12);
    rec.residual("Delta_N R_N psi = mu R_N psi", eigen, 1e-8);
  }

  // transform
  const auto basis = SpectralBasis::build(graph, level);
  {
    std::size_t dim = 2;
    double identity = 0.0, special = 0.0;
    for (const auto& block : basis.blocks()) {
      dim += block.dimension();
      const auto eye = Eigen::MatrixXcd::Identity(block.gram.rows(), block.gram.cols());
      identity = std::max(identity, (block.orthonormalizer * block.gram * block.orthonormalizer.adjoint() - eye)
                                        .cwiseAbs()
                                        .maxCoeff());
      const double w0 = basis.primitives().blocks[block.k].omega;
      if (std::abs(w0 - pi) < 1e-12 || std::abs(w0 - 2 * pi) < 1e-12)
        special = std::max(special, (block.gram - eye).cwiseAbs().maxCoeff());
    }
    rec.count("completeness N_V + (N-1) N_E", dim, basis.size());
    rec.residual("B G B^* = I", identity, 1e-9);
    rec.residual("pi / 2 pi blocks orthonormal on G_N", special, 1e-9);
  }
  {
    const auto f = random_signal(graph, level, rng);
    const auto fast = fft_forward(f, basis);
    const auto slow = oracle::naive_forward(f, basis);
    rec.residual("fft_forward = naive_forward", max_diff(fast, slow), 1e-9);
    rec.residual("fft_inverse = naive_inverse",
                 max_diff(fft_inverse(fast, basis).values, oracle::naive_inverse(fast, basis).values), 1e-9);
    const auto back = fft_inverse(fast, basis);
    rec.residual("round trip relative error", max_diff(back.values, f.values) / norm(f.values), 1e-8);
    const Refinement refinement(graph, level);
    const double energy = std::abs(vertex_inner_product(f.values, f.values, refinement));
    rec.residual("Parseval", std::abs(parseval_norm(fast, basis) - energy), 1e-8);

    const auto lf = fft_forward(VertexSignal{level, apply_delta_n(f.values, refinement)}, basis);
    double diff = 0.0, scale = 0.0;
    for (std::size_t b = 0; b < lf.blocks.size(); ++b)
      for (std::size_t j = 0; j < lf.blocks[b].size(); ++j) {
        diff += std::norm(lf.blocks[b][j] - basis.blocks()[b].mu * fast.blocks[b][j]);
        scale += std::norm(fast.blocks[b][j]);
      }
    diff += std::norm(lf.zero) + std::norm(lf.nyquist - basis.nyquist_mu() * fast.nyquist);
    scale += std::norm(fast.zero) + std::norm(fast.nyquist);
    rec.residual("F(Delta_N f) = mu F(f)", std::sqrt(diff / scale), 1e-8);
  }

  return report;
}

}  // namespace qgraph::verify
