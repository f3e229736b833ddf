#include <doctest.h>

#include <numbers>

#include "qgraph/oracle.hpp"
#include "qgraph/transform.hpp"
#include "support.hpp"

using namespace qgraph;
using std::numbers::pi;

namespace {

double max_diff(const GraphDFT& a, const GraphDFT& b) {
  double out = std::max(std::abs(a.zero - b.zero), std::abs(a.nyquist - b.nyquist));
  for (std::size_t i = 0; i < a.blocks.size(); ++i)
    out = std::max(out, testing::max_abs_diff(a.blocks[i], b.blocks[i]));
  return out;
}

Expansion zero_expansion(const SpectralBasis& basis) {
  Expansion e;
  for (const auto& block : basis.blocks()) e.blocks.emplace_back(block.dimension(), 0.0);
  return e;
}

// Weighted least-squares coefficients of f on the sampled vectors of one block.
Eigen::VectorXcd least_squares(const VertexSignal& f, const SpectralBasis& basis, std::size_t b) {
  const Refinement r(basis.graph(), basis.level());
  const auto dim = static_cast<Eigen::Index>(basis.blocks()[b].dimension());
  const auto rows = static_cast<Eigen::Index>(r.size());
  Eigen::MatrixXcd phi(rows, dim);
  Eigen::VectorXcd rhs(rows);
  for (Eigen::Index j = 0; j < dim; ++j) {
    const auto samples = restrict_to_samples(basis.function(b, static_cast<std::size_t>(j)), basis.graph(),
                                             basis.level()).values;
    for (Eigen::Index i = 0; i < rows; ++i)
      phi(i, j) = std::sqrt(static_cast<double>(r.degree(static_cast<std::size_t>(i)))) *
                  samples[static_cast<std::size_t>(i)];
  }
  for (Eigen::Index i = 0; i < rows; ++i)
    rhs(i) = std::sqrt(static_cast<double>(r.degree(static_cast<std::size_t>(i)))) *
             f.values[static_cast<std::size_t>(i)];
  return phi.colPivHouseholderQr().solve(rhs);
}

}  // namespace

TEST_SUITE("transform") {

TEST_CASE("completeness counts") {
  const auto c3 = SpectralBasis::build(generators::cycle(3), 4);
  CHECK(c3.size() == 12);
  std::size_t dim = 2;
  for (const auto& b : c3.blocks()) dim += b.dimension();
  CHECK(dim == 12);
  CHECK(c3.shift_count(0) == 2);
  CHECK(c3.shift_count(2) == 1);

  const auto k42 = SpectralBasis::build(generators::complete_bipartite(4, 2), 8);
  CHECK(k42.size() == 62);
  std::size_t total = 2;
  for (const auto& b : k42.blocks()) total += b.dimension();
  CHECK(total == 62);
}

TEST_CASE("block layout") {
  const auto basis = SpectralBasis::build(generators::bowtie(), 8);
  for (std::size_t b = 0; b < basis.blocks().size(); ++b) {
    const auto& block = basis.blocks()[b];
    CHECK(basis.block_index(block.m, block.k) == b);
    CHECK(block.omega == doctest::Approx(basis.primitives().blocks[block.k].omega + 2 * pi * block.m));
    CHECK(block.omega < 8 * pi);
    CHECK(block.mu == doctest::Approx(delta_n_eigenvalue(block.eigenvalue(), 8)));
    const auto eye = Eigen::MatrixXcd::Identity(block.gram.rows(), block.gram.cols());
    CHECK((block.gram - block.gram.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((block.orthonormalizer * block.gram * block.orthonormalizer.adjoint() - eye).cwiseAbs().maxCoeff() < 1e-9);
  }
  CHECK(basis.nyquist_mu() == doctest::Approx(2.0 * 64));
  CHECK(std::abs(basis.nyquist_norm_squared() - 1.0) < 1e-12);
}

TEST_CASE("gram matrix entries are sampled inner products") {
  const auto basis = SpectralBasis::build(generators::complete_bipartite(4, 2), 8);
  const Refinement r(basis.graph(), 8);
  for (std::size_t b = 0; b < basis.blocks().size(); b += 3) {
    const auto& block = basis.blocks()[b];
    for (std::size_t i = 0; i < block.dimension(); ++i)
      for (std::size_t j = 0; j < block.dimension(); ++j) {
        const auto fi = restrict_to_samples(basis.function(b, i), basis.graph(), 8).values;
        const auto fj = restrict_to_samples(basis.function(b, j), basis.graph(), 8).values;
        CHECK(std::abs(block.gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) -
                       vertex_inner_product(fi, fj, r)) < 1e-13);
      }
  }
}

TEST_CASE("rejects bad levels") {
  const auto g = generators::cycle(3);
  CHECK_THROWS_AS(SpectralBasis::build(g, 6), ShapeError);
  CHECK_THROWS_AS(SpectralBasis::build(g, 1), ShapeError);
  CHECK_THROWS_AS(SpectralBasis::build(g, 0), ShapeError);
}

TEST_CASE("constant signal has only the zero coefficient") {
  const auto basis = SpectralBasis::build(generators::bowtie(), 16);
  const VertexSignal f{16, std::vector<Complex>(basis.size(), Complex(2.0, -1.0))};
  const auto dft = fft_forward(f, basis);
  CHECK(std::abs(dft.zero - Complex(2.0, -1.0)) < 1e-13);
  CHECK(std::abs(dft.nyquist) < 1e-10);
  for (const auto& block : dft.blocks)
    for (const auto& x : block) CHECK(std::abs(x) < 1e-10);
  const auto slow = oracle::naive_forward(f, basis);
  CHECK(std::abs(slow.zero - dft.zero) < 1e-13);
}

TEST_CASE("restricted basis functions transform into their own block") {
  for (const auto& g : {generators::bowtie(), generators::complete_bipartite(4, 2)}) {
    const auto basis = SpectralBasis::build(g, 8);
    for (std::size_t b = 0; b < basis.blocks().size(); ++b)
      for (std::size_t j = 0; j < basis.blocks()[b].dimension(); ++j) {
        const auto f = restrict_to_samples(basis.function(b, j), g, 8);
        const auto c = coefficients(fft_forward(f, basis), basis);
        CHECK(std::abs(c.zero) < 1e-9);
        CHECK(std::abs(c.nyquist) < 1e-9);
        for (std::size_t b2 = 0; b2 < c.blocks.size(); ++b2)
          for (std::size_t j2 = 0; j2 < c.blocks[b2].size(); ++j2)
            CHECK(std::abs(c.blocks[b2][j2] - ((b2 == b && j2 == j) ? 1.0 : 0.0)) < 1e-9);
      }
  }
}

TEST_CASE("a unit coefficient synthesizes the basis function") {
  const auto g = generators::cycle(4);
  const auto basis = SpectralBasis::build(g, 8);
  for (std::size_t b = 0; b < basis.blocks().size(); ++b) {
    auto e = zero_expansion(basis);
    e.blocks[b][0] = 1.0;
    const auto y = synthesize(e, basis);
    CHECK(testing::max_abs_diff(y.values, restrict_to_samples(basis.function(b, 0), g, 8).values) < 1e-12);
  }
  auto e = zero_expansion(basis);
  e.nyquist = 1.0;
  CHECK(testing::max_abs_diff(synthesize(e, basis).values, basis.nyquist_samples()) < 1e-12);
  e.nyquist = 0.0;
  e.zero = 3.0;
  for (const auto& x : synthesize(e, basis).values) CHECK(std::abs(x - 3.0) < 1e-13);
}

TEST_CASE("coefficient recovery equals weighted least squares per block") {
  std::mt19937 rng(21);
  const auto basis = SpectralBasis::build(generators::complete_bipartite(4, 2), 8);
  const auto f = testing::random_signal(basis.graph(), 8, rng);
  const auto c = coefficients(fft_forward(f, basis), basis);
  for (std::size_t b = 0; b < basis.blocks().size(); ++b) {
    const auto reference = least_squares(f, basis, b);
    for (std::size_t j = 0; j < c.blocks[b].size(); ++j)
      CHECK(std::abs(c.blocks[b][j] - reference(static_cast<Eigen::Index>(j))) < 1e-9);
  }
}

TEST_CASE("fast transforms match the naive oracles") {
  std::mt19937 rng(31);
  {
    const auto basis = SpectralBasis::build(generators::bowtie(), 16);
    const auto f = testing::random_signal(basis.graph(), 16, rng);
    CHECK(max_diff(fft_forward(f, basis), oracle::naive_forward(f, basis)) < 1e-9);
  }
  {
    const auto basis = SpectralBasis::build(generators::cycle(3), 8);
    const auto f = testing::random_signal(basis.graph(), 8, rng);
    const auto dft = oracle::naive_forward(f, basis);
    CHECK(testing::max_abs_diff(fft_inverse(dft, basis).values, oracle::naive_inverse(dft, basis).values) < 1e-9);
    CHECK(testing::max_abs_diff(oracle::naive_inverse(dft, basis).values, f.values) < 1e-9);
  }
}

TEST_CASE("parseval") {
  const auto basis = SpectralBasis::build(generators::bowtie(), 8);
  const VertexSignal one{8, std::vector<Complex>(basis.size(), 1.0)};
  CHECK(std::abs(parseval_norm(fft_forward(one, basis), basis) - 1.0) < 1e-12);

  std::mt19937 rng(41);
  const auto f = testing::random_signal(basis.graph(), 8, rng);
  const Refinement r(basis.graph(), 8);
  CHECK(std::abs(parseval_norm(fft_forward(f, basis), basis) - vertex_inner_product(f.values, f.values, r).real()) <
        1e-8);

  // Single-block signal against the quadratic form X^* G^-1 X.
  for (std::size_t b = 0; b < basis.blocks().size(); ++b) {
    const auto& block = basis.blocks()[b];
    auto e = zero_expansion(basis);
    std::normal_distribution<double> normal;
    for (auto& x : e.blocks[b]) x = {normal(rng), normal(rng)};
    const auto dft = fft_forward(synthesize(e, basis), basis);
    Eigen::VectorXcd x(static_cast<Eigen::Index>(block.dimension()));
    for (Eigen::Index j = 0; j < x.size(); ++j) x(j) = dft.blocks[b][static_cast<std::size_t>(j)];
    // X = G^T c and ||f||^2 = c^T G conj(c) = X^T conj(c).
    const Eigen::VectorXcd c = block.gram.transpose().fullPivLu().solve(x);
    const double quadratic = (x.transpose() * c.conjugate()).value().real();
    CHECK(std::abs(parseval_norm(dft, basis) - quadratic) < 1e-9 * std::max(1.0, quadratic));
  }
}

TEST_CASE("spectral filter") {
  std::mt19937 rng(51);
  const auto basis = SpectralBasis::build(generators::complete_bipartite(4, 2), 16);
  const auto f = testing::random_signal(basis.graph(), 16, rng);
  const Refinement r(basis.graph(), 16);

  const auto same = spectral_filter(f, basis, [](double) { return true; });
  CHECK(testing::max_abs_diff(same.values, f.values) < 1e-8 * testing::norm2(f.values));

  const auto mean = spectral_filter(f, basis, [](double lambda) { return lambda == 0.0; });
  const std::vector<Complex> ones(r.size(), 1.0);
  const Complex weighted_mean = vertex_inner_product(f.values, ones, r);
  for (const auto& x : mean.values) CHECK(std::abs(x - weighted_mean) < 1e-10);

  const auto last = basis.blocks().size() - 1;
  const auto high = restrict_to_samples(basis.function(last, 0), basis.graph(), 16);
  const double cut = basis.blocks()[last].eigenvalue();
  const auto low = spectral_filter(high, basis, [cut](double lambda) { return lambda < cut; });
  for (const auto& x : low.values) CHECK(std::abs(x) < 1e-8);
}

TEST_CASE("shape errors") {
  const auto basis = SpectralBasis::build(generators::cycle(3), 4);
  CHECK_THROWS_AS(fft_forward(VertexSignal{4, std::vector<Complex>(5)}, basis), ShapeError);
  CHECK_THROWS_AS(fft_forward(VertexSignal{8, std::vector<Complex>(3 + 7 * 3)}, basis), ShapeError);
  GraphDFT bad;
  CHECK_THROWS_AS(fft_inverse(bad, basis), ShapeError);
  CHECK_THROWS_AS(oracle::naive_inverse(bad, basis), ShapeError);
}

TEST_CASE("property: random graphs") {
  std::mt19937 rng(505);
  for (int trial = 0; trial < 12; ++trial) {
    const auto g = testing::random_graph(rng, 8, trial % 3 == 0);
    CAPTURE(trial);
    for (std::size_t level : {4u, 16u}) {
      const auto basis = SpectralBasis::build(g, level);
      std::size_t dim = 2;
      for (const auto& b : basis.blocks()) dim += b.dimension();
      CHECK(dim == g.vertex_count() + (level - 1) * g.edge_count());
      const auto f = testing::random_signal(g, level, rng);
      const auto fast = fft_forward(f, basis);
      CHECK(max_diff(fast, oracle::naive_forward(f, basis)) < 1e-9);
      const auto back = fft_inverse(fast, basis);
      CHECK(testing::max_abs_diff(back.values, oracle::naive_inverse(fast, basis).values) < 1e-9);
      double err = 0.0;
      for (std::size_t i = 0; i < f.values.size(); ++i) err += std::norm(back.values[i] - f.values[i]);
      CHECK(std::sqrt(err) <= 1e-8 * testing::norm2(f.values));
      const Refinement r(g, level);
      CHECK(std::abs(parseval_norm(fast, basis) - vertex_inner_product(f.values, f.values, r).real()) < 1e-8);
    }
  }
}

}  // TEST_SUITE
