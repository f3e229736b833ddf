#include "qgraph/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qgraph/discrete_spectrum.hpp"
#include "qgraph/fft.hpp"

namespace qgraph {

using std::numbers::pi;

namespace {

// m-independent pieces of the Gram matrix of a primitive block:
// Gram(m) = (same + up * T_N(e^{2 i w x}) + down * T_N(e^{-2 i w x})) / N_E.
struct GramParts {
  Eigen::MatrixXcd same, up, down;
};

GramParts gram_parts(const PrimitiveBlock& block) {
  const auto dim = static_cast<Eigen::Index>(block.dimension());
  GramParts parts{Eigen::MatrixXcd::Zero(dim, dim), Eigen::MatrixXcd::Zero(dim, dim),
                  Eigen::MatrixXcd::Zero(dim, dim)};
  const auto edges = block.functions.front().coefficients.size();
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      for (std::size_t e = 0; e < edges; ++e) {
        const auto& ci = block.functions[i].coefficients[e];
        const auto& cj = block.functions[j].coefficients[e];
        parts.same(i, j) += ci.a * std::conj(cj.a) + ci.b * std::conj(cj.b);
        parts.up(i, j) += ci.a * std::conj(cj.b);
        parts.down(i, j) += ci.b * std::conj(cj.a);
      }
  return parts;
}

// Modified Gram-Schmidt with reorthogonalization on coefficient vectors under
// <u, v> = u^T gram conj(v). Row i of the result is eta_i.
Eigen::MatrixXcd orthonormalizer(const Eigen::MatrixXcd& gram, double rank_tolerance) {
  const auto dim = gram.rows();
  Eigen::MatrixXcd rows = Eigen::MatrixXcd::Identity(dim, dim);
  auto inner = [&](Eigen::Index a, Eigen::Index b) -> Complex {
    return (rows.row(a) * gram * rows.row(b).adjoint())(0, 0);
  };
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double original = std::sqrt(std::abs(inner(i, i)));
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index j = 0; j < i; ++j) rows.row(i) -= inner(i, j) * rows.row(j);
    const double norm = std::sqrt(std::abs(inner(i, i)));
    if (!(norm > rank_tolerance * original))
      throw NumericalError("restricted eigenbasis block is rank deficient");
    rows.row(i) /= norm;
  }
  return rows;
}

double max_abs(const std::vector<Complex>& v) {
  double out = 0.0;
  for (const auto& x : v) out = std::max(out, std::abs(x));
  return out;
}

}  // namespace

SpectralBasis SpectralBasis::build(const Graph& graph, std::size_t level,
                                   const EigenbasisOptions& options) {
  if (level < 2 || !is_power_of_two(level))
    throw ShapeError("refinement level must be a power of two >= 2, got " + std::to_string(level));

  SpectralBasis basis(graph, level);
  basis.primitives_ = primitive_spectrum(basis.graph_, options);
  const auto& primitives = basis.primitives_.blocks;
  const std::size_t count = primitives.size();
  const std::size_t half = level / 2;
  const double n = static_cast<double>(level);
  const double edges = static_cast<double>(graph.edge_count());

  std::vector<GramParts> parts;
  for (const auto& block : primitives) parts.push_back(gram_parts(block));

  basis.block_lookup_.assign(count, {});
  for (std::size_t m = 0; m < half; ++m)
    for (std::size_t k = 0; k < count; ++k) {
      if (m >= basis.shift_count(k)) continue;
      BasisBlock block;
      block.k = k;
      block.m = m;
      block.omega = primitives[k].omega + 2.0 * pi * static_cast<double>(m);
      block.mu = delta_n_eigenvalue(block.eigenvalue(), level);
      const Complex t_up = trapezoid_exp(2.0 * block.omega, level);
      const Complex t_down = trapezoid_exp(-2.0 * block.omega, level);
      block.gram = (parts[k].same + parts[k].up * t_up + parts[k].down * t_down) / edges;
      block.orthonormalizer = orthonormalizer(block.gram, options.rank_tolerance);
      block.recovery = block.orthonormalizer.adjoint() * block.orthonormalizer;
      basis.block_lookup_[k].push_back(basis.blocks_.size());
      basis.blocks_.push_back(std::move(block));
    }

  // omega = N pi: only the cosine survives restriction to G_N.
  const auto& top = primitives.back();
  const auto cosine = std::find(top.kinds.begin(), top.kinds.end(), WaveKind::Cosine);
  if (cosine == top.kinds.end()) throw NumericalError("2 pi block has no cosine eigenfunction");
  basis.nyquist_function_ =
      shift(top.functions[static_cast<std::size_t>(cosine - top.kinds.begin())], half - 1);
  {
    const Refinement refinement(basis.graph_, level);
    auto samples = restrict_to_samples(basis.nyquist_function_, basis.graph_, level).values;
    const double scale = 1.0 / std::sqrt(std::abs(vertex_inner_product(samples, samples, refinement)));
    for (auto& c : basis.nyquist_function_.coefficients) {
      c.a *= scale;
      c.b *= scale;
    }
    for (auto& x : samples) x *= scale;
    basis.nyquist_norm_squared_ = std::abs(vertex_inner_product(samples, samples, refinement));
    basis.nyquist_samples_ = std::move(samples);
  }

  for (const auto& block : primitives) {
    std::vector<Complex> table(level + 1);
    for (std::size_t i = 0; i <= level; ++i)
      table[i] = std::polar(1.0, -block.omega * static_cast<double>(i) / n);
    basis.modulation_.push_back(std::move(table));
  }

  std::size_t dimension = 2;  // constants and Nyquist cosine
  for (const auto& block : basis.blocks_) dimension += block.dimension();
  if (dimension != basis.size()) {
    std::ostringstream msg;
    msg << "eigenbasis of G_" << level << " has " << dimension << " functions but the vertex space has "
        << basis.size() << " dimensions";
    throw NumericalError(msg.str());
  }
  return basis;
}

std::size_t SpectralBasis::size() const noexcept {
  return graph_.vertex_count() + (level_ - 1) * graph_.edge_count();
}

std::size_t SpectralBasis::shift_count(std::size_t k) const {
  const bool top = k + 1 == primitives_.blocks.size();
  return level_ / 2 - (top ? 1 : 0);
}

std::size_t SpectralBasis::block_index(std::size_t m, std::size_t k) const {
  return block_lookup_.at(k).at(m);
}

EdgeWaveFunction SpectralBasis::function(std::size_t block, std::size_t j) const {
  const auto& b = blocks_.at(block);
  return shift(primitives_.blocks[b.k].functions.at(j), b.m);
}

double SpectralBasis::nyquist_mu() const noexcept {
  return 2.0 * static_cast<double>(level_) * static_cast<double>(level_);
}

void check_dft(const GraphDFT& dft, const SpectralBasis& basis) {
  if (dft.blocks.size() != basis.blocks().size())
    throw ShapeError("transform has " + std::to_string(dft.blocks.size()) + " blocks, basis has " +
                     std::to_string(basis.blocks().size()));
  for (std::size_t b = 0; b < dft.blocks.size(); ++b)
    if (dft.blocks[b].size() != basis.blocks()[b].dimension())
      throw ShapeError("block " + std::to_string(b) + " has length " +
                       std::to_string(dft.blocks[b].size()) + ", expected " +
                       std::to_string(basis.blocks()[b].dimension()));
}

GraphDFT fft_forward(const VertexSignal& f, const SpectralBasis& basis) {
  const auto& graph = basis.graph();
  const auto level = basis.level();
  if (f.level != level) throw ShapeError("signal level does not match basis level");
  check_signal(f, graph);

  const Refinement refinement(graph, level);
  const auto& primitives = basis.primitives().blocks;
  const double n = static_cast<double>(level);

  GraphDFT out;
  out.blocks.resize(basis.blocks().size());
  for (std::size_t b = 0; b < out.blocks.size(); ++b)
    out.blocks[b].assign(basis.blocks()[b].dimension(), Complex{0.0, 0.0});

  std::vector<Complex> samples(level + 1), plus(level), minus(level);
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    for (std::size_t i = 0; i <= level; ++i) samples[i] = f.values[refinement.index(e, i)];
    for (std::size_t k = 0; k < primitives.size(); ++k) {
      const auto& mod = basis.modulation(k);
      for (std::size_t i = 0; i < level; ++i) {
        plus[i] = samples[i] * mod[i];
        minus[i] = samples[i] * std::conj(mod[i]);
      }
      // T_N = plain average of x_0..x_{N-1} plus (g(1) - g(0)) / 2N; exp(-+2 pi i m) = 1
      // makes the correction the same for every shift m.
      const Complex plus_end = (samples[level] * mod[level] - samples[0]) / (2.0 * n);
      const Complex minus_end = (samples[level] * std::conj(mod[level]) - samples[0]) / (2.0 * n);
      radix2_fft_inplace(plus, Direction::Forward);
      radix2_fft_inplace(minus, Direction::Forward);

      const auto& functions = primitives[k].functions;
      for (std::size_t m = 0; m < basis.shift_count(k); ++m) {
        const Complex t_plus = plus[m] / n + plus_end;
        const Complex t_minus = minus[(level - m) % level] / n + minus_end;
        auto& x = out.blocks[basis.block_index(m, k)];
        for (std::size_t j = 0; j < functions.size(); ++j) {
          const auto& c = functions[j].coefficients[e];
          x[j] += std::conj(c.a) * t_plus + std::conj(c.b) * t_minus;
        }
      }
    }
  }
  const double edges = static_cast<double>(graph.edge_count());
  for (auto& block : out.blocks)
    for (auto& x : block) x /= edges;

  const std::vector<Complex> ones(refinement.size(), Complex{1.0, 0.0});
  out.zero = vertex_inner_product(f.values, ones, refinement);
  out.nyquist = vertex_inner_product(f.values, basis.nyquist_samples(), refinement);
  return out;
}

Expansion coefficients(const GraphDFT& dft, const SpectralBasis& basis) {
  check_dft(dft, basis);
  Expansion out;
  out.zero = dft.zero;  // <1, 1>_N = 1
  out.nyquist = dft.nyquist / basis.nyquist_norm_squared();
  out.blocks.reserve(dft.blocks.size());
  for (std::size_t b = 0; b < dft.blocks.size(); ++b) {
    const auto& raw = dft.blocks[b];
    const Eigen::Map<const Eigen::VectorXcd> x(raw.data(), static_cast<Eigen::Index>(raw.size()));
    const Eigen::VectorXcd c = basis.blocks()[b].recovery.transpose() * x;
    out.blocks.emplace_back(c.data(), c.data() + c.size());
  }
  return out;
}

VertexSignal synthesize(const Expansion& expansion, const SpectralBasis& basis) {
  const auto& graph = basis.graph();
  const auto level = basis.level();
  {
    GraphDFT shape{expansion.zero, expansion.blocks, expansion.nyquist};
    check_dft(shape, basis);
  }
  const Refinement refinement(graph, level);
  const auto& primitives = basis.primitives().blocks;

  VertexSignal out{level, std::vector<Complex>(refinement.size(), Complex{0.0, 0.0})};
  std::vector<bool> assigned(graph.vertex_count(), false);
  double mismatch = 0.0;

  std::vector<Complex> values(level + 1), alpha(level), beta(level);
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    for (std::size_t i = 0; i <= level; ++i)
      values[i] = expansion.zero + expansion.nyquist * basis.nyquist_samples()[refinement.index(e, i)];

    for (std::size_t k = 0; k < primitives.size(); ++k) {
      std::fill(alpha.begin(), alpha.end(), Complex{0.0, 0.0});
      std::fill(beta.begin(), beta.end(), Complex{0.0, 0.0});
      const auto& functions = primitives[k].functions;
      for (std::size_t m = 0; m < basis.shift_count(k); ++m) {
        const auto& c = expansion.blocks[basis.block_index(m, k)];
        for (std::size_t j = 0; j < functions.size(); ++j) {
          alpha[m] += c[j] * functions[j].coefficients[e].a;
          beta[m] += c[j] * functions[j].coefficients[e].b;
        }
      }
      // sum_m alpha_m exp(2 pi i m n / N) is N times the inverse DFT.
      radix2_fft_inplace(alpha, Direction::Inverse);
      radix2_fft_inplace(beta, Direction::Forward);
      const auto& mod = basis.modulation(k);
      const double n = static_cast<double>(level);
      for (std::size_t i = 0; i <= level; ++i)
        values[i] += std::conj(mod[i]) * alpha[i % level] * n + mod[i] * beta[i % level];
    }

    for (std::size_t i = 1; i < level; ++i) out.values[refinement.index(e, i)] = values[i];
    for (std::size_t i : {std::size_t{0}, level}) {
      const auto v = refinement.index(e, i);
      if (!assigned[v]) {
        out.values[v] = values[i];
        assigned[v] = true;
      } else {
        mismatch = std::max(mismatch, std::abs(out.values[v] - values[i]));
      }
    }
  }

  const double scale = max_abs(out.values);
  if (mismatch > 1e-8 * std::max(scale, 1e-300)) {
    std::ostringstream msg;
    msg << "inverse transform is discontinuous at an original vertex (spread " << mismatch << ")";
    throw NumericalError(msg.str());
  }
  return out;
}

VertexSignal fft_inverse(const GraphDFT& dft, const SpectralBasis& basis) {
  return synthesize(coefficients(dft, basis), basis);
}

double parseval_norm(const GraphDFT& dft, const SpectralBasis& basis) {
  check_dft(dft, basis);
  double total = std::norm(dft.zero) + std::norm(dft.nyquist) / basis.nyquist_norm_squared();
  for (std::size_t b = 0; b < dft.blocks.size(); ++b) {
    const auto& raw = dft.blocks[b];
    const Eigen::Map<const Eigen::VectorXcd> x(raw.data(), static_cast<Eigen::Index>(raw.size()));
    total += (basis.blocks()[b].orthonormalizer.conjugate() * x).squaredNorm();
  }
  return total;
}

VertexSignal spectral_filter(const VertexSignal& f, const SpectralBasis& basis,
                             const std::function<bool(double)>& keep) {
  auto dft = fft_forward(f, basis);
  if (!keep(0.0)) dft.zero = 0.0;
  const double nyquist_omega = pi * static_cast<double>(basis.level());
  if (!keep(nyquist_omega * nyquist_omega)) dft.nyquist = 0.0;
  for (std::size_t b = 0; b < dft.blocks.size(); ++b)
    if (!keep(basis.blocks()[b].eigenvalue()))
      std::fill(dft.blocks[b].begin(), dft.blocks[b].end(), Complex{0.0, 0.0});
  return fft_inverse(dft, basis);
}

}  // namespace qgraph
