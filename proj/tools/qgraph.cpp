// Command-line front end: graph generators, spectra, graph FFT and filtering.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>

#include "qgraph/eigenbasis.hpp"
#include "qgraph/generators.hpp"
#include "qgraph/io.hpp"
#include "qgraph/transform.hpp"
#include "qgraph/verify.hpp"

namespace {

using namespace qgraph;
using io::Json;

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kValidation = 2,
  kFormat = 3,
  kVerification = 4,
};

struct Options {
  std::vector<std::string> family;
  std::string graph_path;
  std::string input_path;
  std::string output_path;
  std::size_t level = 0;
  std::optional<double> tolerance;
  double keep_below = 0.0;
};

void emit(const Options& options, const std::string& text) {
  if (options.output_path.empty() || options.output_path == "-")
    std::cout << text;
  else
    io::write_text_file(options.output_path, text);
}

void emit_signal(const Options& options, const VertexSignal& signal) {
  if (options.output_path.size() > 4 && options.output_path.ends_with(".csv"))
    emit(options, io::signal_to_csv(signal));
  else
    emit(options, io::dump(io::signal_to_json(signal)));
}

EigenbasisOptions eigen_options(const Options& options) {
  EigenbasisOptions out;
  if (options.tolerance) out.spectrum.cluster_tolerance = *options.tolerance;
  return out;
}

std::size_t parse_count(const std::string& text) {
  std::size_t used = 0;
  const auto value = std::stoul(text, &used);
  if (used != text.size()) throw std::invalid_argument("not an integer: " + text);
  return value;
}

int cmd_gen(const Options& options) {
  const auto& args = options.family;
  if (args.empty()) throw std::invalid_argument("gen needs a family: k-bipartite m n | cycle V | bowtie");
  std::optional<Graph> graph;
  if (args[0] == "k-bipartite" && args.size() == 3)
    graph = generators::complete_bipartite(parse_count(args[1]), parse_count(args[2]));
  else if (args[0] == "cycle" && args.size() == 2)
    graph = generators::cycle(parse_count(args[1]));
  else if (args[0] == "bowtie" && args.size() == 1)
    graph = generators::bowtie();
  else
    throw std::invalid_argument("unknown family; use k-bipartite m n | cycle V | bowtie");
  emit(options, io::dump(io::graph_to_json(*graph)));
  return kOk;
}

std::string pi_multiple(double omega) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g pi", omega / std::numbers::pi);
  return buffer;
}

int cmd_spectrum(const Options& options) {
  const auto graph = io::read_graph(options.graph_path);
  const auto primitives = primitive_spectrum(graph, eigen_options(options));

  std::cout << "graph " << graph.name() << ": " << graph.vertex_count() << " vertices, "
            << graph.edge_count() << " edges\n";
  std::cout << "Delta_1 eigenvalues (mu x multiplicity):\n";
  for (const auto& space : primitives.discrete.eigenspaces) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "  %.15g x %zu\n", space.mu, space.multiplicity());
    std::cout << buffer;
  }
  std::cout << "primitive frequencies (omega, dimension):\n";
  Json table = Json::array();
  for (const auto& block : primitives.blocks) {
    std::cout << "  " << pi_multiple(block.omega) << "  " << block.dimension() << "\n";
    table.push_back(Json{{"omega", block.omega}, {"dimension", block.dimension()}});
  }
  std::cout << "total " << primitives.dimension() << " = 2 N_E\n";

  if (!options.output_path.empty()) {
    auto json = io::spectrum_to_json(primitives.discrete);
    json["primitives"] = std::move(table);
    io::write_text_file(options.output_path, io::dump(json));
  }
  return kOk;
}

int cmd_basis(const Options& options) {
  const auto graph = io::read_graph(options.graph_path);
  emit(options, io::dump(io::basis_to_json(primitive_spectrum(graph, eigen_options(options)))));
  return kOk;
}

VertexSignal load_signal(const Options& options) {
  auto signal = io::read_signal(options.input_path, options.level);
  if (options.level != 0 && signal.level != options.level)
    throw ShapeError("signal file has N = " + std::to_string(signal.level) + " but --N " +
                     std::to_string(options.level) + " was given");
  return signal;
}

int cmd_fft(const Options& options) {
  const auto graph = io::read_graph(options.graph_path);
  const auto signal = load_signal(options);
  const auto basis = SpectralBasis::build(graph, signal.level, eigen_options(options));
  emit(options, io::dump(io::dft_to_json(fft_forward(signal, basis), basis)));
  return kOk;
}

int cmd_ifft(const Options& options) {
  if (options.level == 0) throw std::invalid_argument("ifft needs --N");
  const auto graph = io::read_graph(options.graph_path);
  const auto basis = SpectralBasis::build(graph, options.level, eigen_options(options));
  const auto dft = io::dft_from_json(io::read_json_file(options.input_path), basis);
  emit_signal(options, fft_inverse(dft, basis));
  return kOk;
}

int cmd_filter(const Options& options) {
  const auto graph = io::read_graph(options.graph_path);
  const auto signal = load_signal(options);
  const auto basis = SpectralBasis::build(graph, signal.level, eigen_options(options));
  const double cut = options.keep_below;
  emit_signal(options, spectral_filter(signal, basis, [cut](double lambda) { return lambda < cut; }));
  return kOk;
}

int cmd_verify(const Options& options) {
  const auto graph = io::read_graph(options.graph_path);
  const auto level = options.level == 0 ? 16 : options.level;
  const auto report = verify::run_suite(graph, level);
  Json checks = Json::array();
  for (const auto& check : report.checks)
    checks.push_back(Json{{"name", check.name},
                          {"measured", check.measured},
                          {"tolerance", check.tolerance},
                          {"passed", check.passed}});
  const Json summary{{"graph", report.graph},
                     {"N", report.level},
                     {"passed", report.passed()},
                     {"checks", std::move(checks)}};
  emit(options, io::dump(summary));
  for (const auto& check : report.checks)
    if (!check.passed)
      std::cerr << "FAILED " << check.name << ": " << check.measured << " > " << check.tolerance << "\n";
  return report.passed() ? kOk : kVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier analysis on equilateral metric graphs"};
  app.require_subcommand(1);
  Options options;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", options.output_path, "Output file (default: stdout)");
  };
  auto add_tolerance = [&](CLI::App* cmd) {
    cmd->add_option("--tolerance", options.tolerance, "Relative eigenvalue clustering tolerance")
        ->check(CLI::PositiveNumber);
  };

  auto* gen = app.add_subcommand("gen", "Write a graph: k-bipartite m n | cycle V | bowtie");
  gen->add_option("family", options.family, "Family and parameters")->required();
  add_output(gen);

  auto* spectrum = app.add_subcommand("spectrum", "Delta_1 spectrum and primitive frequency table");
  spectrum->add_option("graph", options.graph_path)->required();
  add_output(spectrum);
  add_tolerance(spectrum);

  auto* basis = app.add_subcommand("basis", "Orthonormal primitive eigenbasis as JSON");
  basis->add_option("graph", options.graph_path)->required();
  add_output(basis);
  add_tolerance(basis);

  auto* fft = app.add_subcommand("fft", "Forward graph DFT of a signal");
  fft->add_option("graph", options.graph_path)->required();
  fft->add_option("signal", options.input_path)->required();
  fft->add_option("--N", options.level, "Refinement level (required for CSV input)");
  add_output(fft);
  add_tolerance(fft);

  auto* ifft = app.add_subcommand("ifft", "Inverse graph DFT");
  ifft->add_option("graph", options.graph_path)->required();
  ifft->add_option("dft", options.input_path)->required();
  ifft->add_option("--N", options.level, "Refinement level")->required();
  add_output(ifft);
  add_tolerance(ifft);

  auto* filter = app.add_subcommand("filter", "Keep eigenspaces with lambda below a cutoff");
  filter->add_option("graph", options.graph_path)->required();
  filter->add_option("signal", options.input_path)->required();
  filter->add_option("--N", options.level, "Refinement level (required for CSV input)");
  filter->add_option("--keep-below", options.keep_below, "Cutoff on lambda = omega^2")->required();
  add_output(filter);
  add_tolerance(filter);

  auto* verify = app.add_subcommand("verify", "Run the invariant suite on a graph");
  verify->add_option("graph", options.graph_path)->required();
  verify->add_option("--N", options.level, "Refinement level (default 16)");
  add_output(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_gen(options);
    if (*spectrum) return cmd_spectrum(options);
    if (*basis) return cmd_basis(options);
    if (*fft) return cmd_fft(options);
    if (*ifft) return cmd_ifft(options);
    if (*filter) return cmd_filter(options);
    if (*verify) return cmd_verify(options);
  } catch (const ValidationError& e) {
    std::cerr << "invalid graph: " << e.what() << "\n";
    return kValidation;
  } catch (const ShapeError& e) {
    std::cerr << "shape error: " << e.what() << "\n";
    return kFormat;
  } catch (const io::FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kFormat;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
