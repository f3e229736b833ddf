#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qgraph/discrete_spectrum.hpp"
#include "qgraph/eigenbasis.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/sampling.hpp"
#include "qgraph/transform.hpp"

namespace qgraph::io {

using Json = nlohmann::ordered_json;

/// Malformed or unreadable input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Serializes with every float printed as %.17g, so equal values give equal bytes.
std::string dump(const Json& value, int indent = 2);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// {"name": string, "vertex_count": int, "edges": [[u, v], ...]}
Json graph_to_json(const Graph& graph);
Graph graph_from_json(const Json& json);
Graph read_graph(const std::filesystem::path& path);

// {"N": int, "values": [[re, im], ...]}
Json signal_to_json(const VertexSignal& signal);
VertexSignal signal_from_json(const Json& json);
// index,re,im rows; the level must be supplied since CSV carries no header fields.
std::string signal_to_csv(const VertexSignal& signal);
VertexSignal signal_from_csv(const std::string& text, std::size_t level);
/// Reads .csv files as CSV (needs level) and anything else as JSON.
VertexSignal read_signal(const std::filesystem::path& path, std::size_t csv_level);

// {"mu": [...], "multiplicity": [...], "vectors": [[[re, im], ...], ...]}
Json spectrum_to_json(const DiscreteSpectrum& spectrum);

// [{"omega": w, "functions": [{"edge_coeffs": [[[reA, imA], [reB, imB]], ...]}, ...]}, ...]
// The first entry is the constant function at omega = 0.
Json basis_to_json(const PrimitiveSpectrum& spectrum);

// {"zero": [re, im], "nyquist": [re, im],
//  "blocks": [{"k", "m", "omega", "raw": [[re, im], ...], "coeffs": [[re, im], ...]}, ...]}
Json dft_to_json(const GraphDFT& dft, const SpectralBasis& basis);
/// Reads "raw"; block order and (k, m) labels must match the basis.
GraphDFT dft_from_json(const Json& json, const SpectralBasis& basis);

}  // namespace qgraph::io
