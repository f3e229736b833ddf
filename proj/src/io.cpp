#include "qgraph/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qgraph::io {

namespace {

void dump_into(const Json& value, int indent, int depth, std::string& out) {
  const auto newline = [&](int level) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * level), ' ');
  };
  switch (value.type()) {
    case Json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(key).dump();
        out += indent < 0 ? ":" : ": ";
        dump_into(item, indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::none_of(value.begin(), value.end(),
                                     [](const Json& x) { return x.is_structured(); });
      out += '[';
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i) out += flat && indent >= 0 ? ", " : ",";
        if (!flat) newline(depth + 1);
        dump_into(value[i], indent, depth + 1, out);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double x = value.get<double>();
      if (!std::isfinite(x)) throw FormatError("cannot serialize a non-finite number");
      char buffer[32];
      std::snprintf(buffer, sizeof buffer, "%.17g", x);
      out += buffer;
      return;
    }
    default:
      out += value.dump();
  }
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& json) {
  if (!json.is_array() || json.size() != 2 || !json[0].is_number() || !json[1].is_number())
    throw FormatError("expected a complex number as [re, im], got " + json.dump());
  return {json[0].get<double>(), json[1].get<double>()};
}

Json complex_vector(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(complex_to_json(z));
  return out;
}

const Json& field(const Json& json, const char* name) {
  if (!json.is_object() || !json.contains(name))
    throw FormatError(std::string("missing field \"") + name + "\"");
  return json.at(name);
}

std::size_t non_negative(const Json& json, const char* what) {
  if (!json.is_number_integer() || json.get<long long>() < 0)
    throw FormatError(std::string(what) + " must be a non-negative integer");
  return json.get<std::size_t>();
}

Json function_to_json(const EdgeWaveFunction& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coefficients) coeffs.push_back(Json::array({complex_to_json(c.a), complex_to_json(c.b)}));
  return Json{{"edge_coeffs", std::move(coeffs)}};
}

}  // namespace

std::string dump(const Json& value, int indent) {
  std::string out;
  dump_into(value, indent, 0, out);
  out += '\n';
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text;
}

Json graph_to_json(const Graph& graph) {
  Json edges = Json::array();
  for (const auto& [t, h] : graph.edges()) edges.push_back(Json::array({t, h}));
  return Json{{"name", graph.name()}, {"vertex_count", graph.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& json) {
  const auto& name = field(json, "name");
  if (!name.is_string()) throw FormatError("\"name\" must be a string");
  const auto vertex_count = non_negative(field(json, "vertex_count"), "vertex_count");
  const auto& list = field(json, "edges");
  if (!list.is_array()) throw FormatError("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& pair : list) {
    if (!pair.is_array() || pair.size() != 2) throw FormatError("each edge must be [u, v]");
    edges.push_back({non_negative(pair[0], "edge endpoint"), non_negative(pair[1], "edge endpoint")});
  }
  return Graph::create(name.get<std::string>(), vertex_count, std::move(edges));
}

Graph read_graph(const std::filesystem::path& path) {
  try {
    return graph_from_json(read_json_file(path));
  } catch (const Json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

Json signal_to_json(const VertexSignal& signal) {
  return Json{{"N", signal.level}, {"values", complex_vector(signal.values)}};
}

VertexSignal signal_from_json(const Json& json) {
  VertexSignal signal;
  signal.level = non_negative(field(json, "N"), "N");
  const auto& values = field(json, "values");
  if (!values.is_array()) throw FormatError("\"values\" must be an array");
  for (const auto& z : values) signal.values.push_back(complex_from_json(z));
  return signal;
}

std::string signal_to_csv(const VertexSignal& signal) {
  std::string out = "index,re,im\n";
  char buffer[96];
  for (std::size_t i = 0; i < signal.values.size(); ++i) {
    std::snprintf(buffer, sizeof buffer, "%zu,%.17g,%.17g\n", i, signal.values[i].real(),
                  signal.values[i].imag());
    out += buffer;
  }
  return out;
}

VertexSignal signal_from_csv(const std::string& text, std::size_t level) {
  VertexSignal signal{level, {}};
  std::istringstream in(text);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line.rfind("index", 0) == 0) continue;
    std::size_t index = 0;
    double re = 0.0, im = 0.0;
    char tail = 0;
    if (std::sscanf(line.c_str(), "%zu,%lf,%lf%c", &index, &re, &im, &tail) < 3 ||
        (tail != 0 && tail != '\r'))
      throw FormatError("malformed CSV row " + std::to_string(line_number) + ": " + line);
    if (index != signal.values.size())
      throw FormatError("CSV row " + std::to_string(line_number) + " has index " + std::to_string(index) +
                        ", expected " + std::to_string(signal.values.size()));
    signal.values.emplace_back(re, im);
  }
  return signal;
}

VertexSignal read_signal(const std::filesystem::path& path, std::size_t csv_level) {
  if (path.extension() == ".csv") {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return signal_from_csv(buffer.str(), csv_level);
  }
  try {
    return signal_from_json(read_json_file(path));
  } catch (const Json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

Json spectrum_to_json(const DiscreteSpectrum& spectrum) {
  Json mu = Json::array(), multiplicity = Json::array(), vectors = Json::array();
  for (const auto& space : spectrum.eigenspaces) {
    mu.push_back(space.mu);
    multiplicity.push_back(space.multiplicity());
    for (const auto& v : space.vectors) vectors.push_back(complex_vector(v));
  }
  return Json{{"mu", std::move(mu)}, {"multiplicity", std::move(multiplicity)}, {"vectors", std::move(vectors)}};
}

Json basis_to_json(const PrimitiveSpectrum& spectrum) {
  Json blocks = Json::array();
  blocks.push_back(Json{{"omega", 0.0}, {"functions", Json::array({function_to_json(spectrum.zero_mode)})}});
  for (const auto& block : spectrum.blocks) {
    Json functions = Json::array();
    for (const auto& f : block.functions) functions.push_back(function_to_json(f));
    blocks.push_back(Json{{"omega", block.omega}, {"functions", std::move(functions)}});
  }
  return blocks;
}

Json dft_to_json(const GraphDFT& dft, const SpectralBasis& basis) {
  const auto expansion = coefficients(dft, basis);
  Json blocks = Json::array();
  for (std::size_t b = 0; b < dft.blocks.size(); ++b) {
    const auto& block = basis.blocks()[b];
    blocks.push_back(Json{{"k", block.k},
                          {"m", block.m},
                          {"omega", block.omega},
                          {"raw", complex_vector(dft.blocks[b])},
                          {"coeffs", complex_vector(expansion.blocks[b])}});
  }
  return Json{{"zero", complex_to_json(dft.zero)},
              {"nyquist", complex_to_json(dft.nyquist)},
              {"blocks", std::move(blocks)}};
}

GraphDFT dft_from_json(const Json& json, const SpectralBasis& basis) {
  GraphDFT dft;
  try {
    dft.zero = complex_from_json(field(json, "zero"));
    dft.nyquist = complex_from_json(field(json, "nyquist"));
    const auto& blocks = field(json, "blocks");
    if (!blocks.is_array()) throw FormatError("\"blocks\" must be an array");
    if (blocks.size() != basis.blocks().size())
      throw ShapeError("transform has " + std::to_string(blocks.size()) + " blocks, basis for N = " +
                       std::to_string(basis.level()) + " has " + std::to_string(basis.blocks().size()));
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const auto& item = blocks[b];
      const auto& expected = basis.blocks()[b];
      if (non_negative(field(item, "k"), "k") != expected.k || non_negative(field(item, "m"), "m") != expected.m)
        throw ShapeError("block " + std::to_string(b) + " is labelled (k, m) = (" + field(item, "k").dump() +
                         ", " + field(item, "m").dump() + "), expected (" + std::to_string(expected.k) + ", " +
                         std::to_string(expected.m) + ")");
      std::vector<Complex> raw;
      const auto& values = field(item, "raw");
      if (!values.is_array()) throw FormatError("\"raw\" must be an array");
      for (const auto& z : values) raw.push_back(complex_from_json(z));
      dft.blocks.push_back(std::move(raw));
    }
  } catch (const Json::exception& e) {
    throw FormatError(e.what());
  }
  check_dft(dft, basis);
  return dft;
}

}  // namespace qgraph::io
