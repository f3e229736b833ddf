#include "qgraph/flow_space.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <stdexcept>

namespace qgraph {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns the pivot column of each nonzero row.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pick = row;
    while (pick < m.size() && m[pick][col] == 0) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::int64_t narrow(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("flow basis entry does not fit in 64 bits");
  return x.convert_to<std::int64_t>();
}

}  // namespace

FlowBasis flow_space(const Graph& graph) {
  const auto nv = graph.vertex_count();
  const auto ne = graph.edge_count();
  RationalMatrix incidence(nv, std::vector<Rational>(ne, 0));
  for (std::size_t e = 0; e < ne; ++e) {
    incidence[graph.edge(e).tail][e] = 1;
    incidence[graph.edge(e).head][e] = 1;
  }
  const auto pivots = row_reduce(incidence, ne);

  std::vector<bool> is_pivot(ne, false);
  for (auto p : pivots) is_pivot[p] = true;

  FlowBasis basis;
  for (std::size_t free = 0; free < ne; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(ne, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -incidence[r][free];

    Integer lcm = 1;
    for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, Integer(denominator(x)));
    std::vector<Integer> ints(ne);
    Integer content = 0;
    for (std::size_t e = 0; e < ne; ++e) {
      ints[e] = Integer(numerator(Rational(v[e] * lcm)));
      content = boost::multiprecision::gcd(content, ints[e]);
    }
    std::vector<std::int64_t> row(ne);
    for (std::size_t e = 0; e < ne; ++e) row[e] = narrow(ints[e] / content);
    basis.vectors.push_back(std::move(row));
  }
  return basis;
}

std::size_t exact_rank(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return 0;
  const auto cols = rows.front().size();
  RationalMatrix m;
  for (const auto& r : rows) {
    if (r.size() != cols) throw ShapeError("ragged matrix");
    m.emplace_back(r.begin(), r.end());
  }
  return row_reduce(m, cols).size();
}

}  // namespace qgraph
