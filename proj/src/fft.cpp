#include "qgraph/fft.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <utility>

namespace qgraph {

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

namespace {

// exp(-2 pi i k / n) for k < n / 2, cached per thread and length.
const std::vector<Complex>& twiddles(std::size_t n) {
  thread_local std::map<std::size_t, std::vector<Complex>> cache;
  auto& table = cache[n];
  if (table.empty()) {
    table.resize(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k)
      table[k] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
  }
  return table;
}

}  // namespace

void radix2_fft_inplace(std::span<Complex> data, Direction direction) {
  const auto n = data.size();
  if (!is_power_of_two(n))
    throw ShapeError("radix-2 FFT length must be a power of two, got " + std::to_string(n));

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  const auto& table = twiddles(n);
  const bool inverse = direction == Direction::Inverse;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Complex w = inverse ? std::conj(table[k * stride]) : table[k * stride];
        const Complex u = data[start + k];
        const Complex v = data[start + k + half] * w;
        data[start + k] = u + v;
        data[start + k + half] = u - v;
      }
    }
  }

  if (direction == Direction::Inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& x : data) x *= scale;
  }
}

std::vector<Complex> radix2_fft(std::vector<Complex> data, Direction direction) {
  radix2_fft_inplace(data, direction);
  return data;
}

}  // namespace qgraph
