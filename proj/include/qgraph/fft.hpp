#pragma once

#include <span>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

enum class Direction { Forward, Inverse };

bool is_power_of_two(std::size_t n) noexcept;

/// In-place iterative radix-2 transform with bit-reversal permutation.
/// Forward computes X_m = sum_n v_n exp(-2 pi i m n / N); Inverse uses the
/// opposite sign and scales by 1/N. Throws ShapeError unless N is a power of two.
void radix2_fft_inplace(std::span<Complex> data, Direction direction);

std::vector<Complex> radix2_fft(std::vector<Complex> data, Direction direction);

}  // namespace qgraph
