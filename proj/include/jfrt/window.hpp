#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jfrt/matrix.hpp"

namespace jfrt {

/// Rectangular windows over the time axis of an N×T signal.
struct WindowedSequence {
  std::vector<ComplexMatrix> windows;  // each N×W
  std::vector<std::size_t> offsets;
  std::size_t window_length = 0;
  std::size_t step = 0;
  std::size_t clipped_samples = 0;
};

/// step = round(W·(1 − overlap)), count = ⌊(T − W)/step⌋ + 1. Trailing
/// samples that do not fill a window are dropped and counted.
WindowedSequence window_signal(const ComplexMatrix& x, std::size_t window, double overlap);

/// Most frequent per-sample label inside each window; ties go to the smaller
/// label.
std::vector<int> window_labels(std::span<const int> sample_labels, const WindowedSequence& seq);

}  // namespace jfrt
