#include "jfrt/window.hpp"

#include <cmath>
#include <map>
#include <string>

#include "jfrt/error.hpp"

namespace jfrt {

WindowedSequence window_signal(const ComplexMatrix& x, std::size_t window, double overlap) {
  if (window == 0) throw Error(ErrorKind::InvalidArgument, "window length must be positive");
  if (!(overlap >= 0.0 && overlap < 1.0)) throw Error(ErrorKind::InvalidArgument, "overlap must lie in [0, 1)");
  const std::size_t t = x.cols();
  if (window > t) {
    throw Error(ErrorKind::WindowTooLarge,
                "window " + std::to_string(window) + " exceeds the " + std::to_string(t) + " available samples");
  }
  const auto step = static_cast<std::size_t>(std::lround(static_cast<double>(window) * (1.0 - overlap)));
  if (step == 0) throw Error(ErrorKind::InvalidArgument, "overlap leaves a zero window step");

  WindowedSequence seq;
  seq.window_length = window;
  seq.step = step;
  const std::size_t count = (t - window) / step + 1;
  for (std::size_t w = 0; w < count; ++w) {
    const std::size_t start = w * step;
    ComplexMatrix part(x.rows(), window);
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t c = 0; c < window; ++c) part(r, c) = x(r, start + c);
    seq.windows.push_back(std::move(part));
    seq.offsets.push_back(start);
  }
  seq.clipped_samples = t - (seq.offsets.back() + window);
  return seq;
}

std::vector<int> window_labels(std::span<const int> sample_labels, const WindowedSequence& seq) {
  std::vector<int> labels;
  labels.reserve(seq.offsets.size());
  for (std::size_t start : seq.offsets) {
    if (start + seq.window_length > sample_labels.size())
      throw Error(ErrorKind::DimensionMismatch, "label sequence is shorter than the windowed signal");
    std::map<int, std::size_t> counts;
    for (std::size_t i = start; i < start + seq.window_length; ++i) ++counts[sample_labels[i]];
    int best = counts.begin()->first;
    for (const auto& [label, n] : counts)
      if (n > counts[best]) best = label;
    labels.push_back(best);
  }
  return labels;
}

}  // namespace jfrt
