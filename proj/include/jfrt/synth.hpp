#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "jfrt/graph.hpp"
#include "jfrt/joint.hpp"
#include "jfrt/matrix.hpp"

namespace jfrt {

enum class SyntheticKind { smooth, motion3 };

SyntheticKind parse_synthetic_kind(std::string_view name);

/// Synthetic time-vertex data with known structure.
///
/// smooth: one complex N×T signal on a random geometric 5-NN graph in the unit
///   square. Its JFRT at `smooth_order` is supported on the lowest graph
///   modes and the lowest ring frequencies, with 1/((1+m)(1+|f|)) decay.
/// motion3: three coordinate dimensions of N points in 3-D. Time is split into
///   three equal regimes; in regime r each point oscillates with a
///   regime-specific smooth displacement field at a regime-specific period.
///   sample_labels gives the regime of every time sample.
struct SyntheticDataset {
  Graph graph;
  std::vector<Point> coords;
  std::vector<ComplexMatrix> signals;
  std::vector<int> sample_labels;
};

SyntheticDataset synthetic_timevertex(SyntheticKind kind, std::size_t n_vertices, std::size_t n_time,
                                      std::uint64_t seed, FractionalOrderPair smooth_order = {0.93, 1.02});

}  // namespace jfrt
