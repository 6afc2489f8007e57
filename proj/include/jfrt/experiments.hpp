#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "jfrt/denoise.hpp"
#include "jfrt/gfrt.hpp"
#include "jfrt/joint.hpp"
#include "jfrt/window.hpp"

namespace jfrt {

/// One row per window: |JFRT| of the window in every coordinate dimension,
/// flattened row-major and concatenated across dimensions (d·N·W columns).
RealMatrix jfrt_features(const std::vector<WindowedSequence>& dims, const GftOperator& g,
                         FractionalOrderPair order);
RealMatrix jfrt_features(const std::vector<WindowedSequence>& dims, const JointOperator& op);

/// Untransformed windows: real parts, then imaginary parts, per dimension.
RealMatrix raw_features(const std::vector<WindowedSequence>& dims);

struct AccuracySummary {
  std::vector<double> accuracies;
  double mean = 0.0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

/// Mean and linearly interpolated quartiles.
AccuracySummary summarize(std::vector<double> accuracies);

struct ClusterConfig {
  std::size_t window = 50;
  double overlap = 0.6;
  std::size_t clusters = 3;
  std::vector<double> alpha_grid{1.0};
  std::vector<double> beta_grid{1.0};
  std::size_t repeats = 20;
  std::uint64_t seed = 1;
  std::size_t n_init = 10;
  double noise_density = 0.1;
  double snr_db = -10.0;
  bool standardize = false;
};

struct OrderAccuracy {
  FractionalOrderPair order;
  AccuracySummary summary;
};

struct ClusterReport {
  std::vector<OrderAccuracy> grid;  // α outer, β inner
  AccuracySummary signal;           // raw noisy windows
  std::size_t windows = 0;
  std::size_t clipped_samples = 0;
  std::optional<std::size_t> jft;    // (1, 1)
  std::optional<std::size_t> jfrtg;  // best with α = 1
  std::optional<std::size_t> jfrtt;  // best with β = 1
  std::size_t jfrt = 0;              // best overall
};

/// Repeats r = 0…repeats−1 use seed + r: each coordinate dimension gets sparse
/// noise from its own derived stream, and every feature map is clustered with
/// the same k-means seed.
ClusterReport run_cluster_experiment(const std::vector<ComplexMatrix>& signals, const GftOperator& g,
                                     std::span<const int> sample_labels, const ClusterConfig& config);

/// `method,alpha,beta,mean,min,q1,median,q3,max`.
void write_cluster_csv(std::ostream& out, const ClusterReport& report);

/// Adds Gaussian noise at snr_db with the given seed and sweeps the grid.
SweepResult run_denoise_experiment(const ComplexMatrix& clean, const GftOperator& g, const SweepGrid& grid,
                                   double snr_db, std::uint64_t seed);

}  // namespace jfrt
