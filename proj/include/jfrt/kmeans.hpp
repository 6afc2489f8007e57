#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "jfrt/matrix.hpp"

namespace jfrt {

struct KMeansOptions {
  std::size_t n_init = 10;
  std::size_t max_iterations = 300;
};

struct KMeansResult {
  std::vector<int> assignments;
  RealMatrix centroids;  // k×d
  double wcss = 0.0;     // within-cluster sum of squares
};

/// Lloyd's algorithm from k-means++ seeds; the best of n_init restarts by
/// WCSS is returned. Rows of `features` are points.
KMeansResult kmeans(const RealMatrix& features, std::size_t k, std::uint64_t seed, KMeansOptions options = {});

/// Fraction of matching labels, maximized over relabelings of `assignments`.
/// At most 8 distinct labels on either side.
double clustering_accuracy(std::span<const int> assignments, std::span<const int> ground_truth);

/// Rescales each column to zero mean and unit variance (constant columns are
/// only centered).
void standardize_columns(RealMatrix& features);

}  // namespace jfrt
