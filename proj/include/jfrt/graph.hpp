#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jfrt/linalg.hpp"
#include "jfrt/matrix.hpp"

namespace jfrt {

using Point = std::vector<double>;

/// Weighted graph on N vertices.
///
/// Undirected graphs have a real, nonnegative, exactly symmetric adjacency
/// with zero diagonal. Directed graphs accept any complex adjacency.
class Graph {
 public:
  static Graph undirected(ComplexMatrix adjacency, std::vector<Point> coords = {});
  static Graph directed(ComplexMatrix adjacency, std::vector<Point> coords = {});

  std::size_t n_vertices() const noexcept { return adjacency_.rows(); }
  const ComplexMatrix& adjacency() const noexcept { return adjacency_; }
  bool is_directed() const noexcept { return directed_; }
  const std::vector<Point>& coords() const noexcept { return coords_; }

  /// Count of undirected edges (m < n with A_{m,n} ≠ 0).
  std::size_t edge_count() const;

 private:
  Graph(ComplexMatrix adjacency, bool directed, std::vector<Point> coords);

  ComplexMatrix adjacency_;
  bool directed_ = false;
  std::vector<Point> coords_;
};

/// Combinatorial Laplacian L = D − A with its spectral basis.
struct Laplacian {
  ComplexMatrix matrix;
  SpectralBasis basis;
};

enum class WeightMode { binary, gaussian };
enum class DistanceMetric { euclidean, haversine };

struct KnnOptions {
  WeightMode weight_mode = WeightMode::gaussian;
  DistanceMetric metric = DistanceMetric::euclidean;
};

/// Great-circle distance in km between (lat, lon) pairs given in degrees.
double haversine_km(const Point& a, const Point& b);

/// Union-symmetrized k-nearest-neighbour graph.
///
/// Gaussian weights are exp(−d²/σ²) with σ the mean distance to the k-th
/// neighbour. Duplicate points are separated by a deterministic jitter of
/// 1e−9 of the bounding-box diagonal keyed by index. Neighbour ties resolve
/// by vertex index.
Graph build_knn_graph(const std::vector<Point>& coords, std::size_t k, KnnOptions options = {});

Laplacian laplacian(const Graph& g);

/// Undirected cycle C_T.
Graph ring_graph(std::size_t size);

/// Directed cycle with A_{m,(m−1) mod T} = 1, so (A·x)_m = x_{m−1}.
Graph directed_circular_graph(std::size_t size);

/// Cyclic first difference (∇x)_m = x_m − x_{(m−1) mod T}.
ComplexMatrix time_gradient(std::size_t size);

/// Weighted incidence matrix (|E|×N): row e for edge (m, n), m < n, holds
/// +√A_{mn} at m and −√A_{mn} at n. ∇ᵀ∇ = L.
ComplexMatrix graph_gradient(const Graph& g);

/// Connected components of an undirected graph (by nonzero adjacency).
std::size_t connected_components(const Graph& g);

}  // namespace jfrt
