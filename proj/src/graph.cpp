#include "jfrt/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <queue>
#include <string>

#include "jfrt/error.hpp"

namespace jfrt {

Graph::Graph(ComplexMatrix adjacency, bool directed, std::vector<Point> coords)
    : adjacency_(std::move(adjacency)), directed_(directed), coords_(std::move(coords)) {}

Graph Graph::undirected(ComplexMatrix adjacency, std::vector<Point> coords) {
  if (!adjacency.is_square()) throw Error(ErrorKind::DimensionMismatch, "adjacency must be square");
  if (!coords.empty() && coords.size() != adjacency.rows())
    throw Error(ErrorKind::DimensionMismatch, "coordinate count does not match vertex count");
  const std::size_t n = adjacency.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (adjacency(i, i) != cplx{}) throw Error(ErrorKind::NotUndirected, "nonzero diagonal at vertex " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      const cplx a = adjacency(i, j);
      if (a.imag() != 0.0 || !(a.real() >= 0.0) || !std::isfinite(a.real()))
        throw Error(ErrorKind::NotUndirected, "weights must be real, finite and nonnegative");
      if (a != adjacency(j, i))
        throw Error(ErrorKind::NotUndirected,
                    "asymmetric adjacency at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  return Graph(std::move(adjacency), false, std::move(coords));
}

Graph Graph::directed(ComplexMatrix adjacency, std::vector<Point> coords) {
  if (!adjacency.is_square()) throw Error(ErrorKind::DimensionMismatch, "adjacency must be square");
  if (!adjacency.all_finite()) throw Error(ErrorKind::InvalidArgument, "adjacency has non-finite entries");
  if (!coords.empty() && coords.size() != adjacency.rows())
    throw Error(ErrorKind::DimensionMismatch, "coordinate count does not match vertex count");
  return Graph(std::move(adjacency), true, std::move(coords));
}

std::size_t Graph::edge_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n_vertices(); ++i)
    for (std::size_t j = i + 1; j < n_vertices(); ++j)
      if (adjacency_(i, j) != cplx{} || adjacency_(j, i) != cplx{}) ++count;
  return count;
}

double haversine_km(const Point& a, const Point& b) {
  constexpr double earth_radius_km = 6371.0088;
  constexpr double rad = std::numbers::pi / 180.0;
  const double dlat = (b[0] - a[0]) * rad;
  const double dlon = (b[1] - a[1]) * rad;
  const double h = std::sin(dlat / 2) * std::sin(dlat / 2) +
                   std::cos(a[0] * rad) * std::cos(b[0] * rad) * std::sin(dlon / 2) * std::sin(dlon / 2);
  return 2.0 * earth_radius_km * std::asin(std::min(1.0, std::sqrt(h)));
}

Graph build_knn_graph(const std::vector<Point>& coords, std::size_t k, KnnOptions options) {
  const std::size_t n = coords.size();
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  if (n < k + 1) {
    throw Error(ErrorKind::TooFewPoints,
                "k-NN with k=" + std::to_string(k) + " needs at least " + std::to_string(k + 1) + " points");
  }
  const std::size_t dim = coords.front().size();
  if (dim == 0) throw Error(ErrorKind::InvalidArgument, "points have no coordinates");
  for (const auto& p : coords)
    if (p.size() != dim) throw Error(ErrorKind::DimensionMismatch, "points have inconsistent dimensions");
  if (options.metric == DistanceMetric::haversine && dim != 2)
    throw Error(ErrorKind::InvalidArgument, "haversine distance needs (lat, lon) points");

  double diag2 = 0.0;
  for (std::size_t d = 0; d < dim; ++d) {
    auto [lo, hi] = std::minmax_element(coords.begin(), coords.end(),
                                        [d](const Point& a, const Point& b) { return a[d] < b[d]; });
    diag2 += ((*hi)[d] - (*lo)[d]) * ((*hi)[d] - (*lo)[d]);
  }
  if (diag2 == 0.0) throw Error(ErrorKind::DegenerateGeometry, "all points coincide");
  const double diag = std::sqrt(diag2);

  std::vector<Point> pts = coords;
  for (std::size_t i = 1; i < n; ++i) {
    const bool duplicate = std::any_of(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(i),
                                       [&](const Point& q) { return q == pts[i]; });
    if (duplicate) pts[i][0] += 1e-9 * diag * (1.0 + static_cast<double>(i) / static_cast<double>(n));
  }

  auto distance = [&](const Point& a, const Point& b) {
    if (options.metric == DistanceMetric::haversine) return haversine_km(a, b);
    double s = 0.0;
    for (std::size_t d = 0; d < dim; ++d) s += (a[d] - b[d]) * (a[d] - b[d]);
    return std::sqrt(s);
  };

  std::vector<double> dist(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) dist[i * n + j] = dist[j * n + i] = distance(pts[i], pts[j]);

  std::vector<std::vector<std::size_t>> neighbours(n);
  double kth_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> others;
    others.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) others.push_back(j);
    std::partial_sort(others.begin(), others.begin() + static_cast<std::ptrdiff_t>(k), others.end(),
                      [&](std::size_t a, std::size_t b) {
                        const double da = dist[i * n + a];
                        const double db = dist[i * n + b];
                        return da < db || (da == db && a < b);
                      });
    others.resize(k);
    kth_sum += dist[i * n + others.back()];
    neighbours[i] = std::move(others);
  }
  const double sigma = kth_sum / static_cast<double>(n);

  ComplexMatrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : neighbours[i]) {
      const double d = dist[i * n + j];
      const double w = options.weight_mode == WeightMode::binary ? 1.0 : std::exp(-(d * d) / (sigma * sigma));
      adj(i, j) = w;
      adj(j, i) = w;
    }
  }
  return Graph::undirected(std::move(adj), coords);
}

Laplacian laplacian(const Graph& g) {
  if (g.is_directed()) throw Error(ErrorKind::NotUndirected, "the combinatorial Laplacian needs an undirected graph");
  const std::size_t n = g.n_vertices();
  ComplexMatrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    double degree = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double a = g.adjacency()(i, j).real();
      degree += a;
      if (j != i) l(i, j) = -a;
    }
    l(i, i) = degree;
  }
  Laplacian out;
  out.basis = hermitian_eig(l);
  out.matrix = std::move(l);
  return out;
}

Graph ring_graph(std::size_t size) {
  if (size < 3) throw Error(ErrorKind::TooSmall, "ring graph needs T >= 3");
  ComplexMatrix a(size, size);
  for (std::size_t m = 0; m < size; ++m) {
    a(m, (m + 1) % size) = 1.0;
    a(m, (m + size - 1) % size) = 1.0;
  }
  return Graph::undirected(std::move(a));
}

Graph directed_circular_graph(std::size_t size) {
  if (size < 2) throw Error(ErrorKind::TooSmall, "directed circular graph needs T >= 2");
  ComplexMatrix a(size, size);
  for (std::size_t m = 0; m < size; ++m) a(m, (m + size - 1) % size) = 1.0;
  return Graph::directed(std::move(a));
}

ComplexMatrix time_gradient(std::size_t size) {
  if (size < 2) throw Error(ErrorKind::TooSmall, "time gradient needs T >= 2");
  ComplexMatrix g(size, size);
  for (std::size_t m = 0; m < size; ++m) {
    g(m, m) += 1.0;
    g(m, (m + size - 1) % size) -= 1.0;
  }
  return g;
}

ComplexMatrix graph_gradient(const Graph& g) {
  if (g.is_directed()) throw Error(ErrorKind::NotUndirected, "graph gradient needs an undirected graph");
  const std::size_t n = g.n_vertices();
  ComplexMatrix grad(g.edge_count(), n);
  std::size_t e = 0;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = m + 1; k < n; ++k) {
      const double w = g.adjacency()(m, k).real();
      if (w == 0.0) continue;
      grad(e, m) = std::sqrt(w);
      grad(e, k) = -std::sqrt(w);
      ++e;
    }
  return grad;
}

std::size_t connected_components(const Graph& g) {
  const std::size_t n = g.n_vertices();
  std::vector<bool> seen(n, false);
  std::size_t components = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    std::queue<std::size_t> frontier;
    frontier.push(s);
    seen[s] = true;
    while (!frontier.empty()) {
      const std::size_t v = frontier.front();
      frontier.pop();
      for (std::size_t w = 0; w < n; ++w) {
        if (!seen[w] && (g.adjacency()(v, w) != cplx{} || g.adjacency()(w, v) != cplx{})) {
          seen[w] = true;
          frontier.push(w);
        }
      }
    }
  }
  return components;
}

}  // namespace jfrt
