#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "jfrt/error.hpp"
#include "jfrt/graph.hpp"
#include "oracles.hpp"

using namespace jfrt;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

std::vector<Point> line_points(std::initializer_list<double> xs) {
  std::vector<Point> out;
  for (double x : xs) out.push_back({x});
  return out;
}

std::vector<Point> random_points(std::size_t n, std::size_t dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Point> pts(n, Point(dim));
  for (auto& p : pts)
    for (auto& x : p) x = u(rng);
  return pts;
}

}  // namespace

TEST_CASE("Graph validation") {
  CHECK(kind_of([] { Graph::undirected(ComplexMatrix{{0.0, 1.0}, {0.5, 0.0}}); }) == ErrorKind::NotUndirected);
  CHECK(kind_of([] { Graph::undirected(ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}); }) == ErrorKind::NotUndirected);
  CHECK(kind_of([] { Graph::undirected(ComplexMatrix{{0.0, -1.0}, {-1.0, 0.0}}); }) == ErrorKind::NotUndirected);
  CHECK(kind_of([] { Graph::undirected(ComplexMatrix{{0.0, cplx{0, 1}}, {cplx{0, 1}, 0.0}}); }) ==
        ErrorKind::NotUndirected);
  CHECK(kind_of([] { Graph::undirected(ComplexMatrix(2, 3)); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { Graph::undirected(ComplexMatrix(2, 2), {{0.0}}); }) == ErrorKind::DimensionMismatch);
  const Graph d = Graph::directed(ComplexMatrix{{0.0, cplx{0, 2}}, {0.0, 0.0}});
  CHECK(d.is_directed());
  CHECK(d.edge_count() == 1);
}

TEST_CASE("build_knn_graph on collinear points") {
  const Graph g = build_knn_graph(line_points({0.0, 1.0, 2.0}), 1, {.weight_mode = WeightMode::binary});
  const ComplexMatrix expected{{0.0, 1.0, 0.0}, {1.0, 0.0, 1.0}, {0.0, 1.0, 0.0}};
  CHECK(g.adjacency() == expected);
  CHECK(g.coords().size() == 3);
}

TEST_CASE("build_knn_graph k = N−1 gives the complete graph") {
  std::mt19937_64 rng(5);
  const auto pts = random_points(7, 2, rng);
  const Graph g = build_knn_graph(pts, 6, {.weight_mode = WeightMode::binary});
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) CHECK(g.adjacency()(i, j) == cplx{i == j ? 0.0 : 1.0});
}

TEST_CASE("build_knn_graph output is symmetric with zero diagonal and union neighbourhoods") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t n = 20;
    const auto pts = random_points(n, 3, rng);
    const Graph g = build_knn_graph(pts, 3);
    const auto& a = g.adjacency();
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(a(i, i) == cplx{});
      for (std::size_t j = 0; j < n; ++j) CHECK(a(i, j) == a(j, i));
    }
    // union rule: recompute each vertex's 3 nearest by brute force
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::pair<double, std::size_t>> d;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        double s = 0.0;
        for (std::size_t k = 0; k < 3; ++k) s += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
        d.emplace_back(s, j);
      }
      std::sort(d.begin(), d.end());
      for (std::size_t r = 0; r < 3; ++r) CHECK(a(i, d[r].second).real() > 0.0);
      std::size_t degree = 0;
      for (std::size_t j = 0; j < n; ++j) degree += a(i, j) != cplx{};
      CHECK(degree >= 3);
    }
  }
}

TEST_CASE("gaussian weights use the mean k-th neighbour distance") {
  // points 0, 1, 3: 1-NN distances are 1, 1, 2, σ = 4/3
  const Graph g = build_knn_graph(line_points({0.0, 1.0, 3.0}), 1);
  const double sigma = 4.0 / 3.0;
  CHECK(g.adjacency()(0, 1).real() == doctest::Approx(std::exp(-1.0 / (sigma * sigma))));
  CHECK(g.adjacency()(1, 2).real() == doctest::Approx(std::exp(-4.0 / (sigma * sigma))));
  CHECK(g.adjacency()(0, 2) == cplx{});
}

TEST_CASE("build_knn_graph is permutation-equivariant") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 4; ++trial) {
    const std::size_t n = 15;
    const auto pts = random_points(n, 2, rng);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Point> permuted(n);
    for (std::size_t i = 0; i < n; ++i) permuted[i] = pts[perm[i]];
    const Graph a = build_knn_graph(pts, 4);
    const Graph b = build_knn_graph(permuted, 4);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        // σ sums the k-th distances in vertex order, so weights agree to roundoff
        const cplx x = b.adjacency()(i, j);
        const cplx y = a.adjacency()(perm[i], perm[j]);
        CHECK((x == cplx{}) == (y == cplx{}));
        CHECK(std::abs(x - y) <= 1e-14);
      }
  }
}

TEST_CASE("build_knn_graph duplicates and errors") {
  const Graph g = build_knn_graph(line_points({0.0, 0.0, 1.0, 2.0}), 1);
  CHECK(g.adjacency()(0, 1).real() > 0.0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(std::isfinite(g.adjacency()(i, j).real()));

  CHECK(kind_of([] { build_knn_graph(line_points({1.0, 1.0, 1.0}), 1); }) == ErrorKind::DegenerateGeometry);
  CHECK(kind_of([] { build_knn_graph(line_points({0.0, 1.0}), 2); }) == ErrorKind::TooFewPoints);
  CHECK(kind_of([] { build_knn_graph(line_points({0.0, 1.0}), 0); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { build_knn_graph({{0.0, 1.0}, {1.0}}, 1); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { build_knn_graph(line_points({0.0, 1.0}), 1, {.metric = DistanceMetric::haversine}); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("haversine distance") {
  // one degree of latitude on the mean sphere
  CHECK(haversine_km({0.0, 0.0}, {1.0, 0.0}) == doctest::Approx(6371.0088 * std::numbers::pi / 180.0));
  CHECK(haversine_km({48.0, -4.0}, {48.0, -4.0}) == 0.0);
  CHECK(haversine_km({0.0, 0.0}, {0.0, 180.0}) == doctest::Approx(6371.0088 * std::numbers::pi));
  const Graph g = build_knn_graph({{48.0, -4.0}, {48.1, -4.0}, {49.0, -3.0}}, 1,
                                  {.weight_mode = WeightMode::binary, .metric = DistanceMetric::haversine});
  CHECK(g.adjacency()(0, 1) == cplx{1.0});
}

TEST_CASE("laplacian examples") {
  const Laplacian l2 = laplacian(Graph::undirected(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}));
  CHECK(l2.matrix == (ComplexMatrix{{1.0, -1.0}, {-1.0, 1.0}}));
  CHECK(l2.basis.values[0] == doctest::Approx(0.0).scale(1.0));
  CHECK(l2.basis.values[1] == doctest::Approx(2.0));

  const Laplacian k3 = laplacian(Graph::undirected(ComplexMatrix{{0.0, 1.0, 1.0}, {1.0, 0.0, 1.0}, {1.0, 1.0, 0.0}}));
  const auto ref = oracle::hermitian_eigenvalues(k3.matrix);
  CHECK(ref[0] == doctest::Approx(0.0).scale(1.0));
  CHECK(ref[1] == doctest::Approx(3.0));
  CHECK(ref[2] == doctest::Approx(3.0));
  for (std::size_t i = 0; i < 3; ++i) CHECK(k3.basis.values[i] == doctest::Approx(ref[i]).scale(1.0));

  CHECK(kind_of([] { laplacian(directed_circular_graph(3)); }) == ErrorKind::NotUndirected);
}

TEST_CASE("laplacian invariants on random graphs") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {3u, 10u, 30u}) {
    const Graph g = Graph::undirected(oracle::random_connected_adjacency(n, rng));
    const Laplacian l = laplacian(g);
    CHECK(oracle::distance(l.matrix, oracle::laplacian(g.adjacency())) == 0.0);
    for (std::size_t r = 0; r < n; ++r) {
      cplx s{};
      for (std::size_t c = 0; c < n; ++c) s += l.matrix(r, c);
      CHECK(std::abs(s) <= 1e-10);
    }
    CHECK(l.basis.values.front() >= -1e-10);
    CHECK(l.basis.values.front() <= 1e-10);
    CHECK(l.basis.values[1] > 1e-8);
  }
}

TEST_CASE("zero-eigenvalue multiplicity counts connected components") {
  // triangle + edge + isolated vertex: 3 components
  ComplexMatrix a(6, 6);
  auto link = [&](std::size_t i, std::size_t j, double w) { a(i, j) = a(j, i) = w; };
  link(0, 1, 1.0);
  link(1, 2, 2.0);
  link(0, 2, 0.5);
  link(3, 4, 1.5);
  const Graph g = Graph::undirected(a);
  CHECK(connected_components(g) == 3);
  const Laplacian l = laplacian(g);
  std::size_t zeros = 0;
  for (double v : l.basis.values) {
    CHECK(v >= -1e-10);
    zeros += std::abs(v) <= 1e-10;
  }
  CHECK(zeros == 3);
  CHECK(connected_components(ring_graph(5)) == 1);
}

TEST_CASE("ring_graph") {
  const ComplexMatrix k3{{0.0, 1.0, 1.0}, {1.0, 0.0, 1.0}, {1.0, 1.0, 0.0}};
  CHECK(ring_graph(3).adjacency() == k3);
  const auto& a4 = ring_graph(4).adjacency();
  CHECK(a4(0, 1) == cplx{1.0});
  CHECK(a4(1, 2) == cplx{1.0});
  CHECK(a4(2, 3) == cplx{1.0});
  CHECK(a4(3, 0) == cplx{1.0});
  CHECK(a4(0, 2) == cplx{});
  CHECK(a4(1, 3) == cplx{});
  const Laplacian l8 = laplacian(ring_graph(8));
  std::vector<double> expected;
  for (int k = 0; k < 8; ++k) expected.push_back(2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * k / 8.0));
  std::sort(expected.begin(), expected.end());
  const auto ref = oracle::hermitian_eigenvalues(l8.matrix);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(ref[i] == doctest::Approx(expected[i]).scale(1.0));
    CHECK(l8.basis.values[i] == doctest::Approx(expected[i]).scale(1.0));
  }
  for (std::size_t t : {3u, 9u}) {
    const Graph g = ring_graph(t);
    CHECK(g.edge_count() == t);
    for (std::size_t i = 0; i < t; ++i) CHECK(l8.matrix(i % 8, i % 8) == cplx{2.0});
  }
  CHECK(kind_of([] { ring_graph(2); }) == ErrorKind::TooSmall);
}

TEST_CASE("directed_circular_graph") {
  CHECK(directed_circular_graph(2).adjacency() == (ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}));
  const Graph g = directed_circular_graph(4);
  CHECK(g.is_directed());
  const auto shifted = oracle::matvec(g.adjacency(), {1.0, 0.0, 0.0, 0.0});
  CHECK(shifted == std::vector<cplx>{0.0, 1.0, 0.0, 0.0});
  // A⁴ = I and A is normal, so its eigenvalues are fourth roots of unity:
  // the Hermitian parts (A + Aᴴ)/2 and (A − Aᴴ)/2j have spectra {−1, 0, 0, 1}
  const auto& a = g.adjacency();
  const auto a2 = oracle::matmul(a, a);
  CHECK(oracle::distance(oracle::matmul(a2, a2), oracle::identity(4)) == 0.0);
  ComplexMatrix re(4, 4), im(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      re(r, c) = 0.5 * (a(r, c) + std::conj(a(c, r)));
      im(r, c) = (a(r, c) - std::conj(a(c, r))) / cplx{0.0, 2.0};
    }
  const auto re_vals = oracle::hermitian_eigenvalues(re);
  const auto im_vals = oracle::hermitian_eigenvalues(im);
  const std::vector<double> expected{-1.0, 0.0, 0.0, 1.0};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(re_vals[i] == doctest::Approx(expected[i]).scale(1.0));
    CHECK(im_vals[i] == doctest::Approx(expected[i]).scale(1.0));
  }
  CHECK(kind_of([] { directed_circular_graph(1); }) == ErrorKind::TooSmall);
}

TEST_CASE("time_gradient") {
  // (∇x)_m = x_m − x_{(m−1) mod 2} gives one row per parallel edge of the 2-cycle
  const ComplexMatrix g2 = time_gradient(2);
  CHECK(g2 == (ComplexMatrix{{1.0, -1.0}, {-1.0, 1.0}}));
  CHECK(oracle::matmul(oracle::transpose(g2), g2) == (ComplexMatrix{{2.0, -2.0}, {-2.0, 2.0}}));

  const auto zero = oracle::matvec(time_gradient(6), std::vector<cplx>(6, cplx{2.5, -1.0}));
  CHECK(oracle::vnorm(zero) == 0.0);

  for (std::size_t t : {3u, 4u, 10u}) {
    const ComplexMatrix g = time_gradient(t);
    CHECK(oracle::distance(oracle::matmul(oracle::transpose(g), g), laplacian(ring_graph(t)).matrix) <= 1e-12);
  }
  const ComplexMatrix g5 = time_gradient(5);
  CHECK(g5(3, 3) == cplx{1.0});
  CHECK(g5(3, 2) == cplx{-1.0});
  CHECK(g5(0, 4) == cplx{-1.0});
  CHECK(kind_of([] { time_gradient(1); }) == ErrorKind::TooSmall);
}

TEST_CASE("graph_gradient reproduces the Laplacian") {
  std::mt19937_64 rng(19);
  const Graph g = Graph::undirected(oracle::random_connected_adjacency(12, rng));
  const ComplexMatrix grad = graph_gradient(g);
  CHECK(grad.rows() == g.edge_count());
  CHECK(oracle::distance(oracle::matmul(oracle::transpose(grad), grad), laplacian(g).matrix) <= 1e-12);
  CHECK(kind_of([] { graph_gradient(directed_circular_graph(3)); }) == ErrorKind::NotUndirected);
}
