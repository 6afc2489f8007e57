#include "jfrt/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "jfrt/error.hpp"
#include "jfrt/gfrt.hpp"

namespace jfrt {

namespace {

std::vector<Point> uniform_points(std::size_t n, std::size_t dim, std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<Point> pts(n, Point(dim));
  for (auto& p : pts)
    for (auto& c : p) c = u(rng);
  return pts;
}

// Random combination of Laplacian eigenvectors 1..modes (skipping the
// constant), scaled to unit peak.
std::vector<double> smooth_field(const SpectralBasis& basis, std::size_t modes, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const std::size_t n = basis.size();
  std::vector<double> field(n, 0.0);
  for (std::size_t i = 1; i <= modes && i < n; ++i) {
    const double c = normal(rng) / static_cast<double>(i);
    for (std::size_t m = 0; m < n; ++m) field[m] += c * basis.vectors(m, i).real();
  }
  double peak = 0.0;
  for (double v : field) peak = std::max(peak, std::abs(v));
  if (peak > 0.0)
    for (double& v : field) v /= peak;
  return field;
}

SyntheticDataset make_smooth(std::size_t n, std::size_t t, FractionalOrderPair order, std::mt19937_64& rng) {
  auto coords = uniform_points(n, 2, rng, 0.0, 1.0);
  Graph g = build_knn_graph(coords, std::min<std::size_t>(5, n - 1));
  const GftOperator gft = gft_from_laplacian(laplacian(g));
  const std::size_t graph_modes = 1 + n / 12;
  const std::size_t time_band = t / 32;
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix coeffs(n, t);
  for (std::size_t m = 0; m < graph_modes; ++m) {
    for (std::size_t f = 0; f <= 2 * time_band; ++f) {
      // time indices 0, 1, T−1, 2, T−2, …: the smallest ring eigenvalues
      const std::size_t band = (f + 1) / 2;
      const std::size_t col = f % 2 == 1 ? band : (t - band) % t;
      const double re = normal(rng);
      const double im = normal(rng);
      coeffs(m, col) = cplx{re, im} / static_cast<double>((1 + m) * (1 + band));
    }
  }
  ComplexMatrix x = jfrt_inverse({std::move(coeffs)}, gft, order).values;
  return {std::move(g), std::move(coords), {std::move(x)}, {}};
}

SyntheticDataset make_motion3(std::size_t n, std::size_t t, std::mt19937_64& rng) {
  constexpr std::size_t regimes = 3;
  constexpr double amplitude = 0.2;
  const double periods[regimes] = {40.0, 20.0, 10.0};
  auto coords = uniform_points(n, 3, rng, -0.5, 0.5);
  Graph g = build_knn_graph(coords, std::min<std::size_t>(5, n - 1));
  const Laplacian l = laplacian(g);

  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::vector<int> labels(t);
  for (std::size_t s = 0; s < t; ++s) labels[s] = static_cast<int>(s * regimes / t);

  std::vector<ComplexMatrix> signals(3, ComplexMatrix(n, t));
  for (std::size_t r = 0; r < regimes; ++r) {
    for (std::size_t d = 0; d < 3; ++d) {
      const auto field = smooth_field(l.basis, 5, rng);
      const double phi = phase(rng);
      for (std::size_t s = 0; s < t; ++s) {
        if (labels[s] != static_cast<int>(r)) continue;
        const double wave = std::sin(2.0 * std::numbers::pi * static_cast<double>(s) / periods[r] + phi);
        for (std::size_t m = 0; m < n; ++m) signals[d](m, s) = coords[m][d] + amplitude * field[m] * wave;
      }
    }
  }
  return {std::move(g), std::move(coords), std::move(signals), std::move(labels)};
}

}  // namespace

SyntheticKind parse_synthetic_kind(std::string_view name) {
  if (name == "smooth") return SyntheticKind::smooth;
  if (name == "motion3") return SyntheticKind::motion3;
  throw Error(ErrorKind::InvalidArgument, "unknown synthetic kind '" + std::string(name) + "'");
}

SyntheticDataset synthetic_timevertex(SyntheticKind kind, std::size_t n_vertices, std::size_t n_time,
                                      std::uint64_t seed, FractionalOrderPair smooth_order) {
  if (n_vertices < 4) throw Error(ErrorKind::TooSmall, "synthetic data needs N >= 4");
  if (n_time < 8) throw Error(ErrorKind::TooSmall, "synthetic data needs T >= 8");
  std::mt19937_64 rng(seed);
  return kind == SyntheticKind::smooth ? make_smooth(n_vertices, n_time, smooth_order, rng) : make_motion3(n_vertices, n_time, rng);
}

}  // namespace jfrt
