#include "jfrt/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "jfrt/error.hpp"
#include "jfrt/kernels.hpp"
#include "jfrt/noise.hpp"

namespace jfrt {

namespace {

struct Run {
  std::vector<int> assignments;
  RealMatrix centroids;
  double wcss = std::numeric_limits<double>::infinity();
};

RealMatrix plus_plus_seeds(const RealMatrix& x, std::size_t k, std::mt19937_64& rng) {
  const auto& dist2 = kernels::active().squared_distance;
  const std::size_t n = x.rows;
  RealMatrix c(k, x.cols);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::size_t first = pick(rng);
  std::copy(x.row(first).begin(), x.row(first).end(), c.row(0).begin());
  std::vector<double> closest(n);
  for (std::size_t i = 0; i < n; ++i) closest[i] = dist2(x.row(i), c.row(0));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t j = 1; j < k; ++j) {
    const double total = std::accumulate(closest.begin(), closest.end(), 0.0);
    std::size_t chosen = 0;
    if (total > 0.0) {
      double target = unit(rng) * total;
      chosen = n - 1;
      for (std::size_t i = 0; i < n; ++i) {
        if (closest[i] <= 0.0) continue;
        if (target < closest[i]) {
          chosen = i;
          break;
        }
        target -= closest[i];
      }
      if (closest[chosen] <= 0.0) {
        // roundoff ran past the end; take the last point with mass
        for (std::size_t i = n; i-- > 0;)
          if (closest[i] > 0.0) {
            chosen = i;
            break;
          }
      }
    } else {
      chosen = pick(rng);
    }
    std::copy(x.row(chosen).begin(), x.row(chosen).end(), c.row(j).begin());
    for (std::size_t i = 0; i < n; ++i) closest[i] = std::min(closest[i], dist2(x.row(i), c.row(j)));
  }
  return c;
}

Run lloyd(const RealMatrix& x, RealMatrix centroids, std::size_t max_iterations) {
  const auto& dist2 = kernels::active().squared_distance;
  const std::size_t n = x.rows;
  const std::size_t k = centroids.rows;
  Run run;
  run.assignments.assign(n, -1);
  for (std::size_t iter = 0; iter < max_iterations; ++iter) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      int best = 0;
      double best_d = dist2(x.row(i), centroids.row(0));
      for (std::size_t j = 1; j < k; ++j) {
        const double d = dist2(x.row(i), centroids.row(j));
        if (d < best_d) {
          best_d = d;
          best = static_cast<int>(j);
        }
      }
      if (run.assignments[i] != best) {
        run.assignments[i] = best;
        changed = true;
      }
    }
    if (!changed && iter > 0) break;

    RealMatrix sums(k, x.cols);
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto j = static_cast<std::size_t>(run.assignments[i]);
      ++counts[j];
      auto s = sums.row(j);
      auto p = x.row(i);
      for (std::size_t d = 0; d < x.cols; ++d) s[d] += p[d];
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (counts[j] == 0) {
        // Empty cluster: move it to the point farthest from its centroid.
        std::size_t far = 0;
        double far_d = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
          const double d = dist2(x.row(i), centroids.row(static_cast<std::size_t>(run.assignments[i])));
          if (d > far_d) {
            far_d = d;
            far = i;
          }
        }
        std::copy(x.row(far).begin(), x.row(far).end(), centroids.row(j).begin());
        continue;
      }
      auto c = centroids.row(j);
      auto s = sums.row(j);
      for (std::size_t d = 0; d < x.cols; ++d) c[d] = s[d] / static_cast<double>(counts[j]);
    }
  }
  run.wcss = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    run.wcss += dist2(x.row(i), centroids.row(static_cast<std::size_t>(run.assignments[i])));
  run.centroids = std::move(centroids);
  return run;
}

}  // namespace

KMeansResult kmeans(const RealMatrix& features, std::size_t k, std::uint64_t seed, KMeansOptions options) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  if (features.rows < k) {
    throw Error(ErrorKind::TooFewPoints, std::to_string(features.rows) + " points cannot form " +
                                             std::to_string(k) + " clusters");
  }
  for (double v : features.data)
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidArgument, "features contain non-finite values");
  const std::size_t restarts = std::max<std::size_t>(1, options.n_init);
  Run best;
  for (std::size_t r = 0; r < restarts; ++r) {
    std::mt19937_64 rng(derive_seed(seed, r));
    Run run = lloyd(features, plus_plus_seeds(features, k, rng), std::max<std::size_t>(1, options.max_iterations));
    if (run.wcss < best.wcss) best = std::move(run);
  }
  return {std::move(best.assignments), std::move(best.centroids), best.wcss};
}

double clustering_accuracy(std::span<const int> assignments, std::span<const int> ground_truth) {
  if (assignments.size() != ground_truth.size())
    throw Error(ErrorKind::DimensionMismatch, "assignment and ground-truth lengths differ");
  if (assignments.empty()) throw Error(ErrorKind::InvalidArgument, "no labels to compare");
  const std::set<int> pred_set(assignments.begin(), assignments.end());
  const std::set<int> true_set(ground_truth.begin(), ground_truth.end());
  if (pred_set.size() > 8 || true_set.size() > 8)
    throw Error(ErrorKind::TooManyLabels, "permutation matching supports at most 8 labels");

  const std::vector<int> pred(pred_set.begin(), pred_set.end());
  const std::vector<int> truth(true_set.begin(), true_set.end());
  const std::size_t slots = std::max(pred.size(), truth.size());
  // confusion[p][t]; padded with empty rows/columns to a square table
  std::vector<std::vector<std::size_t>> confusion(slots, std::vector<std::size_t>(slots, 0));
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    const auto p = std::lower_bound(pred.begin(), pred.end(), assignments[i]) - pred.begin();
    const auto t = std::lower_bound(truth.begin(), truth.end(), ground_truth[i]) - truth.begin();
    ++confusion[static_cast<std::size_t>(p)][static_cast<std::size_t>(t)];
  }
  std::vector<std::size_t> perm(slots);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t best = 0;
  do {
    std::size_t hits = 0;
    for (std::size_t p = 0; p < slots; ++p) hits += confusion[p][perm[p]];
    best = std::max(best, hits);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<double>(best) / static_cast<double>(assignments.size());
}

void standardize_columns(RealMatrix& features) {
  const std::size_t n = features.rows;
  if (n == 0) return;
  for (std::size_t d = 0; d < features.cols; ++d) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += features(i, d);
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (std::size_t i = 0; i < n; ++i) var += (features(i, d) - mean) * (features(i, d) - mean);
    const double sd = std::sqrt(var / static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) features(i, d) = sd > 0.0 ? (features(i, d) - mean) / sd : features(i, d) - mean;
  }
}

}  // namespace jfrt
