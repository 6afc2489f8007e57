#include "jfrt/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "jfrt/error.hpp"
#include "jfrt/io.hpp"
#include "jfrt/kmeans.hpp"
#include "jfrt/noise.hpp"
#include "jfrt/parallel.hpp"

namespace jfrt {

namespace {

void check_geometry(const std::vector<WindowedSequence>& dims) {
  if (dims.empty()) throw Error(ErrorKind::InvalidArgument, "no coordinate dimensions");
  const auto& ref = dims.front();
  if (ref.windows.empty()) throw Error(ErrorKind::InvalidArgument, "no windows");
  for (const auto& s : dims) {
    if (s.windows.size() != ref.windows.size() || s.window_length != ref.window_length || s.offsets != ref.offsets ||
        s.windows.front().rows() != ref.windows.front().rows())
      throw Error(ErrorKind::GeometryMismatch, "coordinate dimensions were windowed differently");
  }
}

double quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

RealMatrix jfrt_features(const std::vector<WindowedSequence>& dims, const JointOperator& op) {
  check_geometry(dims);
  const std::size_t n_windows = dims.front().windows.size();
  const std::size_t block = dims.front().windows.front().size();
  RealMatrix features(n_windows, dims.size() * block);
  for (std::size_t w = 0; w < n_windows; ++w) {
    auto row = features.row(w);
    for (std::size_t d = 0; d < dims.size(); ++d) {
      const ComplexMatrix coeffs = op.apply(dims[d].windows[w]);
      const auto values = coeffs.data();
      for (std::size_t i = 0; i < block; ++i) row[d * block + i] = std::abs(values[i]);
    }
  }
  return features;
}

RealMatrix jfrt_features(const std::vector<WindowedSequence>& dims, const GftOperator& g,
                         FractionalOrderPair order) {
  check_geometry(dims);
  return jfrt_features(dims, joint_operator(g, dims.front().window_length, order));
}

RealMatrix raw_features(const std::vector<WindowedSequence>& dims) {
  check_geometry(dims);
  const std::size_t n_windows = dims.front().windows.size();
  const std::size_t block = dims.front().windows.front().size();
  RealMatrix features(n_windows, 2 * dims.size() * block);
  for (std::size_t w = 0; w < n_windows; ++w) {
    auto row = features.row(w);
    for (std::size_t d = 0; d < dims.size(); ++d) {
      const auto values = dims[d].windows[w].data();
      for (std::size_t i = 0; i < block; ++i) {
        row[2 * d * block + i] = values[i].real();
        row[(2 * d + 1) * block + i] = values[i].imag();
      }
    }
  }
  return features;
}

AccuracySummary summarize(std::vector<double> accuracies) {
  AccuracySummary s;
  s.accuracies = accuracies;
  if (accuracies.empty()) return s;
  std::sort(accuracies.begin(), accuracies.end());
  s.mean = std::accumulate(accuracies.begin(), accuracies.end(), 0.0) / static_cast<double>(accuracies.size());
  s.min = accuracies.front();
  s.max = accuracies.back();
  s.q1 = quantile(accuracies, 0.25);
  s.median = quantile(accuracies, 0.5);
  s.q3 = quantile(accuracies, 0.75);
  return s;
}

ClusterReport run_cluster_experiment(const std::vector<ComplexMatrix>& signals, const GftOperator& g,
                                     std::span<const int> sample_labels, const ClusterConfig& config) {
  if (signals.empty()) throw Error(ErrorKind::InvalidArgument, "no coordinate signals");
  if (config.alpha_grid.empty() || config.beta_grid.empty())
    throw Error(ErrorKind::InvalidArgument, "order grids must be nonempty");
  if (config.repeats == 0) throw Error(ErrorKind::InvalidArgument, "repeats must be positive");
  for (const auto& s : signals) {
    if (s.rows() != g.size()) throw Error(ErrorKind::DimensionMismatch, "signal rows do not match the graph");
    if (s.cols() != signals.front().cols())
      throw Error(ErrorKind::GeometryMismatch, "coordinate signals differ in length");
  }
  if (sample_labels.size() != signals.front().cols())
    throw Error(ErrorKind::DimensionMismatch, "need one label per time sample");

  const WindowedSequence geometry = window_signal(signals.front(), config.window, config.overlap);
  const std::vector<int> truth = window_labels(sample_labels, geometry);

  std::vector<JointOperator> operators;
  for (double a : config.alpha_grid)
    for (double b : config.beta_grid) operators.push_back(joint_operator(g, config.window, {a, b}));

  // accuracy[r][o]; the last column is the raw-signal baseline
  const std::size_t n_orders = operators.size();
  std::vector<std::vector<double>> accuracy(config.repeats, std::vector<double>(n_orders + 1));
  parallel_for(config.repeats, [&](std::size_t r) {
    const std::uint64_t repeat_seed = config.seed + r;
    std::vector<WindowedSequence> dims;
    for (std::size_t d = 0; d < signals.size(); ++d) {
      const ComplexMatrix noisy =
          add_sparse_noise(signals[d], config.noise_density, config.snr_db, derive_seed(repeat_seed, d));
      dims.push_back(window_signal(noisy, config.window, config.overlap));
    }
    auto score = [&](RealMatrix features) {
      if (config.standardize) standardize_columns(features);
      const auto result = kmeans(features, config.clusters, repeat_seed, {config.n_init, 300});
      return clustering_accuracy(result.assignments, truth);
    };
    for (std::size_t o = 0; o < n_orders; ++o) accuracy[r][o] = score(jfrt_features(dims, operators[o]));
    accuracy[r][n_orders] = score(raw_features(dims));
  });

  ClusterReport report;
  report.windows = geometry.windows.size();
  report.clipped_samples = geometry.clipped_samples;
  auto column = [&](std::size_t o) {
    std::vector<double> v;
    for (const auto& row : accuracy) v.push_back(row[o]);
    return summarize(std::move(v));
  };
  for (std::size_t o = 0; o < n_orders; ++o) report.grid.push_back({operators[o].order, column(o)});
  report.signal = column(n_orders);

  auto better = [&](std::optional<std::size_t> current, std::size_t candidate) {
    return !current || report.grid[candidate].summary.mean > report.grid[*current].summary.mean;
  };
  std::optional<std::size_t> best;
  for (std::size_t o = 0; o < n_orders; ++o) {
    const auto order = report.grid[o].order;
    if (order.alpha == 1.0 && order.beta == 1.0 && !report.jft) report.jft = o;
    if (order.alpha == 1.0 && better(report.jfrtg, o)) report.jfrtg = o;
    if (order.beta == 1.0 && better(report.jfrtt, o)) report.jfrtt = o;
    if (better(best, o)) best = o;
  }
  report.jfrt = *best;
  return report;
}

void write_cluster_csv(std::ostream& out, const ClusterReport& report) {
  out << "method,alpha,beta,mean,min,q1,median,q3,max\n";
  auto line = [&](const char* method, const std::string& a, const std::string& b, const AccuracySummary& s) {
    out << method << ',' << a << ',' << b << ',' << format_number(s.mean) << ',' << format_number(s.min) << ','
        << format_number(s.q1) << ',' << format_number(s.median) << ',' << format_number(s.q3) << ','
        << format_number(s.max) << '\n';
  };
  auto order_line = [&](const char* method, std::size_t o) {
    const auto& entry = report.grid[o];
    line(method, format_number(entry.order.alpha), format_number(entry.order.beta), entry.summary);
  };
  for (std::size_t o = 0; o < report.grid.size(); ++o) order_line("grid", o);
  line("signal", "", "", report.signal);
  if (report.jft) order_line("JFT", *report.jft);
  if (report.jfrtg) order_line("JFRTg", *report.jfrtg);
  if (report.jfrtt) order_line("JFRTt", *report.jfrtt);
  order_line("JFRT", report.jfrt);
}

SweepResult run_denoise_experiment(const ComplexMatrix& clean, const GftOperator& g, const SweepGrid& grid,
                                   double snr_db, std::uint64_t seed) {
  const ComplexMatrix noisy = add_gaussian_noise(clean, snr_db, seed);
  return denoise_sweep({noisy}, {clean}, g, grid);
}

}  // namespace jfrt
