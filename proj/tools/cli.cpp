#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <ostream>

#include "jfrt/error.hpp"
#include "jfrt/experiments.hpp"
#include "jfrt/io.hpp"
#include "jfrt/synth.hpp"

namespace jfrt::cli {

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

double parse_number(std::string_view text) {
  const auto v = parse_complex(text);
  if (!v || v->imag() != 0.0) throw Error(ErrorKind::InvalidArgument, "not a real number: '" + std::string(text) + "'");
  return v->real();
}

double parse_snr(const std::string& text) {
  if (text == "inf" || text == "clean") return std::numeric_limits<double>::infinity();
  return parse_number(text);
}

// Writes to `path`, or to `fallback` when path is "-".
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path == "-") {
      stream_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
    stream_ = file_.get();
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

KnnOptions knn_options(const std::string& weights) {
  KnnOptions options;
  if (weights == "binary")
    options.weight_mode = WeightMode::binary;
  else if (weights != "gaussian")
    throw Error(ErrorKind::InvalidArgument, "weights must be gaussian or binary");
  return options;
}

Graph graph_from_coords(const std::string& coords_path, std::size_t k, const std::string& weights) {
  const CoordinateTable coords = read_coords_csv(coords_path);
  KnnOptions options = knn_options(weights);
  options.metric = coords.metric;
  return build_knn_graph(coords.points, k, options);
}

// "<edges.csv>" or "knn:<k>:<coords.csv>".
Graph graph_from_spec(const std::string& spec, std::size_t n_vertices, const std::string& weights) {
  if (spec.rfind("knn:", 0) == 0) {
    const auto colon = spec.find(':', 4);
    if (colon == std::string::npos) throw Error(ErrorKind::InvalidArgument, "graph spec must be knn:<k>:<coords.csv>");
    const double k = parse_number(spec.substr(4, colon - 4));
    if (k < 1 || k != std::floor(k)) throw Error(ErrorKind::InvalidArgument, "k must be a positive integer");
    return graph_from_coords(spec.substr(colon + 1), static_cast<std::size_t>(k), weights);
  }
  return read_edge_list_csv(spec, n_vertices);
}

GftOperator gft_for(const Graph& g, const std::string& flavor) {
  if (flavor == "laplacian") return gft_from_laplacian(laplacian(g));
  if (flavor == "adjacency") return gft_from_adjacency(g);
  throw Error(ErrorKind::InvalidArgument, "gft must be laplacian or adjacency");
}

struct TransformArgs {
  std::string signal, graph, out = "-", gft = "laplacian", weights = "gaussian";
  double alpha = 1.0, beta = 1.0;
  bool inverse = false;
};

int run_transform(const TransformArgs& a, std::ostream& out) {
  const JointSignal x{read_signal_csv(a.signal)};
  const Graph g = graph_from_spec(a.graph, x.n_vertices(), a.weights);
  const GftOperator op = gft_for(g, a.gft);
  const FractionalOrderPair order{a.alpha, a.beta};
  const JointSignal y = a.inverse ? jfrt_inverse(x, op, order) : jfrt_forward(x, op, order);
  Sink sink(a.out, out);
  write_signal_csv(sink.get(), y.values);
  return 0;
}

struct SweepArgs {
  std::string signal, noisy, coords, out = "-", summary, weights = "gaussian";
  std::size_t knn = 5;
  std::string alpha_grid = "1", beta_grid = "1", tau_g_grid = "0", tau_t_grid = "0", snr_db = "0";
  std::uint64_t seed = 1;
};

int run_sweep(const SweepArgs& a, std::ostream& out) {
  const Dataset data = load_timeseries_csv(a.signal, a.coords, a.knn, knn_options(a.weights));
  const GftOperator op = gft_from_laplacian(laplacian(data.graph));
  const SweepGrid grid{parse_grid(a.alpha_grid), parse_grid(a.beta_grid), parse_grid(a.tau_g_grid),
                       parse_grid(a.tau_t_grid)};
  SweepResult result;
  if (!a.noisy.empty()) {
    const ComplexMatrix noisy = read_signal_csv(a.noisy);
    result = denoise_sweep({noisy}, data.signal, op, grid);
  } else {
    result = run_denoise_experiment(data.signal.values, op, grid, parse_snr(a.snr_db), a.seed);
  }
  Sink sink(a.out, out);
  write_sweep_csv(sink.get(), result);
  const std::string summary_path = !a.summary.empty() ? a.summary : (a.out == "-" ? "-" : a.out + ".json");
  Sink summary(summary_path, out);
  summary.get() << sweep_summary_json(result);
  return 0;
}

struct ClusterArgs {
  std::vector<std::string> signals;
  std::string coords, labels, out = "-", weights = "gaussian";
  std::size_t knn = 5;
  std::string alpha_grid = "1", beta_grid = "1", snr_db = "-10";
  ClusterConfig config;
};

int run_cluster(ClusterArgs a, std::ostream& out) {
  std::vector<ComplexMatrix> signals;
  for (const auto& path : a.signals) signals.push_back(read_signal_csv(path));
  const Graph g = graph_from_coords(a.coords, a.knn, a.weights);
  const GftOperator op = gft_from_laplacian(laplacian(g));
  const std::vector<int> labels = read_labels_csv(a.labels);
  a.config.alpha_grid = parse_grid(a.alpha_grid);
  a.config.beta_grid = parse_grid(a.beta_grid);
  a.config.snr_db = parse_snr(a.snr_db);
  const ClusterReport report = run_cluster_experiment(signals, op, labels, a.config);
  Sink sink(a.out, out);
  write_cluster_csv(sink.get(), report);
  return 0;
}

struct SynthArgs {
  std::string kind = "smooth", prefix;
  std::size_t n = 37, t = 96;
  std::uint64_t seed = 1;
  double smooth_alpha = 0.93, smooth_beta = 1.02;
};

int run_synth(const SynthArgs& a) {
  const SyntheticDataset data = synthetic_timevertex(parse_synthetic_kind(a.kind), a.n, a.t, a.seed, {a.smooth_alpha, a.smooth_beta});
  auto open = [&](const std::string& suffix) {
    std::ofstream f(a.prefix + suffix, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + a.prefix + suffix);
    return f;
  };
  {
    auto f = open("_coords.csv");
    write_coords_csv(f, data.coords);
  }
  {
    auto f = open("_edges.csv");
    write_edge_list_csv(f, data.graph);
  }
  if (data.signals.size() == 1) {
    auto f = open("_signal.csv");
    write_signal_csv(f, data.signals.front());
  } else {
    const char* names[] = {"_x.csv", "_y.csv", "_z.csv"};
    for (std::size_t d = 0; d < data.signals.size(); ++d) {
      auto f = open(names[d]);
      write_signal_csv(f, data.signals[d]);
    }
  }
  if (!data.sample_labels.empty()) {
    auto f = open("_labels.csv");
    write_labels_csv(f, data.sample_labels);
  }
  return 0;
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
  std::vector<double> values;
  if (text.find(':') != std::string_view::npos) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string_view::npos) throw Error(ErrorKind::InvalidArgument, "grid must be a:b:step");
    const double a = parse_number(text.substr(0, c1));
    const double b = parse_number(text.substr(c1 + 1, c2 - c1 - 1));
    const double step = parse_number(text.substr(c2 + 1));
    if (!(step > 0.0) || b < a) throw Error(ErrorKind::InvalidArgument, "grid needs step > 0 and b >= a");
    const auto count = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
    if (count > 100000) throw Error(ErrorKind::InvalidArgument, "grid has too many points");
    for (std::size_t i = 0; i < count; ++i) {
      // Snap to 12 decimals so that 0.1-steps print as written.
      values.push_back(std::round((a + static_cast<double>(i) * step) * 1e12) / 1e12);
    }
    return values;
  }
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    values.push_back(parse_number(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Joint time-vertex fractional Fourier transform tools", "jfrt"};
  app.require_subcommand(1);

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "JFRT of a signal on a graph");
  transform->add_option("--signal", ta.signal, "N×T signal CSV")->required();
  transform->add_option("--graph", ta.graph, "edge-list CSV or knn:<k>:<coords.csv>")->required();
  transform->add_option("--gft", ta.gft, "laplacian or adjacency");
  transform->add_option("--weights", ta.weights, "k-NN weights: gaussian or binary");
  transform->add_option("--alpha", ta.alpha, "time order");
  transform->add_option("--beta", ta.beta, "graph order");
  transform->add_flag("--inverse", ta.inverse, "apply the order (-alpha, -beta) transform");
  transform->add_option("--out", ta.out, "output CSV ('-' for stdout)");

  SweepArgs sa;
  auto* sweep = app.add_subcommand("denoise-sweep", "Tikhonov denoising over an order/parameter grid");
  sweep->add_option("--signal", sa.signal, "clean N×T signal CSV")->required();
  sweep->add_option("--noisy", sa.noisy, "noisy observation CSV (otherwise noise is added)");
  sweep->add_option("--coords", sa.coords, "vertex coordinates CSV")->required();
  sweep->add_option("--knn", sa.knn, "neighbours per vertex");
  sweep->add_option("--weights", sa.weights, "gaussian or binary");
  sweep->add_option("--alpha-grid", sa.alpha_grid, "a:b:step or list");
  sweep->add_option("--beta-grid", sa.beta_grid, "a:b:step or list");
  sweep->add_option("--tau-g-grid", sa.tau_g_grid, "a:b:step or list");
  sweep->add_option("--tau-t-grid", sa.tau_t_grid, "a:b:step or list");
  sweep->add_option("--snr-db", sa.snr_db, "noise SNR in dB ('inf' for none)");
  sweep->add_option("--seed", sa.seed, "noise seed");
  sweep->add_option("--out", sa.out, "sweep CSV ('-' for stdout)");
  sweep->add_option("--summary", sa.summary, "JSON summary path (default <out>.json)");

  ClusterArgs ca;
  auto* cluster = app.add_subcommand("cluster", "k-means on windowed JFRT features");
  cluster->add_option("--signals", ca.signals, "one CSV per coordinate dimension")->required()->delimiter(',');
  cluster->add_option("--coords", ca.coords, "vertex coordinates CSV")->required();
  cluster->add_option("--labels", ca.labels, "per-sample ground-truth labels")->required();
  cluster->add_option("--knn", ca.knn, "neighbours per vertex");
  cluster->add_option("--weights", ca.weights, "gaussian or binary");
  cluster->add_option("--window", ca.config.window, "window length");
  cluster->add_option("--overlap", ca.config.overlap, "window overlap fraction");
  cluster->add_option("--k", ca.config.clusters, "number of clusters");
  cluster->add_option("--alpha-grid", ca.alpha_grid, "a:b:step or list");
  cluster->add_option("--beta-grid", ca.beta_grid, "a:b:step or list");
  cluster->add_option("--repeats", ca.config.repeats, "noise realizations");
  cluster->add_option("--seed", ca.config.seed, "base seed");
  cluster->add_option("--n-init", ca.config.n_init, "k-means restarts");
  cluster->add_option("--noise-density", ca.config.noise_density, "fraction of corrupted entries");
  cluster->add_option("--snr-db", ca.snr_db, "noise SNR in dB ('inf' for none)");
  cluster->add_flag("--standardize", ca.config.standardize, "z-score feature columns");
  cluster->add_option("--out", ca.out, "summary CSV ('-' for stdout)");

  SynthArgs ya;
  auto* synth = app.add_subcommand("synth", "write a synthetic dataset");
  synth->add_option("--kind", ya.kind, "smooth or motion3");
  synth->add_option("--n", ya.n, "vertices");
  synth->add_option("--t", ya.t, "time samples");
  synth->add_option("--seed", ya.seed, "seed");
  synth->add_option("--smooth-alpha", ya.smooth_alpha, "time order of the smooth kind's sparse domain");
  synth->add_option("--smooth-beta", ya.smooth_beta, "graph order of the smooth kind's sparse domain");
  synth->add_option("--out-prefix", ya.prefix, "output path prefix")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*transform) return run_transform(ta, out);
    if (*sweep) return run_sweep(sa, out);
    if (*cluster) return run_cluster(std::move(ca), out);
    if (*synth) return run_synth(ya);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_numerical(e.kind()) ? kExitNumerical : kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace jfrt::cli
