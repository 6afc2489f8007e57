#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "jfrt/denoise.hpp"
#include "jfrt/graph.hpp"
#include "jfrt/joint.hpp"

namespace jfrt {

/// Parses one complex CSV field: "1.5", "-2e-3", "1+2j", "1-2.5j", "3j".
std::optional<cplx> parse_complex(std::string_view text);

/// N×T signal CSV, one vertex per line. `header` = nullopt detects a header
/// from a non-numeric first line.
ComplexMatrix read_signal_csv(const std::string& path, std::optional<bool> header = std::nullopt);
ComplexMatrix parse_signal_csv(std::istream& in, std::optional<bool> header = std::nullopt);

/// Writes 17 significant digits; purely real matrices are written as reals.
void write_signal_csv(std::ostream& out, const ComplexMatrix& x);
void write_signal_csv(const std::string& path, const ComplexMatrix& x);

/// `vertex_id,x,y[,z]` or `vertex_id,lat,lon`; a header naming lat/lon
/// selects the haversine metric.
struct CoordinateTable {
  std::vector<Point> points;
  DistanceMetric metric = DistanceMetric::euclidean;
};
CoordinateTable read_coords_csv(const std::string& path);
CoordinateTable parse_coords_csv(std::istream& in);
void write_coords_csv(std::ostream& out, const std::vector<Point>& points);

/// Undirected edge list `src,dst,weight` with a one-line header.
Graph read_edge_list_csv(const std::string& path, std::size_t n_vertices = 0);
Graph parse_edge_list_csv(std::istream& in, std::size_t n_vertices = 0);
void write_edge_list_csv(std::ostream& out, const Graph& g);

/// One integer label per line (an optional header is skipped).
std::vector<int> read_labels_csv(const std::string& path);
void write_labels_csv(std::ostream& out, const std::vector<int>& labels);

struct Dataset {
  Graph graph;
  JointSignal signal;
  std::string name;
  std::string units;
  std::string source;
};

/// Signal CSV plus coordinates; the graph is the k-NN graph of the stations.
Dataset load_timeseries_csv(const std::string& signal_path, const std::string& coords_path, std::size_t k,
                            KnnOptions options = {});

/// `alpha,beta,tau_g,tau_t,mse_percent`.
void write_sweep_csv(std::ostream& out, const SweepResult& result);

/// {"argmin": {...}, "grid_shape": [...], "noisy_mse_percent": ...}.
std::string sweep_summary_json(const SweepResult& result);

/// %.17g.
std::string format_number(double v);

}  // namespace jfrt
