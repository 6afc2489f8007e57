#include "jfrt/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "jfrt/error.hpp"

namespace jfrt {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::optional<double> parse_real(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return in;
}

[[noreturn]] void parse_failure(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::string complex_text(cplx v) {
  if (v.imag() == 0.0) return format_number(v.real());
  std::string im = format_number(v.imag());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return format_number(v.real()) + im + "j";
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::optional<cplx> parse_complex(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) return std::nullopt;
  if (s.back() != 'j' && s.back() != 'i') {
    const auto re = parse_real(s);
    if (!re) return std::nullopt;
    return cplx{*re, 0.0};
  }
  s.remove_suffix(1);
  std::size_t split_at = std::string_view::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  auto imag_part = [](std::string_view t) -> std::optional<double> {
    t = trim(t);
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t);
  };
  if (split_at == std::string_view::npos) {
    const auto im = imag_part(s);
    if (!im) return std::nullopt;
    return cplx{0.0, *im};
  }
  const auto re = parse_real(s.substr(0, split_at));
  const auto im = imag_part(s.substr(split_at));
  if (!re || !im) return std::nullopt;
  return cplx{*re, *im};
}

ComplexMatrix parse_signal_csv(std::istream& in, std::optional<bool> header) {
  std::vector<std::vector<cplx>> rows;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split(line);
    if (first) {
      first = false;
      const bool skip = header.has_value() ? *header : !parse_complex(fields.front()).has_value();
      if (skip) continue;
    }
    std::vector<cplx> row;
    row.reserve(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c) {
      const auto v = parse_complex(fields[c]);
      if (!v) parse_failure(line_no, "column " + std::to_string(c + 1) + ": cannot parse '" + std::string(fields[c]) + "'");
      row.push_back(*v);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      parse_failure(line_no, "expected " + std::to_string(rows.front().size()) + " columns, found " +
                                 std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorKind::ParseError, "signal file has no data rows");
  ComplexMatrix x(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) std::copy(rows[r].begin(), rows[r].end(), x.row(r).begin());
  return x;
}

ComplexMatrix read_signal_csv(const std::string& path, std::optional<bool> header) {
  auto in = open_input(path);
  return parse_signal_csv(in, header);
}

void write_signal_csv(std::ostream& out, const ComplexMatrix& x) {
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (std::size_t c = 0; c < x.cols(); ++c) {
      if (c) out << ',';
      out << complex_text(x(r, c));
    }
    out << '\n';
  }
}

void write_signal_csv(const std::string& path, const ComplexMatrix& x) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  write_signal_csv(out, x);
}

CoordinateTable parse_coords_csv(std::istream& in) {
  std::map<long, Point> by_id;
  CoordinateTable table;
  std::string line;
  std::size_t line_no = 0;
  std::size_t dim = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split(line);
    if (first) {
      first = false;
      if (!parse_real(fields.front())) {
        for (auto f : fields) {
          std::string lower(f);
          std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
          if (lower == "lat" || lower == "latitude") table.metric = DistanceMetric::haversine;
        }
        continue;
      }
    }
    if (fields.size() < 3) parse_failure(line_no, "expected vertex_id and at least two coordinates");
    const auto id = parse_real(fields[0]);
    if (!id || *id < 0 || *id != std::floor(*id)) parse_failure(line_no, "vertex_id must be a nonnegative integer");
    if (dim == 0) dim = fields.size() - 1;
    if (fields.size() - 1 != dim) parse_failure(line_no, "inconsistent coordinate count");
    Point p;
    for (std::size_t c = 1; c < fields.size(); ++c) {
      const auto v = parse_real(fields[c]);
      if (!v) parse_failure(line_no, "cannot parse coordinate '" + std::string(fields[c]) + "'");
      p.push_back(*v);
    }
    if (!by_id.emplace(static_cast<long>(*id), std::move(p)).second) parse_failure(line_no, "duplicate vertex_id");
  }
  if (by_id.empty()) throw Error(ErrorKind::ParseError, "coordinate file has no data rows");
  long expected = 0;
  for (auto& [id, p] : by_id) {
    if (id != expected++) throw Error(ErrorKind::ParseError, "vertex ids must be 0..N-1");
    table.points.push_back(std::move(p));
  }
  return table;
}

CoordinateTable read_coords_csv(const std::string& path) {
  auto in = open_input(path);
  return parse_coords_csv(in);
}

void write_coords_csv(std::ostream& out, const std::vector<Point>& points) {
  out << "vertex_id";
  const char* names[] = {"x", "y", "z"};
  const std::size_t dim = points.empty() ? 0 : points.front().size();
  for (std::size_t d = 0; d < dim; ++d) out << ',' << (d < 3 ? names[d] : "c" + std::to_string(d));
  out << '\n';
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << i;
    for (double v : points[i]) out << ',' << format_number(v);
    out << '\n';
  }
}

Graph parse_edge_list_csv(std::istream& in, std::size_t n_vertices) {
  struct Edge {
    std::size_t src, dst;
    double w;
  };
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::size_t max_id = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    const auto fields = split(line);
    if (fields.size() != 3) parse_failure(line_no, "expected src,dst,weight");
    const auto s = parse_real(fields[0]);
    const auto d = parse_real(fields[1]);
    const auto w = parse_real(fields[2]);
    if (!s || !d || *s < 0 || *d < 0 || *s != std::floor(*s) || *d != std::floor(*d))
      parse_failure(line_no, "vertex ids must be nonnegative integers");
    if (!w || *w < 0) parse_failure(line_no, "weight must be a nonnegative number");
    if (*s == *d) parse_failure(line_no, "self-loops are not allowed");
    edges.push_back({static_cast<std::size_t>(*s), static_cast<std::size_t>(*d), *w});
    max_id = std::max({max_id, edges.back().src, edges.back().dst});
  }
  if (!header_seen) throw Error(ErrorKind::ParseError, "edge list is empty");
  const std::size_t n = n_vertices ? n_vertices : (edges.empty() ? 0 : max_id + 1);
  if (n == 0) throw Error(ErrorKind::ParseError, "edge list has no edges and no vertex count was given");
  if (max_id >= n) throw Error(ErrorKind::DimensionMismatch, "edge endpoint exceeds the vertex count");
  ComplexMatrix a(n, n);
  for (const auto& e : edges) {
    const cplx existing = a(e.src, e.dst);
    if (existing != cplx{} && existing.real() != e.w)
      throw Error(ErrorKind::NotUndirected, "conflicting weights for edge " + std::to_string(e.src) + "-" + std::to_string(e.dst));
    a(e.src, e.dst) = e.w;
    a(e.dst, e.src) = e.w;
  }
  return Graph::undirected(std::move(a));
}

Graph read_edge_list_csv(const std::string& path, std::size_t n_vertices) {
  auto in = open_input(path);
  return parse_edge_list_csv(in, n_vertices);
}

void write_edge_list_csv(std::ostream& out, const Graph& g) {
  out << "src,dst,weight\n";
  const std::size_t n = g.n_vertices();
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = m + 1; k < n; ++k)
      if (g.adjacency()(m, k) != cplx{}) out << m << ',' << k << ',' << format_number(g.adjacency()(m, k).real()) << '\n';
}

std::vector<int> read_labels_csv(const std::string& path) {
  auto in = open_input(path);
  std::vector<int> labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto field = trim(line);
    if (field.empty()) continue;
    int v = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
      if (labels.empty() && line_no == 1) continue;  // header
      parse_failure(line_no, "label must be an integer");
    }
    labels.push_back(v);
  }
  if (labels.empty()) throw Error(ErrorKind::ParseError, "label file has no data rows");
  return labels;
}

void write_labels_csv(std::ostream& out, const std::vector<int>& labels) {
  out << "label\n";
  for (int l : labels) out << l << '\n';
}

Dataset load_timeseries_csv(const std::string& signal_path, const std::string& coords_path, std::size_t k,
                            KnnOptions options) {
  ComplexMatrix x = read_signal_csv(signal_path);
  const CoordinateTable coords = read_coords_csv(coords_path);
  if (coords.points.size() != x.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "signal has " + std::to_string(x.rows()) + " rows but " +
                                                  std::to_string(coords.points.size()) + " coordinates were given");
  }
  options.metric = coords.metric;
  Graph g = build_knn_graph(coords.points, k, options);
  return {std::move(g), {std::move(x)}, signal_path, "", signal_path};
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << "alpha,beta,tau_g,tau_t,mse_percent\n";
  for (const auto& r : result.rows) {
    out << format_number(r.alpha) << ',' << format_number(r.beta) << ',' << format_number(r.tau_g) << ','
        << format_number(r.tau_t) << ',' << format_number(r.mse_percent) << '\n';
  }
}

std::string sweep_summary_json(const SweepResult& result) {
  const auto& best = result.best();
  nlohmann::ordered_json j;
  j["argmin"] = {{"alpha", best.alpha},
                 {"beta", best.beta},
                 {"tau_g", best.tau_g},
                 {"tau_t", best.tau_t},
                 {"mse_percent", best.mse_percent}};
  j["grid_shape"] = result.grid_shape;
  j["noisy_mse_percent"] = result.noisy_mse_percent;
  return j.dump(2) + "\n";
}

}  // namespace jfrt
