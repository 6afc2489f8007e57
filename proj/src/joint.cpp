#include "jfrt/joint.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jfrt/error.hpp"
#include "jfrt/frt.hpp"
#include "jfrt/kernels.hpp"

namespace jfrt {

namespace {

void check_order(FractionalOrderPair order) {
  if (!std::isfinite(order.alpha) || !std::isfinite(order.beta))
    throw Error(ErrorKind::InvalidArgument, "fractional orders must be finite");
}

void check_signal(const ComplexMatrix& x, std::size_t n_vertices) {
  if (x.rows() != n_vertices) {
    throw Error(ErrorKind::DimensionMismatch, "signal has " + std::to_string(x.rows()) + " rows but the graph has " +
                                                  std::to_string(n_vertices) + " vertices");
  }
  if (x.cols() < 2) throw Error(ErrorKind::DimensionMismatch, "signal needs at least 2 time samples");
}

}  // namespace

ComplexMatrix JointOperator::apply(const ComplexMatrix& x) const {
  if (x.rows() != gfrt.rows() || x.cols() != frt.rows())
    throw Error(ErrorKind::DimensionMismatch, "signal shape does not match the joint operator");
  return gfrt * (x * frt.transpose());
}

ComplexMatrix JointOperator::kronecker(std::size_t cap) const {
  const std::size_t nt = gfrt.rows() * frt.rows();
  if (nt > cap) {
    throw Error(ErrorKind::SizeOverflow,
                "NT = " + std::to_string(nt) + " exceeds the dense cap " + std::to_string(cap));
  }
  return kron(frt, gfrt, cap);
}

JointOperator joint_operator(const GftOperator& g, std::size_t n_time, FractionalOrderPair order) {
  check_order(order);
  if (n_time < 2) throw Error(ErrorKind::TooSmall, "joint operator needs T >= 2");
  return {order, gfrt_matrix(g, order.beta), dfrt_matrix(n_time, order.alpha)};
}

JointSignal jfrt_forward(const JointSignal& x, const GftOperator& g, FractionalOrderPair order) {
  check_order(order);
  check_signal(x.values, g.size());
  // Time transform on rows first, then the graph transform on columns.
  return {gfrt_matrix(g, order.beta) * frt_apply_rows(x.values, order.alpha)};
}

JointSignal jfrt_inverse(const JointSignal& y, const GftOperator& g, FractionalOrderPair order) {
  return jfrt_forward(y, g, {-order.alpha, -order.beta});
}

std::vector<cplx> vec(const ComplexMatrix& x) {
  std::vector<cplx> v;
  v.reserve(x.size());
  for (std::size_t c = 0; c < x.cols(); ++c)
    for (std::size_t r = 0; r < x.rows(); ++r) v.push_back(x(r, c));
  return v;
}

ComplexMatrix unvec(std::span<const cplx> v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw Error(ErrorKind::DimensionMismatch, "unvec: length is not rows·cols");
  ComplexMatrix x(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) x(r, c) = v[c * rows + r];
  return x;
}

ComplexMatrix JointFractionalLaplacian::dense(std::size_t cap) const {
  const std::size_t nt = n_vertices() * n_time();
  if (nt > cap) {
    throw Error(ErrorKind::SizeOverflow,
                "NT = " + std::to_string(nt) + " exceeds the dense cap " + std::to_string(cap));
  }
  return kron_sum(time_weight * time_part.matrix, graph_weight * graph_part.matrix, cap);
}

cplx JointFractionalLaplacian::quadratic_form(const ComplexMatrix& x) const {
  if (x.rows() != n_vertices() || x.cols() != n_time())
    throw Error(ErrorKind::DimensionMismatch, "signal shape does not match the joint Laplacian");
  const auto& k = kernels::active();
  cplx total{};
  if (graph_weight != 0.0) total += graph_weight * k.dotc(x.data(), (graph_part.matrix * x).data());
  if (time_weight != 0.0) total += time_weight * k.dotc(x.data(), (x * time_part.matrix.transpose()).data());
  return total;
}

JointFractionalLaplacian joint_fractional_laplacian(const GftOperator& g, std::size_t n_time,
                                                    FractionalOrderPair order, double tau_g, double tau_t) {
  check_order(order);
  if (order.alpha < 0.0 || order.beta < 0.0)
    throw Error(ErrorKind::NegativeOrder, "joint fractional Laplacian orders must be >= 0");
  if (!(tau_g >= 0.0) || !(tau_t >= 0.0) || !std::isfinite(tau_g) || !std::isfinite(tau_t))
    throw Error(ErrorKind::InvalidArgument, "regularization weights must be finite and >= 0");

  JointFractionalLaplacian l;
  l.order = order;
  l.graph_part = fractional_laplacian(g, order.beta);
  l.time_part = fractional_time_laplacian(n_time, order.alpha);
  l.graph_weight = tau_g;
  l.time_weight = tau_t;
  const std::size_t n = l.n_vertices();
  l.joint_spectrum = RealMatrix(n, n_time);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t t = 0; t < n_time; ++t)
      l.joint_spectrum(m, t) = tau_g * l.graph_part.spectrum[m] + tau_t * l.time_part.spectrum[t];
  return l;
}

JointFractionalLaplacian joint_fractional_laplacian(const Laplacian& l_graph, std::size_t n_time,
                                                    FractionalOrderPair order) {
  check_order(order);
  if (order.alpha < 0.0 || order.beta < 0.0)
    throw Error(ErrorKind::NegativeOrder, "joint fractional Laplacian orders must be >= 0");
  return joint_fractional_laplacian(gft_from_laplacian(l_graph), n_time, order);
}

double joint_fractional_variation(const JointSignal& x, const JointFractionalLaplacian& l) {
  const cplx q = l.quadratic_form(x.values);
  const double energy = x.values.frobenius_norm() * x.values.frobenius_norm();
  const auto& spec = l.joint_spectrum.data;
  const double scale = std::max(1.0, spec.empty() ? 0.0 : *std::max_element(spec.begin(), spec.end()));
  if (std::abs(q.imag()) > 1e-10 * energy * scale) {
    throw Error(ErrorKind::NonRealQuadraticForm,
                "imaginary part " + std::to_string(q.imag()) + " of xᴴLx exceeds roundoff");
  }
  return q.real();
}

}  // namespace jfrt
