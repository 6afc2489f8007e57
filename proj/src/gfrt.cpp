#include "jfrt/gfrt.hpp"

#include <cmath>
#include <numbers>

#include "jfrt/error.hpp"
#include "jfrt/frt.hpp"

namespace jfrt {

namespace {

FractionalLaplacian assemble(const ComplexMatrix& transform, std::vector<double> spectrum, double order) {
  FractionalLaplacian out;
  out.order = order;
  out.vectors_power = transform.adjoint();
  out.matrix = out.vectors_power.scale_columns(std::vector<cplx>(spectrum.begin(), spectrum.end())) * transform;
  out.spectrum = std::move(spectrum);
  return out;
}

}  // namespace

GftOperator gft_from_laplacian(const Laplacian& l) {
  GftOperator op;
  op.flavor = GftFlavor::laplacian;
  op.forward = l.basis.vectors.adjoint();
  op.inverse = l.basis.vectors;
  op.basis = normal_basis(op.forward);
  op.source_spectrum = l.basis.values;
  return op;
}

GftOperator gft_from_adjacency(const Graph& g, double max_condition) {
  GftOperator op;
  op.flavor = GftFlavor::adjacency;
  const ComplexMatrix& a = g.adjacency();
  if (!g.is_directed() || is_hermitian(a)) {
    const SpectralBasis eig = hermitian_eig(a);
    op.forward = eig.vectors.adjoint();
    op.inverse = eig.vectors;
    op.basis = normal_basis(op.forward);
  } else {
    const Eigendecomposition eig = eigendecompose(a, max_condition);
    op.forward = eig.inverse;
    op.inverse = eig.vectors;
    op.basis = diagonalize(op.forward, max_condition);
  }
  return op;
}

GftOperator gft_from_circulant(std::size_t size) {
  GftOperator op;
  op.flavor = GftFlavor::adjacency;
  op.forward = dft_matrix(size);
  op.inverse = op.forward.adjoint();
  op.basis = cached_dfrt_basis(size)->fractional_basis();
  return op;
}

ComplexMatrix gfrt_matrix(const GftOperator& op, double beta) {
  if (!std::isfinite(beta)) throw Error(ErrorKind::InvalidArgument, "fractional order must be finite");
  if (beta == 0.0) return ComplexMatrix::identity(op.size());
  if (beta == 1.0) return op.forward;
  return op.basis.power(beta);
}

FractionalLaplacian fractional_laplacian(const GftOperator& op, double order) {
  if (order < 0.0) throw Error(ErrorKind::NegativeOrder, "fractional Laplacian order must be >= 0");
  if (op.flavor != GftFlavor::laplacian)
    throw Error(ErrorKind::FlavorMismatch, "fractional Laplacian needs a Laplacian-flavor GFT");
  return assemble(gfrt_matrix(op, order), psd_fractional_power(op.source_spectrum, order), order);
}

FractionalLaplacian fractional_laplacian(const Laplacian& l, double order) {
  if (order < 0.0) throw Error(ErrorKind::NegativeOrder, "fractional Laplacian order must be >= 0");
  return fractional_laplacian(gft_from_laplacian(l), order);
}

std::vector<double> ring_spectrum(std::size_t size) {
  std::vector<double> w(size);
  for (std::size_t n = 0; n < size; ++n) {
    // 4 sin²(πn/T) is the same value without cancellation near n = 0.
    const double s = std::sin(std::numbers::pi * static_cast<double>(n) / static_cast<double>(size));
    w[n] = 4.0 * s * s;
  }
  return w;
}

FractionalLaplacian fractional_time_laplacian(std::size_t size, double order) {
  if (size < 3) throw Error(ErrorKind::TooSmall, "time Laplacian needs T >= 3");
  if (order < 0.0) throw Error(ErrorKind::NegativeOrder, "fractional Laplacian order must be >= 0");
  return assemble(dfrt_matrix(size, order), psd_fractional_power(ring_spectrum(size), order), order);
}

}  // namespace jfrt
