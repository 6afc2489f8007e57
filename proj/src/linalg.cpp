#include "jfrt/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>
#include <string>

#include "eigen_bridge.hpp"
#include "jfrt/error.hpp"

namespace jfrt {

namespace {

void require_square(const ComplexMatrix& m, const char* op) {
  if (!m.is_square() || m.empty()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(op) + ": expected a nonempty square matrix, got " +
                                                  std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

// Scales column c so that its largest-magnitude entry is real and positive.
// The first entry within 1e-9 of the maximum wins, which keeps the choice
// stable under roundoff when several entries tie.
void normalize_column_phase(ComplexMatrix& v, std::size_t c) {
  double peak = 0.0;
  for (std::size_t r = 0; r < v.rows(); ++r) peak = std::max(peak, std::abs(v(r, c)));
  if (peak == 0.0) return;
  std::size_t pivot = 0;
  for (std::size_t r = 0; r < v.rows(); ++r) {
    if (std::abs(v(r, c)) >= peak * (1.0 - 1e-9)) {
      pivot = r;
      break;
    }
  }
  const cplx phase = std::conj(v(pivot, c)) / std::abs(v(pivot, c));
  for (std::size_t r = 0; r < v.rows(); ++r) v(r, c) *= phase;
  v(pivot, c) = std::abs(v(pivot, c));
}

bool lexicographically_greater(const ComplexMatrix& v, std::size_t a, std::size_t b) {
  constexpr double tol = 1e-12;
  for (std::size_t r = 0; r < v.rows(); ++r) {
    const cplx x = v(r, a);
    const cplx y = v(r, b);
    if (std::abs(x.real() - y.real()) > tol) return x.real() > y.real();
    if (std::abs(x.imag() - y.imag()) > tol) return x.imag() > y.imag();
  }
  return false;
}

bool is_normal(const ComplexMatrix& m) {
  const double scale = m.frobenius_norm();
  if (scale == 0.0) return true;
  const ComplexMatrix mh = m.adjoint();
  return frobenius_distance(m * mh, mh * m) <= 1e-10 * scale * scale;
}

std::vector<cplx> logs_of(std::span<const cplx> values) {
  std::vector<cplx> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == cplx{}) throw Error(ErrorKind::Defective, "matrix is singular; its logarithm is undefined");
    out[i] = principal_log(values[i]);
  }
  return out;
}

}  // namespace

ComplexMatrix FractionalBasis::power(double p) const {
  std::vector<cplx> scale(log_eigenvalues.size());
  for (std::size_t i = 0; i < scale.size(); ++i) scale[i] = std::exp(p * log_eigenvalues[i]);
  return vectors.scale_columns(scale) * inverse;
}

bool is_hermitian(const ComplexMatrix& m, double rel_tol) {
  if (!m.is_square()) return false;
  return frobenius_distance(m, m.adjoint()) <= rel_tol * m.frobenius_norm();
}

SpectralBasis hermitian_eig(const ComplexMatrix& m) {
  require_square(m, "hermitian_eig");
  if (!m.all_finite()) throw Error(ErrorKind::InvalidArgument, "hermitian_eig: non-finite entries");
  if (!is_hermitian(m)) {
    throw Error(ErrorKind::NotHermitian, "‖M − Mᴴ‖_F exceeds 1e-8·‖M‖_F");
  }
  const std::size_t n = m.rows();

  SpectralBasis raw;
  if (m.is_real()) {
    detail::EigenReal a = detail::to_eigen_real(m);
    a = 0.5 * (a + a.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<detail::EigenReal> solver(a);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::ConvergenceFailure, "hermitian_eig (real)");
    raw.vectors = detail::from_eigen(solver.eigenvectors());
    raw.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  } else {
    detail::EigenComplex a = detail::to_eigen(m);
    a = 0.5 * (a + a.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<detail::EigenComplex> solver(a);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::ConvergenceFailure, "hermitian_eig (complex)");
    raw.vectors = detail::from_eigen(solver.eigenvectors());
    raw.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  }
  for (std::size_t c = 0; c < n; ++c) normalize_column_phase(raw.vectors, c);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return raw.values[a] < raw.values[b]; });

  const double tie_tol = 1e-10 * std::max(1.0, m.frobenius_norm());
  for (std::size_t begin = 0; begin < n;) {
    std::size_t end = begin + 1;
    while (end < n && raw.values[order[end]] - raw.values[order[end - 1]] <= tie_tol) ++end;
    std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(begin), order.begin() + static_cast<std::ptrdiff_t>(end),
                     [&](std::size_t a, std::size_t b) { return lexicographically_greater(raw.vectors, a, b); });
    begin = end;
  }

  SpectralBasis out;
  out.vectors = ComplexMatrix(n, n);
  out.values.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = raw.values[order[c]];
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = raw.vectors(r, order[c]);
  }
  return out;
}

cplx principal_log(cplx z) {
  double arg = std::arg(z);
  if (arg > std::numbers::pi - Tolerances::branch_snap) arg -= 2.0 * std::numbers::pi;
  return {std::log(std::abs(z)), arg};
}

FractionalBasis normal_basis(const ComplexMatrix& m) {
  require_square(m, "normal_basis");
  Eigen::ComplexSchur<detail::EigenComplex> schur(detail::to_eigen(m));
  if (schur.info() != Eigen::Success) throw Error(ErrorKind::ConvergenceFailure, "complex Schur decomposition");
  const auto& t = schur.matrixT();
  const std::size_t n = m.rows();
  std::vector<cplx> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i));

  FractionalBasis out;
  out.vectors = detail::from_eigen(schur.matrixU());
  out.inverse = out.vectors.adjoint();
  out.log_eigenvalues = logs_of(values);
  out.unitary_vectors = true;
  return out;
}

Eigendecomposition eigendecompose(const ComplexMatrix& m, double max_condition) {
  require_square(m, "eigendecompose");
  Eigen::ComplexEigenSolver<detail::EigenComplex> solver(detail::to_eigen(m));
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::ConvergenceFailure, "general eigensolver");
  Eigendecomposition out;
  out.vectors = detail::from_eigen(solver.eigenvectors());
  const std::size_t n = m.rows();
  out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  for (std::size_t c = 0; c < n; ++c) {
    double norm = 0.0;
    for (std::size_t r = 0; r < n; ++r) norm += std::norm(out.vectors(r, c));
    norm = std::sqrt(norm);
    if (norm > 0.0)
      for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) /= norm;
    normalize_column_phase(out.vectors, c);
  }

  Eigen::JacobiSVD<detail::EigenComplex> svd(detail::to_eigen(out.vectors));
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  const double smin = sv(sv.size() - 1);
  if (!(smin > 0.0) || smax / smin > max_condition) {
    throw Error(ErrorKind::Defective, "eigenvector matrix condition number " + std::to_string(smin > 0 ? smax / smin : INFINITY) +
                                          " exceeds " + std::to_string(max_condition));
  }
  out.inverse = inverse(out.vectors);
  return out;
}

FractionalBasis diagonalize(const ComplexMatrix& m, double max_condition) {
  require_square(m, "diagonalize");
  if (is_normal(m)) return normal_basis(m);
  Eigendecomposition eig = eigendecompose(m, max_condition);
  FractionalBasis out;
  out.log_eigenvalues = logs_of(eig.values);
  out.vectors = std::move(eig.vectors);
  out.inverse = std::move(eig.inverse);
  out.unitary_vectors = false;
  return out;
}

ComplexMatrix unitary_fractional_power(const ComplexMatrix& u, double p) {
  require_square(u, "unitary_fractional_power");
  const double n = static_cast<double>(u.rows());
  if (unitarity_defect(u) > Tolerances::unitary * n) {
    throw Error(ErrorKind::NotUnitary, "‖u·uᴴ − I‖_F exceeds 1e-8·n");
  }
  FractionalBasis basis = normal_basis(u);
  // Unit-modulus eigenvalues: only the phase carries information.
  for (auto& l : basis.log_eigenvalues) l = {0.0, l.imag()};
  return basis.power(p);
}

std::vector<double> psd_fractional_power(std::span<const double> values, double p) {
  if (p < 0.0) throw Error(ErrorKind::NegativeOrder, "psd_fractional_power needs p >= 0");
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    double v = values[i];
    if (v < -Tolerances::psd_clamp) {
      throw Error(ErrorKind::NegativeEigenvalue, "eigenvalue " + std::to_string(v) + " below -1e-10");
    }
    v = std::max(v, 0.0);
    if (p == 0.0) {
      out[i] = 1.0;
    } else {
      out[i] = v == 0.0 ? 0.0 : std::pow(v, p);
    }
  }
  return out;
}

std::vector<double> psd_fractional_power(const SpectralBasis& basis, double p) {
  return psd_fractional_power(basis.values, p);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t cap) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows > cap || cols > cap) {
    throw Error(ErrorKind::SizeOverflow, "Kronecker product " + std::to_string(rows) + "x" + std::to_string(cols) +
                                             " exceeds cap " + std::to_string(cap));
  }
  ComplexMatrix out(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix kron_sum(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t cap) {
  require_square(a, "kron_sum");
  require_square(b, "kron_sum");
  ComplexMatrix out = kron(a, ComplexMatrix::identity(b.rows()), cap);
  out += kron(ComplexMatrix::identity(a.rows()), b, cap);
  return out;
}

ComplexMatrix inverse(const ComplexMatrix& m) {
  require_square(m, "inverse");
  Eigen::FullPivLU<detail::EigenComplex> lu(detail::to_eigen(m));
  if (!lu.isInvertible()) throw Error(ErrorKind::Defective, "matrix is singular");
  return detail::from_eigen(lu.inverse());
}

std::vector<cplx> solve(const ComplexMatrix& m, std::span<const cplx> rhs) {
  require_square(m, "solve");
  if (rhs.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: rhs length");
  Eigen::PartialPivLU<detail::EigenComplex> lu(detail::to_eigen(m));
  Eigen::VectorXcd b(static_cast<Eigen::Index>(rhs.size()));
  for (std::size_t i = 0; i < rhs.size(); ++i) b(static_cast<Eigen::Index>(i)) = rhs[i];
  const Eigen::VectorXcd x = lu.solve(b);
  return {x.data(), x.data() + x.size()};
}

}  // namespace jfrt
