#include "jfrt/frt.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "jfrt/error.hpp"

namespace jfrt {

namespace {

// Orthonormal bases of the even (x[n] = x[−n]) and odd (x[n] = −x[−n])
// subspaces, as columns.
ComplexMatrix even_subspace(std::size_t n) {
  const std::size_t pairs = (n - 1) / 2;
  const std::size_t dim = n / 2 + 1;
  ComplexMatrix e(n, dim);
  const double h = 1.0 / std::numbers::sqrt2;
  e(0, 0) = 1.0;
  for (std::size_t p = 1; p <= pairs; ++p) {
    e(p, p) = h;
    e(n - p, p) = h;
  }
  if (n % 2 == 0) e(n / 2, dim - 1) = 1.0;
  return e;
}

ComplexMatrix odd_subspace(std::size_t n) {
  const std::size_t pairs = (n - 1) / 2;
  ComplexMatrix o(n, pairs);
  const double h = 1.0 / std::numbers::sqrt2;
  for (std::size_t p = 1; p <= pairs; ++p) {
    o(p, p - 1) = h;
    o(n - p, p - 1) = -h;
  }
  return o;
}

// Eigenvectors of S restricted to a parity subspace, ordered by descending
// eigenvalue (which is ascending Hermite index within that parity class).
ComplexMatrix descending_eigenvectors(const ComplexMatrix& s, const ComplexMatrix& subspace) {
  if (subspace.cols() == 0) return ComplexMatrix(s.rows(), 0);
  const ComplexMatrix projected = subspace.adjoint() * s * subspace;
  const SpectralBasis eig = hermitian_eig(projected);
  const ComplexMatrix lifted = subspace * eig.vectors;
  const std::size_t d = subspace.cols();
  ComplexMatrix out(s.rows(), d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < s.rows(); ++r) out(r, c) = lifted(r, d - 1 - c);
  return out;
}

void make_largest_entry_positive(std::vector<cplx>& v) {
  std::size_t pivot = 0;
  double peak = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) peak = std::max(peak, std::abs(v[i]));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) >= peak * (1.0 - 1e-9)) {
      pivot = i;
      break;
    }
  }
  if (v[pivot].real() < 0.0)
    for (auto& x : v) x = -x;
  // The basis is real; drop roundoff in the imaginary parts.
  for (auto& x : v) x = x.real();
}

}  // namespace

ComplexMatrix dft_matrix(std::size_t size) {
  if (size == 0) throw Error(ErrorKind::TooSmall, "dft_matrix needs T >= 1");
  ComplexMatrix f(size, size);
  const double scale = 1.0 / std::sqrt(static_cast<double>(size));
  for (std::size_t m = 0; m < size; ++m)
    for (std::size_t n = 0; n < size; ++n) {
      // Reduce mn mod T first so the phase stays accurate for large T.
      const double k = static_cast<double>((m * n) % size);
      const double phase = -2.0 * std::numbers::pi * k / static_cast<double>(size);
      f(m, n) = std::polar(scale, phase);
    }
  return f;
}

ComplexMatrix dft_commuting_matrix(std::size_t size) {
  if (size < 2) throw Error(ErrorKind::TooSmall, "commuting matrix needs N >= 2");
  ComplexMatrix s(size, size);
  for (std::size_t n = 0; n < size; ++n) {
    s(n, n) = 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(n) / static_cast<double>(size)) - 4.0;
    s(n, (n + 1) % size) += 1.0;
    s(n, (n + size - 1) % size) += 1.0;
  }
  return s;
}

DfrtBasis dfrt_basis(std::size_t size) {
  if (size < 2) throw Error(ErrorKind::TooSmall, "dfrt_basis needs N >= 2");
  const ComplexMatrix s = dft_commuting_matrix(size);
  const ComplexMatrix even = descending_eigenvectors(s, even_subspace(size));
  const ComplexMatrix odd = descending_eigenvectors(s, odd_subspace(size));

  DfrtBasis basis;
  basis.size = size;
  basis.hermite_vectors = ComplexMatrix(size, size);
  basis.index_map.reserve(size);
  std::size_t next_even = 0;
  std::size_t next_odd = 0;
  for (std::size_t c = 0; c < size; ++c) {
    // Interleave even/odd classes: indices 0,1,2,… until the odd class runs
    // out (which is exactly the skipped N−1 slot for even N).
    const bool take_even = next_odd >= odd.cols() || (next_even < even.cols() && next_even <= next_odd);
    std::vector<cplx> v = take_even ? even.column(next_even) : odd.column(next_odd);
    const int k = take_even ? static_cast<int>(2 * next_even) : static_cast<int>(2 * next_odd + 1);
    (take_even ? next_even : next_odd)++;
    make_largest_entry_positive(v);
    basis.hermite_vectors.set_column(c, v);
    basis.index_map.push_back(k);
  }
  return basis;
}

FractionalBasis DfrtBasis::fractional_basis() const {
  FractionalBasis out;
  out.vectors = hermite_vectors;
  out.inverse = hermite_vectors.transpose();
  out.unitary_vectors = true;
  out.log_eigenvalues.resize(index_map.size());
  for (std::size_t c = 0; c < index_map.size(); ++c)
    out.log_eigenvalues[c] = {0.0, -std::numbers::pi * static_cast<double>(index_map[c]) / 2.0};
  return out;
}

std::shared_ptr<const DfrtBasis> cached_dfrt_basis(std::size_t size) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const DfrtBasis>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(size); it != cache.end()) return it->second;
  }
  auto basis = std::make_shared<const DfrtBasis>(dfrt_basis(size));
  std::lock_guard lock(mutex);
  return cache.try_emplace(size, std::move(basis)).first->second;
}

ComplexMatrix dfrt_matrix(std::size_t size, double alpha) {
  if (size < 2) throw Error(ErrorKind::TooSmall, "dfrt_matrix needs N >= 2");
  if (!std::isfinite(alpha)) throw Error(ErrorKind::InvalidArgument, "fractional order must be finite");
  if (alpha == 0.0) return ComplexMatrix::identity(size);
  if (alpha == 1.0) return dft_matrix(size);
  const auto basis = cached_dfrt_basis(size);
  const std::size_t n = basis->size;
  std::vector<cplx> phase(n);
  for (std::size_t c = 0; c < n; ++c)
    phase[c] = std::polar(1.0, -std::numbers::pi * static_cast<double>(basis->index_map[c]) * alpha / 2.0);
  return basis->hermite_vectors.scale_columns(phase) * basis->hermite_vectors.transpose();
}

ComplexMatrix frt_apply_rows(const ComplexMatrix& x, double alpha) {
  if (x.cols() < 2) throw Error(ErrorKind::TooSmall, "frt_apply_rows needs T >= 2 columns");
  // (F^α)ᵀ = F^α: the Hermite-Gaussian sum is symmetric in (m, n).
  return x * dfrt_matrix(x.cols(), alpha);
}

std::size_t zero_crossings(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n == 0) return 0;
  double peak = 0.0;
  for (double x : v) peak = std::max(peak, std::abs(x));
  const double floor = 1e-12 * peak;
  std::size_t count = 0;
  int previous = 0;
  const std::size_t start = n - n / 2;  // index of n = −⌊N/2⌋
  for (std::size_t i = 0; i < n; ++i) {
    const double x = v[(start + i) % n];
    if (std::abs(x) <= floor) continue;
    const int sign = x > 0.0 ? 1 : -1;
    if (previous != 0 && sign != previous) ++count;
    previous = sign;
  }
  return count;
}

}  // namespace jfrt
