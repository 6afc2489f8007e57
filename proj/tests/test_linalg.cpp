#include <doctest.h>

#include <algorithm>
#include <initializer_list>
#include <numbers>
#include <random>
#include <utility>

#include "jfrt/error.hpp"
#include "jfrt/linalg.hpp"
#include "oracles.hpp"

using namespace jfrt;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

ComplexMatrix reconstruct(const SpectralBasis& b) {
  return b.vectors * ComplexMatrix::diagonal(std::span<const double>(b.values)) * b.vectors.adjoint();
}

}  // namespace

TEST_CASE("hermitian_eig on the identity keeps the standard basis") {
  const SpectralBasis b = hermitian_eig(ComplexMatrix::identity(3));
  CHECK(b.values == std::vector<double>{1.0, 1.0, 1.0});
  CHECK(frobenius_distance(b.vectors, ComplexMatrix::identity(3)) < 1e-14);
}

TEST_CASE("hermitian_eig on a diagonal matrix permutes the identity") {
  const std::vector<double> d{3.0, 1.0, 2.0};
  const SpectralBasis b = hermitian_eig(ComplexMatrix::diagonal(std::span<const double>(d)));
  CHECK(b.values[0] == doctest::Approx(1.0));
  CHECK(b.values[1] == doctest::Approx(2.0));
  CHECK(b.values[2] == doctest::Approx(3.0));
  const ComplexMatrix expected{{0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
  CHECK(frobenius_distance(b.vectors, expected) < 1e-14);
}

TEST_CASE("hermitian_eig on the 2-path Laplacian") {
  const SpectralBasis b = hermitian_eig(ComplexMatrix{{1.0, -1.0}, {-1.0, 1.0}});
  CHECK(b.values[0] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(b.values[1] == doctest::Approx(2.0));
}

TEST_CASE("hermitian_eig invariants on random Hermitian matrices") {
  std::mt19937_64 rng(21);
  for (std::size_t n : {1u, 2u, 5u, 16u, 64u, 200u}) {
    const auto h = oracle::random_hermitian(n, rng);
    const SpectralBasis b = hermitian_eig(h);
    const double dn = static_cast<double>(n);
    CHECK(unitarity_defect(b.vectors) <= 1e-10 * dn);
    CHECK(frobenius_distance(reconstruct(b), h) <= 1e-9 * h.frobenius_norm());
    CHECK(std::is_sorted(b.values.begin(), b.values.end()));
    for (std::size_t c = 0; c < n; ++c) {
      // largest-magnitude entry is real and positive
      std::size_t arg = 0;
      for (std::size_t r = 0; r < n; ++r)
        if (std::abs(b.vectors(r, c)) > std::abs(b.vectors(arg, c)) + 1e-12) arg = r;
      CHECK(b.vectors(arg, c).real() > 0.0);
      CHECK(std::abs(b.vectors(arg, c).imag()) < 1e-12);
    }
    if (n <= 64) {
      const auto ref = oracle::hermitian_eigenvalues(h);
      for (std::size_t i = 0; i < n; ++i) CHECK(b.values[i] == doctest::Approx(ref[i]).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("hermitian_eig reconstruction at n = 512") {
  std::mt19937_64 rng(512);
  const auto h = oracle::random_hermitian(512, rng);
  const SpectralBasis b = hermitian_eig(h);
  CHECK(frobenius_distance(reconstruct(b), h) <= 1e-9 * h.frobenius_norm());
}

TEST_CASE("hermitian_eig is deterministic") {
  std::mt19937_64 rng(8);
  const auto h = oracle::random_hermitian(12, rng);
  CHECK(hermitian_eig(h).vectors == hermitian_eig(h).vectors);
}

TEST_CASE("hermitian_eig errors") {
  CHECK(kind_of([] { hermitian_eig(ComplexMatrix{{1.0, 2.0}, {0.0, 1.0}}); }) == ErrorKind::NotHermitian);
  CHECK(kind_of([] { hermitian_eig(ComplexMatrix(2, 3)); }) == ErrorKind::DimensionMismatch);
  ComplexMatrix nan_matrix = ComplexMatrix::identity(2);
  nan_matrix(0, 0) = NAN;
  CHECK(kind_of([&] { hermitian_eig(nan_matrix); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("principal_log branch") {
  CHECK(principal_log(cplx{-1.0, 0.0}).imag() == doctest::Approx(-std::numbers::pi));
  CHECK(principal_log(cplx{-1.0, -1e-300}).imag() == doctest::Approx(-std::numbers::pi));
  CHECK(principal_log(cplx{0.0, 1.0}).imag() == doctest::Approx(std::numbers::pi / 2));
  CHECK(principal_log(cplx{std::exp(2.0), 0.0}).real() == doctest::Approx(2.0));
}

TEST_CASE("unitary_fractional_power examples") {
  CHECK(frobenius_distance(unitary_fractional_power(ComplexMatrix::identity(3), 0.7), ComplexMatrix::identity(3)) <
        1e-12);
  const ComplexMatrix half = unitary_fractional_power(ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}, 0.5);
  CHECK(frobenius_distance(half, ComplexMatrix{{1.0, 0.0}, {0.0, cplx{0, -1}}}) < 1e-12);

  std::mt19937_64 rng(4);
  const auto u = oracle::random_unitary(6, rng);
  const auto r = unitary_fractional_power(u, 0.5);
  CHECK(frobenius_distance(oracle::matmul(r, r), u) < 1e-9);
  CHECK(unitarity_defect(r) <= 1e-9 * 6);
  CHECK(frobenius_distance(unitary_fractional_power(u, 0.0), ComplexMatrix::identity(6)) < 1e-10);
  CHECK(frobenius_distance(unitary_fractional_power(u, 1.0), u) < 1e-10);
  CHECK(kind_of([] { unitary_fractional_power(ComplexMatrix{{2.0}}, 0.5); }) == ErrorKind::NotUnitary);
}

TEST_CASE("unitary_fractional_power index additivity") {
  std::mt19937_64 rng(17);
  for (std::size_t n : {3u, 16u, 64u}) {
    const auto u = oracle::random_unitary(n, rng);
    for (auto [p, q] : std::initializer_list<std::pair<double, double>>{{0.3, 0.4}, {1.5, -0.7}, {-2.2, 1.1}, {3.9, -3.5}}) {
      // every power shares one principal log, so additivity is exact up to roundoff
      const auto lhs = unitary_fractional_power(u, p) * unitary_fractional_power(u, q);
      const auto rhs = unitary_fractional_power(u, p + q);
      CHECK(frobenius_distance(lhs, rhs) <= 1e-8 * static_cast<double>(n));
    }
  }
}

TEST_CASE("index additivity with clustered eigenphases") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> phase(-std::numbers::pi / 8.2, std::numbers::pi / 8.2);
  for (std::size_t n : {4u, 32u, 64u}) {
    const auto q = oracle::random_unitary(n, rng);
    std::vector<cplx> d(n);
    for (auto& x : d) x = std::polar(1.0, phase(rng));
    const auto u = oracle::matmul(oracle::matmul(q, ComplexMatrix::diagonal(std::span<const cplx>(d))), oracle::adjoint(q));
    for (auto [p, r] : std::initializer_list<std::pair<double, double>>{{4.0, -4.0}, {3.3, 0.6}, {-4.0, -3.9}, {2.5, 1.5}}) {
      const auto lhs = unitary_fractional_power(u, p) * unitary_fractional_power(u, r);
      CHECK(frobenius_distance(lhs, unitary_fractional_power(u, p + r)) <= 1e-8);
    }
  }
}

TEST_CASE("psd_fractional_power") {
  const std::vector<double> a{0.0, 2.0};
  CHECK(psd_fractional_power(a, 1.0) == std::vector<double>{0.0, 2.0});
  const std::vector<double> b{0.0, 4.0};
  CHECK(psd_fractional_power(b, 0.5) == std::vector<double>{0.0, 2.0});
  CHECK(psd_fractional_power(a, 0.0) == std::vector<double>{1.0, 1.0});
  const std::vector<double> tiny{-5e-11, 1.0};
  CHECK(psd_fractional_power(tiny, 0.5) == std::vector<double>{0.0, 1.0});
  const std::vector<double> negative{-1e-6, 1.0};
  CHECK(kind_of([&] { psd_fractional_power(negative, 0.5); }) == ErrorKind::NegativeEigenvalue);
  CHECK(kind_of([&] { psd_fractional_power(a, -0.5); }) == ErrorKind::NegativeOrder);
}

TEST_CASE("kron examples and mixed product") {
  CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(3)) == ComplexMatrix::identity(6));
  const ComplexMatrix swap{{0.0, 1.0}, {1.0, 0.0}};
  const ComplexMatrix k = kron(swap, ComplexMatrix::identity(2));
  const ComplexMatrix expected{
      {0.0, 0.0, 1.0, 0.0}, {0.0, 0.0, 0.0, 1.0}, {1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}};
  CHECK(k == expected);

  std::mt19937_64 rng(2);
  const auto a = oracle::random_matrix(2, 2, rng);
  const auto b = oracle::random_matrix(3, 3, rng);
  const auto x = oracle::random_matrix(2, 1, rng);
  const auto y = oracle::random_matrix(3, 1, rng);
  const auto lhs = oracle::matmul(kron(a, b), oracle::kron(x, y));
  const auto rhs = oracle::kron(oracle::matmul(a, x), oracle::matmul(b, y));
  CHECK(oracle::distance(lhs, rhs) <= 1e-12 * oracle::norm(rhs));
  CHECK(oracle::distance(kron(a, b), oracle::kron(a, b)) == 0.0);

  const auto c = oracle::random_matrix(2, 3, rng);
  const auto d = oracle::random_matrix(3, 2, rng);
  const auto mixed_lhs = oracle::matmul(kron(a, b), kron(ComplexMatrix::identity(2), oracle::matmul(b, b)));
  const auto mixed_rhs = kron(a, oracle::matmul(b, oracle::matmul(b, b)));
  CHECK(oracle::distance(mixed_lhs, mixed_rhs) <= 1e-12 * oracle::norm(mixed_rhs));
  CHECK(kron(c, d).rows() == 6);
  CHECK(kron(c, d).cols() == 6);

  CHECK(kind_of([] { kron(ComplexMatrix(100, 1), ComplexMatrix(100, 1), 8192); }) == ErrorKind::SizeOverflow);
}

TEST_CASE("kron_sum examples") {
  CHECK(kron_sum(ComplexMatrix(2, 2), ComplexMatrix(3, 3)) == ComplexMatrix(6, 6));
  const std::vector<double> d{1.0, 2.0};
  const std::vector<double> e{10.0};
  const auto s = kron_sum(ComplexMatrix::diagonal(std::span<const double>(d)),
                          ComplexMatrix::diagonal(std::span<const double>(e)));
  const std::vector<double> expected{11.0, 12.0};
  CHECK(s == ComplexMatrix::diagonal(std::span<const double>(expected)));

  std::mt19937_64 rng(6);
  const auto a = oracle::random_hermitian(2, rng);
  const auto b = oracle::random_hermitian(3, rng);
  const auto la = oracle::hermitian_eigenvalues(a);
  const auto lb = oracle::hermitian_eigenvalues(b);
  std::vector<double> sums;
  for (double x : la)
    for (double y : lb) sums.push_back(x + y);
  std::sort(sums.begin(), sums.end());
  const auto got = oracle::hermitian_eigenvalues(kron_sum(a, b));
  for (std::size_t i = 0; i < sums.size(); ++i) CHECK(got[i] == doctest::Approx(sums[i]).epsilon(1e-10));
  CHECK(kind_of([] { kron_sum(ComplexMatrix(2, 3), ComplexMatrix(2, 2)); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("diagonalize and eigendecompose") {
  std::mt19937_64 rng(30);
  const auto m = oracle::random_matrix(5, 5, rng);
  const FractionalBasis basis = diagonalize(m);
  CHECK(frobenius_distance(basis.power(1.0), m) <= 1e-9 * m.frobenius_norm());
  CHECK(frobenius_distance(basis.power(0.5) * basis.power(0.5), m) <= 1e-9 * m.frobenius_norm());
  const Eigendecomposition e = eigendecompose(m);
  CHECK(frobenius_distance(e.vectors * e.inverse, ComplexMatrix::identity(5)) < 1e-10);
  CHECK(kind_of([] { eigendecompose(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}); }) == ErrorKind::Defective);
  CHECK(kind_of([] { diagonalize(ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}); }) == ErrorKind::Defective);
}

TEST_CASE("inverse and solve") {
  std::mt19937_64 rng(31);
  const auto m = oracle::random_matrix(6, 6, rng);
  CHECK(frobenius_distance(inverse(m) * m, ComplexMatrix::identity(6)) < 1e-10);
  const auto rhs = oracle::random_matrix(6, 1, rng).column(0);
  const auto x = solve(m, rhs);
  CHECK(oracle::vdistance(x, oracle::gauss_solve(m, rhs)) < 1e-10 * oracle::vnorm(x));
  CHECK(kind_of([] { inverse(ComplexMatrix(2, 2)); }) == ErrorKind::Defective);
}
