#include "jfrt/noise.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "jfrt/error.hpp"

namespace jfrt {

namespace {

constexpr std::uint64_t kMaskStream = 0x6d61736b5f726e67ULL;

// splitmix64 finalizer
std::uint64_t mix(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double noise_sigma(const ComplexMatrix& x, double snr_db) {
  const double energy = x.frobenius_norm() * x.frobenius_norm();
  if (energy == 0.0) throw Error(ErrorKind::ZeroSignal, "cannot set an SNR relative to an all-zero signal");
  if (std::isnan(snr_db)) throw Error(ErrorKind::InvalidArgument, "SNR is NaN");
  const double variance = energy / (static_cast<double>(x.size()) * std::pow(10.0, snr_db / 10.0));
  return std::sqrt(variance);
}

std::vector<cplx> gaussian_stream(const ComplexMatrix& x, double sigma, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<cplx> noise(x.size());
  if (x.is_real()) {
    for (auto& v : noise) v = sigma * normal(rng);
  } else {
    const double s = sigma / std::sqrt(2.0);
    for (auto& v : noise) {
      const double re = normal(rng);
      const double im = normal(rng);
      v = {s * re, s * im};
    }
  }
  return noise;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix(mix(seed) ^ (index + 0x632be59bd9b4e019ULL));
}

ComplexMatrix add_gaussian_noise(const ComplexMatrix& x, double snr_db, std::uint64_t seed) {
  if (x.frobenius_norm() == 0.0) throw Error(ErrorKind::ZeroSignal, "cannot set an SNR relative to an all-zero signal");
  if (snr_db == INFINITY) return x;
  const auto noise = gaussian_stream(x, noise_sigma(x, snr_db), seed);
  ComplexMatrix y = x;
  auto out = y.data();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += noise[i];
  return y;
}

ComplexMatrix add_sparse_noise(const ComplexMatrix& x, double density, double snr_db, std::uint64_t seed) {
  if (!(density > 0.0 && density <= 1.0))
    throw Error(ErrorKind::BadDensity, "noise density must lie in (0, 1]");
  if (x.frobenius_norm() == 0.0) throw Error(ErrorKind::ZeroSignal, "cannot set an SNR relative to an all-zero signal");
  if (snr_db == INFINITY) return x;
  const auto noise = gaussian_stream(x, noise_sigma(x, snr_db), seed);
  std::mt19937_64 mask_rng(seed ^ kMaskStream);
  std::bernoulli_distribution hit(density);
  ComplexMatrix y = x;
  auto out = y.data();
  for (std::size_t i = 0; i < out.size(); ++i)
    if (hit(mask_rng)) out[i] += noise[i];
  return y;
}

}  // namespace jfrt
