#include "jfrt/denoise.hpp"

#include <cmath>
#include <string>

#include "jfrt/error.hpp"
#include "jfrt/frt.hpp"
#include "jfrt/kernels.hpp"
#include "jfrt/parallel.hpp"

namespace jfrt {

namespace {

void check_params(RegularizationParams p) {
  if (!(p.tau_g >= 0.0) || !(p.tau_t >= 0.0) || !std::isfinite(p.tau_g) || !std::isfinite(p.tau_t))
    throw Error(ErrorKind::InvalidArgument, "regularization parameters must be finite and >= 0");
}

void require_laplacian_flavor(const GftOperator& g) {
  if (g.flavor != GftFlavor::laplacian)
    throw Error(ErrorKind::FlavorMismatch, "the optimal filter needs a Laplacian-flavor GFT");
}

RealMatrix filter_grid(std::span<const double> graph_spectrum, std::span<const double> time_spectrum,
                       RegularizationParams p) {
  RealMatrix h(graph_spectrum.size(), time_spectrum.size());
  for (std::size_t m = 0; m < h.rows; ++m)
    for (std::size_t n = 0; n < h.cols; ++n)
      h(m, n) = 1.0 / (1.0 + p.tau_g * graph_spectrum[m] + p.tau_t * time_spectrum[n]);
  return h;
}

}  // namespace

JointFilter build_filter(const JointFractionalLaplacian& l, RegularizationParams params) {
  check_params(params);
  return {l.order, params, filter_grid(l.graph_part.spectrum, l.time_part.spectrum, params)};
}

JointSignal denoise_spectral(const JointSignal& y, const GftOperator& g, FractionalOrderPair order,
                             RegularizationParams params) {
  require_laplacian_flavor(g);
  check_params(params);
  if (y.n_time() < 3) throw Error(ErrorKind::TooSmall, "denoising needs T >= 3");
  const auto graph_spectrum = psd_fractional_power(g.source_spectrum, order.beta);
  const auto time_spectrum = psd_fractional_power(ring_spectrum(y.n_time()), order.alpha);
  JointSignal spectral = jfrt_forward(y, g, order);
  const RealMatrix h = filter_grid(graph_spectrum, time_spectrum, params);
  kernels::active().scale_by_real(h.data, spectral.values.data());
  return jfrt_inverse(spectral, g, order);
}

JointSignal denoise_direct(const JointSignal& y, const GftOperator& g, FractionalOrderPair order,
                           RegularizationParams params, std::size_t cap) {
  require_laplacian_flavor(g);
  check_params(params);
  if (y.n_vertices() != g.size()) throw Error(ErrorKind::DimensionMismatch, "signal rows do not match the graph");
  const auto l = joint_fractional_laplacian(g, y.n_time(), order, params.tau_g, params.tau_t);
  ComplexMatrix system = l.dense(cap);
  for (std::size_t i = 0; i < system.rows(); ++i) system(i, i) += 1.0;
  const auto x = solve(system, vec(y.values));
  return {unvec(x, y.n_vertices(), y.n_time())};
}

JointFractionalLaplacian regularized_joint_fractional_laplacian(const Laplacian& l, std::size_t n_time,
                                                                FractionalOrderPair order,
                                                                RegularizationParams params) {
  check_params(params);
  if (order.alpha < 0.0 || order.beta < 0.0)
    throw Error(ErrorKind::NegativeOrder, "joint fractional Laplacian orders must be >= 0");
  return joint_fractional_laplacian(gft_from_laplacian(l), n_time, order, params.tau_g, params.tau_t);
}

double tikhonov_objective(const JointSignal& x, const JointSignal& y, const JointFractionalLaplacian& l) {
  const double residual = frobenius_distance(y.values, x.values);
  return residual * residual + l.quadratic_form(x.values).real();
}

double mse_percent(const ComplexMatrix& estimate, const ComplexMatrix& clean) {
  const double energy = clean.frobenius_norm();
  if (energy == 0.0) throw Error(ErrorKind::ZeroSignal, "MSE% is undefined for an all-zero reference");
  const double err = frobenius_distance(estimate, clean);
  return 100.0 * (err * err) / (energy * energy);
}

SweepResult denoise_sweep(const JointSignal& y, const JointSignal& clean, const GftOperator& g,
                          const SweepGrid& grid) {
  require_laplacian_flavor(g);
  if (grid.alpha.empty() || grid.beta.empty() || grid.tau_g.empty() || grid.tau_t.empty())
    throw Error(ErrorKind::InvalidArgument, "sweep grids must be nonempty");
  if (y.values.rows() != clean.values.rows() || y.values.cols() != clean.values.cols())
    throw Error(ErrorKind::DimensionMismatch, "noisy and clean signals differ in shape");
  for (double tg : grid.tau_g)
    for (double tt : grid.tau_t) check_params({tg, tt});
  if (y.n_time() < 3) throw Error(ErrorKind::TooSmall, "denoising needs T >= 3");

  SweepResult result;
  result.grid_shape = {grid.alpha.size(), grid.beta.size(), grid.tau_g.size(), grid.tau_t.size()};
  result.noisy_mse_percent = mse_percent(y.values, clean.values);
  const std::size_t taus = grid.tau_g.size() * grid.tau_t.size();
  const std::size_t orders = grid.alpha.size() * grid.beta.size();
  result.rows.resize(orders * taus);

  const auto ring = ring_spectrum(y.n_time());
  const double clean_energy = clean.values.frobenius_norm() * clean.values.frobenius_norm();
  parallel_for(orders, [&](std::size_t o) {
    const FractionalOrderPair order{grid.alpha[o / grid.beta.size()], grid.beta[o % grid.beta.size()]};
    const auto graph_spectrum = psd_fractional_power(g.source_spectrum, order.beta);
    const auto time_spectrum = psd_fractional_power(ring, order.alpha);
    const JointOperator op = joint_operator(g, y.n_time(), order);
    const ComplexMatrix noisy_hat = op.apply(y.values);
    const ComplexMatrix clean_hat = op.apply(clean.values);
    ComplexMatrix filtered(noisy_hat.rows(), noisy_hat.cols());
    for (std::size_t t = 0; t < taus; ++t) {
      const RegularizationParams p{grid.tau_g[t / grid.tau_t.size()], grid.tau_t[t % grid.tau_t.size()]};
      const RealMatrix h = filter_grid(graph_spectrum, time_spectrum, p);
      filtered = noisy_hat;
      kernels::active().scale_by_real(h.data, filtered.data());
      const double err = frobenius_distance(filtered, clean_hat);
      result.rows[o * taus + t] = {order.alpha, order.beta, p.tau_g, p.tau_t, 100.0 * err * err / clean_energy};
    }
  });

  for (std::size_t i = 1; i < result.rows.size(); ++i)
    if (result.rows[i].mse_percent < result.rows[result.argmin].mse_percent) result.argmin = i;
  return result;
}

}  // namespace jfrt
