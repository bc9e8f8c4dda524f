#include "cardrec/fundamental.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cardrec/errors.hpp"
#include "cardrec/kernels.hpp"

namespace cardrec {

FundamentalSpectrum::FundamentalSpectrum(InterpolatorFamily fam,
                                         FrequencyGrid grid, int window,
                                         long truncation_radius,
                                         std::vector<Index> blocks,
                                         std::vector<std::vector<double>> weights,
                                         double tail_certificate)
    : family_(std::move(fam)),
      grid_(std::move(grid)),
      window_(window),
      radius_(truncation_radius),
      blocks_(std::move(blocks)),
      weights_(std::move(weights)),
      tail_certificate_(tail_certificate) {
  for (std::size_t b = 0; b < blocks_.size(); ++b) lookup_.emplace(blocks_[b], b);
}

const std::vector<double>* FundamentalSpectrum::weight_of(const Index& k) const {
  const auto it = lookup_.find(k);
  return it == lookup_.end() ? nullptr : &weights_[it->second];
}

double periodized_denominator(const InterpolatorFamily& fam,
                              std::span<const double> xi, long J) {
  return kernels::denominator_element(fam, xi, J);
}

FundamentalSpectrum fundamental_spectrum(const InterpolatorFamily& fam,
                                         const FrequencyGrid& grid, int window,
                                         double tol) {
  if (window < 1) throw std::invalid_argument("block window must be >= 1");
  if (fam.dimension() != grid.dimension())
    throw std::invalid_argument("family and grid dimension mismatch");
  const long J = std::max(tail_radius(fam, tol), static_cast<long>(window) + 1);
  auto blocks = ball_indices(grid.dimension(), window);
  auto den = kernels::denominator_grid(fam, grid, J);
  auto weights = kernels::weight_blocks(fam, grid, blocks, den);
  const double cert = majorant_tail(fam, window);
  return FundamentalSpectrum(fam, grid, window, J, std::move(blocks),
                             std::move(weights), cert);
}

double fundamental_spatial(const FundamentalSpectrum& F,
                           std::span<const double> x) {
  const Complex v = kernels::spatial_element(F.grid(), F.blocks(), F.weights(), x);
  if (std::abs(v.imag()) > 1e-10)
    throw NumericalFailure("imaginary residue above threshold in fundamental_spatial");
  return v.real();
}

std::vector<double> fundamental_spatial_batch(
    const FundamentalSpectrum& F, std::span<const std::vector<double>> points) {
  const auto vals =
      kernels::spatial_batch(F.grid(), F.blocks(), F.weights(), points);
  std::vector<double> out(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (std::abs(vals[i].imag()) > 1e-10)
      throw NumericalFailure("imaginary residue above threshold in fundamental_spatial");
    out[i] = vals[i].real();
  }
  return out;
}

std::pair<GridFunction, double> leakage(const FundamentalSpectrum& F) {
  GridFunction out(F.grid());
  const auto blocks = F.blocks();
  const auto weights = F.weights();
  for (std::size_t m = 0; m < out.values.size(); ++m) {
    double s = 0.0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (linf(blocks[b]) == 0) continue;
      s += weights[b][m];
    }
    out.values[m] = s;
  }
  return {out, lp_norm(out, 1.0)};
}

double leakage_l1_interior(const FundamentalSpectrum& F) {
  return lp_norm_interior(leakage(F).first, 1.0);
}

}  // namespace cardrec
