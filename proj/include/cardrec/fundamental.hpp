#ifndef CARDREC_FUNDAMENTAL_HPP
#define CARDREC_FUNDAMENTAL_HPP

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "cardrec/families.hpp"
#include "cardrec/grid.hpp"

namespace cardrec {

// L_hat_alpha on a window of 2 pi-shifted blocks.  Stored values are the
// dimensionless convex weights (2 pi)^{n/2} L_hat = phi_hat(xi + 2 pi k) /
// sum_j phi_hat(xi + 2 pi j); the (2 pi)^{-n/2} of the definition is
// reattached exactly once, in spatial evaluation and approximand synthesis.
class FundamentalSpectrum {
 public:
  FundamentalSpectrum(InterpolatorFamily fam, FrequencyGrid grid, int window,
                      long truncation_radius, std::vector<Index> blocks,
                      std::vector<std::vector<double>> weights,
                      double tail_certificate);

  const InterpolatorFamily& family() const { return family_; }
  const FrequencyGrid& grid() const { return grid_; }
  int block_window() const { return window_; }
  long truncation_radius() const { return radius_; }
  double tail_certificate() const { return tail_certificate_; }

  // shell-then-lexicographic block order
  std::span<const Index> blocks() const { return blocks_; }
  std::span<const std::vector<double>> weights() const { return weights_; }
  const std::vector<double>* weight_of(const Index& k) const;

 private:
  InterpolatorFamily family_;
  FrequencyGrid grid_;
  int window_;
  long radius_;
  std::vector<Index> blocks_;
  std::vector<std::vector<double>> weights_;
  std::map<Index, std::size_t> lookup_;
  double tail_certificate_;
};

// sum_{||j||_inf <= J} phi_hat(xi + 2 pi j), with the midpoint integral tail
// correction for 1-D power-decay families.  Throws OriginSingularity at
// xi = 0 for origin-singular families.
double periodized_denominator(const InterpolatorFamily& fam,
                              std::span<const double> xi, long J);

// Builds the block weights on the grid with J = max(tail_radius(fam, tol),
// W + 1) and certifies the omitted blocks by their summed majorants.
FundamentalSpectrum fundamental_spectrum(const InterpolatorFamily& fam,
                                         const FrequencyGrid& grid, int window,
                                         double tol);

// Quadrature of the inverse transform over all carried blocks.  The
// imaginary part must vanish by symmetry up to the single unpaired extreme
// block at the -pi face; residues above 1e-10 raise NumericalFailure.
double fundamental_spatial(const FundamentalSpectrum& F,
                           std::span<const double> x);
std::vector<double> fundamental_spatial_batch(
    const FundamentalSpectrum& F, std::span<const std::vector<double>> points);

// Per-node sum of the shifted-block weights (the Proposition-1 quantity)
// and its L1 quadrature norm over the base cell.
std::pair<GridFunction, double> leakage(const FundamentalSpectrum& F);

// L1 norm of the leakage restricted to interior nodes; the faces carry the
// exceptional set of the a.e. limit and are excluded from trend checks.
double leakage_l1_interior(const FundamentalSpectrum& F);

}  // namespace cardrec

#endif
