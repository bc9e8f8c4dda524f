#ifndef CARDREC_KERNELS_HPP
#define CARDREC_KERNELS_HPP

#include <complex>
#include <span>
#include <vector>

#include "cardrec/families.hpp"
#include "cardrec/grid.hpp"
#include "cardrec/lattice.hpp"

// Data-parallel inner loops of the project.  Each kernel comes in two
// flavours: a plain serial reference and an OpenMP version that splits the
// output elements across threads.  Both call the same per-element routines
// in the same deterministic summation order, so outputs are bitwise
// identical for any thread count; the unit tests assert exactly that and
// tools/cardrec-bench compares their throughput.

namespace cardrec::kernels {

// Effective thread cap: CARDREC_THREADS when set, else the OpenMP default.
int thread_cap();

// ---- periodized denominators -------------------------------------------

// sum_{||j||_inf <= J} phi_hat(xi + 2 pi j), shells in increasing order,
// plus the midpoint integral tail correction for 1-D power-decay families.
// Throws OriginSingularity at xi = 0 for origin-singular families.
double denominator_element(const InterpolatorFamily& fam,
                           std::span<const double> xi, long J);

// Denominators at every grid node.  Origin-singular families get +inf at
// the origin node (the weight assembly owns the limit convention there).
std::vector<double> denominator_grid_serial(const InterpolatorFamily& fam,
                                            const FrequencyGrid& grid, long J);
std::vector<double> denominator_grid(const InterpolatorFamily& fam,
                                     const FrequencyGrid& grid, long J);

// ---- fundamental weights -------------------------------------------------

// weights[b][m] = phi_hat(xi_m + 2 pi k_b) / den[m] for the shell-ordered
// block list; the origin node of singular families carries the analytic
// limit (1 on block 0, 0 elsewhere).
std::vector<std::vector<double>> weight_blocks_serial(
    const InterpolatorFamily& fam, const FrequencyGrid& grid,
    std::span<const Index> blocks, std::span<const double> den);
std::vector<std::vector<double>> weight_blocks(
    const InterpolatorFamily& fam, const FrequencyGrid& grid,
    std::span<const Index> blocks, std::span<const double> den);

// ---- spatial synthesis ----------------------------------------------------

// L(x) = (2 pi)^{-n} (2 pi/N)^n sum_b sum_m w[b][m] e^{i<x, xi_m + 2 pi k_b>},
// regrouped as e^{i 2 pi <x,k_b>} * sum_m w[b][m] e^{i<x, xi_m>}.
std::complex<double> spatial_element(const FrequencyGrid& grid,
                                     std::span<const Index> blocks,
                                     std::span<const std::vector<double>> weights,
                                     std::span<const double> x);

std::vector<std::complex<double>> spatial_batch_serial(
    const FrequencyGrid& grid, std::span<const Index> blocks,
    std::span<const std::vector<double>> weights,
    std::span<const std::vector<double>> points);
std::vector<std::complex<double>> spatial_batch(
    const FrequencyGrid& grid, std::span<const Index> blocks,
    std::span<const std::vector<double>> weights,
    std::span<const std::vector<double>> points);

// ---- block convolution ----------------------------------------------------

// out[l][m] = sum_k weights[l - k][m] * f_k[m] over the input support,
// one output block per element of `out_blocks`.
using BlockValues = std::vector<std::pair<Index, std::vector<Complex>>>;

BlockValues convolve_blocks_serial(
    const FrequencyGrid& grid, std::span<const Index> weight_blocks,
    std::span<const std::vector<double>> weights, const BlockValues& input,
    std::span<const Index> out_blocks);
BlockValues convolve_blocks(
    const FrequencyGrid& grid, std::span<const Index> weight_blocks,
    std::span<const std::vector<double>> weights, const BlockValues& input,
    std::span<const Index> out_blocks);

}  // namespace cardrec::kernels

#endif
