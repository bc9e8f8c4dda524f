#include "cardrec/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cardrec/errors.hpp"

namespace cardrec::kernels {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_origin(std::span<const double> xi) {
  for (double v : xi)
    if (v != 0.0) return false;
  return true;
}
}  // namespace

int thread_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("CARDREC_THREADS")) {
      const int v = std::atoi(env);
      if (v >= 1) return v;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
  }();
  return cap;
}

double denominator_element(const InterpolatorFamily& fam,
                           std::span<const double> xi, long J) {
  if (J < 1) throw std::invalid_argument("periodization radius must be >= 1");
  if (fam.origin_singular() && is_origin(xi)) throw OriginSingularity();
  const int dim = fam.dimension();
  std::vector<double> shifted(dim);
  double acc = 0.0;
  if (dim == 1) {
    // tight loop for the hot 1-D case, same shell order as the generic path
    acc = spectrum(fam, xi);
    for (long r = 1; r <= J; ++r) {
      shifted[0] = xi[0] - kTwoPi * r;
      acc += spectrum(fam, shifted);
      shifted[0] = xi[0] + kTwoPi * r;
      acc += spectrum(fam, shifted);
    }
  } else {
    for_each_in_ball(dim, static_cast<int>(J), [&](const Index& j) {
      for (int a = 0; a < dim; ++a) shifted[a] = xi[a] + kTwoPi * j[a];
      acc += spectrum(fam, shifted);
    });
  }
  if (fam.decay_class() == DecayClass::power && dim == 1) {
    // midpoint form of the omitted two-sided tail; overestimates the true
    // tail for the convex integrand, keeping the weights in [0, 1]
    const double k = fam.parameter();
    const double edge = kTwoPi * (J + 0.5);
    acc += (std::pow(edge + xi[0], 1.0 - 2.0 * k) +
            std::pow(edge - xi[0], 1.0 - 2.0 * k)) /
           (kTwoPi * (2.0 * k - 1.0));
  }
  return acc;
}

namespace {

double denominator_node(const InterpolatorFamily& fam, const FrequencyGrid& grid,
                        long J, std::size_t node) {
  if (fam.origin_singular() && node == grid.origin_node())
    return std::numeric_limits<double>::infinity();
  std::vector<double> xi(grid.dimension());
  grid.node(node, xi);
  return denominator_element(fam, xi, J);
}

}  // namespace

std::vector<double> denominator_grid_serial(const InterpolatorFamily& fam,
                                            const FrequencyGrid& grid, long J) {
  std::vector<double> out(grid.node_count());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = denominator_node(fam, grid, J, i);
  return out;
}

std::vector<double> denominator_grid(const InterpolatorFamily& fam,
                                     const FrequencyGrid& grid, long J) {
  std::vector<double> out(grid.node_count());
  const long count = static_cast<long>(out.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(thread_cap())
#endif
  for (long i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] =
        denominator_node(fam, grid, J, static_cast<std::size_t>(i));
  return out;
}

namespace {

std::vector<double> weight_block_row(const InterpolatorFamily& fam,
                                     const FrequencyGrid& grid, const Index& k,
                                     std::span<const double> den) {
  const int dim = grid.dimension();
  std::vector<double> row(grid.node_count());
  std::vector<double> xi(dim), shifted(dim);
  const bool zero_block = linf(k) == 0;
  for (std::size_t m = 0; m < row.size(); ++m) {
    if (fam.origin_singular() && m == grid.origin_node()) {
      row[m] = zero_block ? 1.0 : 0.0;  // analytic limit at the removable node
      continue;
    }
    grid.node(m, xi);
    for (int a = 0; a < dim; ++a) shifted[a] = xi[a] + kTwoPi * k[a];
    row[m] = spectrum(fam, shifted) / den[m];
  }
  return row;
}

}  // namespace

std::vector<std::vector<double>> weight_blocks_serial(
    const InterpolatorFamily& fam, const FrequencyGrid& grid,
    std::span<const Index> blocks, std::span<const double> den) {
  std::vector<std::vector<double>> out(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    out[b] = weight_block_row(fam, grid, blocks[b], den);
  return out;
}

std::vector<std::vector<double>> weight_blocks(
    const InterpolatorFamily& fam, const FrequencyGrid& grid,
    std::span<const Index> blocks, std::span<const double> den) {
  std::vector<std::vector<double>> out(blocks.size());
  const long count = static_cast<long>(blocks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(thread_cap())
#endif
  for (long b = 0; b < count; ++b)
    out[static_cast<std::size_t>(b)] =
        weight_block_row(fam, grid, blocks[static_cast<std::size_t>(b)], den);
  return out;
}

std::complex<double> spatial_element(const FrequencyGrid& grid,
                                     std::span<const Index> blocks,
                                     std::span<const std::vector<double>> weights,
                                     std::span<const double> x) {
  const int dim = grid.dimension();
  const int n = grid.points_per_axis();
  const std::size_t nodes = grid.node_count();
  // node phasors e^{i <x, xi_m>} once per point
  std::vector<Complex> phasor(nodes);
  for (std::size_t m = 0; m < nodes; ++m) {
    double phase = 0.0;
    std::size_t rem = m;
    for (int axis = dim - 1; axis >= 0; --axis) {
      phase += x[axis] * grid.coordinate(static_cast<int>(rem % n));
      rem /= n;
    }
    phasor[m] = Complex(std::cos(phase), std::sin(phase));
  }
  Complex acc(0.0, 0.0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    double kx = 0.0;
    for (int a = 0; a < dim; ++a) kx += blocks[b][a] * x[a];
    const Complex blockphase(std::cos(kTwoPi * kx), std::sin(kTwoPi * kx));
    const std::vector<double>& w = weights[b];
    Complex dot(0.0, 0.0);
    for (std::size_t m = 0; m < nodes; ++m) dot += w[m] * phasor[m];
    acc += blockphase * dot;
  }
  const double scale = grid.cell_weight() * std::pow(kTwoPi, -grid.dimension());
  return scale * acc;
}

std::vector<std::complex<double>> spatial_batch_serial(
    const FrequencyGrid& grid, std::span<const Index> blocks,
    std::span<const std::vector<double>> weights,
    std::span<const std::vector<double>> points) {
  std::vector<Complex> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    out[i] = spatial_element(grid, blocks, weights, points[i]);
  return out;
}

std::vector<std::complex<double>> spatial_batch(
    const FrequencyGrid& grid, std::span<const Index> blocks,
    std::span<const std::vector<double>> weights,
    std::span<const std::vector<double>> points) {
  std::vector<Complex> out(points.size());
  const long count = static_cast<long>(points.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(thread_cap())
#endif
  for (long i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] =
        spatial_element(grid, blocks, weights, points[static_cast<std::size_t>(i)]);
  return out;
}

namespace {

std::vector<Complex> convolve_one(const FrequencyGrid& grid,
                                  std::span<const Index> weight_blocks,
                                  std::span<const std::vector<double>> weights,
                                  const BlockValues& input, const Index& l) {
  // map the shell-ordered weight blocks once per call for O(log) lookups
  std::map<Index, std::size_t> lookup;
  for (std::size_t b = 0; b < weight_blocks.size(); ++b)
    lookup.emplace(weight_blocks[b], b);
  const int dim = grid.dimension();
  std::vector<Complex> out(grid.node_count(), Complex(0.0, 0.0));
  Index d(dim);
  for (const auto& [k, fk] : input) {
    for (int a = 0; a < dim; ++a) d[a] = l[a] - k[a];
    const auto it = lookup.find(d);
    if (it == lookup.end())
      throw std::invalid_argument(
          "weight window too small: need blocks up to ||l-k||_inf = " +
          std::to_string(linf(d)));
    const auto& w = weights[it->second];
    for (std::size_t m = 0; m < out.size(); ++m) out[m] += w[m] * fk[m];
  }
  return out;
}

}  // namespace

BlockValues convolve_blocks_serial(const FrequencyGrid& grid,
                                   std::span<const Index> weight_blocks,
                                   std::span<const std::vector<double>> weights,
                                   const BlockValues& input,
                                   std::span<const Index> out_blocks) {
  BlockValues out(out_blocks.size());
  for (std::size_t i = 0; i < out_blocks.size(); ++i)
    out[i] = {out_blocks[i],
              convolve_one(grid, weight_blocks, weights, input, out_blocks[i])};
  return out;
}

BlockValues convolve_blocks(const FrequencyGrid& grid,
                            std::span<const Index> weight_blocks,
                            std::span<const std::vector<double>> weights,
                            const BlockValues& input,
                            std::span<const Index> out_blocks) {
  BlockValues out(out_blocks.size());
  const long count = static_cast<long>(out_blocks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(thread_cap())
#endif
  for (long i = 0; i < count; ++i) {
    const auto& l = out_blocks[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] = {
        l, convolve_one(grid, weight_blocks, weights, input, l)};
  }
  return out;
}

}  // namespace cardrec::kernels
