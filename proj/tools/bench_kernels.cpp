// Compares the serial reference kernels against the OpenMP versions and
// reports timings plus the worst elementwise deviation (expected: exactly 0,
// both paths run the same per-element code in the same order).

#include <chrono>
#include <complex>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cardrec/families.hpp"
#include "cardrec/fundamental.hpp"
#include "cardrec/grid.hpp"
#include "cardrec/kernels.hpp"

using namespace cardrec;

namespace {

double now_s() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <typename F>
double time_best_of(int reps, F&& fn) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const double t0 = now_s();
    fn();
    best = std::min(best, now_s() - t0);
  }
  return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d (cap via CARDREC_THREADS)\n", kernels::thread_cap());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  const auto fam = InterpolatorFamily::polyharmonic(1, 1);
  const FrequencyGrid grid(1, 256);
  const long J = 20001;
  const int W = 4096;

  // periodized denominators
  std::vector<double> den_s, den_p;
  const double t_den_s =
      time_best_of(3, [&] { den_s = kernels::denominator_grid_serial(fam, grid, J); });
  const double t_den_p =
      time_best_of(3, [&] { den_p = kernels::denominator_grid(fam, grid, J); });
  double dev = 0.0;
  for (std::size_t i = 0; i < den_s.size(); ++i)
    dev = std::max(dev, std::abs(den_s[i] - den_p[i]));
  std::printf("denominator_grid   serial %8.1f ms | omp %8.1f ms | x%.2f | max dev %g\n",
              1e3 * t_den_s, 1e3 * t_den_p, t_den_s / t_den_p, dev);

  // weight blocks
  const auto blocks = ball_indices(1, W);
  std::vector<std::vector<double>> w_s, w_p;
  const double t_w_s = time_best_of(
      3, [&] { w_s = kernels::weight_blocks_serial(fam, grid, blocks, den_s); });
  const double t_w_p =
      time_best_of(3, [&] { w_p = kernels::weight_blocks(fam, grid, blocks, den_s); });
  dev = 0.0;
  for (std::size_t b = 0; b < w_s.size(); ++b)
    for (std::size_t m = 0; m < w_s[b].size(); ++m)
      dev = std::max(dev, std::abs(w_s[b][m] - w_p[b][m]));
  std::printf("weight_blocks      serial %8.1f ms | omp %8.1f ms | x%.2f | max dev %g\n",
              1e3 * t_w_s, 1e3 * t_w_p, t_w_s / t_w_p, dev);

  // spatial synthesis over a batch of points
  std::vector<std::vector<double>> pts;
  for (int i = 0; i <= 120; ++i) pts.push_back({-3.0 + 0.05 * i});
  std::vector<std::complex<double>> l_s, l_p;
  const double t_l_s = time_best_of(
      3, [&] { l_s = kernels::spatial_batch_serial(grid, blocks, w_s, pts); });
  const double t_l_p =
      time_best_of(3, [&] { l_p = kernels::spatial_batch(grid, blocks, w_s, pts); });
  dev = 0.0;
  for (std::size_t i = 0; i < l_s.size(); ++i)
    dev = std::max(dev, std::abs(l_s[i] - l_p[i]));
  std::printf("spatial_batch      serial %8.1f ms | omp %8.1f ms | x%.2f | max dev %g\n",
              1e3 * t_l_s, 1e3 * t_l_p, t_l_s / t_l_p, dev);

  // block convolution
  kernels::BlockValues input;
  for (int k = -2; k <= 2; ++k) {
    std::vector<Complex> vals(grid.node_count(), Complex(1.0, 0.25 * k));
    input.emplace_back(Index{k}, vals);
  }
  const auto out_ids = ball_indices(1, W - 2);
  kernels::BlockValues c_s, c_p;
  const double t_c_s = time_best_of(3, [&] {
    c_s = kernels::convolve_blocks_serial(grid, blocks, w_s, input, out_ids);
  });
  const double t_c_p = time_best_of(
      3, [&] { c_p = kernels::convolve_blocks(grid, blocks, w_s, input, out_ids); });
  dev = 0.0;
  for (std::size_t b = 0; b < c_s.size(); ++b)
    for (std::size_t m = 0; m < c_s[b].second.size(); ++m)
      dev = std::max(dev, std::abs(c_s[b].second[m] - c_p[b].second[m]));
  std::printf("convolve_blocks    serial %8.1f ms | omp %8.1f ms | x%.2f | max dev %g\n",
              1e3 * t_c_s, 1e3 * t_c_p, t_c_s / t_c_p, dev);
  return 0;
}
