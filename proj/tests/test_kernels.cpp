#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cardrec/families.hpp"
#include "cardrec/kernels.hpp"

using namespace cardrec;

// The OpenMP kernels split whole output elements across threads and run the
// same per-element code as the serial reference, so their outputs must be
// bitwise identical regardless of thread count.

TEST_CASE("denominator_grid: serial and parallel agree bitwise") {
  for (const auto& fam : {InterpolatorFamily::polyharmonic(1, 1),
                          InterpolatorFamily::gaussian(1, 1.0),
                          InterpolatorFamily::multiquadric(1, 1.0, 0.5)}) {
    const FrequencyGrid grid(1, 64);
    const auto a = kernels::denominator_grid_serial(fam, grid, 16);
    const auto b = kernels::denominator_grid(fam, grid, 16);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  }
}

TEST_CASE("denominator_grid 2-D bitwise agreement") {
  const auto fam = InterpolatorFamily::gaussian(2, 1.0);
  const FrequencyGrid grid(2, 16);
  const auto a = kernels::denominator_grid_serial(fam, grid, 6);
  const auto b = kernels::denominator_grid(fam, grid, 6);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("weight_blocks bitwise agreement") {
  const auto fam = InterpolatorFamily::polyharmonic(1, 2);
  const FrequencyGrid grid(1, 64);
  const auto den = kernels::denominator_grid(fam, grid, 32);
  const auto blocks = ball_indices(1, 5);
  const auto a = kernels::weight_blocks_serial(fam, grid, blocks, den);
  const auto b = kernels::weight_blocks(fam, grid, blocks, den);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t m = 0; m < a[i].size(); ++m) CHECK(a[i][m] == b[i][m]);
}

TEST_CASE("spatial_batch bitwise agreement") {
  const auto fam = InterpolatorFamily::gaussian(1, 1.0);
  const FrequencyGrid grid(1, 64);
  const auto den = kernels::denominator_grid(fam, grid, 8);
  const auto blocks = ball_indices(1, 3);
  const auto w = kernels::weight_blocks(fam, grid, blocks, den);
  std::vector<std::vector<double>> pts;
  for (int i = -8; i <= 8; ++i) pts.push_back({0.37 * i});
  const auto a = kernels::spatial_batch_serial(grid, blocks, w, pts);
  const auto b = kernels::spatial_batch(grid, blocks, w, pts);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].real() == b[i].real());
    CHECK(a[i].imag() == b[i].imag());
  }
}

TEST_CASE("convolve_blocks bitwise agreement") {
  const auto fam = InterpolatorFamily::gaussian(1, 0.5, true);
  const FrequencyGrid grid(1, 32);
  const auto den = kernels::denominator_grid(fam, grid, 8);
  const auto blocks = ball_indices(1, 7);
  const auto w = kernels::weight_blocks(fam, grid, blocks, den);
  kernels::BlockValues input;
  for (int k : {-2, 0, 1}) {
    std::vector<Complex> vals(grid.node_count());
    for (std::size_t m = 0; m < vals.size(); ++m)
      vals[m] = Complex(std::sin(0.1 * m + k), std::cos(0.2 * m - k));
    input.emplace_back(Index{k}, vals);
  }
  const auto out_ids = ball_indices(1, 5);
  const auto a = kernels::convolve_blocks_serial(grid, blocks, w, input, out_ids);
  const auto b = kernels::convolve_blocks(grid, blocks, w, input, out_ids);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].first == b[i].first);
    for (std::size_t m = 0; m < a[i].second.size(); ++m) {
      CHECK(a[i].second[m].real() == b[i].second[m].real());
      CHECK(a[i].second[m].imag() == b[i].second[m].imag());
    }
  }
}

TEST_CASE("denominator element honors the mandated shell order") {
  // shell order: j = 0, then -1, +1, then -2, +2, ...; replicate term by term
  const auto fam = InterpolatorFamily::polyharmonic(1, 1);
  const double xi[] = {1.1};
  double expect = spectrum(fam, xi);
  for (int r = 1; r <= 5; ++r) {
    const double lo[] = {xi[0] - 2.0 * std::numbers::pi * r};
    const double hi[] = {xi[0] + 2.0 * std::numbers::pi * r};
    expect += spectrum(fam, lo);
    expect += spectrum(fam, hi);
  }
  const double edge = 2.0 * std::numbers::pi * 5.5;
  expect += (std::pow(edge + xi[0], -1.0) + std::pow(edge - xi[0], -1.0)) /
            (2.0 * std::numbers::pi * 1.0);
  CHECK(kernels::denominator_element(fam, xi, 5) == expect);
}
