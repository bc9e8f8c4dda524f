#include "cardrec/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cardrec {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

FrequencyGrid::FrequencyGrid(int dimension, int points_per_axis)
    : dim_(dimension), n_per_axis_(points_per_axis) {
  if (dim_ < 1) throw std::invalid_argument("grid dimension must be >= 1");
  if (n_per_axis_ < 2 || n_per_axis_ % 2 != 0)
    throw std::invalid_argument("points per axis must be even and >= 2");
  node_count_ = 1;
  for (int i = 0; i < dim_; ++i) {
    if (node_count_ > (std::size_t{1} << 40) / static_cast<std::size_t>(n_per_axis_))
      throw std::invalid_argument("grid too large");
    node_count_ *= static_cast<std::size_t>(n_per_axis_);
  }
  cell_weight_ = 1.0;
  for (int i = 0; i < dim_; ++i) cell_weight_ *= kTwoPi / n_per_axis_;
}

double FrequencyGrid::coordinate(int m) const { return -kPi + kTwoPi * m / n_per_axis_; }

void FrequencyGrid::node(std::size_t flat, std::span<double> out) const {
  for (int axis = dim_ - 1; axis >= 0; --axis) {
    out[axis] = coordinate(static_cast<int>(flat % n_per_axis_));
    flat /= n_per_axis_;
  }
}

std::vector<double> FrequencyGrid::node(std::size_t flat) const {
  std::vector<double> out(dim_);
  node(flat, out);
  return out;
}

bool FrequencyGrid::interior(std::size_t flat) const {
  for (int axis = 0; axis < dim_; ++axis) {
    if (flat % n_per_axis_ == 0) return false;  // coordinate -pi
    flat /= n_per_axis_;
  }
  return true;
}

std::size_t FrequencyGrid::origin_node() const {
  std::size_t flat = 0;
  for (int i = 0; i < dim_; ++i) flat = flat * n_per_axis_ + n_per_axis_ / 2;
  return flat;
}

GridFunction::GridFunction(const FrequencyGrid& g, std::vector<Complex> v)
    : grid(g), values(std::move(v)) {
  if (values.size() != grid.node_count())
    throw std::invalid_argument("GridFunction value count does not match grid");
}

GridFunction operator-(const GridFunction& a, const GridFunction& b) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("grid mismatch");
  GridFunction out(a.grid);
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = a.values[i] - b.values[i];
  return out;
}

GridFunction operator*(Complex s, const GridFunction& g) {
  GridFunction out(g.grid);
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = s * g.values[i];
  return out;
}

std::size_t SampleArray::window_size(int dim, int radius) {
  std::size_t n = 1;
  const std::size_t w = 2 * static_cast<std::size_t>(radius) + 1;
  for (int i = 0; i < dim; ++i) n *= w;
  return n;
}

namespace {

double lp_norm_impl(const GridFunction& g, double p, bool interior_only) {
  if (!(p >= 1.0))
    throw std::invalid_argument("lp_norm requires p in [1, inf]");
  const auto& grid = g.grid;
  if (std::isinf(p)) {
    double mx = 0.0;
    for (std::size_t i = 0; i < g.values.size(); ++i) {
      if (interior_only && !grid.interior(i)) continue;
      mx = std::max(mx, std::abs(g.values[i]));
    }
    return mx;
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    if (interior_only && !grid.interior(i)) continue;
    acc += std::pow(std::abs(g.values[i]), p);
  }
  return std::pow(grid.cell_weight() * acc, 1.0 / p);
}

}  // namespace

double lp_norm(const GridFunction& g, double p) { return lp_norm_impl(g, p, false); }

double lp_norm_interior(const GridFunction& g, double p) {
  return lp_norm_impl(g, p, true);
}

Complex synthesize(const GridFunction& g, std::span<const double> x) {
  const auto& grid = g.grid;
  const int dim = grid.dimension();
  if (static_cast<int>(x.size()) != dim)
    throw std::invalid_argument("point dimension does not match grid");
  const int n = grid.points_per_axis();
  Complex acc(0.0, 0.0);
  std::vector<int> m(dim, 0);
  // lexicographic node walk with an incremental phase would be faster but
  // the deterministic order below is the mandated one and fast enough here
  for (std::size_t flat = 0; flat < grid.node_count(); ++flat) {
    double phase = 0.0;
    std::size_t rem = flat;
    for (int axis = dim - 1; axis >= 0; --axis) {
      phase += x[axis] * grid.coordinate(static_cast<int>(rem % n));
      rem /= n;
    }
    acc += g.values[flat] * Complex(std::cos(phase), std::sin(phase));
  }
  const double scale =
      grid.cell_weight() * std::pow(kTwoPi, -0.5 * dim);
  return scale * acc;
}

double trapezoid_bound(const GridFunction& g) {
  // boundary mismatch of the DFT rule on a non-periodic integrand: the jump
  // across each -pi face is at most twice the face value of |g|
  const auto& grid = g.grid;
  double jump = 0.0;
  for (std::size_t i = 0; i < g.values.size(); ++i)
    if (!grid.interior(i)) jump += std::abs(g.values[i]);
  return grid.cell_weight() * jump * std::pow(kTwoPi, -0.5 * grid.dimension());
}

Complex analyze_samples_at(const SampleArray& s, std::span<const double> xi) {
  if (static_cast<int>(xi.size()) != s.dimension)
    throw std::invalid_argument("point dimension does not match samples");
  Complex acc(0.0, 0.0);
  std::size_t flat = 0;
  for_each_in_cube(s.dimension, s.window_radius, [&](const Index& j) {
    double phase = 0.0;
    for (int a = 0; a < s.dimension; ++a) phase -= j[a] * xi[a];
    acc += s.values[flat] * Complex(std::cos(phase), std::sin(phase));
    ++flat;
  });
  return std::pow(kTwoPi, -0.5 * s.dimension) * acc;
}

GridFunction analyze_samples(const SampleArray& s, const FrequencyGrid& grid) {
  if (grid.dimension() != s.dimension)
    throw std::invalid_argument("grid dimension does not match samples");
  GridFunction out(grid);
  std::vector<double> xi(grid.dimension());
  for (std::size_t i = 0; i < grid.node_count(); ++i) {
    grid.node(i, xi);
    out.values[i] = analyze_samples_at(s, xi);
  }
  return out;
}

}  // namespace cardrec
