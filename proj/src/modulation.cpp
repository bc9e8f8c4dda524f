#include "cardrec/modulation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cardrec {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

int BlockSpectrum::support_radius() const {
  int r = 0;
  for (const auto& [k, g] : blocks) r = std::max(r, linf(k));
  return r;
}

BlockSpectrum operator-(const BlockSpectrum& a, const BlockSpectrum& b) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("grid mismatch");
  BlockSpectrum out(a.grid);
  for (const auto& [k, g] : a.blocks) out.blocks.emplace(k, g);
  for (const auto& [k, g] : b.blocks) {
    auto it = out.blocks.find(k);
    if (it == out.blocks.end()) {
      out.blocks.emplace(k, Complex(-1.0, 0.0) * g);
    } else {
      it->second = it->second - g;
    }
  }
  return out;
}

double BlockProfile::evaluate(std::span<const double> xi) const {
  switch (kind) {
    case ProfileKind::constant:
      return value;
    case ProfileKind::cosine: {
      double s = 0.0;
      for (std::size_t i = 0; i < coefficients.size(); ++i) {
        double prod = coefficients[i];
        for (double v : xi) prod *= std::cos(static_cast<double>(i) * v);
        s += prod;
      }
      return s;
    }
    case ProfileKind::hat: {
      double l1 = 0.0;
      for (double v : xi) l1 += std::abs(v);
      return 1.0 - l1 / kPi;
    }
    case ProfileKind::gauss: {
      double r2 = 0.0;
      for (double v : xi) r2 += v * v;
      return std::exp(-beta * r2);
    }
  }
  throw std::logic_error("unreachable");
}

int BlockProfile::degree() const {
  if (kind != ProfileKind::cosine) return 0;
  return coefficients.empty() ? 0 : static_cast<int>(coefficients.size()) - 1;
}

BlockSpectrum make_test_function(const TestFunctionSpec& spec,
                                 const FrequencyGrid& grid) {
  if (spec.parts.empty())
    throw std::invalid_argument("test function spec must be nonempty");
  BlockSpectrum out(grid);
  std::vector<double> xi(grid.dimension());
  for (const auto& [k, profile] : spec.parts) {
    if (static_cast<int>(k.size()) != grid.dimension())
      throw std::invalid_argument("block index dimension mismatch");
    if (profile.degree() >= grid.points_per_axis() / 2)
      throw std::invalid_argument(
          "profile degree must stay below N/2 for exact quadrature");
    auto [it, inserted] = out.blocks.try_emplace(k, grid);
    for (std::size_t m = 0; m < grid.node_count(); ++m) {
      grid.node(m, xi);
      it->second.values[m] += profile.evaluate(xi);
    }
  }
  return out;
}

double fw_norm(const BlockSpectrum& f, double p) {
  double s = 0.0;
  for (const auto& [k, g] : f.blocks) s += lp_norm(g, p);
  return s;
}

double fw_norm_interior(const BlockSpectrum& f, double p) {
  double s = 0.0;
  for (const auto& [k, g] : f.blocks) s += lp_norm_interior(g, p);
  return s;
}

double pw_norm(const BlockSpectrum& f) {
  for (const auto& [k, g] : f.blocks)
    if (linf(k) != 0)
      throw std::domain_error("pw_norm requires band-limited input (block 0 only)");
  const auto it = f.blocks.find(Index(f.grid.dimension(), 0));
  if (it == f.blocks.end()) return 0.0;
  return lp_norm(it->second, 2.0);
}

SampleArray sample_block(const BlockSpectrum& f, const Index& k, int window) {
  if (window < 1) throw std::invalid_argument("sample window must be >= 1");
  SampleArray out(f.grid.dimension(), window);
  const auto it = f.blocks.find(k);
  if (it == f.blocks.end()) return out;  // outside the support: zeros
  std::size_t flat = 0;
  std::vector<double> x(f.grid.dimension());
  for_each_in_cube(f.grid.dimension(), window, [&](const Index& j) {
    for (std::size_t a = 0; a < x.size(); ++a) x[a] = static_cast<double>(j[a]);
    out.values[flat++] = synthesize(it->second, x);
  });
  return out;
}

Complex evaluate(const BlockSpectrum& f, std::span<const double> x) {
  Complex acc(0.0, 0.0);
  for (const auto& [k, g] : f.blocks) {
    double kx = 0.0;
    for (std::size_t a = 0; a < x.size(); ++a) kx += k[a] * x[a];
    const Complex modulation(std::cos(kTwoPi * kx), std::sin(kTwoPi * kx));
    acc += modulation * synthesize(g, x);
  }
  return acc;
}

}  // namespace cardrec
