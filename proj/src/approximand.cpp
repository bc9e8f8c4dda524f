#include "cardrec/approximand.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cardrec/errors.hpp"
#include "cardrec/kernels.hpp"

namespace cardrec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// sup-norm certificate for the blocks beyond the output window:
// sum_{||l|| > outW} ||J_hat_l||_inf <= sum_k ||f_hat_k||_inf * sum_{||d|| >
// outW - ||k||} M_bar_d.
double out_window_certificate(const BlockSpectrum& f,
                              const InterpolatorFamily& fam, int out_window) {
  double cert = 0.0;
  for (const auto& [k, g] : f.blocks)
    cert += lp_norm(g, std::numeric_limits<double>::infinity()) *
            majorant_tail(fam, out_window - linf(k));
  return cert;
}

Approximand convolve(const BlockSpectrum& f_like,
                     const kernels::BlockValues& input,
                     const FundamentalSpectrum& F, int out_window,
                     int support_radius) {
  if (out_window < 1) throw std::invalid_argument("out_window must be >= 1");
  if (F.block_window() < out_window + support_radius)
    throw std::invalid_argument(
        "weight window too small: block_window must be at least " +
        std::to_string(out_window + support_radius));
  const auto out_ids = ball_indices(F.grid().dimension(), out_window);
  const auto rows = kernels::convolve_blocks(F.grid(), F.blocks(), F.weights(),
                                             input, out_ids);
  Approximand out(F.grid());
  for (const auto& [l, vals] : rows)
    out.blocks.blocks.emplace(l, GridFunction(F.grid(), vals));
  out.out_tail_certificate =
      out_window_certificate(f_like, F.family(), out_window);
  return out;
}

}  // namespace

Approximand approximand_spectral(const BlockSpectrum& f,
                                 const FundamentalSpectrum& F, int out_window) {
  if (!(f.grid == F.grid())) throw std::invalid_argument("grid mismatch");
  kernels::BlockValues input;
  for (const auto& [k, g] : f.blocks) input.emplace_back(k, g.values);
  return convolve(f, input, F, out_window, f.support_radius());
}

Approximand approximand_from_samples(const std::map<Index, SampleArray>& samples,
                                     const FundamentalSpectrum& F,
                                     int out_window) {
  BlockSpectrum sigma(F.grid());
  for (const auto& [k, s] : samples)
    sigma.blocks.emplace(k, analyze_samples(s, F.grid()));
  return approximand_spectral(sigma, F, out_window);
}

Complex evaluate_approximand_time(const std::map<Index, SampleArray>& samples,
                                  const FundamentalSpectrum& F,
                                  std::span<const double> x) {
  const int dim = F.grid().dimension();
  Complex acc(0.0, 0.0);
  std::vector<double> shifted(dim);
  for (const auto& [k, s] : samples) {
    double kx = 0.0;
    for (int a = 0; a < dim; ++a) kx += k[a] * x[a];
    const Complex modulation(std::cos(kTwoPi * kx), std::sin(kTwoPi * kx));
    Complex inner(0.0, 0.0);
    std::size_t flat = 0;
    for_each_in_cube(dim, s.window_radius, [&](const Index& j) {
      const Complex sj = s.values[flat++];
      if (sj != Complex(0.0, 0.0)) {
        for (int a = 0; a < dim; ++a) shifted[a] = x[a] - j[a];
        inner += sj * fundamental_spatial(F, shifted);
      }
    });
    acc += modulation * inner;
  }
  return acc;
}

double ErrorReport::fw(double p) const {
  if (std::isinf(p)) return fwinf;
  if (p == 1.0) return fw1;
  if (p == 2.0) return fw2;
  throw std::invalid_argument("fw errors tracked for p in {1, 2, inf}");
}

double ErrorReport::fw_interior(double p) const {
  if (std::isinf(p)) return fwinf_interior;
  if (p == 1.0) return fw1_interior;
  if (p == 2.0) return fw2_interior;
  throw std::invalid_argument("fw errors tracked for p in {1, 2, inf}");
}

bool ErrorReport::all_bounds_pass() const {
  for (const auto& b : bound_checks)
    if (!b.pass) return false;
  return true;
}

ErrorReport error_report(const BlockSpectrum& f, const BlockSpectrum& Jf,
                         const FundamentalSpectrum& F,
                         std::span<const std::vector<double>> eval_points,
                         double out_tail_certificate) {
  if (!(f.grid == Jf.grid)) throw std::invalid_argument("grid mismatch");
  const int dim = f.grid.dimension();
  const double inf = std::numeric_limits<double>::infinity();

  ErrorReport rep;
  rep.family_parameter = F.family().parameter();
  rep.out_tail_certificate = out_tail_certificate;
  rep.f_norm_inf = fw_norm(f, inf);

  const BlockSpectrum diff = f - Jf;
  const double ps[3] = {1.0, 2.0, inf};
  double raw[3] = {0.0, 0.0, 0.0};
  double raw_interior[3] = {0.0, 0.0, 0.0};
  double flp[3] = {0.0, 0.0, 0.0};  // F L_p norm over the disjoint cells
  for (const auto& [l, g] : diff.blocks) {
    for (int i = 0; i < 3; ++i) {
      const double v = lp_norm(g, ps[i]);
      raw[i] += v;
      raw_interior[i] += lp_norm_interior(g, ps[i]);
      if (std::isinf(ps[i]))
        flp[i] = std::max(flp[i], v);
      else
        flp[i] += std::pow(v, ps[i]);
    }
  }
  for (int i = 0; i < 2; ++i) flp[i] = std::pow(flp[i], 1.0 / ps[i]);

  auto cert_p = [&](double p) {
    const double mass = std::isinf(p) ? 1.0 : std::pow(kTwoPi, dim / p);
    return out_tail_certificate * mass;
  };
  rep.fw1 = raw[0] + cert_p(1.0);
  rep.fw2 = raw[1] + cert_p(2.0);
  rep.fwinf = raw[2] + cert_p(inf);
  rep.fw1_interior = raw_interior[0] + cert_p(1.0);
  rep.fw2_interior = raw_interior[1] + cert_p(2.0);
  rep.fwinf_interior = raw_interior[2] + cert_p(inf);

  for (const auto& x : eval_points)
    rep.pointwise_sup =
        std::max(rep.pointwise_sup, std::abs(evaluate(f, x) - evaluate(Jf, x)));

  std::vector<double> xm(dim);
  for_each_in_ball(dim, 4, [&](const Index& m) {
    for (int a = 0; a < dim; ++a) xm[a] = static_cast<double>(m[a]);
    rep.interp_residual =
        std::max(rep.interp_residual, std::abs(evaluate(f, xm) - evaluate(Jf, xm)));
  });

  const auto leak = leakage(F);
  rep.leakage_l1 = leak.second;
  rep.leakage_l1_interior = lp_norm_interior(leak.first, 1.0);

  // (a) pointwise vs FW_p, the n-dimensional Hoelder constant
  for (int i = 0; i < 3; ++i) {
    const double expo = std::isinf(ps[i]) ? dim * (1.0 - 0.0) - 0.5 * dim
                                          : dim * (1.0 - 1.0 / ps[i]) - 0.5 * dim;
    BoundCheck b;
    b.name = std::isinf(ps[i]) ? "pointwise_le_fw_inf"
                               : (ps[i] == 1.0 ? "pointwise_le_fw_1" : "pointwise_le_fw_2");
    b.lhs = rep.pointwise_sup;
    b.rhs = std::pow(kTwoPi, expo) * rep.fw(ps[i]) + 1e-9;
    b.pass = b.lhs <= b.rhs;
    rep.bound_checks.push_back(b);
  }
  // (b) F L_p <= FW_p over the disjoint frequency cells
  for (int i = 0; i < 3; ++i) {
    BoundCheck b;
    b.name = std::isinf(ps[i]) ? "flp_le_fw_inf"
                               : (ps[i] == 1.0 ? "flp_le_fw_1" : "flp_le_fw_2");
    b.lhs = flp[i];
    b.rhs = rep.fw(ps[i]) + 1e-12 * (1.0 + rep.fw(ps[i]));
    b.pass = b.lhs <= b.rhs;
    rep.bound_checks.push_back(b);
  }
  // (c) a-priori bound of the main theorem, computable form: the sum of
  // max-node shifted weights plus the truncation certificates
  {
    double weight_sum = 0.0;
    for (std::size_t b = 0; b < F.blocks().size(); ++b) {
      if (linf(F.blocks()[b]) == 0) continue;
      double mx = 0.0;
      for (double w : F.weights()[b]) mx = std::max(mx, w);
      weight_sum += mx;
    }
    for (int i = 0; i < 3; ++i) {
      BoundCheck b;
      b.name = std::isinf(ps[i]) ? "apriori_fw_inf"
                                 : (ps[i] == 1.0 ? "apriori_fw_1" : "apriori_fw_2");
      b.lhs = rep.fw(ps[i]);
      b.rhs = 2.0 * (weight_sum + F.tail_certificate()) * fw_norm(f, ps[i]) +
              cert_p(ps[i]) + 1e-9 * (1.0 + rep.fw(ps[i]));
      b.pass = b.lhs <= b.rhs;
      rep.bound_checks.push_back(b);
    }
  }
  return rep;
}

std::vector<ErrorReport> convergence_sweep(
    std::span<const InterpolatorFamily> fams, const TestFunctionSpec& spec,
    const FrequencyGrid& grid, const SweepWindows& windows,
    std::span<const std::vector<double>> eval_points) {
  if (fams.empty()) throw std::invalid_argument("sweep needs at least one family");
  for (std::size_t i = 1; i < fams.size(); ++i) {
    if (fams[i].kind() != fams[0].kind())
      throw std::invalid_argument("sweep families must share kind");
    if (!(fams[i].parameter() > fams[i - 1].parameter()))
      throw std::invalid_argument("sweep families must be ordered by parameter");
  }
  const BlockSpectrum f = make_test_function(spec, grid);
  const int supp = f.support_radius();
  const int out_window = supp + windows.block_window;
  const int table_window = out_window + supp;
  std::vector<ErrorReport> out;
  for (const auto& fam : fams) {
    const auto F = fundamental_spectrum(fam, grid, table_window, windows.tol);
    const auto Jf = approximand_spectral(f, F, out_window);
    out.push_back(
        error_report(f, Jf.blocks, F, eval_points, Jf.out_tail_certificate));
  }
  return out;
}

}  // namespace cardrec
