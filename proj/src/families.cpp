#include "cardrec/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cardrec/bessel.hpp"
#include "cardrec/errors.hpp"

namespace cardrec {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double norm2(std::span<const double> xi) {
  double s = 0.0;
  for (double v : xi) s += v * v;
  return std::sqrt(s);
}
}  // namespace

InterpolatorFamily::InterpolatorFamily(FamilyKind k, int dim, double param,
                                       double mq_exp, bool allow_small)
    : kind_(k), dim_(dim), parameter_(param), mq_exponent_(mq_exp),
      allow_small_alpha_(allow_small) {}

InterpolatorFamily InterpolatorFamily::polyharmonic(int dim, int order) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  if (order < 1) throw std::invalid_argument("polyharmonic order k must be a positive integer");
  if (2 * order <= dim)
    throw std::invalid_argument(
        "polyharmonic requires 2k > n for the H4 decay and a summable R2 majorant");
  return InterpolatorFamily(FamilyKind::polyharmonic, dim, order, 0.0, false);
}

InterpolatorFamily InterpolatorFamily::gaussian(int dim, double alpha,
                                                bool allow_small_alpha) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  if (!(alpha > 0.0)) throw std::invalid_argument("gaussian alpha must be positive");
  if (alpha < 1.0 && !allow_small_alpha)
    throw std::invalid_argument(
        "gaussian alpha < 1 needs the small-alpha override (sweep experiments only)");
  return InterpolatorFamily(FamilyKind::gaussian, dim, alpha, 0.0, allow_small_alpha);
}

InterpolatorFamily InterpolatorFamily::multiquadric(int dim, double c,
                                                    double exponent) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  if (!(c >= 1.0)) throw std::invalid_argument("multiquadric requires c >= 1");
  if (!(exponent >= 0.5))
    throw std::invalid_argument("multiquadric exponent must be >= 1/2");
  const double dist = std::abs(exponent - std::round(exponent));
  if (dist < 1e-9 && exponent >= 1.0 - 1e-9)
    throw std::invalid_argument(
        "multiquadric exponent must keep a positive distance to the integers");
  return InterpolatorFamily(FamilyKind::multiquadric, dim, c, exponent, false);
}

InterpolatorFamily InterpolatorFamily::synthetic_h2fail(int dim) {
  return InterpolatorFamily(FamilyKind::synthetic_h2fail, dim, 1.0, 0.0, false);
}

bool InterpolatorFamily::origin_singular() const {
  return kind_ == FamilyKind::polyharmonic || kind_ == FamilyKind::multiquadric;
}

DecayClass InterpolatorFamily::decay_class() const {
  switch (kind_) {
    case FamilyKind::polyharmonic: return DecayClass::power;
    case FamilyKind::gaussian: return DecayClass::superexponential;
    default: return DecayClass::exponential;
  }
}

std::string InterpolatorFamily::kind_name() const {
  switch (kind_) {
    case FamilyKind::polyharmonic: return "polyharmonic";
    case FamilyKind::gaussian: return "gaussian";
    case FamilyKind::multiquadric: return "multiquadric";
    case FamilyKind::synthetic_h2fail: return "synthetic-h2fail";
  }
  return "?";
}

double spectrum(const InterpolatorFamily& fam, std::span<const double> xi) {
  if (static_cast<int>(xi.size()) != fam.dimension())
    throw std::invalid_argument("point dimension does not match family");
  const double r = norm2(xi);
  switch (fam.kind()) {
    case FamilyKind::polyharmonic: {
      if (r == 0.0) throw OriginSingularity();
      return std::pow(r, -2.0 * fam.parameter());
    }
    case FamilyKind::gaussian:
      return std::exp(-fam.parameter() * r * r);
    case FamilyKind::multiquadric: {
      if (r == 0.0) throw OriginSingularity();
      const double c = fam.parameter();
      const double nu = fam.mq_exponent() + 0.5 * fam.dimension();
      return std::pow(c / r, nu) * bessel_k(nu, c * r);
    }
    case FamilyKind::synthetic_h2fail:
      return std::max(0.0, 1.0 - r / kPi);
  }
  throw std::logic_error("unreachable");
}

double m_ratio(const InterpolatorFamily& fam, const Index& j,
               std::span<const double> xi) {
  if (linf(j) == 0) throw std::invalid_argument("m_ratio requires j != 0");
  std::vector<double> shifted(xi.begin(), xi.end());
  for (std::size_t a = 0; a < shifted.size(); ++a) shifted[a] += kTwoPi * j[a];
  if (fam.origin_singular() && norm2(xi) == 0.0) return 0.0;  // limit convention
  const double den = spectrum(fam, xi);
  if (den == 0.0) return 0.0;
  return spectrum(fam, shifted) / den;
}

namespace {

// Envelope phi_hat_mq(rho) <= (c/rho)^nu sqrt(2 pi/(c rho)) e^{-c rho + nu^2/(2 c rho)},
// monotone decreasing in rho; from cosh t >= 1 + t^2/2 in the K_nu integral.
double mq_envelope(double c, double nu, double rho) {
  const double x = c * rho;
  return std::pow(c / rho, nu) * std::sqrt(kTwoPi / x) *
         std::exp(-x + nu * nu / (2.0 * x));
}

double mq_cell_min(const InterpolatorFamily& fam) {
  // phi_hat is radially decreasing; the cell minimum sits at the corner.
  const double corner = std::sqrt(static_cast<double>(fam.dimension())) * kPi;
  const double nu = fam.mq_exponent() + 0.5 * fam.dimension();
  return std::pow(fam.parameter() / corner, nu) * bessel_k(nu, fam.parameter() * corner);
}

// Dense-sampling grid for the numeric multiquadric majorant: 4096 steps per
// axis in 1-D (64 for n >= 2) plus the +pi endpoint, so every production
// grid with N dividing the step count is a subset of the sample set.
double mq_numeric_bound(const InterpolatorFamily& fam, const Index& j) {
  const int dim = fam.dimension();
  const int steps = dim == 1 ? 4096 : 64;
  std::vector<double> xi(dim);
  std::vector<int> idx(dim, 0);
  double best = 0.0;
  for (;;) {
    for (int a = 0; a < dim; ++a) xi[a] = -kPi + kTwoPi * idx[a] / steps;
    best = std::max(best, m_ratio(fam, j, xi));
    int axis = dim - 1;
    while (axis >= 0 && idx[axis] == steps) idx[axis--] = 0;
    if (axis < 0) break;
    ++idx[axis];
  }
  return best * 1.01;
}

}  // namespace

double m_bound(const InterpolatorFamily& fam, const Index& j) {
  const int r = linf(j);
  if (r == 0) throw std::invalid_argument("m_bound requires j != 0");
  switch (fam.kind()) {
    case FamilyKind::polyharmonic: {
      // ||xi|| <= sqrt(n) pi and ||xi + 2 pi j|| >= pi (2 ||j||_inf - 1)
      const double k = fam.parameter();
      return std::pow(fam.dimension(), k) * std::pow(2.0 * r - 1.0, -2.0 * k);
    }
    case FamilyKind::gaussian: {
      const double expo = static_cast<double>(l2sq(j)) - static_cast<double>(l1(j));
      return std::min(1.0, std::exp(-4.0 * kPi * kPi * fam.parameter() * expo));
    }
    case FamilyKind::multiquadric:
      return mq_numeric_bound(fam, j);
    case FamilyKind::synthetic_h2fail:
      return 1.0;  // compactly supported spectrum, every ratio is <= 1
  }
  throw std::logic_error("unreachable");
}

namespace {

// Certified bound on sum_{||j||_inf > J} phi_hat(xi + 2 pi j) uniform over
// the base cell; every term on shell r satisfies ||xi + 2 pi j|| >= pi(2r-1).
double spectrum_tail_bound(const InterpolatorFamily& fam, long J) {
  const int n = fam.dimension();
  switch (fam.kind()) {
    case FamilyKind::polyharmonic: {
      const double k = fam.parameter();
      return 2.0 * n * std::pow(kTwoPi, -2.0 * k) * std::pow(static_cast<double>(J), 1.0 - 2.0 * k) *
             std::pow(3.0, n - 1) / (2.0 * k - 1.0);
    }
    case FamilyKind::gaussian: {
      const double a = fam.parameter();
      double s = 0.0;
      for (long r = J + 1;; ++r) {
        const double rho = kPi * (2.0 * r - 1.0);
        const double term = static_cast<double>(shell_count(n, static_cast<int>(r))) *
                            std::exp(-a * rho * rho);
        s += term;
        if (term < 1e-300 || (s > 0.0 && term < 1e-18 * s)) break;
      }
      return s;
    }
    case FamilyKind::multiquadric: {
      const double c = fam.parameter();
      const double nu = fam.mq_exponent() + 0.5 * n;
      double s = 0.0;
      for (long r = J + 1;; ++r) {
        const double rho = kPi * (2.0 * r - 1.0);
        const double term =
            static_cast<double>(shell_count(n, static_cast<int>(r))) * mq_envelope(c, nu, rho);
        s += term;
        if (term < 1e-300 || (s > 0.0 && term < 1e-18 * s)) break;
      }
      return s;
    }
    case FamilyKind::synthetic_h2fail:
      return 0.0;  // spectrum vanishes outside the base cell
  }
  throw std::logic_error("unreachable");
}

}  // namespace

long tail_radius(const InterpolatorFamily& fam, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tail_radius requires tol > 0");
  constexpr long kMaxJ = 10'000'000;
  if (fam.kind() == FamilyKind::polyharmonic) {
    // bound is monotone in J: gallop out, then bisect for the smallest J
    if (!(spectrum_tail_bound(fam, kMaxJ) < tol))
      throw NumericalFailure("tail tolerance unreachable within J <= 1e7");
    long lo = 1, hi = kMaxJ;
    if (spectrum_tail_bound(fam, lo) < tol) return lo;
    while (lo < hi) {
      const long mid = lo + (hi - lo) / 2;
      if (spectrum_tail_bound(fam, mid) < tol) hi = mid; else lo = mid + 1;
    }
    return lo;
  }
  for (long J = 1; J <= 4096; ++J)
    if (spectrum_tail_bound(fam, J) < tol) return J;
  throw NumericalFailure("tail tolerance unreachable for exponential-decay family");
}

double majorant_tail(const InterpolatorFamily& fam, int beyond_radius) {
  const int n = fam.dimension();
  const long R = std::max(0, beyond_radius);
  switch (fam.kind()) {
    case FamilyKind::polyharmonic: {
      const double k = fam.parameter();
      const double nk = std::pow(static_cast<double>(n), k);
      double s = 0.0;
      long r = R + 1;
      const long cap = R + 100'000;
      for (; r <= cap; ++r) {
        const double term = static_cast<double>(shell_count(n, static_cast<int>(r))) * nk *
                            std::pow(2.0 * r - 1.0, -2.0 * k);
        s += term;
        if (s > 0.0 && term < 1e-18 * s) { ++r; break; }
      }
      // remainder over the stopped shells r' >= r, using
      // count(r') (2r'-1)^{-2k} <= 2n 3^{n-1} (2r'-1)^{-p}, p = 2k-(n-1) >= 2
      const double p = 2.0 * k - (n - 1);
      s += 2.0 * n * nk * std::pow(3.0, n - 1) *
           (std::pow(2.0 * r - 1.0, -p) +
            std::pow(2.0 * r - 1.0, 1.0 - p) / (2.0 * (p - 1.0)));
      return s;
    }
    case FamilyKind::gaussian: {
      const double a = fam.parameter();
      double s = 0.0;
      for (long r = R + 1;; ++r) {
        // shell maximum of e^{-4 pi^2 a (||j||^2 - ||j||_1)} sits on the axes
        const double term = static_cast<double>(shell_count(n, static_cast<int>(r))) *
                            std::exp(-4.0 * kPi * kPi * a *
                                     (static_cast<double>(r) * r - r));
        s += term;
        if (term < 1e-300 || (s > 0.0 && term < 1e-18 * s)) break;
      }
      return s;
    }
    case FamilyKind::multiquadric: {
      const double c = fam.parameter();
      const double nu = fam.mq_exponent() + 0.5 * n;
      const double cell_min = mq_cell_min(fam);
      double s = 0.0;
      for (long r = R + 1;; ++r) {
        const double rho = kPi * (2.0 * r - 1.0);
        const double term = static_cast<double>(shell_count(n, static_cast<int>(r))) *
                            mq_envelope(c, nu, rho) / cell_min;
        s += term;
        if (term < 1e-300 || (s > 0.0 && term < 1e-18 * s)) break;
      }
      return s;
    }
    case FamilyKind::synthetic_h2fail:
      return 0.0;
  }
  throw std::logic_error("unreachable");
}

ConditionReport verify_conditions(std::span<const InterpolatorFamily> fams,
                                  const FrequencyGrid& grid, int j_range,
                                  double tol, double r1_threshold) {
  if (fams.empty()) throw std::invalid_argument("verify_conditions needs at least one family");
  for (std::size_t i = 1; i < fams.size(); ++i) {
    if (fams[i].kind() != fams[0].kind())
      throw std::invalid_argument("families must share kind");
    if (!(fams[i].parameter() > fams[i - 1].parameter()))
      throw std::invalid_argument("families must be ordered by increasing parameter");
  }
  if (j_range < 1) throw std::invalid_argument("j_range must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

  ConditionReport rep;
  const int dim = grid.dimension();
  std::vector<double> xi(dim);

  // H2: min of phi_hat over the grid (origin node excluded when singular),
  // reported for the smallest parameter (the weakest member of the sweep).
  {
    const auto& fam = fams.front();
    double mn = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid.node_count(); ++i) {
      if (fam.origin_singular() && i == grid.origin_node()) continue;
      grid.node(i, xi);
      mn = std::min(mn, spectrum(fam, xi));
    }
    rep.h2_delta = mn;
  }

  // H4: log-log slope along the first axis between radii 8 pi and 16 pi.
  {
    const auto& fam = fams.front();
    std::vector<double> a(dim, 0.0), b(dim, 0.0);
    a[0] = 8.0 * kPi;
    b[0] = 16.0 * kPi;
    rep.h4_decay_exponent_fit =
        std::log(spectrum(fam, b) / spectrum(fam, a)) / std::log(2.0);
  }

  // R2 and R1 over shells 0 < ||j||_inf <= j_range.
  const auto js = ball_indices(dim, j_range);
  rep.r2_margin = std::numeric_limits<double>::infinity();
  bool r1_ok = true;
  for (const auto& j : js) {
    if (linf(j) == 0) continue;
    const double bound = m_bound(fams.front(), j);
    std::vector<double> trend;
    for (const auto& fam : fams) {
      double interior_max = 0.0;
      for (std::size_t i = 0; i < grid.node_count(); ++i) {
        if (fam.origin_singular() && i == grid.origin_node()) {
          // limit convention: the ratio vanishes where the denominator blows up
          continue;
        }
        grid.node(i, xi);
        const double ratio = m_ratio(fam, j, xi);
        if (ratio > bound * (1.0 + tol)) ++rep.r2_violations;
        rep.r2_margin = std::min(rep.r2_margin, bound - ratio);
        if (grid.interior(i)) interior_max = std::max(interior_max, ratio);
      }
      trend.push_back(interior_max);
    }
    for (std::size_t i = 1; i < trend.size(); ++i)
      if (trend[i] > trend[i - 1] + tol) r1_ok = false;
    if (trend.back() >= r1_threshold) r1_ok = false;
    rep.r1_trend.emplace_back(j, std::move(trend));
  }

  rep.passed = rep.h2_delta > 0.0 && rep.r2_violations == 0 && r1_ok;
  return rep;
}

}  // namespace cardrec
