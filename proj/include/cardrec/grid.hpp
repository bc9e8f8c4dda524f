#ifndef CARDREC_GRID_HPP
#define CARDREC_GRID_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "cardrec/lattice.hpp"

namespace cardrec {

using Complex = std::complex<double>;

// Uniform grid on the base cell [-pi, pi)^n, nodes xi_m = -pi + 2 pi m / N
// per axis, m = 0 .. N-1, lexicographic node order.  The right endpoint +pi
// is excluded so the discrete exponentials are exactly orthogonal and the
// DFT relation is exact for trigonometric polynomials of degree < N/2.
class FrequencyGrid {
 public:
  FrequencyGrid(int dimension, int points_per_axis);

  int dimension() const { return dim_; }
  int points_per_axis() const { return n_per_axis_; }
  std::size_t node_count() const { return node_count_; }

  double coordinate(int m) const;                       // xi value of index m
  void node(std::size_t flat, std::span<double> out) const;
  std::vector<double> node(std::size_t flat) const;

  // Quadrature weight (2 pi / N)^n of the trapezoid/DFT rule.
  double cell_weight() const { return cell_weight_; }

  // A node is interior when no coordinate sits on the -pi face, i.e.
  // ||xi||_inf <= pi - 2 pi / N.  The faces carry the known exceptional set
  // of the almost-everywhere statements and are excluded from trend checks.
  bool interior(std::size_t flat) const;

  // Flat index of the origin node (exists since N is even).
  std::size_t origin_node() const;

  friend bool operator==(const FrequencyGrid& a, const FrequencyGrid& b) {
    return a.dim_ == b.dim_ && a.n_per_axis_ == b.n_per_axis_;
  }

 private:
  int dim_;
  int n_per_axis_;
  std::size_t node_count_;
  double cell_weight_;
};

// Complex samples of a function on the grid nodes.
struct GridFunction {
  FrequencyGrid grid;
  std::vector<Complex> values;

  GridFunction(const FrequencyGrid& g, Complex fill = Complex(0.0, 0.0))
      : grid(g), values(g.node_count(), fill) {}
  GridFunction(const FrequencyGrid& g, std::vector<Complex> v);
};

GridFunction operator-(const GridFunction& a, const GridFunction& b);
GridFunction operator*(Complex s, const GridFunction& g);

// Lattice samples on the window {-Js..Js}^n, lexicographic in j.
struct SampleArray {
  int dimension;
  int window_radius;
  std::vector<Complex> values;

  SampleArray(int dim, int radius)
      : dimension(dim),
        window_radius(radius),
        values(window_size(dim, radius), Complex(0.0, 0.0)) {}

  static std::size_t window_size(int dim, int radius);
  Complex& at(const Index& j) { return values[cube_flat_index(j, window_radius)]; }
  const Complex& at(const Index& j) const {
    return values[cube_flat_index(j, window_radius)];
  }
};

// ((2 pi / N)^n sum_m |g|^p)^{1/p} for p < inf, max_m |g| for p = inf.
// Exact for |g|^p when g is a trigonometric polynomial of per-axis degree
// < N/2 and p in {1 (real nonnegative g), 2}.
double lp_norm(const GridFunction& g, double p);

// Variant restricted to interior nodes (used by a.e.-limit trend checks).
double lp_norm_interior(const GridFunction& g, double p);

// (2 pi)^{-n/2} (2 pi / N)^n sum_m g(xi_m) e^{i<x, xi_m>}: the trapezoid
// value of the block inversion integral.  Exact for trig polynomials of
// per-axis degree < N/2 at integer x; carries the trapezoid boundary error
// O(1/N) at non-integer x (see trapezoid_bound).
Complex synthesize(const GridFunction& g, std::span<const double> x);

// Crude bound on the trapezoid error of `synthesize` at non-integer x for a
// smooth integrand: (h/2) * sum over faces of the |value jump| across the
// cell, h = 2 pi / N.  Reported alongside when callers need an error bar.
double trapezoid_bound(const GridFunction& g);

// (2 pi)^{-n/2} sum_{j in window} s(j) e^{-i<j, xi>}: truncated sampling
// series, evaluated at one point or at every grid node.
Complex analyze_samples_at(const SampleArray& s, std::span<const double> xi);
GridFunction analyze_samples(const SampleArray& s, const FrequencyGrid& grid);

}  // namespace cardrec

#endif
