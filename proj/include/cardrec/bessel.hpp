#ifndef CARDREC_BESSEL_HPP
#define CARDREC_BESSEL_HPP

namespace cardrec {

// Modified Bessel function of the second kind K_nu(x) for 0 <= nu <= 12,
// x > 0, by trapezoid quadrature of K_nu(x) = int_0^inf e^{-x cosh t}
// cosh(nu t) dt.  The integrand is even in t, so the trapezoid rule
// converges superalgebraically; truncation happens once the integrand drops
// below 1e-18 relative to the e^{-x} scale of the result.
double bessel_k(double nu, double x);

}  // namespace cardrec

#endif
