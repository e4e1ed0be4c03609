#pragma once

#include <complex>

#include "smx/errors.hpp"

// Special-function kernel: complex Gamma/digamma, Bessel J and Y of complex
// order and real positive argument, the order-derivative of J, modified
// Bessel I1, and the confluent limit 0F1. Everything is evaluated by
// ascending series / classical connection formulas in double precision; all
// functions are pure and thread-safe.
namespace smx::specfun {

using cx = std::complex<double>;

// Truncation policy for the ascending series. Complex-order terms are not
// monotone in magnitude, so a stop requires three consecutive small terms.
struct SeriesPolicy {
  double rel_tol = 1e-15;
  int max_terms = 500;

  void validate() const;
};

// Gamma(z), >= 12 significant digits for |z| <= 50.
// Throws PoleAtNonPositiveInteger within 1e-13 of {0, -1, -2, ...}.
cx gamma_cx(cx z);

// Residue of Gamma at its pole of index n >= 1 (pole at argument 1-w as
// w -> n): (-1)^n / (n-1)!.
double gamma_residue_at(int n);

// psi(z) = Gamma'(z)/Gamma(z), >= 10 significant digits for |z| <= 50.
cx digamma_cx(cx z);

// J_nu(x) by the ascending series, branch (x/2)^nu = exp(nu*ln(x/2)) with the
// principal (real) logarithm; x must be > 0. Exact negative-integer orders
// route through J_{-n} = (-1)^n J_n.
cx bessel_j_cx_order(cx nu, double x, const SeriesPolicy& policy = {});

// dJ_nu(x)/dx via the recurrence J'_nu = J_{nu-1} - (nu/x) J_nu.
cx bessel_j_cx_order_dx(cx nu, double x, const SeriesPolicy& policy = {});

// Y_nu(x) by the connection formula [J_nu cos(nu pi) - J_{-nu}]/sin(nu pi);
// within 1e-6 of an integer order the limiting value is taken by two-offset
// Richardson extrapolation (offsets 1e-4 and 5e-5).
cx bessel_y_cx_order(cx nu, double x, const SeriesPolicy& policy = {});

// dY_nu(x)/dx via the cylinder recurrence Y'_nu = Y_{nu-1} - (nu/x) Y_nu.
cx bessel_y_cx_order_dx(cx nu, double x, const SeriesPolicy& policy = {});

// dJ_nu(x)/dnu at real order by the term-wise differentiated series,
// term_m * [ln(x/2) - psi(nu+m+1)]. Throws DomainTooSmall for x < 1e-8
// (the ln(x/2) factor makes the derivative diverge as x -> 0+).
double bessel_j_order_derivative(double nu, double x,
                                 const SeriesPolicy& policy = {});

// Modified Bessel I1(x) for 0 <= x <= 700 (OverflowGuard above).
double bessel_i1(double x);

// 0F1(b; z). Throws PoleAtNonPositiveInteger when b is within 1e-13 of a
// non-positive integer.
cx hyp0f1(cx b, cx z, const SeriesPolicy& policy = {});

}  // namespace smx::specfun
