#pragma once

#include <complex>
#include <vector>

#include "smx/errors.hpp"
#include "smx/specfun.hpp"

// Analytic scattering objects for the attractive exponential potential
// -U0 * exp(-r/a) in s-wave, with units fixed so E = k^2 and U0 = alpha^2/(4a^2).
// All functions are pure and thread-safe.
namespace smx::scattering {

using cx = specfun::cx;

struct ModelParams {
  double a = 1.0;      // range (length)
  double alpha = 0.0;  // alpha = 2a*sqrt(U0), dimensionless

  double u0() const { return alpha * alpha / (4.0 * a * a); }
  void validate() const;
};

// rho = 2ak; poles/zeros of S live on the integer lattice of i*rho.
struct Momentum {
  cx k;    // inverse length
  cx rho;  // 2*a*k, dimensionless
};
Momentum make_momentum(const ModelParams& p, cx k);

struct RadialPoint {
  double r;      // length, >= 0
  double x;      // alpha * exp(-r/(2a)), in (0, alpha]
  double sigma;  // exp(-r/a)
};
RadialPoint make_radial_point(const ModelParams& p, double r);

// i*rho = 2i*a*k, the Bessel order of every formula below.
cx i_rho(const ModelParams& p, cx k);

// Signed index n != 0 when i*rho is within tol of the nonzero-integer
// lattice (the pole/zero lattice of S), else 0.
int nearest_lattice_index(const ModelParams& p, cx k, double tol = 1e-9);

// S(k) as the Jost ratio F-(k)/F+(k).
// Throws EvaluationAtOrigin at k = 0 and PoleProximity within 1e-9 (in
// i*rho) of a nonzero integer; values at bound-state poles are the caller's
// responsibility (they are not on the integer lattice).
cx s_matrix(const ModelParams& p, cx k);

// F+(k) = 0F1(1 - i*rho; -alpha^2/4). Singular on i*rho = +n (n >= 1), the
// zeros of S; there the value is finite only when alpha is a zero of J_n
// (bound state coinciding with the lattice), in which case the limiting
// value is returned by Richardson extrapolation.
cx jost_plus(const ModelParams& p, cx k);

// Mirror of jost_plus under i*rho -> -i*rho; singular on i*rho = -n, the
// pole lattice of S.
cx jost_minus(const ModelParams& p, cx k);

// Regular solution phi(r) = pi*a*[Y_irho(alpha) J_irho(x) - J_irho(alpha) Y_irho(x)]
// with phi(0) = 0 (exact, structural cancellation) and phi'(0) = 1.
cx regular_solution(const ModelParams& p, cx k, double r);

// f+(k,r) = Gamma(1-i*rho) (alpha/2)^{i*rho} J_{-i*rho}(x) ~ e^{ikr}.
// Throws SingularAtRedundantZeroPoint when i*rho is within 1e-9 of n >= 1.
cx irregular_solution_plus(const ModelParams& p, cx k, double r);

// Mirror under i*rho -> -i*rho; throws SingularAtRedundantPole when i*rho is
// within 1e-9 of -n, n >= 1.
cx irregular_solution_minus(const ModelParams& p, cx k, double r);

// W_r{f+, f-} = f+ df-/dr - df+/dr f-, evaluated analytically; equals -2ik
// for any r.
cx irregular_wronskian(const ModelParams& p, cx k, double r);

// delta(k) = arg(S)/2 unwrapped continuously downward from the largest k,
// anchored to the principal value there (delta -> 0 as k -> infinity).
// Throws UnwrapAmbiguity on a jump >= pi/2 between adjacent grid points.
std::vector<double> phase_shift(const ModelParams& p,
                                const std::vector<double>& k_grid);

}  // namespace smx::scattering
