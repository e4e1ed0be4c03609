#pragma once

#include <functional>
#include <vector>

#include "smx/errors.hpp"
#include "smx/scattering.hpp"

// Independent verification engines: Numerov integration of the radial
// equation, shooting eigenvalue search, adaptive quadrature, and circular
// contour integration. Nothing here reuses the analytic solution paths it is
// meant to check (the contour integrator consumes s_matrix values only).
namespace smx::oracle {

using cx = scattering::cx;
using scattering::ModelParams;

struct NumerovGrid {
  double r_max;
  double step;

  int n_points() const;
  void validate() const;  // step > 0 and r_max/step >= 1e4
  static NumerovGrid defaults(const ModelParams& p);  // r_max = 40a, step = 1e-3*a
};

// Integrates u'' + [k^2 + U0 e^{-r/a}] u = 0 outward from u(0) = 0 with
// u'(0) = 1 (Taylor-corrected first step), fourth-order accurate. Returns u
// sampled at r_i = i*step, i = 0..n_points-1.
std::vector<double> numerov_integrate(const ModelParams& p, double k_squared,
                                      const NumerovGrid& grid);

// Bound-state search at k = i*kappa: the matching function
// g(kappa) = u'(r_max) + kappa*u(r_max) is proportional to the coefficient of
// the growing tail e^{+kappa r}, so it crosses zero exactly at eigenvalues.
// Scan step 0.01/a, bisection refinement to 1e-8; result sorted descending.
std::vector<double> shooting_eigenvalues(const ModelParams& p, double kappa_max,
                                         const NumerovGrid& grid);

// Adaptive Simpson with embedded Richardson error estimate; tol is absolute.
double adaptive_quadrature(const std::function<double(double)>& f, double lo,
                           double hi, double tol);

struct ContourSpec {
  cx center;
  double radius = 0.0;
  int n_nodes = 256;

  void validate(const ModelParams& p) const;  // 1e-4/a < radius < 1/(4a)
};

// Trapezoidal rule on n_nodes equispaced circle points (spectrally accurate
// for the meromorphic integrand); returns the full counterclockwise contour
// integral of S, i.e. 2*pi*i*Res when exactly one simple pole is enclosed.
// A 64-node probe circle of twice the radius must be clean first.
cx contour_residue(const ModelParams& p, const ContourSpec& spec);

// Radius rule: min(1/(8a), 0.49 * distance to the nearest other singularity
// or zero of S). known_imag_points are the imaginary parts of known
// poles/zeros on the imaginary axis (bound kappas, their mirror zeros);
// the redundant lattice +-n/(2a) is always included.
double default_contour_radius(const ModelParams& p, cx center,
                              const std::vector<double>& known_imag_points = {});

}  // namespace smx::oracle
