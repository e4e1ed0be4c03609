#pragma once

#include <utility>
#include <vector>

#include "smx/errors.hpp"
#include "smx/oracle.hpp"
#include "smx/scattering.hpp"

// Bound states, pole residues, the Heisenberg-condition verifier, and the
// redundant-pole sum. Bound states of the model are the roots nu > 0 of
// J_nu(alpha) = 0 with kappa = nu/(2a), i.e. poles of S at k = i*kappa.
namespace smx::spectrum {

using cx = scattering::cx;
using scattering::ModelParams;

struct BoundState {
  double kappa = 0.0;          // pole at k = i*kappa, kappa > 0
  double nu = 0.0;             // 2a*kappa, the Bessel order at the zero
  double norm_integral = 0.0;  // integral of J_nu(x(r))^2 dr over r >= 0
  double c_l_squared = 0.0;    // completeness constant |C_l|^2
  double residue_lhs = 0.0;    // 2*pi*i * Res_k S at i*kappa (real, > 0)
};

struct RedundantPole {
  int n = 0;
  cx k_n;                         // i*n/(2a)
  double residue_analytic = 0.0;  // closed form (pi/a)(alpha/2)^{2n}/(n!(n-1)!), > 0
  double residue_contour = 0.0;   // counterclockwise contour value = -residue_analytic
};

enum class Method { analytic_residue, contour };

struct HeisenbergReport {
  std::vector<BoundState> bound_states;  // kappa descending
  std::vector<double> ratios;            // R_H = lhs / |C_l|^2 per state
  Method method = Method::analytic_residue;
};

// All kappa in (0, alpha/(2a)] with J_{2a kappa}(alpha) = 0: bracketing scan
// with step 0.01/a in kappa (plus a +0.5 safety margin in nu), bisection to
// |d kappa| < 1e-13. Sorted descending; empty for alpha < 2.
std::vector<BoundState> find_bound_states(const ModelParams& p);

// Closed form (alpha/(2 kappa)) J_{nu+1}(alpha) dJ_nu(alpha)/dnu at nu = 2a*kappa.
// Throws NotABoundState unless |J_nu(alpha)| < 1e-9.
double bound_state_norm_integral(const ModelParams& p, double kappa);

// |C_l|^2 = 2*pi*(alpha/2)^{2 nu} / [Gamma(1+nu)^2 * norm_integral].
double c_l_squared(const ModelParams& p, const BoundState& bs);

// 2*pi*i * Res_k S(i*kappa) evaluated analytically (simple zero of J in the
// order). When nu sits on a positive integer (bound state coinciding with
// the redundant lattice) the physical part of the merged residue is returned.
// Throws DegenerateZero if the order-derivative of J vanishes.
double bound_residue_analytic(const ModelParams& p, const BoundState& bs);

// Closed form (pi/a)(alpha/2)^{2n}/(n!(n-1)!) > 0. This is the magnitude of
// the redundant-pole residue; the counterclockwise contour integral equals
// its negative (see README on orientation). Throws CoincidentPhysicalPole
// when alpha is a zero of J_n (the pole is physical there).
double redundant_residue_analytic(const ModelParams& p, int n);

// Closed form and contour values together; the contour uses the
// default-radius rule with all bound-state poles/zeros registered.
RedundantPole redundant_pole_report(const ModelParams& p, int n);

// Total redundant-pole contribution at q = (alpha/2) e^{-(r+r')/(4a)}:
// partial = (pi/a) sum_{n=1..terms} q^{2n}/(n!(n-1)!), closed = (pi/a) q I1(2q)
// (the I1-argument convention fixed by the partial-sum oracle).
std::pair<double, double> redundant_pole_sum(const ModelParams& p,
                                             double r_plus_rprime, int terms);

// S on the imaginary sequence k = i(n+1/2)/(2a) against the double-factorial
// asymptote 2(2n)!!/[(2n-1)!! sqrt(2 pi (2n+1))] (log-domain evaluation).
std::pair<double, double> large_n_limit_check(const ModelParams& p, int n);

// For each bound state: lhs by the chosen method, rhs = |C_l|^2, ratio R_H.
HeisenbergReport heisenberg_report(const ModelParams& p, Method method);

// Residual of J_{-nu}(alpha) J_{nu+1}(alpha) = -2 sin(nu pi)/(pi alpha) at
// nu = 2a*kappa; near zero exactly when kappa is a bound state.
double reduced_identity_check(const ModelParams& p, double kappa);

}  // namespace smx::spectrum
