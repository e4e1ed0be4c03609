#include "smx/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "smx/specfun.hpp"

namespace smx::spectrum {

namespace {

constexpr double kPi = std::numbers::pi;

// J_nu(alpha) for real nu; the series keeps the imaginary part exactly zero.
double j_real(double nu, double alpha) {
  return specfun::bessel_j_cx_order(cx(nu, 0.0), alpha).real();
}

double y_real(double nu, double alpha) {
  return specfun::bessel_y_cx_order(cx(nu, 0.0), alpha).real();
}

bool on_integer_lattice(double nu) {
  return std::abs(nu - std::round(nu)) < 1e-8 && std::round(nu) >= 1.0;
}

// Physical part of the residue when the bound state sits on the lattice
// nu = n: the merged (second-order in the order variable) singularity splits
// into the redundant magnitude and this physical remainder:
//   (pi/a) * pi * Y_n(alpha) * (alpha/2)^{2n} / [ (n-1)! n! dJ_nu/dnu|_n ].
double coincident_physical_residue(const ModelParams& p, int n, double djdnu) {
  const double alpha = p.alpha;
  const double yn = y_real(static_cast<double>(n), alpha);
  const double pw = std::pow(alpha / 2.0, 2 * n);
  const double fact = std::tgamma(static_cast<double>(n)) *
                      std::tgamma(static_cast<double>(n) + 1.0);
  return (kPi / p.a) * kPi * yn * pw / (fact * djdnu);
}

double require_real(const cx& z, const char* what) {
  if (std::abs(z.imag()) > 1e-10 * std::max(1.0, std::abs(z))) {
    throw Error(std::string(what) + ": non-negligible imaginary part " +
                std::to_string(z.imag()));
  }
  return z.real();
}

// Contour value of (1/2pi) * oint S dk around k = i*kappa, converted to the
// 2*pi*i*Res normalization used throughout, with every known pole/zero of S
// on the imaginary axis registered so the radius rule can keep clear of them.
double contour_lhs(const ModelParams& p, const std::vector<BoundState>& all,
                   const BoundState& bs) {
  std::vector<double> known;
  known.reserve(2 * all.size());
  for (const auto& other : all) {
    known.push_back(other.kappa);    // pole of S
    known.push_back(-other.kappa);   // mirror zero of S
  }
  oracle::ContourSpec spec;
  spec.center = cx(0.0, bs.kappa);
  spec.radius = oracle::default_contour_radius(p, spec.center, known);
  const cx raw = oracle::contour_residue(p, spec);
  double value = require_real(raw, "contour residue at bound state");
  if (on_integer_lattice(bs.nu)) {
    // The circle encloses the merged pole; remove the redundant part, whose
    // counterclockwise contour contribution is minus the closed-form magnitude.
    const int n = static_cast<int>(std::llround(bs.nu));
    const double pw = std::pow(p.alpha / 2.0, 2 * n);
    const double fact = std::tgamma(static_cast<double>(n)) *
                        std::tgamma(static_cast<double>(n) + 1.0);
    value += (kPi / p.a) * pw / fact;
  }
  return value;
}

}  // namespace

std::vector<BoundState> find_bound_states(const ModelParams& p) {
  p.validate();
  const double alpha = p.alpha;
  const double dnu = 2.0 * p.a * (0.01 / p.a);  // kappa step 0.01/a
  const double nu_tol = 2.0 * p.a * 1e-13;      // kappa resolved to 1e-13
  const double nu_max = alpha + 0.5;

  std::vector<double> roots;
  // Bracket from nu = 0 so a branch that has just entered at kappa = 0+ is
  // still caught between 0 and the first grid point.
  double prev_nu = 0.0;
  double prev_val = j_real(0.0, alpha);
  for (double nu = dnu; nu <= nu_max + 0.5 * dnu; nu += dnu) {
    const double val = j_real(nu, alpha);
    if (prev_val == 0.0) {
      if (prev_nu > 0.0) roots.push_back(prev_nu);
    } else if (val != 0.0 && std::signbit(val) != std::signbit(prev_val)) {
      double lo = prev_nu, hi = nu, flo = prev_val;
      while (hi - lo > nu_tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = j_real(mid, alpha);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (std::signbit(fm) == std::signbit(flo)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_nu = nu;
    prev_val = val;
  }

  const int cap = static_cast<int>(std::floor(alpha * alpha / 4.0));
  if (static_cast<int>(roots.size()) > cap) {
    throw Error("bound-state scan found more roots than alpha^2/4 allows");
  }

  std::vector<BoundState> states;
  states.reserve(roots.size());
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {  // kappa descending
    BoundState bs;
    bs.nu = *it;
    bs.kappa = bs.nu / (2.0 * p.a);
    bs.norm_integral = bound_state_norm_integral(p, bs.kappa);
    bs.c_l_squared = c_l_squared(p, bs);
    bs.residue_lhs = bound_residue_analytic(p, bs);
    states.push_back(bs);
  }
  return states;
}

double bound_state_norm_integral(const ModelParams& p, double kappa) {
  p.validate();
  if (!(kappa > 0.0)) throw Error("norm integral requires kappa > 0");
  const double nu = 2.0 * p.a * kappa;
  const double alpha = p.alpha;
  if (std::abs(j_real(nu, alpha)) >= 1e-9) {
    throw NotABoundState("J_nu(alpha) does not vanish at nu=" +
                         std::to_string(nu));
  }
  const double jp1 = j_real(nu + 1.0, alpha);
  const double djdnu = specfun::bessel_j_order_derivative(nu, alpha);
  return (alpha / (2.0 * kappa)) * jp1 * djdnu;
}

double c_l_squared(const ModelParams& p, const BoundState& bs) {
  p.validate();
  const double norm = bs.norm_integral > 0.0
                          ? bs.norm_integral
                          : bound_state_norm_integral(p, bs.kappa);
  if (!(norm > 0.0)) throw Error("norm integral must be positive");
  const double g = std::tgamma(1.0 + bs.nu);
  return 2.0 * kPi * std::pow(p.alpha / 2.0, 2.0 * bs.nu) / (g * g * norm);
}

double bound_residue_analytic(const ModelParams& p, const BoundState& bs) {
  p.validate();
  const double nu = bs.nu;
  const double alpha = p.alpha;
  if (std::abs(j_real(nu, alpha)) >= 1e-9) {
    throw NotABoundState("J_nu(alpha) does not vanish at nu=" +
                         std::to_string(nu));
  }
  const double djdnu = specfun::bessel_j_order_derivative(nu, alpha);
  if (std::abs(djdnu) < 1e-12) {
    throw DegenerateZero("dJ/dnu vanishes at nu=" + std::to_string(nu));
  }
  if (on_integer_lattice(nu)) {
    const int n = static_cast<int>(std::llround(nu));
    return coincident_physical_residue(p, n, djdnu);
  }
  // 2*pi*i * Res_k S = 2*pi*i * (i/(2a)) * F_-(i kappa) / dF_+/d(i rho),
  // assembled from the complex building blocks; the result must be real.
  const cx order(-nu, 0.0);
  const cx jm = specfun::bessel_j_cx_order(order, alpha);
  const cx gm = specfun::gamma_cx(cx(1.0 - nu, 0.0));
  const cx gp = specfun::gamma_cx(cx(1.0 + nu, 0.0));
  const cx pw = std::exp(cx(2.0 * nu, 0.0) * std::log(cx(alpha / 2.0, 0.0)));
  const cx value = -(kPi / p.a) * jm * gm * pw / (gp * djdnu);
  return require_real(value, "analytic bound residue");
}

double redundant_residue_analytic(const ModelParams& p, int n) {
  p.validate();
  if (n < 1) throw Error("redundant pole index must be >= 1");
  const double jn = j_real(static_cast<double>(n), p.alpha);
  if (std::abs(jn) < 1e-10) {
    throw CoincidentPhysicalPole("J_n(alpha) vanishes at n=" +
                                 std::to_string(n) +
                                 "; the pole is physical, not redundant");
  }
  const double pw = std::pow(p.alpha / 2.0, 2 * n);
  const double fact = std::tgamma(static_cast<double>(n) + 1.0) *
                      std::tgamma(static_cast<double>(n));
  return (kPi / p.a) * pw / fact;
}

RedundantPole redundant_pole_report(const ModelParams& p, int n) {
  RedundantPole rp;
  rp.n = n;
  rp.k_n = cx(0.0, static_cast<double>(n) / (2.0 * p.a));
  rp.residue_analytic = redundant_residue_analytic(p, n);

  std::vector<double> known;
  for (const auto& bs : find_bound_states(p)) {
    known.push_back(bs.kappa);
    known.push_back(-bs.kappa);
  }
  oracle::ContourSpec spec;
  spec.center = rp.k_n;
  spec.radius = oracle::default_contour_radius(p, spec.center, known);
  rp.residue_contour =
      require_real(oracle::contour_residue(p, spec), "redundant-pole contour");
  return rp;
}

std::pair<double, double> redundant_pole_sum(const ModelParams& p,
                                             double r_plus_rprime, int terms) {
  p.validate();
  if (!(r_plus_rprime > 0.0)) throw Error("r + r' must be positive");
  if (terms < 1) throw Error("partial sum needs at least one term");
  const double q = (p.alpha / 2.0) * std::exp(-r_plus_rprime / (4.0 * p.a));
  double term = q * q;  // n = 1: q^2 / (1! 0!)
  double sum = term;
  for (int n = 2; n <= terms; ++n) {
    term *= q * q / (static_cast<double>(n) * (n - 1.0));
    sum += term;
  }
  const double partial = (kPi / p.a) * sum;
  const double closed = (kPi / p.a) * q * specfun::bessel_i1(2.0 * q);
  return {partial, closed};
}

std::pair<double, double> large_n_limit_check(const ModelParams& p, int n) {
  p.validate();
  if (n < 1) throw Error("large-n check requires n >= 1");
  const cx k(0.0, (n + 0.5) / (2.0 * p.a));
  const cx s = scattering::s_matrix(p, k);
  const double s_value = require_real(s, "S on the half-integer lattice");
  // 2 (2n)!! / [(2n-1)!! sqrt(2 pi (2n+1))] via (2n)!! = 2^n n!,
  // (2n-1)!! = (2n)!/(2^n n!), assembled in the log domain.
  const double ln_a = std::log(2.0) + 2.0 * n * std::log(2.0) +
                      2.0 * std::lgamma(n + 1.0) - std::lgamma(2.0 * n + 1.0) -
                      0.5 * std::log(2.0 * kPi * (2.0 * n + 1.0));
  return {s_value, std::exp(ln_a)};
}

HeisenbergReport heisenberg_report(const ModelParams& p, Method method) {
  HeisenbergReport report;
  report.method = method;
  report.bound_states = find_bound_states(p);
  report.ratios.reserve(report.bound_states.size());
  for (const auto& bs : report.bound_states) {
    const double lhs = method == Method::analytic_residue
                           ? bs.residue_lhs
                           : contour_lhs(p, report.bound_states, bs);
    report.ratios.push_back(lhs / bs.c_l_squared);
  }
  return report;
}

double reduced_identity_check(const ModelParams& p, double kappa) {
  p.validate();
  if (!(kappa > 0.0)) throw Error("reduced identity requires kappa > 0");
  const double nu = 2.0 * p.a * kappa;
  const double lhs = j_real(-nu, p.alpha) * j_real(nu + 1.0, p.alpha);
  const double rhs = -2.0 * std::sin(nu * kPi) / (kPi * p.alpha);
  return lhs - rhs;
}

}  // namespace smx::spectrum
