#include "smx/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace smx::oracle {
namespace {

constexpr double kPi = std::numbers::pi;

double potential_term(const ModelParams& p, double k_squared, double r) {
  // u'' = -f u with f = k^2 + U0 e^{-r/a}.
  return k_squared + p.u0() * std::exp(-r / p.a);
}

// Matching function for the shooting search; proportional to the growing-tail
// coefficient, so it changes sign transversally at each eigenvalue (the raw
// log-derivative mismatch has a pole next to each zero and is useless for
// bracketing).
double shooting_mismatch(const ModelParams& p, double kappa,
                         const NumerovGrid& grid) {
  const std::vector<double> u = numerov_integrate(p, -kappa * kappa, grid);
  const std::size_t n = u.size() - 1;
  const double h = grid.step;
  // Fourth-order one-sided derivative at r_max.
  const double du = (25.0 * u[n] - 48.0 * u[n - 1] + 36.0 * u[n - 2] -
                     16.0 * u[n - 3] + 3.0 * u[n - 4]) /
                    (12.0 * h);
  return du + kappa * u[n];
}

double simpson(const std::function<double(double)>& f, double a, double fa,
               double b, double fb, double* fm_out) {
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  *fm_out = fm;
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a,
                     double m, double b, double fa, double fm, double fb,
                     double whole, double tol, int depth) {
  double flm, frm;
  const double left = simpson(f, a, fa, m, fm, &flm);
  const double right = simpson(f, m, fm, b, fb, &frm);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  if (depth <= 0) {
    throw MaxDepthExceeded("adaptive_quadrature: recursion depth exhausted");
  }
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  return adaptive_step(f, a, lm, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_step(f, m, rm, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

}  // namespace

int NumerovGrid::n_points() const {
  return static_cast<int>(std::lround(r_max / step)) + 1;
}

void NumerovGrid::validate() const {
  if (!(step > 0.0) || !(r_max / step >= 1e4)) {
    throw Error("NumerovGrid: need step > 0 and r_max/step >= 1e4");
  }
}

NumerovGrid NumerovGrid::defaults(const ModelParams& p) {
  return NumerovGrid{40.0 * p.a, 1e-3 * p.a};
}

std::vector<double> numerov_integrate(const ModelParams& p, double k_squared,
                                      const NumerovGrid& grid) {
  p.validate();
  grid.validate();
  const int n = grid.n_points();
  const double h = grid.step;
  const double h2 = h * h;
  std::vector<double> u(static_cast<std::size_t>(n));
  u[0] = 0.0;
  // Taylor start keeping u'(0) = 1: u(h) = h - f(0) h^3/6 - f'(0) h^4/12,
  // f'(0) = -U0/a. A bare u(h) = h would cap global accuracy at f(0) h^2 / 6.
  const double f0 = potential_term(p, k_squared, 0.0);
  const double f0p = -p.u0() / p.a;
  u[1] = h - f0 * h2 * h / 6.0 - f0p * h2 * h2 / 12.0;
  double f_prev = f0;
  double f_cur = potential_term(p, k_squared, h);
  for (int i = 1; i + 1 < n; ++i) {
    const double f_next = potential_term(p, k_squared, (i + 1) * h);
    u[i + 1] = (2.0 * u[i] * (1.0 - 5.0 * h2 * f_cur / 12.0) -
                u[i - 1] * (1.0 + h2 * f_prev / 12.0)) /
               (1.0 + h2 * f_next / 12.0);
    f_prev = f_cur;
    f_cur = f_next;
  }
  return u;
}

std::vector<double> shooting_eigenvalues(const ModelParams& p, double kappa_max,
                                         const NumerovGrid& grid) {
  p.validate();
  grid.validate();
  if (!(kappa_max >= p.alpha / (2.0 * p.a))) {
    throw Error("shooting_eigenvalues: kappa_max must cover alpha/(2a)");
  }
  const double dk = 0.01 / p.a;
  std::vector<double> roots;
  double k_lo = dk;
  double g_lo = shooting_mismatch(p, k_lo, grid);
  for (double k_hi = k_lo + dk; k_lo < kappa_max; k_hi += dk) {
    const double g_hi = shooting_mismatch(p, k_hi, grid);
    if (std::signbit(g_lo) != std::signbit(g_hi)) {
      // Sanity: a single transversal crossing inside the cell.
      const double gm = shooting_mismatch(p, 0.5 * (k_lo + k_hi), grid);
      const int flips = (std::signbit(g_lo) != std::signbit(gm)) +
                        (std::signbit(gm) != std::signbit(g_hi));
      if (flips != 1) {
        throw GridTooCoarse("shooting_eigenvalues: multiple crossings in one scan cell");
      }
      double lo = k_lo, hi = k_hi, glo = g_lo;
      while (hi - lo > 1e-8) {
        const double mid = 0.5 * (lo + hi);
        const double gmid = shooting_mismatch(p, mid, grid);
        if (std::signbit(glo) != std::signbit(gmid)) {
          hi = mid;
        } else {
          lo = mid;
          glo = gmid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    k_lo = k_hi;
    g_lo = g_hi;
  }
  std::sort(roots.rbegin(), roots.rend());
  return roots;
}

double adaptive_quadrature(const std::function<double(double)>& f, double lo,
                           double hi, double tol) {
  if (!(tol > 0.0)) throw Error("adaptive_quadrature: tol must be positive");
  if (lo == hi) return 0.0;
  const double fa = f(lo);
  const double fb = f(hi);
  double fm;
  const double whole = simpson(f, lo, fa, hi, fb, &fm);
  return adaptive_step(f, lo, 0.5 * (lo + hi), hi, fa, fm, fb, whole, tol, 64);
}

void ContourSpec::validate(const ModelParams& p) const {
  if (!(radius > 1e-4 / p.a) || !(radius < 1.0 / (4.0 * p.a))) {
    std::ostringstream os;
    os << "ContourSpec: radius " << radius << " outside (1e-4/a, 1/(4a)) for a = "
       << p.a;
    throw Error(os.str());
  }
  if (n_nodes < 16) throw Error("ContourSpec: n_nodes must be >= 16");
}

cx contour_residue(const ModelParams& p, const ContourSpec& spec) {
  p.validate();
  spec.validate(p);
  // Probe circle at twice the radius: any pole or zero of S inside it would
  // sit between probe and contour and invalidate the single-pole assumption.
  constexpr int kProbeNodes = 64;
  for (int j = 0; j < kProbeNodes; ++j) {
    const double theta = 2.0 * kPi * j / kProbeNodes;
    const cx kp = spec.center + 2.0 * spec.radius * std::polar(1.0, theta);
    double mag;
    try {
      mag = std::abs(scattering::s_matrix(p, kp));
    } catch (const SingularEvaluation&) {
      throw ProbeFailure("contour_residue: probe circle touches a singular lattice point");
    }
    if (mag > 1e8 || mag < 1e-8) {
      throw ProbeFailure("contour_residue: probe circle detects a nearby pole or zero");
    }
  }
  cx acc = 0.0;
  for (int j = 0; j < spec.n_nodes; ++j) {
    const double theta = 2.0 * kPi * j / spec.n_nodes;
    const cx offset = spec.radius * std::polar(1.0, theta);
    cx s_val;
    try {
      s_val = scattering::s_matrix(p, spec.center + offset);
    } catch (const SingularEvaluation& e) {
      throw PoleOnContour(std::string("contour_residue: node on singularity: ") + e.what());
    }
    if (std::abs(s_val) > 1e12) {
      throw PoleOnContour("contour_residue: |S| > 1e12 at a contour node");
    }
    // dk = i * radius * e^{i theta} d theta
    acc += s_val * cx(0.0, 1.0) * offset;
  }
  return acc * (2.0 * kPi / static_cast<double>(spec.n_nodes));
}

double default_contour_radius(const ModelParams& p, cx center,
                              const std::vector<double>& known_imag_points) {
  p.validate();
  double dist = std::numeric_limits<double>::infinity();
  auto consider = [&](cx point) {
    const double d = std::abs(point - center);
    if (d > 1e-12) dist = std::min(dist, d);
  };
  const double lattice = 1.0 / (2.0 * p.a);
  const int n_center = static_cast<int>(std::lround(std::abs(center.imag()) / lattice));
  for (int n = std::max(1, n_center - 2); n <= n_center + 2; ++n) {
    consider(cx(0.0, n * lattice));
    consider(cx(0.0, -n * lattice));
  }
  for (double im : known_imag_points) consider(cx(0.0, im));
  const double radius = std::min(1.0 / (8.0 * p.a), 0.49 * dist);
  if (!(radius > 1e-4 / p.a)) {
    throw Error("default_contour_radius: nearest singularity too close for a valid contour");
  }
  return radius;
}

}  // namespace smx::oracle
