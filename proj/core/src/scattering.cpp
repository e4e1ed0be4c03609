#include "smx/scattering.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace smx::scattering {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLatticeGuard = 1e-9;

using specfun::bessel_j_cx_order;
using specfun::bessel_j_cx_order_dx;
using specfun::bessel_y_cx_order;
using specfun::gamma_cx;
using specfun::hyp0f1;

cx half_alpha_pow(const ModelParams& p, cx exponent) {
  // (alpha/2)^w with the principal real logarithm; alpha > 0 always.
  return std::exp(exponent * std::log(p.alpha / 2.0));
}

bool coincident_bound_state(const ModelParams& p, int n) {
  const double jn = bessel_j_cx_order(cx(static_cast<double>(n), 0.0), p.alpha).real();
  return std::abs(jn) < 1e-10;
}

// 0F1(1 -+ i*rho; -alpha^2/4) with sign = +1 for F+ (singular lattice
// i*rho = +n) and -1 for F- (singular lattice i*rho = -n).
cx jost_generic(const ModelParams& p, cx k, double sign) {
  p.validate();
  const cx irho = i_rho(p, k);
  const cx z = cx(-p.alpha * p.alpha / 4.0, 0.0);
  const int lat = nearest_lattice_index(p, k, kLatticeGuard);
  if (lat != 0 && sign * lat >= 1) {
    const int n = static_cast<int>(sign) * lat;
    if (!coincident_bound_state(p, n)) {
      std::ostringstream os;
      os << "jost function singular at i*rho = " << lat << " (k = "
         << (sign > 0 ? "-" : "+") << "i*n/(2a)); alpha is not a zero of J_n";
      if (sign > 0) throw SingularAtRedundantZeroPoint(os.str());
      throw SingularAtRedundantPole(os.str());
    }
    // The Gamma-type pole of 0F1 cancels against the coinciding zero: take
    // the limiting value from symmetric order offsets.
    auto symmetric = [&](double delta) {
      return 0.5 * (hyp0f1(1.0 - sign * (irho + delta), z) +
                    hyp0f1(1.0 - sign * (irho - delta), z));
    };
    const cx coarse = symmetric(1e-4);
    const cx fine = symmetric(5e-5);
    return (4.0 * fine - coarse) / 3.0;
  }
  return hyp0f1(1.0 - sign * irho, z);
}

cx irregular_generic(const ModelParams& p, cx k, double r, double sign) {
  // sign = +1: f+ = Gamma(1-i*rho)(alpha/2)^{i*rho} J_{-i*rho}(x); sign = -1 mirrors.
  p.validate();
  if (r < 0.0) throw Error("irregular solution: r must be >= 0");
  const cx irho = i_rho(p, k);
  const int lat = nearest_lattice_index(p, k, kLatticeGuard);
  if (lat != 0 && sign * lat >= 1) {
    std::ostringstream os;
    os << "irregular solution singular at i*rho = " << lat;
    if (sign > 0) throw SingularAtRedundantZeroPoint(os.str());
    throw SingularAtRedundantPole(os.str());
  }
  const double x = make_radial_point(p, r).x;
  return gamma_cx(1.0 - sign * irho) * half_alpha_pow(p, sign * irho) *
         bessel_j_cx_order(-sign * irho, x);
}

cx irregular_generic_dr(const ModelParams& p, cx k, double r, double sign) {
  const cx irho = i_rho(p, k);
  const double x = make_radial_point(p, r).x;
  const double dx_dr = -x / (2.0 * p.a);
  return gamma_cx(1.0 - sign * irho) * half_alpha_pow(p, sign * irho) *
         bessel_j_cx_order_dx(-sign * irho, x) * dx_dr;
}

}  // namespace

void ModelParams::validate() const {
  if (!(a > 0.0)) throw Error("ModelParams: a must be positive");
  if (!(alpha > 0.0)) throw Error("ModelParams: alpha must be positive");
}

Momentum make_momentum(const ModelParams& p, cx k) {
  p.validate();
  return Momentum{k, 2.0 * p.a * k};
}

RadialPoint make_radial_point(const ModelParams& p, double r) {
  p.validate();
  if (r < 0.0) throw Error("RadialPoint: r must be >= 0");
  const double sigma = std::exp(-r / p.a);
  return RadialPoint{r, p.alpha * std::exp(-r / (2.0 * p.a)), sigma};
}

cx i_rho(const ModelParams& p, cx k) { return cx(0.0, 1.0) * (2.0 * p.a * k); }

int nearest_lattice_index(const ModelParams& p, cx k, double tol) {
  const cx irho = i_rho(p, k);
  const double nr = std::rint(irho.real());
  if (nr == 0.0) return 0;
  if (std::abs(irho - cx(nr, 0.0)) <= tol) return static_cast<int>(nr);
  return 0;
}

cx s_matrix(const ModelParams& p, cx k) {
  p.validate();
  if (k == cx(0.0, 0.0)) {
    throw EvaluationAtOrigin("s_matrix: evaluation at k = 0 (threshold)");
  }
  const int lat = nearest_lattice_index(p, k, kLatticeGuard);
  if (lat != 0) {
    std::ostringstream os;
    os << "s_matrix: k within guard radius of the lattice point i*rho = " << lat
       << " (" << (lat < 0 ? "redundant pole" : "redundant zero")
       << " at k = " << (lat < 0 ? "" : "-") << "i*"
       << std::abs(lat) / (2.0 * p.a) << ")";
    throw PoleProximity(os.str());
  }
  const cx irho = i_rho(p, k);
  const cx z = cx(-p.alpha * p.alpha / 4.0, 0.0);
  return hyp0f1(1.0 + irho, z) / hyp0f1(1.0 - irho, z);
}

cx jost_plus(const ModelParams& p, cx k) { return jost_generic(p, k, +1.0); }

cx jost_minus(const ModelParams& p, cx k) { return jost_generic(p, k, -1.0); }

cx regular_solution(const ModelParams& p, cx k, double r) {
  p.validate();
  const cx irho = i_rho(p, k);
  const double x = make_radial_point(p, r).x;
  const cx j_alpha = bessel_j_cx_order(irho, p.alpha);
  const cx y_alpha = bessel_y_cx_order(irho, p.alpha);
  const cx j_x = bessel_j_cx_order(irho, x);
  const cx y_x = bessel_y_cx_order(irho, x);
  // At r = 0 both products are the same two factors, so the difference is an
  // exact floating-point zero.
  return kPi * p.a * (y_alpha * j_x - j_alpha * y_x);
}

cx irregular_solution_plus(const ModelParams& p, cx k, double r) {
  return irregular_generic(p, k, r, +1.0);
}

cx irregular_solution_minus(const ModelParams& p, cx k, double r) {
  return irregular_generic(p, k, r, -1.0);
}

cx irregular_wronskian(const ModelParams& p, cx k, double r) {
  const cx fp = irregular_generic(p, k, r, +1.0);
  const cx fm = irregular_generic(p, k, r, -1.0);
  const cx fp_dr = irregular_generic_dr(p, k, r, +1.0);
  const cx fm_dr = irregular_generic_dr(p, k, r, -1.0);
  return fp * fm_dr - fp_dr * fm;
}

std::vector<double> phase_shift(const ModelParams& p,
                                const std::vector<double>& k_grid) {
  p.validate();
  if (k_grid.empty()) return {};
  for (std::size_t i = 0; i < k_grid.size(); ++i) {
    if (!(k_grid[i] > 0.0) || (i > 0 && !(k_grid[i] > k_grid[i - 1]))) {
      throw Error("phase_shift: k_grid must be strictly ascending and positive");
    }
  }
  std::vector<double> delta(k_grid.size());
  const std::size_t last = k_grid.size() - 1;
  delta[last] = 0.5 * std::arg(s_matrix(p, cx(k_grid[last], 0.0)));
  for (std::size_t i = last; i-- > 0;) {
    const double raw = 0.5 * std::arg(s_matrix(p, cx(k_grid[i], 0.0)));
    // S determines delta mod pi; pick the representative nearest the
    // already-unwrapped neighbour.
    const double unwrapped = raw + kPi * std::rint((delta[i + 1] - raw) / kPi);
    // The nearest representative is always within pi/2; hitting that bound
    // means the true jump is >= pi/2 and the branch choice is ambiguous.
    if (std::abs(unwrapped - delta[i + 1]) >= kPi / 2.0 - 1e-12) {
      std::ostringstream os;
      os << "phase_shift: jump >= pi/2 between k = " << k_grid[i] << " and k = "
         << k_grid[i + 1] << "; refine the grid";
      throw UnwrapAmbiguity(os.str());
    }
    delta[i] = unwrapped;
  }
  return delta;
}

}  // namespace smx::scattering
