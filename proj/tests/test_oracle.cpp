#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "smx/errors.hpp"
#include "smx/oracle.hpp"
#include "smx/scattering.hpp"
#include "test_support.hpp"

using namespace smx;
using namespace smx::oracle;
using smx::scattering::cx;
using smx::scattering::ModelParams;
using smx_test::rel_close;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("NumerovGrid validation") {
  CHECK_THROWS_AS((NumerovGrid{10.0, 2e-3}.validate()), smx::Error);  // 5e3 pts
  CHECK_NOTHROW(NumerovGrid::defaults(ModelParams{1.0, 3.0}).validate());
  CHECK(NumerovGrid::defaults(ModelParams{1.0, 3.0}).n_points() == 40001);
}

TEST_CASE("Numerov solution tracks the analytic regular solution") {
  const ModelParams p{1.0, 3.0};
  const auto grid = NumerovGrid::defaults(p);
  const double k = 1.1;
  const auto u = numerov_integrate(p, k * k, grid);
  REQUIRE(static_cast<int>(u.size()) == grid.n_points());

  double sup_diff = 0.0, sup_phi = 0.0;
  for (int i = 500; i <= 10000; i += 10) {  // r in [0.5, 10]
    const double r = i * grid.step;
    const double phi =
        smx::scattering::regular_solution(p, cx(k, 0.0), r).real();
    sup_phi = std::max(sup_phi, std::abs(phi));
    sup_diff = std::max(sup_diff, std::abs(u[i] - phi));
  }
  CHECK(sup_phi > 0.1);
  CHECK(sup_diff / sup_phi < 1e-6);
}

TEST_CASE("shooting eigenvalues match the root scan") {
  const ModelParams p{1.0, 3.0};
  const auto grid = NumerovGrid::defaults(p);
  const auto roots = shooting_eigenvalues(p, p.alpha / (2.0 * p.a) + 0.3, grid);
  REQUIRE(roots.size() == 1);
  CHECK(std::abs(roots[0] - 0.20040042748520886) < 1e-6);
  CHECK_THROWS_AS(shooting_eigenvalues(p, 1.0, grid), smx::Error);
}

TEST_CASE("adaptive quadrature on smooth and oscillatory integrands") {
  const auto sq = [](double x) { return x * x; };
  CHECK(rel_close(adaptive_quadrature(sq, 0.0, 1.0, 1e-12), 1.0 / 3.0, 1e-12));

  const auto sine = [](double x) { return std::sin(x); };
  CHECK(rel_close(adaptive_quadrature(sine, 0.0, kPi, 1e-12), 2.0, 1e-11));

  // int_0^10 e^{-r} sin(10 r) dr has the closed form below.
  const auto osc = [](double r) { return std::exp(-r) * std::sin(10.0 * r); };
  const double want =
      (10.0 - std::exp(-10.0) * (10.0 * std::cos(100.0) + std::sin(100.0))) /
      101.0;
  CHECK(std::abs(adaptive_quadrature(osc, 0.0, 10.0, 1e-12) - want) < 1e-10);

  CHECK(adaptive_quadrature(sq, 2.0, 2.0, 1e-12) == 0.0);
  CHECK_THROWS_AS(adaptive_quadrature(sq, 0.0, 1.0, 0.0), smx::Error);
}

TEST_CASE("adaptive quadrature reports depth exhaustion on a divergence") {
  const auto bad = [](double x) { return 1.0 / std::sqrt(x); };
  CHECK_THROWS_AS(adaptive_quadrature(bad, 0.0, 1.0, 1e-12), MaxDepthExceeded);
}

TEST_CASE("contour spec validation") {
  const ModelParams p{1.0, 1.0};
  ContourSpec spec;
  spec.center = cx(0.0, 0.5);
  spec.radius = 0.26;  // >= 1/(4a)
  CHECK_THROWS_AS(spec.validate(p), smx::Error);
  spec.radius = 5e-5;  // <= 1e-4/a
  CHECK_THROWS_AS(spec.validate(p), smx::Error);
  spec.radius = 0.1;
  spec.n_nodes = 8;
  CHECK_THROWS_AS(spec.validate(p), smx::Error);
}

TEST_CASE("contour around a regular point is numerically zero") {
  const ModelParams p{1.0, 1.0};
  ContourSpec spec;
  spec.center = cx(0.7, 0.2);
  spec.radius = 0.1;
  CHECK(std::abs(contour_residue(p, spec)) < 1e-10);
}

TEST_CASE("contour around the first redundant pole") {
  const ModelParams p{1.0, 1.0};
  ContourSpec spec;
  spec.center = cx(0.0, 0.5);
  spec.radius = 0.12;
  const cx val = contour_residue(p, spec);
  CHECK(rel_close(val.real(), -kPi / 4.0, 1e-10));
  CHECK(std::abs(val.imag()) < 1e-12);
}

TEST_CASE("contour guards: node on a pole, probe through a pole") {
  const ModelParams p{1.0, 1.0};
  ContourSpec on_pole;
  on_pole.center = cx(0.0, 0.375);
  on_pole.radius = 0.125;  // top node lands exactly on k = i/2
  CHECK_THROWS_AS(contour_residue(p, on_pole), PoleOnContour);

  ContourSpec probe_hit;
  probe_hit.center = cx(0.0, 0.26);
  probe_hit.radius = 0.12;  // probe circle (2x) passes through k = i/2
  CHECK_THROWS_AS(contour_residue(p, probe_hit), ProbeFailure);
}

TEST_CASE("default contour radius rule") {
  const ModelParams p{1.0, 1.0};
  // Lattice spacing 1/(2a): nearest neighbour at distance 0.5, capped at 1/(8a).
  CHECK(default_contour_radius(p, cx(0.0, 0.5)) ==
        doctest::Approx(0.125).epsilon(1e-15));
  CHECK(default_contour_radius(p, cx(0.0, 0.5), {0.6}) ==
        doctest::Approx(0.049).epsilon(1e-12));
  CHECK_THROWS_AS(default_contour_radius(p, cx(0.0, 0.5), {0.50005}),
                  smx::Error);
}
