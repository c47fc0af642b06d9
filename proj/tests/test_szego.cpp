#include "ahlfors/errors.hpp"
#include "ahlfors/evaluate.hpp"
#include "ahlfors/kernels.hpp"
#include "ahlfors/nystrom.hpp"
#include "ahlfors/szego.hpp"
#include "ahlfors/zerofinder.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace ahlfors;
using testutil::dist;

namespace {
constexpr double pi = std::numbers::pi;
const cplx I{0.0, 1.0};

// closed-form disk Szego kernel for the zero at a, boundary point e^{it}:
// S(e^{it}, a) = 1 / (2 pi (1 - a e^{it}))   (real a)
cplx disk_S(double a, double t) {
  return 1.0 / (2.0 * pi * (1.0 - a * std::exp(I * t)));
}
cplx disk_Sp(double a, double t) {
  const cplx d = 1.0 - a * std::exp(I * t);
  return a * I * std::exp(I * t) / (2.0 * pi * d * d);
}
}  // namespace

TEST_CASE("right-hand side g") {
  const Grid disk = build_grid(make_circle(0.0, 1.0, 1), 16);
  for (const cplx& v : rhs_g(disk, 0.0))
    CHECK(dist(v, {1.0 / (2.0 * pi), 0.0}) < 1e-15);

  const Grid ann = build_grid(preset_region("example1", 0.1), 16);
  // outer node t=0: z=1, T=i, a0=0.5 gives g = 1/pi
  CHECK(dist(rhs_g(ann, 0.5)[0], {1.0 / pi, 0.0}) < 1e-15);

  // a0 sitting on the boundary is a pole in the data
  CHECK_THROWS_AS(rhs_g(ann, cplx{1.0, 0.0}), geometry_error);
  CHECK_THROWS_AS(rhs_g(ann, ann.z[20]), geometry_error);
}

TEST_CASE("disk Szego solve matches the closed form") {
  const Grid g = build_grid(make_circle(0.0, 1.0, 1), 64);
  const auto S = solve_szego(g, cplx{0.3, 0.0});
  double worst = 0.0;
  for (int i = 0; i < g.size(); ++i)
    worst = std::max(worst, dist(S[i], disk_S(0.3, g.t[i])));
  CHECK(worst < 1e-12);
}

TEST_CASE("annulus symmetry: real a0 gives conjugate-symmetric S") {
  const int n = 32;
  const Grid g = build_grid(preset_region("example1", 0.1), n);
  const auto S = solve_szego(g, cplx{std::sqrt(0.1), 0.0});
  // conj(z(t)) = z(-t) on both curves, so S at node i pairs with node n-i
  for (int i = 0; i < n; ++i) {
    const int mi = (n - i) % n;
    CHECK(dist(S[mi], std::conj(S[i])) < 1e-12);
    CHECK(dist(S[n + ((n - i) % n)], std::conj(S[n + i])) < 1e-12);
  }
}

TEST_CASE("Szego derivative on the disk") {
  const Grid g = build_grid(make_circle(0.0, 1.0, 1), 64);
  SUBCASE("a0 = 0: S is constant, derivative vanishes") {
    const auto S = solve_szego(g, cplx{0.0, 0.0});
    for (const cplx& v : szego_derivative(g, S, cplx{0.0, 0.0}))
      CHECK(std::abs(v) < 1e-14);
  }
  SUBCASE("a0 = 0.3: matches the closed-form derivative") {
    const auto S = solve_szego(g, cplx{0.3, 0.0});
    const auto Sp = szego_derivative(g, S, cplx{0.3, 0.0});
    double worst = 0.0;
    for (int i = 0; i < g.size(); ++i)
      worst = std::max(worst, dist(Sp[i], disk_Sp(0.3, g.t[i])));
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("Szego derivative agrees with spectral differentiation of S") {
  SUBCASE("eccentric circles, n = 128") {
    const Region region = preset_region("example2");
    const Grid g = build_grid(region, 128);
    const auto S = solve_szego(region, g);
    const auto Sp = szego_derivative(region, g, S);
    const auto Sp_spec = testutil::spectral_derivative(g, S);
    double worst = 0.0;
    for (int i = 0; i < g.size(); ++i)
      worst = std::max(worst, dist(Sp[i], Sp_spec[i]));
    CHECK(worst < 1e-8);
  }
  SUBCASE("four-lobed boundary; pins the diagonal cross term") {
    // on a curve with Re(z''/z') != 0, dropping the cross term in the
    // derivative-kernel diagonal shifts S' by a real multiple of S -- a
    // ~4e-3 disagreement here, against ~3e-12 measured for the correct
    // diagonal.  n = 512 so the solve itself is converged to rounding.
    const cplx c{0.6452, -0.8655};
    const Curve blob = make_radial_cosine(c, 1.2, 0.4, 4, 1);
    const Grid g = build_grid(blob, 512);
    const auto S = solve_szego(g, c);
    const auto Sp = szego_derivative(g, S, c);
    const auto Sp_spec = testutil::spectral_derivative(g, S);
    double worst = 0.0;
    for (int i = 0; i < g.size(); ++i)
      worst = std::max(worst, dist(Sp[i], Sp_spec[i]));
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("Ahlfors boundary values") {
  SUBCASE("disk with a0 = 0 is the identity map") {
    const Grid g = build_grid(make_circle(0.0, 1.0, 1), 32);
    const auto f = ahlfors_boundary(g, solve_szego(g, cplx{0.0, 0.0}));
    for (int i = 0; i < g.size(); ++i) CHECK(dist(f[i], g.z[i]) < 1e-13);
  }
  SUBCASE("unimodularity is structural") {
    const Region region = preset_region("example2");
    const Grid g = build_grid(region, 64);
    const auto f = ahlfors_boundary(g, solve_szego(region, g));
    for (const cplx& v : f) CHECK(std::abs(std::abs(v) - 1.0) < 1e-14);
  }
  SUBCASE("a vanishing Szego value is refused") {
    const Grid g = build_grid(make_circle(0.0, 1.0, 1), 16);
    std::vector<cplx> S(g.size(), cplx{1.0, 0.0});
    S[3] = 0.0;
    CHECK_THROWS_AS(ahlfors_boundary(g, S), geometry_error);
  }
}

TEST_CASE("theta' by the analytic formula") {
  SUBCASE("disk, a0 = 0: theta' is identically 1") {
    const Grid g = build_grid(make_circle(0.0, 1.0, 1), 64);
    const auto S = solve_szego(g, cplx{0.0, 0.0});
    const auto Sp = szego_derivative(g, S, cplx{0.0, 0.0});
    for (double v : theta_prime_analytic(g, S, Sp))
      CHECK(std::abs(v - 1.0) < 1e-12);
  }
  SUBCASE("argument principle: total variation is 4 pi") {
    const Region region = preset_region("example2");
    const Grid g = build_grid(region, 128);
    const SzegoSolution sol = solve_boundary(region, g);
    CHECK(std::abs(trapezoid(g, sol.theta_prime, CurveSel::Both) - 4.0 * pi) <
          1e-8);
  }
  SUBCASE("symmetric annulus gives an even theta' on the outer curve") {
    const int n = 64;
    Region region = preset_region("example1", 0.1);
    region.a0 = std::sqrt(0.1);
    const Grid g = build_grid(region, n);
    const SzegoSolution sol = solve_boundary(region, g);
    for (int i = 1; i < n; ++i)
      CHECK(std::abs(sol.theta_prime[i] - sol.theta_prime[n - i]) < 1e-11);
  }
  SUBCASE("outer boundary correspondence is strictly increasing") {
    const Region region = preset_region("example2");
    const Grid g = build_grid(region, 128);
    const SzegoSolution sol = solve_boundary(region, g);
    for (int i = 0; i < 128; ++i) CHECK(sol.theta_prime[i] > 0.0);
  }
}

TEST_CASE("theta' by the operator formula") {
  SUBCASE("annulus with both zeros known matches the analytic route") {
    const Region region = preset_region("example1", 0.1);  // a0 = 0.5
    const Grid g = build_grid(region, 64);
    const SzegoSolution sol = solve_boundary(region, g);
    const auto th =
        theta_prime_operator(region, g, region.a0, cplx{-0.2, 0.0});
    double worst = 0.0;
    for (int i = 0; i < g.size(); ++i)
      worst = std::max(worst, std::abs(th[i] - sol.theta_prime[i]));
    CHECK(worst < 1e-9);
  }
  SUBCASE("eccentric circles with the computed second zero") {
    const Region region = preset_region("example2");
    const Grid g = build_grid(region, 128);
    const SzegoSolution sol = solve_boundary(region, g);
    const ZeroEstimate est = solve_second_zero(region, g, sol);
    const auto th = theta_prime_operator(region, g, region.a0, est.a1);
    double worst = 0.0;
    for (int i = 0; i < g.size(); ++i)
      worst = std::max(worst, std::abs(th[i] - sol.theta_prime[i]));
    CHECK(worst < 1e-8);
  }
  SUBCASE("simply connected grids are out of domain") {
    const Region region = preset_region("example1", 0.1);
    const Grid disk = build_grid(make_circle(0.0, 1.0, 1), 16);
    CHECK_THROWS_AS(
        theta_prime_operator(region, disk, cplx{0.0, 0.0}, cplx{0.5, 0.0}),
        geometry_error);
  }
}

TEST_CASE("J annihilation and interval integrals of theta'") {
  const Region region = preset_region("example1", 0.1);
  const Grid g = build_grid(region, 64);
  const SzegoSolution sol = solve_boundary(region, g);
  const auto Jth = apply_J(g, sol.theta_prime);
  double worst = 0.0;
  for (int i = 0; i < g.size(); ++i)
    worst = std::max(worst,
                     std::abs(Jth[i] - (g.curve[i] == 1 ? 1.0 : 0.0)));
  CHECK(worst < 1e-6);  // J theta' = psi for the true theta'
  CHECK(std::abs(trapezoid(g, sol.theta_prime, CurveSel::Outer) - 2.0 * pi) <
        1e-9);
  CHECK(std::abs(trapezoid(g, sol.theta_prime, CurveSel::Inner) - 2.0 * pi) <
        1e-9);
}
