#include "ahlfors/szego.hpp"

#include <cmath>
#include <numbers>

#include "ahlfors/errors.hpp"
#include "ahlfors/kernels.hpp"
#include "ahlfors/nystrom.hpp"

namespace ahlfors {

namespace {
constexpr double pi = std::numbers::pi;
const cplx I{0.0, 1.0};
const cplx two_pi_i{0.0, 2.0 * pi};

void check_a0_off_boundary(const Grid& g, cplx a0) {
  for (int i = 0; i < g.size(); ++i)
    if (std::abs(g.z[i] - a0) <= 1e-12 * std::max(1.0, std::abs(g.z[i])))
      throw geometry_error("a0 lies on the boundary (pole in the data)");
}

std::vector<cplx> to_std(const Eigen::VectorXcd& v) {
  return {v.data(), v.data() + v.size()};
}

}  // namespace

std::vector<cplx> rhs_g(const Grid& g, cplx a0) {
  check_a0_off_boundary(g, a0);
  std::vector<cplx> out(g.size());
  for (int i = 0; i < g.size(); ++i)
    out[i] = -std::conj(g.T[i]) / std::conj(g.z[i] - a0) / two_pi_i;
  return out;
}

std::vector<cplx> solve_szego(const Grid& g, cplx a0) {
  const auto b = rhs_g(g, a0);
  const auto M = assemble_second_kind(
      g, [&](int i, int j) { return kerzman_stein(g, i, j); },
      WeightMode::WithSpeed);
  const Eigen::VectorXcd rhs =
      Eigen::Map<const Eigen::VectorXcd>(b.data(), b.size());
  return to_std(solve_dense(M, rhs));
}

std::vector<cplx> solve_szego(const Region& region, const Grid& g) {
  return solve_szego(g, region.a0);
}

std::vector<cplx> szego_derivative(const Grid& g, const std::vector<cplx>& S,
                                   cplx a0) {
  if (static_cast<int>(S.size()) != g.size())
    throw std::invalid_argument("szego_derivative: S length mismatch");
  check_a0_off_boundary(g, a0);
  const int N = g.size();
  std::vector<cplx> out(N);
  for (int i = 0; i < N; ++i) {
    const Jet ji{g.z[i], g.z1[i], g.z2[i], g.z3[i]};
    const cplx d = g.z[i] - a0;
    const cplx gp = -(std::conj(tangent_derivative(ji)) / std::conj(d) -
                      std::conj(g.z1[i]) * std::conj(g.T[i]) /
                          std::conj(d * d)) /
                    two_pi_i;
    cplx acc = 0.0;
    for (int j = 0; j < N; ++j)
      acc += kerzman_stein_dt(g, i, j) * g.speed[j] * S[j];
    out[i] = gp - g.w * acc;
  }
  return out;
}

std::vector<cplx> szego_derivative(const Region& region, const Grid& g,
                                   const std::vector<cplx>& S) {
  return szego_derivative(g, S, region.a0);
}

std::vector<cplx> ahlfors_boundary(const Grid& g, const std::vector<cplx>& S) {
  if (static_cast<int>(S.size()) != g.size())
    throw std::invalid_argument("ahlfors_boundary: S length mismatch");
  double smax = 0.0;
  for (const cplx& s : S) smax = std::max(smax, std::abs(s));
  std::vector<cplx> out(g.size());
  for (int i = 0; i < g.size(); ++i) {
    if (std::abs(S[i]) < 1e-13 * smax)
      throw geometry_error(
          "Szego kernel vanishes on the boundary; a0 is pathologically placed");
    out[i] = S[i] * g.T[i] / std::conj(S[i]) / I;
  }
  return out;
}

std::vector<double> theta_prime_analytic(const Grid& g,
                                         const std::vector<cplx>& S,
                                         const std::vector<cplx>& S_p) {
  if (S.size() != S_p.size() || static_cast<int>(S.size()) != g.size())
    throw std::invalid_argument("theta_prime_analytic: length mismatch");
  std::vector<double> out(g.size());
  for (int i = 0; i < g.size(); ++i) {
    // d/dt log f(z(t)) = i theta'(t) with f = S T / (i conj(S))
    out[i] = 2.0 * std::imag(S_p[i] / S[i]) + std::imag(g.z2[i] / g.z1[i]);
  }
  return out;
}

std::vector<double> theta_prime_operator(const Region&, const Grid& g,
                                         cplx a0, cplx a1) {
  if (g.curves != 2)
    throw geometry_error(
        "boundary-correspondence operator solve needs a doubly connected grid");
  const int N = g.size();
  // (I + N* + J) theta' = phi + psi, everything in plain ds weighting
  auto M = assemble_second_kind(
      g, [&](int i, int j) { return neumann_adjoint(g, i, j); },
      WeightMode::Plain);
  const double jw = g.w / (2.0 * pi);
  for (int i = 0; i < N; ++i) {
    if (g.curve[i] != 1) continue;
    for (int j = 0; j < N; ++j)
      if (g.curve[j] == 1) M(i, j) += jw;
  }
  Eigen::VectorXd rhs(N);
  for (int i = 0; i < N; ++i) {
    const double phi = 2.0 * std::imag(g.z1[i] / (g.z[i] - a0)) +
                       2.0 * std::imag(g.z1[i] / (g.z[i] - a1));
    const double psi = g.curve[i] == 1 ? 1.0 : 0.0;
    rhs[i] = phi + psi;
  }
  const Eigen::VectorXd x = solve_dense(M, rhs);
  return {x.data(), x.data() + x.size()};
}

SzegoSolution solve_boundary(const Region& region, const Grid& g) {
  SzegoSolution sol;
  sol.S = solve_szego(g, region.a0);
  sol.S_p = szego_derivative(g, sol.S, region.a0);
  sol.f = ahlfors_boundary(g, sol.S);
  sol.theta_prime = theta_prime_analytic(g, sol.S, sol.S_p);
  return sol;
}

}  // namespace ahlfors
