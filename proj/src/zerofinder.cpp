#include "ahlfors/zerofinder.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "ahlfors/errors.hpp"
#include "ahlfors/evaluate.hpp"
#include "ahlfors/kernels.hpp"
#include "ahlfors/nystrom.hpp"
#include "json.hpp"

namespace ahlfors {

PhiResult compute_phi(const Grid& g, const std::vector<double>& theta_prime) {
  if (g.curves != 2)
    throw geometry_error("phi recovery needs a doubly connected grid");
  if (static_cast<int>(theta_prime.size()) != g.size())
    throw std::invalid_argument("compute_phi: theta' length mismatch");
  const int N = g.size();
  PhiResult r;
  r.phi.resize(N);
  r.phi0.resize(N);
  const auto Jth = apply_J(g, theta_prime);
  r.j_defect = 0.0;
  for (int i = 0; i < N; ++i) {
    double acc = 0.0;
    for (int j = 0; j < N; ++j)
      acc += neumann_adjoint(g, i, j) * theta_prime[j];
    const double psi = g.curve[i] == 1 ? 1.0 : 0.0;
    r.phi0[i] = theta_prime[i] + g.w * acc;
    r.phi[i] = r.phi0[i] + Jth[i] - psi;
    r.j_defect = std::max(r.j_defect, std::abs(Jth[i] - psi));
  }
  return r;
}

std::vector<double> compute_k1(const Grid& g, const std::vector<double>& phi,
                               cplx a0) {
  if (static_cast<int>(phi.size()) != g.size())
    throw std::invalid_argument("compute_k1: phi length mismatch");
  std::vector<double> k1(g.size());
  for (int i = 0; i < g.size(); ++i)
    k1[i] = 0.5 * (phi[i] - 2.0 * std::imag(g.z1[i] / (g.z[i] - a0)));
  return k1;
}

ZeroRows assemble_zero_rows(const Grid& g, const std::vector<double>& k1) {
  if (static_cast<int>(k1.size()) != g.size())
    throw std::invalid_argument("assemble_zero_rows: k1 length mismatch");
  const int N = g.size();
  ZeroRows zr;
  zr.rows.resize(N, 3);
  zr.rhs.resize(N);
  for (int i = 0; i < N; ++i) {
    const double x = g.z[i].real(), y = g.z[i].imag();
    const double x1 = g.z1[i].real(), y1 = g.z1[i].imag();
    zr.rows(i, 0) = y1 - 2.0 * k1[i] * x;
    zr.rows(i, 1) = -2.0 * k1[i] * y - x1;
    zr.rows(i, 2) = k1[i];
    zr.rhs(i) = k1[i] * (x * x + y * y) + x1 * y - y1 * x;
  }
  return zr;
}

namespace {

int snap_to_outer_node(const Grid& g, double t) {
  const double h = 2.0 * std::numbers::pi / g.n;
  int idx = static_cast<int>(std::lround(t / h)) % g.n;
  if (idx < 0) idx += g.n;
  return idx;  // outer-curve nodes come first
}

}  // namespace

ZeroEstimate solve_second_zero(const Region& region, const Grid& g,
                               const SzegoSolution& sol,
                               const ZeroMode& mode) {
  const auto phi = compute_phi(g, sol.theta_prime);
  const auto k1 = compute_k1(g, phi.phi, region.a0);
  const auto zr = assemble_zero_rows(g, k1);

  LeastSquares ls;
  if (mode.is_three_point) {
    const std::set<int> picked{snap_to_outer_node(g, mode.t1),
                               snap_to_outer_node(g, mode.t2),
                               snap_to_outer_node(g, mode.t3)};
    if (picked.size() != 3)
      throw solver_error(
          "three-point mode: the chosen parameters snap to fewer than three "
          "distinct nodes");
    Eigen::MatrixXd rows(3, 3);
    Eigen::VectorXd rhs(3);
    int r = 0;
    for (int idx : picked) {
      rows.row(r) = zr.rows.row(idx);
      rhs(r) = zr.rhs(idx);
      ++r;
    }
    ls = solve_least_squares(rows, rhs);
  } else {
    ls = solve_least_squares(zr.rows, zr.rhs);
  }

  ZeroEstimate est;
  est.a1 = {ls.u[0], ls.u[1]};
  est.s_defect = std::abs(ls.u[2] - ls.u[0] * ls.u[0] - ls.u[1] * ls.u[1]);
  est.ls_residual = ls.residual_norm;
  est.condition_estimate = ls.condition_estimate;
  est.n = g.n;
  est.mode = mode.is_three_point ? "three-point" : "least-squares";
  try {
    est.residual_f = residual_at(region, g, sol, est.a1);
  } catch (const geometry_error& e) {
    // the recovered zero escaped the region: a solve failure, not a domain
    // error of the caller's making
    throw solver_error(std::string("recovered second zero is not interior (") +
                       e.what() + "); refine the grid");
  }
  return est;
}

ZeroEstimate solve_second_zero(const Region& region, const Grid& g,
                               const ZeroMode& mode) {
  return solve_second_zero(region, g, solve_boundary(region, g), mode);
}

std::string to_json(const ZeroEstimate& e) {
  nlohmann::ordered_json j;
  j["a1"] = {e.a1.real(), e.a1.imag()};
  j["s_defect"] = e.s_defect;
  j["ls_residual"] = e.ls_residual;
  j["condition_estimate"] = e.condition_estimate;
  j["residual_f"] = e.residual_f;
  j["n"] = e.n;
  j["mode"] = e.mode;
  return j.dump(2);
}

}  // namespace ahlfors
