#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "ahlfors/geometry.hpp"
#include "ahlfors/szego.hpp"

namespace ahlfors {

struct PhiResult {
  std::vector<double> phi;   // (I + N* + J) theta' - psi
  std::vector<double> phi0;  // (I + N*) theta', the J-free variant
  double j_defect;           // ||J theta' - psi||_inf, discretization check
};

// phi recovery from the solved boundary correspondence; doubly connected
// grids only (psi is 0 on the outer interval, 1 on the inner one)
PhiResult compute_phi(const Grid& g, const std::vector<double>& theta_prime);

// k1(t) = (phi - 2 Im(z'/(z - a0))) / 2; equals Im(z'/(z - a1)) for the
// true second zero
std::vector<double> compute_k1(const Grid& g, const std::vector<double>& phi,
                               cplx a0);

// one row per node: [y' - 2 k1 x, -2 k1 y - x', k1] * (alpha, beta, s)
// = -(k1 x^2 + k1 y^2 + x' y - y' x), unknowns alpha, beta and s standing
// in for alpha^2 + beta^2
struct ZeroRows {
  Eigen::MatrixXd rows;
  Eigen::VectorXd rhs;  // solved as rows * u = -rhs
};
ZeroRows assemble_zero_rows(const Grid& g, const std::vector<double>& k1);

struct ZeroMode {
  static ZeroMode least_squares() { return {}; }
  static ZeroMode three_point(double t1, double t2, double t3) {
    ZeroMode m;
    m.is_three_point = true;
    m.t1 = t1;
    m.t2 = t2;
    m.t3 = t3;
    return m;
  }
  bool is_three_point = false;  // default: all nodes, least squares
  double t1 = 0, t2 = 0, t3 = 0;  // outer-curve parameters, snapped to nodes
};

struct ZeroEstimate {
  cplx a1;
  double s_defect;            // |u3 - alpha^2 - beta^2|, pure diagnostic
  double ls_residual;
  double condition_estimate;
  double residual_f;          // |f(a1)| by Cauchy evaluation
  int n;
  std::string mode;
};

std::string to_json(const ZeroEstimate& e);

// full second-zero recovery from a precomputed boundary solution, or from
// scratch.  A recovered a1 outside the region is a solve failure.
ZeroEstimate solve_second_zero(const Region& region, const Grid& g,
                               const SzegoSolution& sol,
                               const ZeroMode& mode = ZeroMode::least_squares());
ZeroEstimate solve_second_zero(const Region& region, const Grid& g,
                               const ZeroMode& mode = ZeroMode::least_squares());

}  // namespace ahlfors
