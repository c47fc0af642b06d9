#pragma once

#include <Eigen/Dense>
#include <type_traits>

#include "ahlfors/errors.hpp"
#include "ahlfors/geometry.hpp"

namespace ahlfors {

// The two integration measures that appear in the integral equations:
// WithSpeed multiplies the quadrature weight by |z'(t_j)| (integration
// against arc length |dw|), Plain integrates in the parameter ds.  Mixing
// them up is the classic silent bug, hence the mandatory parameter.
enum class WeightMode { WithSpeed, Plain };

enum class CurveSel { Outer, Inner, Both };

double trapezoid(const Grid& g, const std::vector<double>& samples,
                 CurveSel sel);
cplx trapezoid(const Grid& g, const std::vector<cplx>& samples, CurveSel sel);

// dense Nystrom matrix M = I + w * kernel(i,j) * (|z'(t_j)| or 1)
template <class Kernel>
auto assemble_second_kind(const Grid& g, Kernel&& kernel, WeightMode mode) {
  using Scalar = std::decay_t<decltype(kernel(0, 0))>;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const int N = g.size();
  Mat M(N, N);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      const double wj =
          g.w * (mode == WeightMode::WithSpeed ? g.speed[j] : 1.0);
      M(i, j) = wj * kernel(i, j);
      if (i == j) M(i, j) += Scalar(1);
    }
  }
  return M;
}

// LU solve with partial pivoting; refuses systems that are singular to
// working precision (reciprocal condition estimate below 1e-14)
Eigen::VectorXcd solve_dense(const Eigen::MatrixXcd& M,
                             const Eigen::VectorXcd& b);
Eigen::VectorXd solve_dense(const Eigen::MatrixXd& M, const Eigen::VectorXd& b);

struct LeastSquares {
  Eigen::Vector3d u;
  double residual_norm;       // ||rows*u + rhs||_2 at the minimizer
  double condition_estimate;  // |R(0,0)/R(2,2)| from the QR factor
};

// minimizes ||rows*u + rhs||_2 over u in R^3 by column-pivoted QR;
// rank < 3 is a hard failure (degenerate node selection)
LeastSquares solve_least_squares(const Eigen::MatrixXd& rows,
                                 const Eigen::VectorXd& rhs);

}  // namespace ahlfors
