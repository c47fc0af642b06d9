#include "ahlfors/nystrom.hpp"

#include <cmath>
#include <limits>

namespace ahlfors {

namespace {

bool selected(const Grid& g, int i, CurveSel sel) {
  switch (sel) {
    case CurveSel::Outer: return g.curve[i] == 0;
    case CurveSel::Inner: return g.curve[i] == 1;
    case CurveSel::Both: return true;
  }
  return false;
}

template <class S>
S trapezoid_impl(const Grid& g, const std::vector<S>& samples, CurveSel sel) {
  if (static_cast<int>(samples.size()) != g.size())
    throw std::invalid_argument("trapezoid: sample vector length mismatch");
  S sum{};
  for (int i = 0; i < g.size(); ++i)
    if (selected(g, i, sel)) sum += samples[i];
  return sum * g.w;
}

}  // namespace

double trapezoid(const Grid& g, const std::vector<double>& samples,
                 CurveSel sel) {
  return trapezoid_impl(g, samples, sel);
}

cplx trapezoid(const Grid& g, const std::vector<cplx>& samples, CurveSel sel) {
  return trapezoid_impl(g, samples, sel);
}

namespace {

template <class Mat, class Vec>
Vec lu_solve(const Mat& M, const Vec& b) {
  if (M.rows() != M.cols() || M.rows() != b.size())
    throw std::invalid_argument("solve_dense: shape mismatch");
  Eigen::PartialPivLU<Mat> lu(M);
  const double rc = lu.rcond();
  if (!(rc > 1e-14))
    throw solver_error(
        "dense system is singular to working precision (rcond ~ " +
            std::to_string(rc) + ")",
        rc > 0 ? 1.0 / rc : std::numeric_limits<double>::infinity());
  return lu.solve(b);
}

}  // namespace

Eigen::VectorXcd solve_dense(const Eigen::MatrixXcd& M,
                             const Eigen::VectorXcd& b) {
  return lu_solve(M, b);
}

Eigen::VectorXd solve_dense(const Eigen::MatrixXd& M,
                            const Eigen::VectorXd& b) {
  return lu_solve(M, b);
}

LeastSquares solve_least_squares(const Eigen::MatrixXd& rows,
                                 const Eigen::VectorXd& rhs) {
  if (rows.cols() != 3)
    throw std::invalid_argument("solve_least_squares expects m x 3 rows");
  if (rows.rows() < 3 || rows.rows() != rhs.size())
    throw std::invalid_argument("solve_least_squares needs m >= 3 rows");
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(rows);
  const auto R = qr.matrixR();
  const double cond =
      std::abs(R(2, 2)) > 0 ? std::abs(R(0, 0) / R(2, 2))
                            : std::numeric_limits<double>::infinity();
  if (qr.rank() < 3)
    throw solver_error(
        "zero-finder rows are rank deficient; pick different parameter values "
        "or a larger grid",
        cond);
  LeastSquares out;
  out.u = qr.solve(-rhs);
  out.residual_norm = (rows * out.u + rhs).norm();
  out.condition_estimate = cond;
  return out;
}

}  // namespace ahlfors
