#pragma once

#include "ahlfors/geometry.hpp"

namespace ahlfors {

// Kerzman-Stein kernel A(z(t_i), z(t_j)); skew-Hermitian, zero diagonal,
// vanishes identically when both nodes sit on the same circle
cplx kerzman_stein(const Grid& g, int i, int j);

// t-derivative of the Kerzman-Stein kernel along the row parameter.  The
// diagonal is the s -> t limit of the off-diagonal values,
//   (Im(z'''/z') - 3 Re(z''/z') Im(z''/z')) / (12 pi |z'|),
// which reduces to Im(z'''/z')/(12 pi |z'|) on curves with Re(z''/z') = 0
// (circles).  The cross term matters on general curves: dropping it shifts
// the computed S' by a real multiple of S (harmless for theta', wrong as a
// derivative).  Verified against Richardson extrapolation of off-diagonal
// samples.
cplx kerzman_stein_dt(const Grid& g, int i, int j);

// adjoint classical Neumann kernel N*(t_i, t_j) = (1/pi) Im(z'(t_i)/(z(t_i)-z(t_j)))
// with diagonal Im(z''/z')/(2 pi)
double neumann_adjoint(const Grid& g, int i, int j);

// rank-correction operator: zero on outer-curve nodes, mean of v over the
// inner interval (trapezoidal, 1/(2 pi) factor) on inner-curve nodes.
// Defined for doubly connected grids only.
std::vector<double> apply_J(const Grid& g, const std::vector<double>& v);

// raw-parameter kernel evaluations between two curves; used by the
// finite-difference and extrapolation oracles in the tests
cplx kerzman_stein_raw(const Curve& row, double t, const Curve& col, double s);
cplx kerzman_stein_dt_raw(const Curve& row, double t, const Curve& col,
                          double s);

// d/dt of the unit tangent T(z(t)) = z'/|z'|
cplx tangent_derivative(const Jet& j);

}  // namespace ahlfors
