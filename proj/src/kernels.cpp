#include "ahlfors/kernels.hpp"

#include <cmath>
#include <numbers>

#include "ahlfors/errors.hpp"

namespace ahlfors {

namespace {
constexpr double pi = std::numbers::pi;
const cplx two_pi_i{0.0, 2.0 * pi};

void check_separation(const cplx& zi, const cplx& zj) {
  // distinct parameter nodes mapping to the same point means the curves
  // touch (or a curve self-intersects); no finite kernel value exists
  if (std::abs(zi - zj) <= 1e-14 * std::max(1.0, std::abs(zi)))
    throw geometry_error("distinct boundary nodes coincide; curves touch");
}

cplx ks_value(const cplx& zi, const cplx& Ti, const cplx& zj, const cplx& Tj) {
  const cplx d = zi - zj;
  return (Tj / d - std::conj(Ti) / std::conj(d)) / two_pi_i;
}

cplx ks_dt_offdiag(const cplx& zi, const cplx& z1i, const cplx& Ti,
                   const cplx& Tpi, const cplx& zj, const cplx& Tj) {
  const cplx d = zi - zj;
  const cplx cd = std::conj(d);
  return (-z1i * Tj / (d * d) - std::conj(Tpi) / cd +
          std::conj(Ti) * std::conj(z1i) / (cd * cd)) /
         two_pi_i;
}

double ks_dt_diag(const cplx& z1, const cplx& z2, const cplx& z3) {
  const cplx p = z2 / z1;
  const cplx q = z3 / z1;
  return (std::imag(q) - 3.0 * std::real(p) * std::imag(p)) /
         (12.0 * pi * std::abs(z1));
}

}  // namespace

cplx tangent_derivative(const Jet& j) {
  const double sp = std::abs(j.z1);
  return j.z2 / (2.0 * sp) -
         j.z1 * j.z1 * std::conj(j.z2) / (2.0 * sp * sp * sp);
}

cplx kerzman_stein(const Grid& g, int i, int j) {
  if (i == j) return 0.0;
  check_separation(g.z[i], g.z[j]);
  return ks_value(g.z[i], g.T[i], g.z[j], g.T[j]);
}

cplx kerzman_stein_dt(const Grid& g, int i, int j) {
  if (i == j) return ks_dt_diag(g.z1[i], g.z2[i], g.z3[i]);
  check_separation(g.z[i], g.z[j]);
  const Jet ji{g.z[i], g.z1[i], g.z2[i], g.z3[i]};
  return ks_dt_offdiag(g.z[i], g.z1[i], g.T[i], tangent_derivative(ji), g.z[j],
                       g.T[j]);
}

double neumann_adjoint(const Grid& g, int i, int j) {
  if (i == j) return std::imag(g.z2[i] / g.z1[i]) / (2.0 * pi);
  check_separation(g.z[i], g.z[j]);
  return std::imag(g.z1[i] / (g.z[i] - g.z[j])) / pi;
}

std::vector<double> apply_J(const Grid& g, const std::vector<double>& v) {
  if (g.curves != 2)
    throw geometry_error(
        "the rank-correction operator is defined for doubly connected grids "
        "only");
  if (static_cast<int>(v.size()) != g.size())
    throw std::invalid_argument("apply_J: sample vector length mismatch");
  double mean = 0.0;
  for (int i = 0; i < g.size(); ++i)
    if (g.curve[i] == 1) mean += v[i];
  mean *= g.w / (2.0 * pi);  // trapezoidal integral over the inner interval
  std::vector<double> out(v.size(), 0.0);
  for (int i = 0; i < g.size(); ++i)
    if (g.curve[i] == 1) out[i] = mean;
  return out;
}

cplx kerzman_stein_raw(const Curve& row, double t, const Curve& col, double s) {
  const Jet a = row.jet(t);
  const Jet b = col.jet(s);
  if (std::abs(a.z - b.z) <= 1e-14 * std::max(1.0, std::abs(a.z))) return 0.0;
  return ks_value(a.z, a.z1 / std::abs(a.z1), b.z, b.z1 / std::abs(b.z1));
}

cplx kerzman_stein_dt_raw(const Curve& row, double t, const Curve& col,
                          double s) {
  const Jet a = row.jet(t);
  const Jet b = col.jet(s);
  if (std::abs(a.z - b.z) <= 1e-14 * std::max(1.0, std::abs(a.z)))
    return ks_dt_diag(a.z1, a.z2, a.z3);
  return ks_dt_offdiag(a.z, a.z1, a.z1 / std::abs(a.z1), tangent_derivative(a),
                       b.z, b.z1 / std::abs(b.z1));
}

}  // namespace ahlfors
