#include "ahlfors/evaluate.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ahlfors/errors.hpp"
#include "ahlfors/nystrom.hpp"

namespace ahlfors {

InteriorSample cauchy_eval_sample(const Grid& g,
                                  const std::vector<cplx>& boundary_values,
                                  cplx z) {
  if (static_cast<int>(boundary_values.size()) != g.size())
    throw std::invalid_argument("cauchy_eval: boundary data length mismatch");
  // interior means winding 1 about the outer curve, 0 about any inner one
  for (int c = 0; c < g.curves; ++c) {
    const double expected = c == 0 ? 1.0 : 0.0;
    if (std::abs(winding_number(g, c, z) - expected) > 0.4)
      throw geometry_error("evaluation point is not interior to the region");
  }
  cplx num = 0.0, den = 0.0;
  for (int i = 0; i < g.size(); ++i) {
    const cplx q = g.z1[i] / (g.z[i] - z);
    num += boundary_values[i] * q;
    den += q;
  }
  num *= g.w;
  den *= g.w;
  return {z, num / den, std::abs(den)};
}

cplx cauchy_eval(const Grid& g, const std::vector<cplx>& boundary_values,
                 cplx z) {
  return cauchy_eval_sample(g, boundary_values, z).value;
}

double residual_at(const Region&, const Grid& g, const SzegoSolution& sol,
                   cplx a1) {
  return std::abs(cauchy_eval(g, sol.f, a1));
}

std::vector<SweepRow> convergence_sweep(const Region& region,
                                        const std::vector<int>& n_list) {
  std::vector<SweepRow> rows;
  for (int n : n_list) {
    SweepRow row;
    row.n = n;
    try {
      const Grid g = build_grid(region, n);
      const ZeroEstimate est = solve_second_zero(region, g);
      row.a1 = est.a1;
      row.residual_f = est.residual_f;
      row.s_defect = est.s_defect;
      row.ls_residual = est.ls_residual;
    } catch (const std::exception& e) {
      row.a1 = 0.0;
      row.residual_f = row.s_defect = row.ls_residual = 0.0;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "n,re_a1,im_a1,residual_f,s_defect,ls_residual,error\n";
  char buf[256];
  for (const auto& r : rows) {
    if (r.error.empty()) {
      std::snprintf(buf, sizeof buf, "%d,%.16e,%.16e,%.6e,%.6e,%.6e,\n", r.n,
                    r.a1.real(), r.a1.imag(), r.residual_f, r.s_defect,
                    r.ls_residual);
      out << buf;
    } else {
      std::string msg = r.error;
      for (char& ch : msg)
        if (ch == ',' || ch == '\n') ch = ';';
      out << r.n << ",,,,,," << msg << "\n";
    }
  }
  return out.str();
}

}  // namespace ahlfors
