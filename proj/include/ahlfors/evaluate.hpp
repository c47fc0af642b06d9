#pragma once

#include <string>
#include <vector>

#include "ahlfors/geometry.hpp"
#include "ahlfors/szego.hpp"
#include "ahlfors/zerofinder.hpp"

namespace ahlfors {

struct InteriorSample {
  cplx point;
  cplx value;
  double denominator_magnitude;  // |denominator integral|, 2 pi for interior z
};

// stabilized Cauchy evaluation: ratio of the boundary integrals of
// f(w)/(w-z) and 1/(w-z); exact winding cancellation makes it accurate
// even near the boundary.  z must be interior (discrete winding of the
// outer curve ~ 1 and of the inner curve ~ 0, tolerance 0.4).
InteriorSample cauchy_eval_sample(const Grid& g,
                                  const std::vector<cplx>& boundary_values,
                                  cplx z);
cplx cauchy_eval(const Grid& g, const std::vector<cplx>& boundary_values,
                 cplx z);

// |f(a1)| from the boundary solution
double residual_at(const Region& region, const Grid& g,
                   const SzegoSolution& sol, cplx a1);

struct SweepRow {
  int n;
  cplx a1;
  double residual_f;
  double s_defect;
  double ls_residual;
  std::string error;  // empty on success; failures don't stop the sweep
};

std::vector<SweepRow> convergence_sweep(const Region& region,
                                        const std::vector<int>& n_list);

// CSV: n, re_a1, im_a1, residual_f, s_defect, ls_residual, error
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace ahlfors
