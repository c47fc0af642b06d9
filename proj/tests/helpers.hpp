#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "ahlfors/geometry.hpp"

namespace testutil {

using ahlfors::cplx;

inline double dist(cplx a, cplx b) { return std::abs(a - b); }

// 4th-order central difference of a complex-valued callable
template <class F>
cplx fd4(F&& f, double t, double h) {
  return (-f(t + 2 * h) + 8.0 * f(t + h) - 8.0 * f(t - h) + f(t - 2 * h)) /
         (12.0 * h);
}

// spectral derivative of one periodic sample block (even n), via the
// cotangent differentiation matrix; exact for trig polynomials of degree
// < n/2, so it converges spectrally for analytic data
inline std::vector<cplx> spectral_derivative(const std::vector<cplx>& f) {
  const int n = static_cast<int>(f.size());
  const double h = 2.0 * std::numbers::pi / n;
  std::vector<cplx> out(n, cplx{0.0, 0.0});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int k = i - j;
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      out[i] += sign * 0.5 / std::tan(0.5 * h * k) * f[j];
    }
  }
  return out;
}

// per-curve spectral derivative over a full grid
inline std::vector<cplx> spectral_derivative(const ahlfors::Grid& g,
                                             const std::vector<cplx>& f) {
  std::vector<cplx> out(f.size());
  for (int c = 0; c < g.curves; ++c) {
    std::vector<cplx> block(f.begin() + c * g.n, f.begin() + (c + 1) * g.n);
    auto d = spectral_derivative(block);
    std::copy(d.begin(), d.end(), out.begin() + c * g.n);
  }
  return out;
}

}  // namespace testutil
