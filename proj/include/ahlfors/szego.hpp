#pragma once

#include <vector>

#include "ahlfors/geometry.hpp"

namespace ahlfors {

// everything the boundary solve produces, per grid node
struct SzegoSolution {
  std::vector<cplx> S;             // Szego kernel boundary values S(z(t), a0)
  std::vector<cplx> S_p;           // d/dt S(z(t), a0)
  std::vector<cplx> f;             // Ahlfors map boundary values, |f| = 1
  std::vector<double> theta_prime; // boundary correspondence derivative
};

// right-hand side g(t) = -conj(T)/conj(z - a0) / (2 pi i)
std::vector<cplx> rhs_g(const Grid& g, cplx a0);

// Kerzman-Stein integral equation (I + A)S = g, arc-length weighting
std::vector<cplx> solve_szego(const Grid& g, cplx a0);
std::vector<cplx> solve_szego(const Region& region, const Grid& g);

// S' from the differentiated integral equation: S'(t) = g'(t) - sum over
// nodes of the derivative kernel times S (no second linear solve needed)
std::vector<cplx> szego_derivative(const Grid& g, const std::vector<cplx>& S,
                                   cplx a0);
std::vector<cplx> szego_derivative(const Region& region, const Grid& g,
                                   const std::vector<cplx>& S);

// f(z(t)) = S T / (i conj(S)); unimodular by construction
std::vector<cplx> ahlfors_boundary(const Grid& g, const std::vector<cplx>& S);

// theta'(t) = 2 Im(S'/S) + Im(z''/z'), from d/dt log f(z(t))
std::vector<double> theta_prime_analytic(const Grid& g,
                                         const std::vector<cplx>& S,
                                         const std::vector<cplx>& S_p);

// validation route: solves (I + N* + J) theta' = phi + psi with both zeros
// known; plain parameter weighting.  Doubly connected grids only.
std::vector<double> theta_prime_operator(const Region& region, const Grid& g,
                                         cplx a0, cplx a1);

// full pipeline for one region and grid
SzegoSolution solve_boundary(const Region& region, const Grid& g);

}  // namespace ahlfors
