#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace ahlfors {

using cplx = std::complex<double>;

// value of a parameterization and its first three derivatives at one t
struct Jet {
  cplx z, z1, z2, z3;
};

// 2*pi-periodic Jordan boundary curve with closed-form derivative jet.
// Three kinds: circle, radial-cosine (R + a*cos(m t) radius law), and a
// general trigonometric polynomial sum c_k e^{ikt}. No numerical
// differentiation anywhere -- the kernel diagonals need z''' exactly.
class Curve {
 public:
  enum class Kind { Circle, RadialCosine, TrigPolynomial };

  Jet jet(double t) const;
  cplx point(double t) const { return jet(t).z; }

  Kind kind() const { return kind_; }
  cplx center() const { return center_; }
  double radius() const { return radius_; }       // circle
  double base_radius() const { return R_; }       // radial-cosine
  double amplitude() const { return a_; }         // radial-cosine
  int frequency() const { return m_; }            // radial-cosine
  int sigma() const { return sigma_; }            // +1 ccw, -1 cw
  const std::map<int, cplx>& coefficients() const { return coeff_; }

  friend Curve make_circle(cplx center, double radius, int sigma);
  friend Curve make_radial_cosine(cplx center, double R, double a, int m,
                                  int sigma);
  friend Curve make_trig_polynomial(cplx center, std::map<int, cplx> coeff);

 private:
  Curve() = default;
  Kind kind_ = Kind::Circle;
  cplx center_{0.0, 0.0};
  double radius_ = 1.0;
  double R_ = 0.0, a_ = 0.0;
  int m_ = 1;
  int sigma_ = 1;
  std::map<int, cplx> coeff_;  // k -> c_k
};

Curve make_circle(cplx center, double radius, int sigma);
Curve make_radial_cosine(cplx center, double R, double a, int m, int sigma);
Curve make_trig_polynomial(cplx center, std::map<int, cplx> coeff);

// doubly connected region: outer curve counterclockwise, inner clockwise,
// prescribed zero a0 strictly between them
struct Region {
  Curve outer;
  Curve inner;
  cplx a0;
};

// Nystrom grid: n equispaced nodes t_i = 2*pi*i/n on each parameter
// interval, outer-curve nodes first, trapezoidal weight w = 2*pi/n.
// Jets and tangents are cached per node.
struct Grid {
  int n = 0;       // nodes per curve
  int curves = 0;  // 1 or 2 boundary components
  double w = 0.0;
  std::vector<double> t;
  std::vector<cplx> z, z1, z2, z3;
  std::vector<cplx> T;          // unit tangent z'/|z'|
  std::vector<double> speed;    // |z'|
  std::vector<int> curve;       // component index per node
  int size() const { return static_cast<int>(z.size()); }
};

// n must be even and >= 8; validates node non-degeneracy and the winding
// invariants (a0 between the curves, inner curve inside the outer one)
Grid build_grid(const Region& region, int n);

// single-curve grid, used for simply connected oracles (disk tests)
Grid build_grid(const Curve& boundary, int n);

// discrete winding number of one boundary component about p; rounds to the
// exact integer for points away from the curve
double winding_number(const Grid& grid, int curve, cplx p);

// JSON region files: {"outer": {...}, "inner": {...}, "a0": [re, im]}
Region region_from_json(const std::string& text);
std::string region_to_json(const Region& region);
Region load_region(const std::string& path);

// built-in regions (annulus, eccentric circles, two starfish variants);
// "example1" takes the inner radius r as a parameter
Region preset_region(const std::string& name, double r = 0.1);
std::vector<std::string> preset_names();

}  // namespace ahlfors
