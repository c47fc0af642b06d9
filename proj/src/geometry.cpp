#include "ahlfors/geometry.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "ahlfors/errors.hpp"
#include "json.hpp"

namespace ahlfors {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
const cplx I{0.0, 1.0};
}  // namespace

Curve make_circle(cplx center, double radius, int sigma) {
  if (!(radius > 0.0))
    throw geometry_error("circle radius must be positive");
  if (sigma != 1 && sigma != -1)
    throw std::invalid_argument("sigma must be +1 or -1");
  Curve c;
  c.kind_ = Curve::Kind::Circle;
  c.center_ = center;
  c.radius_ = radius;
  c.sigma_ = sigma;
  return c;
}

Curve make_radial_cosine(cplx center, double R, double a, int m, int sigma) {
  if (!(R > std::abs(a)))
    throw geometry_error("radial-cosine curve needs R > |a| to stay Jordan");
  if (m < 1) throw std::invalid_argument("cosine frequency m must be >= 1");
  if (sigma != 1 && sigma != -1)
    throw std::invalid_argument("sigma must be +1 or -1");
  Curve c;
  c.kind_ = Curve::Kind::RadialCosine;
  c.center_ = center;
  c.R_ = R;
  c.a_ = a;
  c.m_ = m;
  c.sigma_ = sigma;
  return c;
}

Curve make_trig_polynomial(cplx center, std::map<int, cplx> coeff) {
  if (coeff.empty())
    throw std::invalid_argument("trig polynomial needs at least one term");
  Curve c;
  c.kind_ = Curve::Kind::TrigPolynomial;
  c.center_ = center;
  c.coeff_ = std::move(coeff);
  return c;
}

Jet Curve::jet(double t) const {
  Jet j;
  switch (kind_) {
    case Kind::Circle: {
      const double s = sigma_;
      const cplx e = radius_ * std::exp(I * (s * t));
      j.z = center_ + e;
      j.z1 = I * s * e;
      j.z2 = -e;          // (i s)^2 = -1
      j.z3 = -I * s * e;  // (i s)^3 = -i s
      break;
    }
    case Kind::RadialCosine: {
      const double s = sigma_;
      const double rho = R_ + a_ * std::cos(m_ * t);
      const double rho1 = -a_ * m_ * std::sin(m_ * t);
      const double rho2 = -a_ * m_ * m_ * std::cos(m_ * t);
      const double rho3 = a_ * m_ * m_ * m_ * std::sin(m_ * t);
      const cplx e = std::exp(I * (s * t));
      const cplx is{0.0, s};
      j.z = center_ + rho * e;
      j.z1 = (rho1 + is * rho) * e;
      j.z2 = (rho2 + 2.0 * is * rho1 - rho) * e;
      j.z3 = (rho3 + 3.0 * is * rho2 - 3.0 * rho1 - is * rho) * e;
      break;
    }
    case Kind::TrigPolynomial: {
      j.z = center_;
      j.z1 = j.z2 = j.z3 = 0.0;
      for (const auto& [k, c] : coeff_) {
        const cplx e = c * std::exp(I * (double(k) * t));
        const cplx ik{0.0, double(k)};
        j.z += e;
        j.z1 += ik * e;
        j.z2 += ik * ik * e;
        j.z3 += ik * ik * ik * e;
      }
      break;
    }
  }
  return j;
}

namespace {

void append_curve_nodes(Grid& g, const Curve& c, int index) {
  const int n = g.n;
  for (int i = 0; i < n; ++i) {
    const double t = two_pi * i / n;
    const Jet j = c.jet(t);
    const double sp = std::abs(j.z1);
    if (sp <= 1e-12 * std::max(1.0, std::abs(j.z)))
      throw geometry_error("degenerate parameterization: z'(t) = 0 at node t=" +
                           std::to_string(t) + " of curve " +
                           std::to_string(index));
    g.t.push_back(t);
    g.z.push_back(j.z);
    g.z1.push_back(j.z1);
    g.z2.push_back(j.z2);
    g.z3.push_back(j.z3);
    g.speed.push_back(sp);
    g.T.push_back(j.z1 / sp);
    g.curve.push_back(index);
  }
}

void check_n(int n) {
  if (n < 8 || n % 2 != 0)
    throw std::invalid_argument("grid size n must be even and >= 8");
}

}  // namespace

double winding_number(const Grid& g, int curve, cplx p) {
  double sum = 0.0;
  for (int i = 0; i < g.size(); ++i) {
    if (g.curve[i] != curve) continue;
    sum += std::imag(g.z1[i] / (g.z[i] - p));
  }
  return sum * g.w / two_pi;
}

Grid build_grid(const Curve& boundary, int n) {
  check_n(n);
  Grid g;
  g.n = n;
  g.curves = 1;
  g.w = two_pi / n;
  append_curve_nodes(g, boundary, 0);
  return g;
}

Grid build_grid(const Region& region, int n) {
  check_n(n);
  Grid g;
  g.n = n;
  g.curves = 2;
  g.w = two_pi / n;
  append_curve_nodes(g, region.outer, 0);
  append_curve_nodes(g, region.inner, 1);

  // a0 must sit in the annular region between the curves
  const double w_out = winding_number(g, 0, region.a0);
  if (std::abs(w_out - 1.0) > 0.4)
    throw geometry_error("a0 is not enclosed by the outer curve");
  const double w_in = winding_number(g, 1, region.a0);
  if (std::abs(w_in) > 0.4)
    throw geometry_error("a0 lies inside the inner curve");
  // and the inner curve must be contained in the outer one
  for (int i = n; i < 2 * n; ++i) {
    if (std::abs(winding_number(g, 0, g.z[i]) - 1.0) > 0.4)
      throw geometry_error("inner curve is not contained in the outer curve");
  }
  return g;
}

// ---- JSON serialization ----------------------------------------------------

namespace {

using nlohmann::ordered_json;

cplx read_complex(const ordered_json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw io_error(std::string(what) + " must be a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

ordered_json write_complex(cplx z) {
  return ordered_json::array({z.real(), z.imag()});
}

Curve curve_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw io_error("curve object needs a \"kind\" field");
  const std::string kind = j.at("kind").get<std::string>();
  const cplx center =
      j.contains("center") ? read_complex(j.at("center"), "center") : cplx{};
  const int sigma = j.value("sigma", 1);
  if (kind == "circle")
    return make_circle(center, j.at("radius").get<double>(), sigma);
  if (kind == "radial-cosine")
    return make_radial_cosine(center, j.at("R").get<double>(),
                              j.at("a").get<double>(), j.at("m").get<int>(),
                              sigma);
  if (kind == "trig-polynomial") {
    std::map<int, cplx> coeff;
    for (const auto& term : j.at("coefficients")) {
      if (!term.is_array() || term.size() != 3)
        throw io_error("trig-polynomial coefficients are [k, re, im] triples");
      coeff[term[0].get<int>()] = {term[1].get<double>(),
                                   term[2].get<double>()};
    }
    return make_trig_polynomial(center, std::move(coeff));
  }
  throw io_error("unknown curve kind \"" + kind + "\"");
}

ordered_json curve_to_json(const Curve& c) {
  ordered_json j;
  switch (c.kind()) {
    case Curve::Kind::Circle:
      j["kind"] = "circle";
      j["center"] = write_complex(c.center());
      j["radius"] = c.radius();
      j["sigma"] = c.sigma();
      break;
    case Curve::Kind::RadialCosine:
      j["kind"] = "radial-cosine";
      j["center"] = write_complex(c.center());
      j["R"] = c.base_radius();
      j["a"] = c.amplitude();
      j["m"] = c.frequency();
      j["sigma"] = c.sigma();
      break;
    case Curve::Kind::TrigPolynomial: {
      j["kind"] = "trig-polynomial";
      j["center"] = write_complex(c.center());
      auto arr = ordered_json::array();
      for (const auto& [k, ck] : c.coefficients())
        arr.push_back(ordered_json::array({k, ck.real(), ck.imag()}));
      j["coefficients"] = arr;
      break;
    }
  }
  return j;
}

}  // namespace

Region region_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw io_error(std::string("region file is not valid JSON: ") + e.what());
  }
  try {
    Region r{curve_from_json(j.at("outer")), curve_from_json(j.at("inner")),
             read_complex(j.at("a0"), "a0")};
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw io_error(std::string("bad region file: ") + e.what());
  }
}

std::string region_to_json(const Region& region) {
  ordered_json j;
  j["outer"] = curve_to_json(region.outer);
  j["inner"] = curve_to_json(region.inner);
  j["a0"] = write_complex(region.a0);
  return j.dump(2);
}

Region load_region(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open region file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return region_from_json(ss.str());
}

// ---- presets ---------------------------------------------------------------

Region preset_region(const std::string& name, double r) {
  if (name == "example1") {
    // concentric annulus; second zero is known exactly (-r / conj(a0))
    return {make_circle(0.0, 1.0, 1), make_circle(0.0, r, -1), cplx{0.5, 0.0}};
  }
  if (name == "example2") {
    return {make_circle(0.0, 2.0, 1), make_circle({0.2, 0.6}, 0.3, -1),
            cplx{-0.5, 0.2}};
  }
  if (name == "example3a") {
    return {make_radial_cosine({-0.1, -0.4}, 6.0, 0.8, 18, 1),
            make_radial_cosine({0.6452, -0.8655}, 1.2, 0.4, 4, -1),
            cplx{-1.3088, 1.8012}};
  }
  if (name == "example3b") {
    return {make_radial_cosine({-0.1, -0.4}, 6.0, 0.8, 18, 1),
            make_radial_cosine({-2.4516, 2.3626}, 1.2, 0.4, 4, -1),
            cplx{2.2673, -2.0351}};
  }
  throw std::invalid_argument("unknown preset \"" + name +
                              "\" (try: example1 example2 example3a example3b)");
}

std::vector<std::string> preset_names() {
  return {"example1", "example2", "example3a", "example3b"};
}

}  // namespace ahlfors
