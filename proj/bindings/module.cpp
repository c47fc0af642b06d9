#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ahlfors/ahlfors.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace ahlfors;

PYBIND11_MODULE(_core, m) {
  m.doc() = "boundary-integral Ahlfors map solver for doubly connected regions";

  py::register_exception<geometry_error>(m, "GeometryError");
  py::register_exception<solver_error>(m, "SolverError");
  py::register_exception<io_error>(m, "IoError");

  py::class_<Curve>(m, "Curve")
      .def_property_readonly("center", &Curve::center)
      .def_property_readonly("sigma", &Curve::sigma)
      .def("point", &Curve::point)
      .def("__repr__", [](const Curve& c) {
        switch (c.kind()) {
          case Curve::Kind::Circle: return std::string("Curve(circle)");
          case Curve::Kind::RadialCosine: return std::string("Curve(radial_cosine)");
          default: return std::string("Curve(trig_polynomial)");
        }
      });

  py::class_<Region>(m, "Region")
      .def(py::init([](const Curve& outer, const Curve& inner, cplx a0) {
             return Region{outer, inner, a0};
           }),
           py::arg("outer"), py::arg("inner"), py::arg("a0"))
      .def_readwrite("outer", &Region::outer)
      .def_readwrite("inner", &Region::inner)
      .def_readwrite("a0", &Region::a0);

  py::class_<Grid>(m, "Grid")
      .def_readonly("n", &Grid::n)
      .def_readonly("curves", &Grid::curves)
      .def_readonly("w", &Grid::w)
      .def_readonly("t", &Grid::t)
      .def_readonly("z", &Grid::z)
      .def_readonly("speed", &Grid::speed)
      .def_readonly("curve", &Grid::curve)
      .def("size", &Grid::size);

  py::class_<SzegoSolution>(m, "SzegoSolution")
      .def_readonly("S", &SzegoSolution::S)
      .def_readonly("S_p", &SzegoSolution::S_p)
      .def_readonly("f", &SzegoSolution::f)
      .def_readonly("theta_prime", &SzegoSolution::theta_prime);

  py::class_<ZeroMode>(m, "ZeroMode")
      .def_static("least_squares", &ZeroMode::least_squares)
      .def_static("three_point", &ZeroMode::three_point);

  py::class_<ZeroEstimate>(m, "ZeroEstimate")
      .def_readonly("a1", &ZeroEstimate::a1)
      .def_readonly("s_defect", &ZeroEstimate::s_defect)
      .def_readonly("ls_residual", &ZeroEstimate::ls_residual)
      .def_readonly("condition_estimate", &ZeroEstimate::condition_estimate)
      .def_readonly("residual_f", &ZeroEstimate::residual_f)
      .def_readonly("n", &ZeroEstimate::n)
      .def_readonly("mode", &ZeroEstimate::mode)
      .def("to_json", [](const ZeroEstimate& e) { return to_json(e); });

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("n", &SweepRow::n)
      .def_readonly("a1", &SweepRow::a1)
      .def_readonly("residual_f", &SweepRow::residual_f)
      .def_readonly("s_defect", &SweepRow::s_defect)
      .def_readonly("ls_residual", &SweepRow::ls_residual)
      .def_readonly("error", &SweepRow::error);

  m.def("make_circle", &make_circle, py::arg("center"), py::arg("radius"),
        py::arg("sigma"));
  m.def("make_radial_cosine", &make_radial_cosine, py::arg("center"),
        py::arg("R"), py::arg("a"), py::arg("m"), py::arg("sigma"));
  m.def("make_trig_polynomial", &make_trig_polynomial, py::arg("center"),
        py::arg("coefficients"));
  m.def("preset_region", &preset_region, py::arg("name"), py::arg("r") = 0.1);
  m.def("preset_names", &preset_names);
  m.def("region_from_json", &region_from_json);
  m.def("region_to_json", &region_to_json);
  m.def("load_region", &load_region);

  m.def("build_grid",
        py::overload_cast<const Region&, int>(&build_grid), py::arg("region"),
        py::arg("n"));
  m.def("winding_number", &winding_number);

  m.def("solve_boundary", &solve_boundary, py::arg("region"), py::arg("grid"));
  m.def("solve_second_zero",
        py::overload_cast<const Region&, const Grid&, const SzegoSolution&,
                          const ZeroMode&>(&solve_second_zero),
        py::arg("region"), py::arg("grid"), py::arg("solution"),
        py::arg("mode") = ZeroMode::least_squares());
  m.def("solve_second_zero",
        py::overload_cast<const Region&, const Grid&, const ZeroMode&>(
            &solve_second_zero),
        py::arg("region"), py::arg("grid"),
        py::arg("mode") = ZeroMode::least_squares());

  m.def("cauchy_eval", &cauchy_eval, py::arg("grid"),
        py::arg("boundary_values"), py::arg("z"));
  m.def("residual_at", &residual_at, py::arg("region"), py::arg("grid"),
        py::arg("solution"), py::arg("a1"));
  m.def("convergence_sweep", &convergence_sweep, py::arg("region"),
        py::arg("n_list"));
  m.def("sweep_csv", &sweep_csv);

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
