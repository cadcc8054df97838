// Python bindings for the core library. Complex numbers map to Python
// complex, triangles to 3-tuples, and library errors to PonceletError.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "poncelet/conics.hpp"
#include "poncelet/error.hpp"
#include "poncelet/family.hpp"
#include "poncelet/inversive.hpp"
#include "poncelet/locus.hpp"
#include "poncelet/power.hpp"

namespace py = pybind11;
using namespace poncelet;

namespace {

using Tuple3 = std::array<Complex, 3>;

Triangle to_triangle(const Tuple3& v) { return Triangle{v}; }

std::string str(std::string_view s) { return std::string(s); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Poncelet triangle families, inversive loci and power invariants";

  // the module keeps the type alive
  static PyObject* error_type =
      py::exception<Error>(m, "PonceletError", PyExc_ValueError).ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(
          str(to_string(e.kind())) + ": " + e.what());
      exc.attr("kind") = str(to_string(e.kind()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  py::class_<Circle>(m, "Circle")
      .def(py::init(&make_circle), py::arg("center"), py::arg("radius"))
      .def_readonly("center", &Circle::center)
      .def_readonly("radius", &Circle::radius)
      .def("__repr__", [](const Circle& c) {
        return "Circle(center=" + py::repr(py::cast(c.center)).cast<std::string>() +
               ", radius=" + std::to_string(c.radius) + ")";
      });

  py::class_<Conic>(m, "Conic")
      .def(py::init([](const std::array<double, 6>& c) { return Conic::from_coefficients(c); }),
           py::arg("coefficients"))
      .def_property_readonly("coefficients", &Conic::coeffs)
      .def("evaluate", &Conic::evaluate)
      .def("residual", [](const Conic& c, Complex p) { return conic_residual(c, p); })
      .def("kind", [](const Conic& c) { return str(to_string(conic_classify(c))); });

  m.def("conic_fit", [](const std::vector<Complex>& pts) { return conic_fit(pts); },
        py::arg("points"));
  m.def("canonical_distance", &canonical_distance);

  py::class_<PonceletFamily>(m, "PonceletFamily")
      .def(py::init(&PonceletFamily::from_foci), py::arg("f"), py::arg("g"), py::arg("a"),
           py::arg("b"))
      .def_static("from_inner_circle", &family_from_inner_circle, py::arg("a"), py::arg("b"),
                  py::arg("center"), py::arg("radius"))
      .def_property_readonly("f", &PonceletFamily::f)
      .def_property_readonly("g", &PonceletFamily::g)
      .def_property_readonly("p", &PonceletFamily::p)
      .def_property_readonly("q", &PonceletFamily::q)
      .def_property_readonly("a", &PonceletFamily::a)
      .def_property_readonly("b", &PonceletFamily::b)
      .def("to_world", &PonceletFamily::to_world)
      .def("triangle", [](const PonceletFamily& f, double t) { return triangle_at(f, t).v; },
           py::arg("theta"), "Vertices on the unit circle.")
      .def("world_triangle",
           [](const PonceletFamily& f, double t) { return world_triangle(f, t).v; },
           py::arg("theta"), "Vertices on the outer ellipse.")
      .def("inner_ellipse", &inner_ellipse_world)
      .def("outer_ellipse", &outer_ellipse);

  m.def("closure_radius", &closure_radius, py::arg("a"), py::arg("b"), py::arg("center"));

  m.def("invert_point", &invert_point, py::arg("z"), py::arg("circle"));
  m.def("circumcenter", [](const Tuple3& t) { return circumcenter(to_triangle(t)); });
  m.def("circumcircle", [](const Tuple3& t) { return circumcircle(to_triangle(t)); });
  m.def("orthocenter", [](const Tuple3& t) { return orthocenter(to_triangle(t)); });
  m.def("euler_circle", [](const Tuple3& t) { return euler_circle(to_triangle(t)); });
  m.def("power", &power, py::arg("point"), py::arg("circle"));

  m.def(
      "inversive_circumcenter",
      [](const PonceletFamily& f, const Circle& k, double theta) {
        return inversive_circumcenter_closed(inversive_coeffs(f, k), theta);
      },
      py::arg("family"), py::arg("circle"), py::arg("theta"),
      "Closed-form circumcenter of the inverted triangle.");
  m.def("inversive_locus_conic", &inversive_locus_conic, py::arg("family"), py::arg("circle"));
  m.def("circumcenter_locus_conic", &circumcenter_locus_conic, py::arg("family"));

  py::class_<PowerPointResult>(m, "PowerPoint")
      .def_readonly("point", &PowerPointResult::point)
      .def_readonly("power", &PowerPointResult::invariant_power)
      .def_property_readonly("circle",
                             [](const PowerPointResult& r) { return str(to_string(r.kind)); });
  m.def("p3_point", &p3_point, py::arg("family"));
  m.def("p5_point", &p5_point, py::arg("family"));

  py::class_<SweepResult>(m, "Sweep")
      .def_readonly("thetas", &SweepResult::thetas)
      .def_readonly("x3", &SweepResult::x3)
      .def_readonly("x3p", &SweepResult::x3p)
      .def_readonly("inv_x3", &SweepResult::inv_x3)
      .def_readonly("x2p", &SweepResult::x2p)
      .def_readonly("x4p", &SweepResult::x4p)
      .def_readonly("x5p", &SweepResult::x5p)
      .def_readonly("power_at_o", &SweepResult::power_at_o)
      .def_readonly("skipped", &SweepResult::skipped)
      .def("__len__", &SweepResult::size);
  m.def("sweep", &sweep, py::arg("family"), py::arg("circle"), py::arg("samples") = 720);

  py::class_<OLocation>(m, "OLocation")
      .def_property_readonly("kind", [](const OLocation& o) { return str(to_string(o.kind)); })
      .def_readonly("crossing_count", &OLocation::crossing_count)
      .def_readonly("inside_all_circumcircles", &OLocation::inside_all_circumcircles);
  m.def("classify_o", &classify_O, py::arg("family"), py::arg("circle"),
        py::arg("grid") = 4096);
  m.def(
      "locus_type",
      [](const PonceletFamily& f, const Circle& k) {
        const ConicTypeReport r = verify_conic_type(f, k);
        return py::make_tuple(str(to_string(r.location.kind)), str(to_string(r.locus_type)),
                              r.consistent);
      },
      py::arg("family"), py::arg("circle"),
      "(O classification, locus conic type, whether they agree)");
  m.def(
      "nonconic_residuals",
      [](const SweepResult& s) {
        const NonconicReport r = nonconic_evidence(s);
        py::dict d;
        d["x3p"] = r.x3p_residual;
        d["x2p"] = r.x2p_residual;
        d["x4p"] = r.x4p_residual;
        d["x5p"] = r.x5p_residual;
        d["evidence"] = r.evidence;
        return d;
      },
      py::arg("sweep"));
}
