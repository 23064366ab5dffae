#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polynorm/algebra.hpp"
#include "polynorm/error.hpp"
#include "polynorm/grothendieck.hpp"
#include "polynorm/laurent.hpp"
#include "polynorm/normdecomp.hpp"

namespace py = pybind11;
using namespace polynorm;

namespace {

// Python ints are arbitrary precision; go through decimal strings.
Integer to_integer(const py::handle& h) {
  if (!PyLong_Check(h.ptr())) throw py::type_error("coordinates must be int");
  return Integer(py::str(h).cast<std::string>());
}

py::int_ to_pyint(const Integer& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

LatticePoint to_point(const py::handle& h) {
  std::vector<Integer> coords;
  for (auto c : py::iter(h)) coords.push_back(to_integer(c));
  return LatticePoint(std::move(coords));
}

py::tuple to_pytuple(const LatticePoint& p) {
  py::tuple t(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) t[i] = to_pyint(p[i]);
  return t;
}

Polytope make_polytope(const py::iterable& points, std::optional<std::size_t> dim) {
  std::vector<LatticePoint> pts;
  for (auto h : points) pts.push_back(to_point(h));
  if (!dim) {
    if (pts.empty()) throw Error(ErrorCode::EmptyPolytope, "no points and no dimension");
    dim = pts.front().dim();
  }
  return canonical_hull(pts, *dim);
}

py::list vertex_list(const Polytope& p) {
  py::list out;
  for (const auto& v : p.vertices()) out.append(to_pytuple(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_polynorm, m) {
  m.doc() = "Exact Minkowski arithmetic on lattice polytopes";

  static py::exception<Error> error_type(m, "PolynormError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(py::str(e.what()));
      exc.attr("code") = to_string(e.code());
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<Polytope>(m, "Polytope")
      .def(py::init(&make_polytope), py::arg("points"), py::arg("dim") = py::none(),
           "Convex hull of integer points.")
      .def_static("origin", &Polytope::origin, py::arg("dim"))
      .def_property_readonly("dim", &Polytope::dim)
      .def_property_readonly("vertices", &vertex_list)
      .def("contains",
           [](const Polytope& p, const py::iterable& x) { return contains(p, to_point(x)); })
      .def("lattice_points",
           [](const Polytope& p) {
             py::list out;
             for (const auto& z : lattice_points(p)) out.append(to_pytuple(z));
             return out;
           })
      .def("mirror", &mirror)
      .def("translate", [](const Polytope& p, const py::iterable& t) { return translate(p, to_point(t)); })
      .def("is_symmetric", &is_symmetric)
      .def("__add__", &minkowski_sum)
      .def("__eq__", [](const Polytope& a, const Polytope& b) { return a.dim() == b.dim() && a == b; })
      .def("__hash__", [](const Polytope& p) { return py::hash(py::str(p.to_string())); })
      .def("__repr__", [](const Polytope& p) { return "Polytope(" + p.to_string() + ")"; });

  m.def(
      "decompose",
      [](const Polytope& p) {
        auto d = decompose(p);
        return py::make_tuple(d.q, d.r);
      },
      py::arg("p"), "Return (q, r) with p + q + mirror(q) = r + mirror(r).");
  m.def("verify_norm_identity", &verify_norm_identity, py::arg("p"), py::arg("q"), py::arg("r"));
  m.def(
      "is_integral_norm",
      [](const Polytope& p, std::size_t cap) {
        py::gil_scoped_release release;
        return is_integral_norm(p, cap);
      },
      py::arg("p"), py::arg("cap") = kDefaultSearchCap);
  m.def(
      "element_eq",
      [](const Polytope& a, const Polytope& b, const Polytope& c, const Polytope& d) {
        return element_eq(element(a, b), element(c, d));
      },
      py::arg("plus1"), py::arg("minus1"), py::arg("plus2"), py::arg("minus2"),
      "Whether plus1 - minus1 and plus2 - minus2 agree in the Grothendieck group.");
  m.def(
      "norm_difference",
      [](const Polytope& plus, const Polytope& minus) {
        auto c = norm_difference(element(plus, minus));
        return py::make_tuple(c.u, c.v);
      },
      py::arg("plus"), py::arg("minus"));
  m.def(
      "newton_polytope",
      [](const std::string& text, const std::vector<std::string>& vars) {
        return newton_polytope(parse_laurent(text, vars));
      },
      py::arg("expression"), py::arg("vars"));
}
