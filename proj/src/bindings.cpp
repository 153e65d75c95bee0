#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "discfrac/error.hpp"
#include "discfrac/glbinomial.hpp"
#include "discfrac/grid.hpp"
#include "discfrac/operator.hpp"
#include "discfrac/riemann.hpp"
#include "discfrac/specfun.hpp"
#include "discfrac/verify.hpp"

namespace py = pybind11;
using namespace discfrac;

namespace {

OperatorSpec make_spec(const std::string& family, const std::string& side, const std::string& kind,
                       double alpha, double anchor, const std::string& formulation) {
  return OperatorSpec{parse_family(family), parse_side(side),  parse_kind(kind),
                      parse_formulation(formulation), Order(alpha), anchor};
}

GridFunction apply_op(const GridFunction& f, const std::string& family, const std::string& side,
                      const std::string& kind, double alpha, std::optional<double> anchor,
                      const std::string& formulation, bool fast) {
  const Side s = parse_side(side);
  const double an = anchor.value_or(s == Side::left ? f.origin() : f.end());
  const auto spec = make_spec(family, side, kind, alpha, an, formulation);
  if (spec.formulation == Formulation::riemann) return riemann_apply(spec, f);
  return fast ? gl_apply_fast(spec, f) : gl_apply(spec, f);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Discrete fractional sums and differences on unit grids";

  py::register_exception<Error>(m, "DiscfracError", PyExc_ValueError);

  m.def("gamma_ratio", &gamma_ratio, py::arg("x"), py::arg("y"));
  m.def("falling_factorial", &falling_factorial, py::arg("t"), py::arg("alpha"));
  m.def("rising_factorial", &rising_factorial, py::arg("t"), py::arg("alpha"));
  m.def(
      "gl_weights",
      [](double alpha, const std::string& mode, std::size_t K) {
        if (mode != "difference" && mode != "sum") {
          throw Error(ErrorKind::parse_error, "mode must be 'difference' or 'sum'");
        }
        return gl_weights(alpha, mode == "sum" ? WeightMode::sum : WeightMode::difference, K).w;
      },
      py::arg("alpha"), py::arg("mode"), py::arg("K"));

  py::class_<GridFunction>(m, "GridFunction")
      .def(py::init<double, std::vector<double>>(), py::arg("origin"), py::arg("values"))
      .def_property_readonly("origin", &GridFunction::origin)
      .def_property_readonly("end", &GridFunction::end)
      .def_property_readonly("values",
                             [](const GridFunction& f) {
                               return std::vector<double>(f.values().begin(), f.values().end());
                             })
      .def("points",
           [](const GridFunction& f) {
             std::vector<double> p(f.size());
             for (std::size_t j = 0; j < f.size(); ++j) p[j] = f.point(j);
             return p;
           })
      .def("at", &GridFunction::at, py::arg("t"))
      .def("__len__", &GridFunction::size)
      .def("__repr__", [](const GridFunction& f) {
        return "GridFunction(origin=" + std::to_string(f.origin()) +
               ", length=" + std::to_string(f.size()) + ")";
      });

  m.def("delta", &delta);
  m.def("nabla", &nabla);
  m.def(
      "q_reflect",
      [](const GridFunction& f, double a, double b) { return q_reflect(f, AnchorPair::make(a, b)); },
      py::arg("f"), py::arg("a"), py::arg("b"));

  m.def("apply", &apply_op, py::arg("f"), py::arg("family"), py::arg("side"), py::arg("kind"),
        py::arg("alpha"), py::arg("anchor") = py::none(), py::arg("formulation") = "riemann",
        py::arg("fast") = true,
        "Apply a fractional sum or difference; the anchor defaults to the first (left) or "
        "last (right) grid point.");
  m.def(
      "riemann_diff_alt",
      [](const GridFunction& f, const std::string& family, const std::string& side, double alpha,
         std::optional<double> anchor) {
        const Side s = parse_side(side);
        const double an = anchor.value_or(s == Side::left ? f.origin() : f.end());
        return riemann_diff_alt(make_spec(family, side, "difference", alpha, an, "riemann"), f);
      },
      py::arg("f"), py::arg("family"), py::arg("side"), py::arg("alpha"),
      py::arg("anchor") = py::none());

  m.def("check_ids", [] {
    std::vector<std::string> ids;
    for (const auto& c : registry()) ids.push_back(c.id);
    return ids;
  });
  m.def(
      "run_check_jsonl",
      [](const std::string& id, std::uint64_t seed) { return to_jsonl(run_check(id, seed)); },
      py::arg("id"), py::arg("seed") = 42);
}
