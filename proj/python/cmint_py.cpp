#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cmint/enumerate.hpp"
#include "cmint/gzmoduli.hpp"
#include "cmint/intersect.hpp"
#include "cmint/quadcm.hpp"

namespace py = pybind11;
using namespace cmint;

namespace {

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  const py::int_ num(py::str(boost::multiprecision::numerator(r).str()));
  const py::int_ den(py::str(boost::multiprecision::denominator(r).str()));
  return fraction(num, den);
}

py::dict coefficients(const IntersectionResult& r) {
  py::dict out;
  for (const auto& [p, c] : r.coefficients) out[py::int_(p)] = to_fraction(c);
  return out;
}

py::dict field_dict(const CmFieldData& cm) {
  py::dict d;
  d["D"] = cm.D;
  d["delta"] = py::make_tuple(cm.u(), cm.v());
  d["w"] = py::make_tuple(cm.w0, cm.w1);
  d["Dtilde"] = cm.dtilde;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Arithmetic intersection numbers on Hilbert modular surfaces";

  py::register_exception<CmFieldError>(m, "CmFieldError", PyExc_ValueError);

  m.def(
      "validate",
      [](std::int64_t D, std::int64_t u, std::int64_t v, std::int64_t w0, std::int64_t w1) {
        std::vector<std::string> codes;
        for (auto violation : check_cm_field_uv(D, u, v, w0, w1)) codes.push_back(code(violation));
        return codes;
      },
      py::arg("D"), py::arg("u"), py::arg("v"), py::arg("w0"), py::arg("w1"),
      "Violation codes for Delta = (u + v sqrt D)/2 and w = w0 + w1 omega; empty if admissible.");

  m.def(
      "intersect",
      [](std::int64_t D, std::int64_t u, std::int64_t v, std::int64_t w0, std::int64_t w1, unsigned jobs) {
        const auto cm = validate_cm_field_uv(D, u, v, w0, w1);
        py::gil_scoped_release release;
        auto result = intersection_total(cm, jobs);
        py::gil_scoped_acquire acquire;
        return coefficients(result);
      },
      py::arg("D"), py::arg("u"), py::arg("v"), py::arg("w0"), py::arg("w1"), py::arg("jobs") = 1,
      "Map p -> coefficient of log p.");

  m.def(
      "b1_comparison",
      [](std::int64_t D, std::int64_t u, std::int64_t v, std::int64_t w0, std::int64_t w1) {
        py::list rows;
        for (const auto& row : b1_comparison(validate_cm_field_uv(D, u, v, w0, w1))) {
          py::dict d;
          d["p"] = row.p;
          d["coefficient"] = to_fraction(row.coefficient);
          d["b1"] = to_fraction(row.b1);
          d["ok"] = row.ok;
          rows.append(d);
        }
        return rows;
      },
      py::arg("D"), py::arg("u"), py::arg("v"), py::arg("w0"), py::arg("w1"));

  m.def(
      "gz_total", [](std::int64_t d1, std::int64_t d2) { return coefficients(gz_total(GzParams::make(d1, d2))); },
      py::arg("d1"), py::arg("d2"), "Closed-formula coefficients for a pair of imaginary quadratic discriminants.");

  m.def(
      "singular_moduli_log",
      [](std::int64_t d1, std::int64_t d2, int digits) {
        return singular_moduli_log(GzParams::make(d1, d2), digits).to_string(digits);
      },
      py::arg("d1"), py::arg("d2"), py::arg("digits") = 60,
      "log|J(d1, d2)| from j at the Heegner points, as a decimal string.");

  m.def(
      "enumerate_fields",
      [](std::int64_t D, std::int64_t bound) {
        py::list out;
        for (const auto& cm : enumerate_fields(D, bound)) out.append(field_dict(cm));
        return out;
      },
      py::arg("D"), py::arg("bound"));
}
