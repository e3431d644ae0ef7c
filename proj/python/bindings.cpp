#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "udeform/analysis.hpp"
#include "udeform/errors.hpp"
#include "udeform/qdeform.hpp"

namespace py = pybind11;
using namespace udeform;

namespace {

py::object to_py(const BigInt& n) { return py::module_::import("builtins").attr("int")(to_string(n)); }

py::object to_py(const Rational& x) { return py::module_::import("fractions").attr("Fraction")(to_string(x)); }

py::list to_py(const RingPoly& f) {
  py::list out;
  for (const auto& c : f.coeffs()) out.append(to_py(c));
  return out;
}

py::list to_py(const TruncatedSeries& s) {
  py::list out;
  for (const auto& c : s.coeffs()) out.append(to_py(c));
  return out;
}

py::list to_py(const std::vector<BigInt>& terms) {
  py::list out;
  for (const auto& t : terms) out.append(to_py(t));
  return out;
}

py::tuple to_py(const RationalFunction& f) { return py::make_tuple(to_py(f.num()), to_py(f.den())); }

Rational rational_arg(const py::handle& x) { return parse_rational(py::str(x).cast<std::string>()); }

RingPoly entry(const py::handle& h) {
  const auto text = py::str(h).cast<std::string>();
  if (text == "p") return RingPoly::variable();
  return RingPoly::constant(parse_bigint(text));
}

PolyParams params_arg(const py::sequence& u) {
  if (py::len(u) != 4) throw ParseError("U needs four entries (p, q, r, s)");
  return PolyParams::make(entry(u[0]), entry(u[1]), entry(u[2]), entry(u[3]));
}

StreamingCF constant(const std::string& name) {
  if (name == "e") return StreamingCF::e();
  if (name == "pi") return StreamingCF::pi();
  if (name == "golden") return StreamingCF::golden();
  throw ParseError("unknown constant '" + name + "'");
}

PropertyReport run_check(const std::string& property, const PolyParams& u, std::size_t max_ell, std::size_t order,
                         unsigned jobs) {
  if (property == "defining-equations") return sweep_defining_equations(u, max_ell, jobs);
  if (property == "oracle-equivalence") return sweep_oracle_equivalence(u, max_ell, jobs);
  if (property == "integrality") return sweep_integrality(u, max_ell, order, jobs);
  if (property == "unimodality") return sweep_unimodality(u, max_ell, jobs);
  if (property == "anti-unimodality") return sweep_anti_unimodality(u, max_ell, 0, jobs);
  if (property == "alternation") return sweep_alternation(u, max_ell, order, 0, jobs);
  if (property == "stabilization") return sweep_stabilization(u, max_ell, false, jobs);
  if (property == "stabilization-sharp") return sweep_stabilization(u, max_ell, true, jobs);
  if (property == "involution") return sweep_involution(max_ell, jobs);
  throw ParseError("unknown property '" + property + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact U-deformations and q-deformations of rationals";

  static py::exception<DegenerateMatrixError> degenerate(m, "DegenerateMatrixError", PyExc_ValueError);
  static py::exception<StabilizationError> unstable(m, "StabilizationError", PyExc_ArithmeticError);
  static py::exception<TermsExhaustedError> exhausted(m, "TermsExhaustedError", PyExc_LookupError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DegenerateMatrixError& e) {
      degenerate(e.what());
    } catch (const StabilizationError& e) {
      unstable(e.what());
    } catch (const TermsExhaustedError& e) {
      exhausted(e.what());
    } catch (const udeform::ZeroDivisionError& e) {
      PyErr_SetString(PyExc_ZeroDivisionError, e.what());
    } catch (const DomainError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("cf_expand", [](const py::object& x) { return to_py(cf_expand(rational_arg(x)).terms()); }, py::arg("x"));
  m.def("ell", [](const py::object& x) { return to_py(BigInt(ell(rational_arg(x)))); }, py::arg("x"));
  m.def("j_quotient", [](const py::object& x) { return to_py(j_quotient(rational_arg(x))); }, py::arg("x"));
  m.def("codenominator", [](const py::object& x) { return to_py(codenominator(rational_arg(x))); }, py::arg("x"));

  m.def(
      "f_pair",
      [](const py::sequence& u, const py::object& x) {
        const auto v = f_pair(params_arg(u), rational_arg(x));
        return py::make_tuple(to_py(v.fx), to_py(v.finv));
      },
      py::arg("u"), py::arg("x"), "Ascending coefficients of f_U(x) and f_U(1/x).");
  m.def(
      "quantize", [](const py::sequence& u, const py::object& x) { return to_py(quantize(params_arg(u), rational_arg(x))); },
      py::arg("u"), py::arg("x"), "Reduced (numerator, denominator) of [x]_U.");
  m.def(
      "series",
      [](const py::sequence& u, const py::object& x, std::size_t order) {
        return to_py(deformed_series(params_arg(u), rational_arg(x), order));
      },
      py::arg("u"), py::arg("x"), py::arg("order"));
  m.def(
      "constant_series",
      [](const std::string& name, std::size_t order, const py::sequence& u) {
        auto src = constant(name);
        const auto r = irrational_series(src, params_arg(u), order);
        return py::make_tuple(to_py(r.series), r.proved);
      },
      py::arg("name"), py::arg("order"), py::arg("u") = py::make_tuple("p", 1, 1, 0),
      "Stabilized series of e, pi or golden and whether stabilization is proved for U.");

  m.def(
      "q_deform", [](const py::object& x) { return to_py(q_deform(cf_expand(rational_arg(x))).value); }, py::arg("x"));
  m.def(
      "q_series", [](const py::object& x, std::size_t order) { return to_py(q_deform_series(cf_expand(rational_arg(x)), order)); },
      py::arg("x"), py::arg("order"));
  m.def(
      "q_constant_series",
      [](const std::string& name, std::size_t order) {
        auto src = constant(name);
        return to_py(q_deform_series(src, order).series);
      },
      py::arg("name"), py::arg("order"));

  m.def(
      "check",
      [](const std::string& property, const py::sequence& u, std::size_t max_ell, std::size_t order, unsigned jobs) {
        return to_json(run_check(property, params_arg(u), max_ell, order, jobs));
      },
      py::arg("property"), py::arg("u") = py::make_tuple("p", 1, 1, 0), py::arg("max_ell") = 10, py::arg("order") = 10,
      py::arg("jobs") = 1, "PropertyReport as a JSON string.");
}
