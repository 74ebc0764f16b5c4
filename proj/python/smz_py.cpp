// Python bindings. Tableaux cross the boundary as JSON text, exact values as "p/q".
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "smz/identities.hpp"
#include "smz/io.hpp"
#include "smz/qsym.hpp"
#include "smz/specials.hpp"
#include "smz/words.hpp"
#include "smz/zeta.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

smz::Tableau<int> tableau(const std::string& text) { return smz::tableau_from_json(json::parse(text)); }

smz::ZetaCombination combination(const std::string& text) {
  json j = json::parse(text);
  smz::ZetaCombination out;
  if (j.is_object() && j.contains("terms")) {
    for (const auto& t : j["terms"]) out.emplace_back(t.value("coeff", 1L), smz::tableau_from_json(t["tableau"]));
  } else {
    out.emplace_back(1, smz::tableau_from_json(j));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_smz, m) {
  m.doc() = "Schur multiple zeta values";

  m.def("smzv_exact", [](const std::string& t, long N) { return smz::to_string(smz::smzv_trunc<smz::Rational>(tableau(t), N)); });
  m.def("smzv_float", [](const std::string& t, long N) {
    auto tab = tableau(t);
    smz::Real v = tab.shape().is_ribbon() ? smz::smzv_trunc_ribbon<smz::Real>(tab, N) : smz::smzv_trunc<smz::Real>(tab, N);
    return static_cast<double>(v);
  });
  m.def("constant", [](const std::vector<int>& parts, int two_k) {
    smz::PiPower p = smz::smzv_constant_exact(smz::Partition(parts), two_k);
    return py::make_tuple(smz::to_string(p.coeff), p.power);
  });
  m.def("antipode", [](const std::string& expr) { return smz::antipode(smz::parse_qsym(expr)).str(); });
  m.def("dual", [](const std::string& t) -> py::object {
    auto tab = tableau(t);
    auto d = smz::dual_ribbon(smz::ribbon_spec(tab.shape()), tab);
    if (!d) return py::none();
    return py::str(smz::tableau_to_json(d->tableau).dump());
  });
  m.def("jacobi_trudi", [](const std::vector<int>& shape, const std::map<int, int>& diag, long N, const std::string& kind) {
    auto k = kind == "E" ? smz::RimKind::E : smz::RimKind::H;
    return smz::jacobi_trudi(smz::SkewShape(smz::Partition(shape)), diag, N, k).to_json().dump();
  });
  m.def("check_duality", [](const std::string& a, const std::string& b, double tol, long n_cap) {
    py::gil_scoped_release release;
    return smz::check_duality_numeric(combination(a), combination(b), tol, n_cap).to_json().dump();
  });

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::invalid_argument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const std::out_of_range& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });
}
