#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mgnet/io.hpp"

namespace py = pybind11;
using namespace mgnet;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.num(), r.den());
}

Rational to_rational(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return Rational::parse(h.cast<std::string>());
  if (py::isinstance<py::int_>(h)) return Rational(h.cast<int64_t>());
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator"))
    return Rational(h.attr("numerator").cast<int64_t>(), h.attr("denominator").cast<int64_t>());
  throw py::type_error("expected int, Fraction or 'p/q' string");
}

py::object to_py(const json& j) {
  if (j.is_object()) {
    if (j.size() == 2 && j.contains("num") && j.contains("den"))
      return fraction(Rational(j["num"].get<int64_t>(), j["den"].get<int64_t>()));
    py::dict d;
    for (auto it = j.begin(); it != j.end(); ++it) d[py::str(it.key())] = to_py(it.value());
    return std::move(d);
  }
  if (j.is_array()) {
    py::list l;
    for (const auto& x : j) l.append(to_py(x));
    return std::move(l);
  }
  if (j.is_string()) return py::str(j.get<std::string>());
  if (j.is_boolean()) return py::bool_(j.get<bool>());
  if (j.is_number_integer()) return py::int_(j.get<int64_t>());
  if (j.is_number_float()) return py::float_(j.get<double>());
  return py::none();
}

py::list points(const std::vector<MgPoint>& pts) {
  py::list out;
  for (const auto& p : pts) out.append(py::make_tuple(fraction(p.s_f), fraction(p.s_s)));
  return out;
}

Network instance(Model model, Scheme scheme, int D, int L, int size, int M, int N) {
  if (model == Model::Wyner) return build_wyner(size > 0 ? size : 2 * (D + 2), L);
  int64_t tau = scheme == Scheme::NoCoop ? std::max(1, D / 2) : scheme_tau(model, scheme, D);
  Torus t = make_torus(tau, M, N);
  return model == Model::Hex ? build_hex_torus(t, L) : build_sectored_torus(t, L);
}

}  // namespace

PYBIND11_MODULE(_mgnet, m) {
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  m.def("closed_form", [](const std::string& model, const std::string& scheme, int D, int L) {
    return to_py(to_json(closed_form(parse_model(model), parse_scheme(scheme), D, L)));
  }, py::arg("model"), py::arg("scheme"), py::arg("D"), py::arg("L") = 1);

  m.def("model_constants", [](const std::string& model, int D, int L) {
    return to_py(to_json(model_constants(parse_model(model), D, L)));
  }, py::arg("model"), py::arg("D"), py::arg("L") = 1);

  m.def("region", [](const std::string& model, int D, int L, const py::object& mu_tx, const py::object& mu_rx) {
    return points(achievable_region(parse_model(model), D, L, to_rational(mu_tx), to_rational(mu_rx)).vertices);
  }, py::arg("model"), py::arg("D"), py::arg("L"), py::arg("mu_tx"), py::arg("mu_rx"));

  m.def("region_cases", [](const std::string& model, int D, int L, const py::object& mu_tx, const py::object& mu_rx) {
    return region_cases(parse_model(model), D, L, to_rational(mu_tx), to_rational(mu_rx));
  }, py::arg("model"), py::arg("D"), py::arg("L"), py::arg("mu_tx"), py::arg("mu_rx"));

  m.def("loads", [](const std::string& model, const std::string& scheme, int D, int L, int K, int M, int N) {
    Model md = parse_model(model);
    Scheme sc = parse_scheme(scheme);
    check_scheme(md, sc, D);
    Network net = instance(md, sc, D, L, K, M, N);
    Association as = assign(net, D, sc);
    Validation v = validate(net, as);
    LoadReport rep = message_ledger(net, as, v.subnets);
    auto [mt, mr] = per_subnet_prelogs(rep, net);
    py::dict d = to_py(to_json(rep));
    d["valid"] = v.report.ok();
    d["per_subnet_mu_tx"] = fraction(mt);
    d["per_subnet_mu_rx"] = fraction(mr);
    return d;
  }, py::arg("model"), py::arg("scheme"), py::arg("D"), py::arg("L") = 1, py::arg("K") = 0, py::arg("M") = 2,
     py::arg("N") = 2);

  m.def("validate", [](const std::string& model, const std::string& scheme, int D, int K, int M, int N) {
    Model md = parse_model(model);
    Scheme sc = parse_scheme(scheme);
    check_scheme(md, sc, D);
    Network net = instance(md, sc, D, 1, K, M, N);
    return to_py(to_json(validate(net, assign(net, D, sc)).report));
  }, py::arg("model"), py::arg("scheme"), py::arg("D"), py::arg("K") = 0, py::arg("M") = 2, py::arg("N") = 2);

  m.def("figure_ids", &figure_ids);
  m.def("figure", [](const std::string& id) { return to_py(to_json(make_figure(id))); }, py::arg("id"));
  m.def("figure_csv", [](const std::string& id) { return figure_csv(make_figure(id)); }, py::arg("id"));
}
