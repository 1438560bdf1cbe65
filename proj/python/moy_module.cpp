#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "moy/checks.hpp"
#include "moy/cycles.hpp"
#include "moy/diagram.hpp"
#include "moy/genseries.hpp"
#include "moy/homfly.hpp"
#include "moy/io.hpp"
#include "moy/statesum.hpp"

namespace py = pybind11;
using namespace moy;

namespace {

py::int_ big(const Integer& c) { return py::int_(py::str(c.str())); }

py::object from_json(const Json& j) {
  switch (j.type()) {
    case Json::value_t::object: {
      py::dict d;
      for (const auto& [k, v] : j.items()) d[py::str(k)] = from_json(v);
      return std::move(d);
    }
    case Json::value_t::array: {
      py::list l;
      for (const Json& v : j) l.append(from_json(v));
      return std::move(l);
    }
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    default:
      return py::none();
  }
}

// {v-exponent: coefficient}, v = q^{1/4}
py::dict laurent(const QLaurent& p) {
  py::dict d;
  for (const auto& [e, c] : p.terms()) d[py::int_(e)] = big(c);
  return d;
}

// {(b-exponent, v-exponent): coefficient}, b = a^{1/4}
py::dict rseries(const TruncatedRSeries& p) {
  py::dict d;
  for (const auto& [k, c] : p.terms()) d[py::make_tuple(k.first, k.second)] = big(c);
  return d;
}

template <class Value, class F>
py::dict table(const std::map<Coloring, Value>& t, F&& convert) {
  py::dict d;
  for (const Coloring& g : display_order(t)) d[py::str(format_coloring(g))] = convert(t.at(g));
  return d;
}

py::tuple suite(const SuiteReport& r) {
  py::list lines;
  for (const CheckLine& l : r.lines) lines.append(py::make_tuple(l.name, l.ok, l.detail));
  return py::make_tuple(r.ok(), lines);
}

}  // namespace

PYBIND11_MODULE(moy, m) {
  m.doc() = "Exact MOY graph evaluations and HOMFLY generating series";

  py::register_exception<DiagramError>(m, "DiagramError", PyExc_ValueError);

  py::class_<PlanarDiagram>(m, "Diagram")
      .def_static("parse", [](const std::string& text) { return parse_diagram(text); })
      .def_static("builtin", [](const std::string& name) { return builtin(name); })
      .def("serialize", [](const PlanarDiagram& d) { return serialize_diagram(d); })
      .def_property_readonly("edge_ids",
                             [](const PlanarDiagram& d) {
                               std::vector<int> ids;
                               for (const Edge& e : d.edges()) ids.push_back(e.id);
                               return ids;
                             })
      .def_property_readonly("circle_ids",
                             [](const PlanarDiagram& d) {
                               std::vector<int> ids;
                               for (const Circle& c : d.circles()) ids.push_back(c.id);
                               return ids;
                             })
      .def("__eq__", [](const PlanarDiagram& a, const PlanarDiagram& b) { return a == b; });

  m.def("builtin_names", &builtin_names);
  m.def("cycles", [](const PlanarDiagram& d) { return from_json(cycles_to_json(all_cycles(d))); },
        "Cycle report: cycles with edges, circles, components, rot, and the pairing in half-units.");
  m.def(
      "evaluate",
      [](const PlanarDiagram& d, const std::string& coloring, int n) {
        return laurent(moy_eval(d, parse_coloring(d, coloring), n));
      },
      py::arg("diagram"), py::arg("coloring"), py::arg("n"),
      "State-sum evaluation as {v-exponent: coefficient} with v = q^(1/4).");
  m.def(
      "evaluate_text",
      [](const PlanarDiagram& d, const std::string& coloring, int n) {
        return to_string(moy_eval(d, parse_coloring(d, coloring), n));
      },
      py::arg("diagram"), py::arg("coloring"), py::arg("n"));
  m.def(
      "table", [](const PlanarDiagram& d, int n) { return table(eval_table(d, n), laurent); }, py::arg("diagram"),
      py::arg("n"));
  m.def(
      "series", [](const PlanarDiagram& d, int n) { return table(generating_series_n(d, n), laurent); },
      py::arg("diagram"), py::arg("n"));
  m.def(
      "classical", [](const PlanarDiagram& d, int n) { return table(classical_series(d, n), big); },
      py::arg("diagram"), py::arg("n"));
  m.def(
      "homfly",
      [](const PlanarDiagram& d, int max_degree, int q_order) {
        const DiagramAlgebras alg(d);
        return table(homfly_series(alg, max_degree, q_order).table, rseries);
      },
      py::arg("diagram"), py::arg("max_x_degree"), py::arg("q_order"),
      "Truncated HOMFLY series as {coloring: {(b, v): coefficient}} with b = a^(1/4), v = q^(1/4).");
  m.def(
      "check",
      [](const PlanarDiagram& d, const std::string& name, int n, int max_degree, int q_order) {
        if (name == "thm1") return suite(check_classical_series(d, n));
        if (name == "thm2") return suite(check_pochhammer_series(d, n));
        if (name == "thm3") return suite(check_homfly_identities(d, max_degree, q_order, n));
        if (name == "weights") return suite(check_weights(d, n));
        if (name == "mu") return suite(check_mu(d));
        throw std::invalid_argument("unknown suite " + name);
      },
      py::arg("diagram"), py::arg("suite"), py::arg("n") = 1, py::arg("max_x_degree") = 3, py::arg("q_order") = 24,
      "Runs an invariant suite; returns (ok, [(name, ok, detail), ...]).");
}
