#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sgd/balance.hpp"
#include "sgd/export.hpp"
#include "sgd/matrices.hpp"
#include "sgd/spectra.hpp"
#include "sgd/verify.hpp"

namespace py = pybind11;
using namespace sgd;

namespace {

py::array_t<double> to_numpy(const SquareMatrix& m) {
  const auto n = static_cast<py::ssize_t>(m.order());
  py::array_t<double> out({n, n});
  auto r = out.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < n; ++i)
    for (py::ssize_t j = 0; j < n; ++j) r(i, j) = m(static_cast<int>(i), static_cast<int>(j));
  return out;
}

py::array_t<double> to_numpy(const IncidenceMatrix& h) {
  py::array_t<double> out({static_cast<py::ssize_t>(h.rows()), static_cast<py::ssize_t>(h.cols())});
  auto r = out.mutable_unchecked<2>();
  for (int i = 0; i < h.rows(); ++i)
    for (int j = 0; j < h.cols(); ++j) r(i, j) = h(i, j);
  return out;
}

SquareMatrix from_numpy(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw InvalidArgument("expected a square 2-d array");
  const int n = static_cast<int>(a.shape(0));
  SquareMatrix m(n);
  auto r = a.unchecked<2>();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = r(i, j);
  return m;
}

py::int_ to_python(const BigInt& x) { return py::int_(py::str(x.str())); }

DistanceKind distance_kind(const std::string& k) {
  if (k == "max") return DistanceKind::max;
  if (k == "min") return DistanceKind::min;
  if (k == "pm") return DistanceKind::pm;
  throw InvalidArgument("kind must be 'max', 'min' or 'pm', got '" + k + "'");
}

Sign parse_sign(const py::handle& h) {
  if (py::isinstance<py::str>(h)) {
    const auto s = h.cast<std::string>();
    if (s == "+") return Sign::positive;
    if (s == "-") return Sign::negative;
  } else {
    const int v = h.cast<int>();
    if (v == 1) return Sign::positive;
    if (v == -1) return Sign::negative;
  }
  throw InvalidArgument("edge sign must be '+', '-', 1 or -1");
}

WeightedSignedGraph make_graph(int n, const py::iterable& edges) {
  std::vector<Edge> es;
  std::vector<double> ws;
  for (const py::handle& item : edges) {
    const auto t = item.cast<py::tuple>();
    if (t.size() != 3 && t.size() != 4) throw InvalidArgument("edges are (u, v, sign) or (u, v, sign, weight)");
    es.push_back({t[0].cast<int>(), t[1].cast<int>(), parse_sign(t[2])});
    ws.push_back(t.size() == 4 ? t[3].cast<double>() : 1.0);
  }
  return WeightedSignedGraph(SignedGraph(n, std::move(es)), std::move(ws));
}

py::object json_to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

BalanceReport decide(const SignedGraph& g, const std::string& method) {
  if (method == "switching") return is_balanced_switching(g);
  if (method == "det-max") return is_balanced_det(g, DetKind::max);
  if (method == "det-min") return is_balanced_det(g, DetKind::min);
  if (method == "det-pm") return is_balanced_det(g, DetKind::pm);
  if (method == "all") return is_balanced_det(g, DetKind::all);
  if (method == "forest") return is_balanced_forest(g, DistanceKind::max);
  throw InvalidArgument("unknown method '" + method + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Signed distance matrices, balance deciders and spectra for signed graphs";

  // Translators are tried newest first, so the base class goes in first.
  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<GraphError>(m, "GraphError", base);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base);
  py::register_exception<DisconnectedError>(m, "DisconnectedError", base);
  py::register_exception<IncompatibleError>(m, "IncompatibleError", base);

  py::class_<WeightedSignedGraph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"),
           "0-based edges as (u, v, sign) or (u, v, sign, weight); sign is '+', '-', 1 or -1")
      .def_property_readonly("order", &WeightedSignedGraph::order)
      .def_property_readonly("size", &WeightedSignedGraph::size)
      .def_property_readonly("weights", &WeightedSignedGraph::weights)
      .def_property_readonly("edges",
                             [](const WeightedSignedGraph& g) {
                               py::list out;
                               for (const Edge& e : g.base().edges()) out.append(py::make_tuple(e.u, e.v, to_int(e.sign)));
                               return out;
                             })
      .def("is_connected", [](const WeightedSignedGraph& g) { return is_connected(g.base()); })
      .def("switch", [](const WeightedSignedGraph& g, const std::vector<int>& zeta) {
        SwitchingFunction z;
        for (int s : zeta) z.zeta.push_back(s < 0 ? Sign::negative : Sign::positive);
        return switch_signs(g, z);
      }, py::arg("zeta"))
      .def("__eq__", [](const WeightedSignedGraph& a, const WeightedSignedGraph& b) { return a == b; })
      .def("__repr__", [](const WeightedSignedGraph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  m.def("parse_edge_list", py::overload_cast<std::string_view>(&parse_edge_list), py::arg("text"));
  m.def("read_edge_list", &read_edge_list_file, py::arg("path"));
  m.def("serialize_edge_list", &serialize_edge_list, py::arg("g"));

  m.def("generate", [](const std::string& kind, int n, const py::object& signs, std::uint64_t seed, double density) {
    GraphKind gk;
    if (kind == "cycle") gk = GraphKind::cycle;
    else if (kind == "path") gk = GraphKind::path;
    else if (kind == "complete") gk = GraphKind::complete;
    else if (kind == "random") gk = GraphKind::random;
    else throw InvalidArgument("unknown generator '" + kind + "'");
    SignSpec spec = AllPositive{};
    if (py::isinstance<py::str>(signs)) {
      const auto s = signs.cast<std::string>();
      if (s == "allneg") spec = AllNegative{};
      else if (s != "allpos") throw InvalidArgument("signs must be 'allpos', 'allneg' or a probability");
    } else {
      spec = NegativeProbability{signs.cast<double>()};
    }
    GeneratorOptions o;
    o.edge_probability = density;
    return WeightedSignedGraph(generate(gk, n, spec, seed, o));
  }, py::arg("kind"), py::arg("n"), py::arg("signs") = "allpos", py::arg("seed") = 1, py::arg("density") = 0.5);

  m.def("distance_matrix", [](const WeightedSignedGraph& g, const std::string& kind) {
    return to_numpy(distance_matrix(distance_table(g.base()), distance_kind(kind)));
  }, py::arg("g"), py::arg("kind") = "max");
  m.def("distance_laplacian", [](const WeightedSignedGraph& g, const std::string& kind) {
    return to_numpy(distance_laplacian(g.base(), distance_kind(kind)));
  }, py::arg("g"), py::arg("kind") = "max");
  m.def("hop_distances", [](const WeightedSignedGraph& g) {
    const DistanceTable t = distance_table(g.base());
    SquareMatrix d(t.order());
    for (int i = 0; i < t.order(); ++i)
      for (int j = 0; j < t.order(); ++j) d(i, j) = t.at(i, j).d;
    return to_numpy(d);
  }, py::arg("g"));
  m.def("is_compatible", [](const WeightedSignedGraph& g) {
    const auto c = is_compatible(distance_table(g.base()));
    return py::make_tuple(c.compatible, c.witness ? py::cast(*c.witness) : py::none());
  }, py::arg("g"), "(compatible, witness pair or None)");
  m.def("transmission", [](const WeightedSignedGraph& g) { return transmission(distance_table(g.base())); },
        py::arg("g"));
  m.def("associated_complete", [](const WeightedSignedGraph& g, const std::string& kind) {
    return associated_complete(g.base(), distance_table(g.base()), distance_kind(kind));
  }, py::arg("g"), py::arg("kind") = "max");

  m.def("adjacency_matrix", [](const WeightedSignedGraph& g) { return to_numpy(adjacency_matrix(g)); }, py::arg("g"));
  m.def("laplacian", [](const WeightedSignedGraph& g) { return to_numpy(weighted_laplacian(g)); }, py::arg("g"));
  m.def("incidence_matrix", [](const WeightedSignedGraph& g) {
    return to_numpy(incidence_matrix(g, Orientation::canonical(g.base())));
  }, py::arg("g"), "Canonical orientation: the tail is the lower-numbered endpoint");

  m.def("det_exact", [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    return to_python(det_exact(from_numpy(a)));
  }, py::arg("m"));
  m.def("forest_det", [](const WeightedSignedGraph& g) -> py::object {
    const auto fd = forest_det(g);
    if (fd.exact) return to_python(*fd.exact);
    return py::float_(fd.value);
  }, py::arg("g"), "Sum of 4^c times the weight over contrabalanced spanning 1-forests");
  m.def("closed_form_det", [](const WeightedSignedGraph& g) -> py::object {
    const auto cf = closed_form_det(g);
    if (!cf) return py::none();
    if (cf->exact) return to_python(*cf->exact);
    return py::float_(cf->value);
  }, py::arg("g"), "None unless the graph is a tree, a cycle, unicyclic or a 1-forest");
  m.def("count_1forests", [](const WeightedSignedGraph& g, bool contrabalanced_only) {
    return enumerate_spanning_1forests(g, contrabalanced_only).size();
  }, py::arg("g"), py::arg("contrabalanced_only") = false);

  m.def("is_balanced", [](const WeightedSignedGraph& g, const std::string& method) {
    return json_to_python(to_json(decide(g.base(), method)));
  }, py::arg("g"), py::arg("method") = "switching",
     "Report dict with keys balanced, method, determinant and certificate");

  m.def("eigenvalues", [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    return sym_eig(from_numpy(a)).eigenvalues;
  }, py::arg("m"));
  m.def("cospectral", [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a,
                         const py::array_t<double, py::array::c_style | py::array::forcecast>& b, double tol) {
    return cospectral(from_numpy(a), from_numpy(b), tol);
  }, py::arg("a"), py::arg("b"), py::arg("tol") = 1e-8);
  m.def("transmission_shift", [](const WeightedSignedGraph& g, const std::string& kind) {
    const auto r = transmission_regular_shift_check(g.base(), distance_kind(kind));
    py::dict d;
    d["transmission_regular"] = r.is_transmission_regular;
    d["t"] = r.t;
    d["max_deviation"] = r.max_deviation;
    return d;
  }, py::arg("g"), py::arg("kind") = "max");
  m.def("odd_cycle_report", [](const std::vector<int>& ks) {
    py::list rows;
    for (const auto& r : formula_vs_eigensolver_report(ks)) {
      py::dict d;
      d["k"] = r.k;
      d["n"] = r.n;
      d["numeric"] = r.numeric.eigenvalues;
      d["formula"] = r.formula.eigenvalues;
      d["max_deviation"] = r.max_deviation;
      d["simple_value_present"] = r.simple_value_present;
      rows.append(d);
    }
    return rows;
  }, py::arg("ks"));

  m.def("verify", [](const std::string& suite, int size_bound, std::uint64_t seed, int instances) {
    VerifyOptions o;
    o.size_bound = size_bound;
    o.seed = seed;
    o.instances = instances;
    const SuiteResult r = run_suite(parse_suite(suite), o);
    py::dict d;
    d["passed"] = r.passed;
    d["instances"] = r.instances;
    d["max_deviation"] = r.max_deviation;
    d["min_eigenvalue"] = r.min_eigenvalue;
    d["summary"] = r.summary();
    d["failures"] = r.failures;
    return d;
  }, py::arg("suite"), py::arg("size_bound") = 6, py::arg("seed") = 1, py::arg("instances") = 0);
}
