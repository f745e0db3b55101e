#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "treeub/graph_core.hpp"
#include "treeub/relaxation.hpp"
#include "treeub/search.hpp"
#include "treeub/subdivided_star.hpp"

namespace py = pybind11;
using namespace treeub;

namespace {

std::vector<double> values(const BranchFractions& x) {
  return {x.values().begin(), x.values().end()};
}

}  // namespace

PYBIND11_MODULE(_treeub, m) {
  m.doc() = "distance-unbalancedness of trees and subdivided stars";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_ArithmeticError);

  py::class_<LabeledTree>(m, "LabeledTree")
      .def(py::init<int, std::vector<Edge>>(), py::arg("order"), py::arg("edges"))
      .def_property_readonly("order", &LabeledTree::order)
      .def_property_readonly("edges",
                             [](const LabeledTree& t) {
                               return std::vector<Edge>(t.edges().begin(), t.edges().end());
                             })
      .def("neighbors",
           [](const LabeledTree& t, Vertex v) {
             if (v < 0 || v >= t.order()) throw py::index_error("vertex out of range");
             return std::vector<Vertex>(t.neighbors(v).begin(), t.neighbors(v).end());
           })
      .def("degree",
           [](const LabeledTree& t, Vertex v) {
             if (v < 0 || v >= t.order()) throw py::index_error("vertex out of range");
             return t.degree(v);
           })
      .def_static("parse", [](const std::string& text) { return parse_tree(text); })
      .def("dumps",
           [](const LabeledTree& t) {
             std::ostringstream out;
             write_tree(out, t);
             return out.str();
           })
      .def("__repr__", [](const LabeledTree& t) {
        return "<LabeledTree order=" + std::to_string(t.order()) + ">";
      });

  m.def("distances", [](const LabeledTree& t) {
    const auto d = all_pairs_distances(t);
    std::vector<std::vector<int>> out(t.order());
    for (int u = 0; u < t.order(); ++u) out[u].assign(d.row(u).begin(), d.row(u).end());
    return out;
  });
  m.def("ub", py::overload_cast<const LabeledTree&>(&ub_oracle), py::arg("tree"));
  m.def("mostar_index", py::overload_cast<const LabeledTree&>(&mostar_index), py::arg("tree"));
  m.def("ub_upper_bound", [](std::int64_t n) { return ub_upper_bound(n); });
  m.def("isomorphic", &isomorphic);
  m.def("canonical_certificate", &canonical_certificate);

  py::class_<StarSignature>(m, "StarSignature")
      .def(py::init<std::vector<int>>(), py::arg("parts"))
      .def_static("parse", &StarSignature::parse)
      .def_property_readonly("parts", &StarSignature::parts)
      .def_property_readonly("order", &StarSignature::order)
      .def_property_readonly("branches", &StarSignature::branches)
      .def("__str__", &StarSignature::to_string)
      .def("__repr__", [](const StarSignature& s) { return "StarSignature" + s.to_tuple(); })
      .def("__eq__", [](const StarSignature& a, const StarSignature& b) { return a == b; })
      .def("__lt__", [](const StarSignature& a, const StarSignature& b) { return a < b; })
      .def("__hash__", [](const StarSignature& s) { return std::hash<StarSignature>{}(s); });

  py::class_<UbBreakdown>(m, "UbBreakdown")
      .def_readonly("ub1", &UbBreakdown::ub1)
      .def_readonly("ub2", &UbBreakdown::ub2)
      .def_readonly("ub3", &UbBreakdown::ub3)
      .def_readonly("ub4", &UbBreakdown::ub4)
      .def_readonly("total", &UbBreakdown::total);

  m.def("build_tree", &build_tree);
  m.def("ub_closed_form", [](const StarSignature& s) { return ub_closed_form_fast(s); });
  m.def("star_signature_of", &star_signature_of);

  py::class_<MaximizerRecord>(m, "MaximizerRecord")
      .def_readonly("order", &MaximizerRecord::order)
      .def_readonly("max_ub", &MaximizerRecord::max_ub)
      .def_readonly("witnesses", &MaximizerRecord::witnesses);
  m.def("partition_count", &partition_count);
  m.def("enumerate_signatures", &enumerate_signatures);
  m.def(
      "max_ub_subdivided_stars",
      [](int n, unsigned threads) {
        py::gil_scoped_release release;
        return max_ub_subdivided_stars(n, {threads});
      },
      py::arg("n"), py::arg("threads") = 0);

  py::class_<AllTreesRecord>(m, "AllTreesRecord")
      .def_readonly("order", &AllTreesRecord::order)
      .def_readonly("max_ub", &AllTreesRecord::max_ub)
      .def_readonly("witnesses", &AllTreesRecord::witnesses);
  m.def("enumerate_free_trees", [](int n) { return enumerate_free_trees(n); });
  m.def("max_ub_all_trees", &max_ub_all_trees, py::call_guard<py::gil_scoped_release>());
  m.def("verify_dominance", &verify_dominance, py::call_guard<py::gil_scoped_release>());

  m.def("f_closed", [](std::vector<double> x) { return f_closed(BranchFractions(std::move(x))); });
  m.def(
      "f_quadrature",
      [](std::vector<double> x, double tol) { return f_quadrature(BranchFractions(std::move(x)), tol); },
      py::arg("x"), py::arg("tol") = 1e-9);
  m.def("f_uniform", &f_uniform);
  m.def("f2", &f2, py::arg("x1"), py::arg("y"), py::arg("k"));
  m.def("f3", &f3, py::arg("x1"), py::arg("k"));
  m.def("f3_stationary_points", &f3_stationary_points);

  m.def(
      "maximize_f",
      [](int k, int restarts, std::uint64_t seed, unsigned threads) {
        MaximizeConfig config;
        config.restarts = restarts;
        config.seed = seed;
        config.threads = threads;
        MaximizeResult r = [&] {
          py::gil_scoped_release release;
          return maximize_f(k, config);
        }();
        py::dict out;
        out["x"] = values(r.x);
        out["value"] = r.value;
        out["converged"] = r.converged;
        out["stationarity"] = r.stationarity;
        return out;
      },
      py::arg("k"), py::arg("restarts") = 32, py::arg("seed") = 0x5eed, py::arg("threads") = 1);

  m.def("lemma1_gap", [](const StarSignature& s) {
    const auto g = lemma1_gap(s);
    return py::make_tuple(g.gap, g.bound);
  });
}
