#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chromalg/bmw.hpp"
#include "chromalg/chromatic_algebra.hpp"
#include "chromalg/errors.hpp"
#include "chromalg/graph_polynomials.hpp"
#include "chromalg/io.hpp"
#include "chromalg/potts.hpp"
#include "chromalg/temperley_lieb.hpp"

namespace py = pybind11;
using namespace chromalg;

namespace {

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.str());
}

Rational from_python(const py::handle& value) { return Rational::parse(py::str(value).cast<std::string>()); }

Var var_from_name(const std::string& name) {
  if (name.size() != 1) throw std::invalid_argument("variable must be one of A, q, d, Q, x");
  return var_from_symbol(name[0]);
}

std::string var_name(Var v) { return std::string(1, var_symbol(v)); }

Multigraph make_multigraph(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
  Multigraph g;
  g.num_vertices = num_vertices;
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= num_vertices || b >= num_vertices) throw std::invalid_argument("edge endpoint out of range");
  }
  g.edges = edges;
  return g;
}

std::vector<std::pair<std::string, bool>> residual_list(const std::vector<Residual>& rs) {
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& r : rs) out.emplace_back(r.name, r.ok());
  return out;
}

}  // namespace

PYBIND11_MODULE(_chromalg, m) {
  m.doc() = "Exact chromatic, Temperley-Lieb and BMW algebra computations";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<LimitExceeded>(m, "LimitExceeded", PyExc_ValueError);
  py::register_exception<VariableMismatch>(m, "VariableMismatch", PyExc_ValueError);

  py::class_<LaurentPolynomial>(m, "Polynomial")
      .def(py::init([](const std::string& text, std::optional<std::string> var) {
             if (var) return parse_polynomial(text, var_from_name(*var));
             return parse_polynomial(text);
           }),
           py::arg("text"), py::arg("var") = py::none())
      .def_property_readonly("var", [](const LaurentPolynomial& p) { return var_name(p.var()); })
      .def_property_readonly("terms",
                             [](const LaurentPolynomial& p) {
                               py::dict out;
                               for (const auto& [e, c] : p.terms()) out[py::int_(e)] = to_fraction(c);
                               return out;
                             })
      .def("is_zero", &LaurentPolynomial::is_zero)
      .def("coefficient", [](const LaurentPolynomial& p, int e) { return to_fraction(p.coefficient(e)); })
      .def("evaluate", [](const LaurentPolynomial& p, py::object v) { return to_fraction(p.evaluate(from_python(v))); })
      .def("eval_real", &LaurentPolynomial::eval_real)
      .def("substitute", [](const LaurentPolynomial& p, const std::string& v) { return p.substitute(var_from_name(v)); })
      .def("pow", &LaurentPolynomial::pow)
      .def("to_json", &LaurentPolynomial::to_json)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__hash__", [](const LaurentPolynomial& p) { return py::hash(py::str(p.str())); })
      .def("__str__", &LaurentPolynomial::str)
      .def("__repr__", [](const LaurentPolynomial& p) { return "Polynomial('" + p.str() + "', '" + var_name(p.var()) + "')"; });

  py::class_<EmbeddedGraph>(m, "Graph")
      .def_property_readonly("n_bottom", &EmbeddedGraph::n_bottom)
      .def_property_readonly("n_top", &EmbeddedGraph::n_top)
      .def_property_readonly("num_vertices", &EmbeddedGraph::num_vertices)
      .def_property_readonly("num_edges", &EmbeddedGraph::num_edges)
      .def_property_readonly("num_inner_edges", &EmbeddedGraph::num_inner_edges)
      .def_property_readonly("free_loops", &EmbeddedGraph::free_loops)
      .def("is_closed", &EmbeddedGraph::is_closed)
      .def("__eq__", [](const EmbeddedGraph& a, const EmbeddedGraph& b) { return a == b; })
      .def("__str__", &write_graph);
  m.def("parse_graph", &parse_graph, py::arg("text"));
  m.def("read_graph", &read_graph_file, py::arg("path"));
  m.def("write_graph", &write_graph);
  m.def("closure", &closure);
  m.def("dual", &dual);
  m.def("h_graph", &h_graph);
  m.def("i_graph", &i_graph);
  m.def("tadpole_graph", &tadpole_graph);

  m.def(
      "chromatic_polynomial",
      [](int num_vertices, const std::vector<std::pair<int, int>>& edges, const std::string& method) {
        const auto g = make_multigraph(num_vertices, edges);
        if (method == "delcon") return chromatic_delcon(g);
        if (method == "ranksum") return chromatic_ranksum(g);
        throw std::invalid_argument("method must be delcon or ranksum");
      },
      py::arg("num_vertices"), py::arg("edges"), py::arg("method") = "delcon");
  m.def("graph_chromatic", [](const EmbeddedGraph& g) { return chromatic_delcon(to_multigraph(g)); });
  m.def("dual_chromatic", &dual_chromatic);

  py::class_<PlanarPartition>(m, "Partition")
      .def(py::init(&parse_partition), py::arg("text"), py::arg("n"))
      .def_readonly("n", &PlanarPartition::n)
      .def_readonly("blocks", &PlanarPartition::blocks)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const PlanarPartition& p) { return py::hash(py::str(p.str())); })
      .def("__str__", &PlanarPartition::str)
      .def("__repr__", [](const PlanarPartition& p) { return "Partition('" + p.str() + "', " + std::to_string(p.n) + ")"; });
  m.def("enumerate_basis", &enumerate_basis, py::arg("n"));
  m.def("basis_graph", &basis_graph);

  py::class_<ChromaticElement>(m, "ChromaticElement")
      .def_static("basis", [](const PlanarPartition& p) { return ChromaticElement::basis(p); })
      .def_static("identity", [](int n) { return ChromaticElement::identity(n); })
      .def_property_readonly("n", &ChromaticElement::n)
      .def_property_readonly("var", [](const ChromaticElement& a) { return var_name(a.var()); })
      .def_property_readonly("terms",
                             [](const ChromaticElement& a) {
                               std::vector<std::pair<PlanarPartition, LaurentPolynomial>> out(a.terms().begin(),
                                                                                              a.terms().end());
                               return out;
                             })
      .def("coefficient", &ChromaticElement::coefficient)
      .def("is_zero", &ChromaticElement::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * LaurentPolynomial())
      .def(py::self == py::self)
      .def("__mul__", [](const ChromaticElement& a, const ChromaticElement& b) { return multiply(a, b); })
      .def("__str__", &ChromaticElement::str);
  m.def("reduce", [](const EmbeddedGraph& g) { return reduce(g); });
  m.def("psi_expansion", [](const EmbeddedGraph& g) { return psi_expansion(g); });
  m.def("trace", &trace);
  m.def("graph_trace", [](const EmbeddedGraph& g) { return graph_trace(g); });
  m.def("inner_product", &inner_product);
  m.def("read_chromatic_element", &read_chromatic_element_file, py::arg("path"));
  m.def("gram_polynomials", &gram_polynomials, py::arg("n"), py::arg("jobs") = 1);
  m.def("gram_matrix", &gram_matrix, py::arg("n"), py::arg("Q"), py::arg("jobs") = 1);
  m.def("gram_eigenvalues", [](int n, double Q) { return symmetric_eigenvalues(gram_matrix(n, Q)); });

  py::class_<TLElement>(m, "TLElement")
      .def_static("identity", &TLElement::identity)
      .def_property_readonly("m", &TLElement::m)
      .def_property_readonly("terms",
                             [](const TLElement& a) {
                               std::vector<std::pair<std::string, LaurentPolynomial>> out;
                               for (const auto& [t, c] : a.terms()) out.emplace_back(t.str(), c);
                               return out;
                             })
      .def("is_zero", &TLElement::is_zero)
      .def(py::self + py::self)
      .def(py::self * LaurentPolynomial())
      .def(py::self - py::self)
      .def(py::self == py::self)
      .def("__mul__", [](const TLElement& a, const TLElement& b) { return tl_multiply(a, b); })
      .def("__str__", &TLElement::str);
  m.def("generator_e", &generator_e, py::arg("i"), py::arg("m"));
  m.def("phi", [](const EmbeddedGraph& g, int jobs) { return phi(g, jobs); }, py::arg("graph"), py::arg("jobs") = 1);
  m.def("tl_trace", &tl_trace);
  m.def("read_tl_element", &read_tl_element_file, py::arg("path"));
  m.def("phi_rank", [](int n, py::object d) { return phi_rank(n, from_python(d)); }, py::arg("n"), py::arg("d"));
  m.def("transfer_matrix", &transfer_matrix, py::arg("n"));
  m.def("potts_tl_partition", &potts_tl_partition, py::arg("n"), py::arg("m"));

  py::class_<LinkDiagram>(m, "Link")
      .def_property_readonly("num_crossings", &LinkDiagram::num_crossings)
      .def_readonly("unknots", &LinkDiagram::unknots)
      .def_readonly("crossings", &LinkDiagram::crossings)
      .def("__str__", &write_pd);
  m.def("parse_pd", &parse_pd, py::arg("text"));
  m.def("read_pd", &read_pd_file, py::arg("path"));
  m.def("writhe", &writhe);
  m.def(
      "kauffman_bracket",
      [](const LinkDiagram& link, const std::string& method, int jobs) {
        if (method == "state-sum") return kauffman_bracket(link, jobs);
        if (method == "frontier") return bracket_frontier(to_bracket_diagram(link));
        throw std::invalid_argument("method must be state-sum or frontier");
      },
      py::arg("link"), py::arg("method") = "state-sum", py::arg("jobs") = 1);
  m.def(
      "kauffman_so3",
      [](const LinkDiagram& link, const std::string& method, int jobs) {
        if (method == "chromatic") return so3_kauffman_via_chromatic(link, jobs);
        if (method == "cabling") return so3_kauffman_via_cabling(link, jobs);
        throw std::invalid_argument("method must be chromatic or cabling");
      },
      py::arg("link"), py::arg("method") = "chromatic", py::arg("jobs") = 1);
  m.def(
      "tangle_to_chromatic",
      [](const std::string& word, int n) { return resolve_to_chromatic(parse_tangle_word(word, n)); },
      py::arg("word"), py::arg("n"));

  m.def(
      "potts_partition",
      [](int rows, int cols, int Q, const std::string& method, int jobs) {
        const GridSpec grid{rows, cols};
        if (method == "nets") return partition_function_nets(grid, Q, jobs);
        if (method == "spins") return partition_function_spins(grid, Q, jobs);
        throw std::invalid_argument("method must be nets or spins");
      },
      py::arg("rows"), py::arg("cols"), py::arg("Q"), py::arg("method") = "nets", py::arg("jobs") = 1);

  m.def("verify_bmw_relations", [](int n) { return residual_list(verify_bmw_relations(n)); }, py::arg("n"));
  m.def("verify_trivalent_relations", [] { return residual_list(verify_trivalent_relations()); });
}
