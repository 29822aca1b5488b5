#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>
#include <vector>

#include "koszul/edge_ring.hpp"
#include "koszul/errors.hpp"
#include "koszul/filtration.hpp"
#include "koszul/graph.hpp"
#include "koszul/ideal.hpp"
#include "koszul/io.hpp"

namespace py = pybind11;

namespace {

using koszul::Edge;
using koszul::Graph;
using koszul::MonomialIdeal;
using koszul::Multidegree;

using EdgePair = std::pair<int, int>;

std::vector<Edge> edges_from_pairs(const std::vector<EdgePair>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) edges.emplace_back(a, b);
    return edges;
}

std::vector<EdgePair> pairs_from_edges(const std::vector<Edge>& edges) {
    std::vector<EdgePair> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) out.emplace_back(e.u, e.v);
    return out;
}

std::vector<std::vector<int>> exponent_lists(const std::vector<Multidegree>& mds) {
    std::vector<std::vector<int>> out;
    out.reserve(mds.size());
    for (const Multidegree& m : mds) out.push_back(m.exponents());
    return out;
}

std::vector<Multidegree> multidegrees(const std::vector<std::vector<int>>& lists) {
    std::vector<Multidegree> out;
    out.reserve(lists.size());
    for (const auto& a : lists) out.emplace_back(a);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact combinatorics of the edge ring of a complete graph";

    py::register_exception<koszul::input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<koszul::capability_error>(m, "CapabilityError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<EdgePair>& edges) {
                 return Graph(n, edges_from_pairs(edges));
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("edges",
                               [](const Graph& g) { return pairs_from_edges(g.edges()); })
        .def("support", &Graph::support)
        .def("has_edge", &Graph::has_edge, py::arg("a"), py::arg("b"))
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("is_connected", &Graph::is_connected)
        .def("is_simplicial", &Graph::is_simplicial, py::arg("v"))
        .def("edge_distance_condition", &Graph::edge_distance_condition)
        .def("remove_edge",
             [](const Graph& g, int a, int b) { return g.remove_edge(Edge(a, b)); },
             py::arg("a"), py::arg("b"))
        .def("to_json", &koszul::graph_to_json)
        .def("to_dot", &koszul::to_dot)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.n()) + ", edges=" +
                   std::to_string(g.edges().size()) + ")";
        });

    m.def("complete_graph", &koszul::complete_graph, py::arg("n"));
    m.def("graph_from_json", &koszul::graph_from_json, py::arg("text"));
    m.def("find_peo", &koszul::find_peo, py::arg("g"));
    m.def("is_chordal", &koszul::is_chordal, py::arg("g"));
    m.def(
        "canonical_form",
        [](const Graph& g, int max_support) {
            return pairs_from_edges(koszul::canonical_form(g, max_support));
        },
        py::arg("g"), py::arg("max_support") = koszul::kDefaultCanonicalBound);

    m.def(
        "edge_multidegree",
        [](int a, int b, int n) { return edge_multidegree(Edge(a, b), n).exponents(); },
        py::arg("a"), py::arg("b"), py::arg("n"));
    m.def(
        "is_realizable",
        [](const std::vector<int>& a) { return koszul::is_realizable(Multidegree(a)); },
        py::arg("a"));
    m.def(
        "realize",
        [](const std::vector<int>& a) -> std::optional<std::vector<EdgePair>> {
            const auto r = koszul::realize(Multidegree(a));
            if (!r) return std::nullopt;
            return pairs_from_edges(*r);
        },
        py::arg("a"));
    m.def(
        "monomial_divides",
        [](const std::vector<int>& b, const std::vector<int>& a) {
            return koszul::monomial_divides(Multidegree(b), Multidegree(a));
        },
        py::arg("b"), py::arg("a"));
    m.def(
        "monomial_to_string",
        [](const std::vector<int>& a) { return koszul::monomial_to_string(Multidegree(a)); },
        py::arg("a"));
    m.def(
        "enumerate_monomials",
        [](int n, int d) { return exponent_lists(koszul::enumerate_monomials(n, d)); },
        py::arg("n"), py::arg("d"));

    py::class_<koszul::ToricRelation>(m, "ToricRelation")
        .def_property_readonly("left",
                               [](const koszul::ToricRelation& r) {
                                   return std::vector<EdgePair>{{r.left[0].u, r.left[0].v},
                                                                {r.left[1].u, r.left[1].v}};
                               })
        .def_property_readonly("right",
                               [](const koszul::ToricRelation& r) {
                                   return std::vector<EdgePair>{{r.right[0].u, r.right[0].v},
                                                                {r.right[1].u, r.right[1].v}};
                               })
        .def("to_json", &koszul::toric_relation_to_json);
    m.def("toric_generators", &koszul::toric_generators, py::arg("n"));

    py::class_<MonomialIdeal>(m, "MonomialIdeal")
        .def_static("zero", &MonomialIdeal::zero, py::arg("n"))
        .def_static("unit", &MonomialIdeal::unit, py::arg("n"))
        .def_static(
            "from_generators",
            [](int n, const std::vector<std::vector<int>>& gens) {
                return MonomialIdeal::from_generators(n, multidegrees(gens));
            },
            py::arg("n"), py::arg("gens"))
        .def_static("edge_ideal", &MonomialIdeal::edge_ideal, py::arg("g"))
        .def_property_readonly("n", &MonomialIdeal::n)
        .def_property_readonly("is_unit", &MonomialIdeal::is_unit)
        .def_property_readonly("is_zero", &MonomialIdeal::is_zero)
        .def_property_readonly(
            "generators",
            [](const MonomialIdeal& I) { return exponent_lists(I.generators()); })
        .def("to_json", &koszul::ideal_to_json)
        .def("__eq__",
             [](const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; })
        .def("__str__", &koszul::ideal_to_string)
        .def("__repr__", &koszul::ideal_to_string);

    m.def("ideal_from_json", &koszul::ideal_from_json, py::arg("text"));
    m.def(
        "contains",
        [](const MonomialIdeal& I, const std::vector<int>& a) {
            return contains(I, Multidegree(a));
        },
        py::arg("I"), py::arg("m"));
    m.def(
        "colon_brute",
        [](const MonomialIdeal& I, EdgePair x, int n, int D) {
            return exponent_lists(colon_brute(I, Edge(x.first, x.second), n, D));
        },
        py::arg("I"), py::arg("x"), py::arg("n"), py::arg("D"));
    m.def("colon_same_vertex", &koszul::colon_same_vertex, py::arg("i"), py::arg("j"),
          py::arg("l"), py::arg("n"));
    m.def("colon_disjoint", &koszul::colon_disjoint, py::arg("i"), py::arg("j"), py::arg("k"),
          py::arg("l"), py::arg("n"));
    m.def(
        "colon_principal",
        [](EdgePair e, EdgePair x, int n) {
            return colon_principal(Edge(e.first, e.second), Edge(x.first, x.second), n);
        },
        py::arg("e"), py::arg("x"), py::arg("n"));
    m.def(
        "equal_up_to",
        [](const MonomialIdeal& I, const MonomialIdeal& J, int n, int D) {
            return equal_up_to(I, J, n, D);
        },
        py::arg("I"), py::arg("J"), py::arg("n"), py::arg("D"));
    m.def("minimalize", &koszul::minimalize, py::arg("I"));

    py::class_<koszul::EdgeDistanceCertificate>(m, "EdgeDistanceCertificate")
        .def_readonly("disjoint_pairs_checked",
                      &koszul::EdgeDistanceCertificate::disjoint_pairs_checked)
        .def_readonly("ok", &koszul::EdgeDistanceCertificate::ok);

    py::class_<koszul::FamilyMember>(m, "FamilyMember")
        .def_readonly("graph", &koszul::FamilyMember::graph)
        .def_readonly("peo", &koszul::FamilyMember::peo)
        .def_readonly("certificate", &koszul::FamilyMember::certificate);

    py::class_<koszul::IsoClass>(m, "IsoClass")
        .def_readonly("representative", &koszul::IsoClass::representative)
        .def_property_readonly(
            "form", [](const koszul::IsoClass& c) { return pairs_from_edges(c.form); })
        .def_readonly("count", &koszul::IsoClass::count);

    py::class_<koszul::StepVerdict>(m, "StepVerdict")
        .def_readonly("h", &koszul::StepVerdict::h)
        .def_readonly("e", &koszul::StepVerdict::e)
        .def_readonly("k", &koszul::StepVerdict::k)
        .def_readonly("j", &koszul::StepVerdict::j)
        .def_readonly("swept", &koszul::StepVerdict::swept)
        .def_readonly("h_in_family", &koszul::StepVerdict::h_in_family)
        .def_readonly("k_in_family", &koszul::StepVerdict::k_in_family)
        .def_readonly("j_in_family", &koszul::StepVerdict::j_in_family)
        .def_readonly("exact_ok", &koszul::StepVerdict::exact_ok)
        .def_readonly("truncated_ok", &koszul::StepVerdict::truncated_ok)
        .def_readonly("decomposition_ok", &koszul::StepVerdict::decomposition_ok)
        .def("ok", &koszul::StepVerdict::ok);

    py::class_<koszul::VerificationReport>(m, "VerificationReport")
        .def_readonly("n", &koszul::VerificationReport::n)
        .def_readonly("degree_bound", &koszul::VerificationReport::degree_bound)
        .def_readonly("family_size", &koszul::VerificationReport::family_size)
        .def_readonly("iso_class_count", &koszul::VerificationReport::iso_class_count)
        .def_readonly("zero_in_family", &koszul::VerificationReport::zero_in_family)
        .def_readonly("maximal_in_family", &koszul::VerificationReport::maximal_in_family)
        .def_readonly("steps", &koszul::VerificationReport::steps)
        .def_readonly("counterexamples", &koszul::VerificationReport::counterexamples)
        .def_readonly("verdict", &koszul::VerificationReport::verdict)
        .def("to_json", &koszul::report_to_json);

    py::class_<koszul::DecompositionVerdict>(m, "DecompositionVerdict")
        .def_readonly("principal_colons_ok",
                      &koszul::DecompositionVerdict::principal_colons_ok)
        .def_readonly("neighbor_subset_ok", &koszul::DecompositionVerdict::neighbor_subset_ok)
        .def_readonly("matches_annihilator",
                      &koszul::DecompositionVerdict::matches_annihilator)
        .def("ok", &koszul::DecompositionVerdict::ok);

    m.def("is_family_member", &koszul::is_family_member, py::arg("g"));
    m.def("enumerate_family", &koszul::enumerate_family, py::arg("n"),
          py::arg("bound") = koszul::kDefaultFamilyBound);
    m.def("iso_classes", &koszul::iso_classes, py::arg("members"));
    m.def("descent_edge", &koszul::descent_edge, py::arg("member"));
    m.def("annihilator_graph", &koszul::annihilator_graph, py::arg("k"), py::arg("v"),
          py::arg("i"), py::arg("n"));
    m.def("verify_descent_closure", &koszul::verify_descent_closure, py::arg("n"),
          py::arg("bound") = koszul::kDefaultFamilyBound);
    m.def("verify_filtration", &koszul::verify_filtration, py::arg("n"), py::arg("D"),
          py::arg("sweep") = false, py::arg("bound") = koszul::kDefaultFamilyBound);
    m.def("verify_members", &koszul::verify_members, py::arg("candidates"), py::arg("n"),
          py::arg("D"), py::arg("sweep") = false);
    m.def("check_decomposition_step", &koszul::check_decomposition_step, py::arg("k"),
          py::arg("v"), py::arg("i"), py::arg("n"), py::arg("D"));
    m.def("verify_colon_decomposition", &koszul::verify_colon_decomposition, py::arg("n"),
          py::arg("D"), py::arg("bound") = koszul::kDefaultFamilyBound);
    m.def("to_dot", &koszul::to_dot, py::arg("g"));
}
