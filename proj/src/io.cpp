#include "koszul/io.hpp"

#include <sstream>

#include "json.hpp"
#include "koszul/errors.hpp"

namespace koszul {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error("malformed JSON");
    return j;
}

json edges_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back(json::array({e.u, e.v}));
    return edges;
}

json graph_json(const Graph& g) { return json{{"n", g.n()}, {"edges", edges_json(g)}}; }

Graph graph_from(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw input_error("graph JSON needs keys \"n\" and \"edges\"");
    }
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw input_error("edge must be a pair");
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return Graph(n, std::move(edges));
}

json ideal_json(const MonomialIdeal& I) {
    json gens = json::array();
    for (const Multidegree& g : I.generators()) gens.push_back(g.exponents());
    return json{{"n", I.n()}, {"unit", I.is_unit()}, {"gens", gens}};
}

json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

json step_json(const StepVerdict& s) {
    return json{{"H", edges_json(s.h)},
                {"e", json::array({s.e.first, s.e.second})},
                {"K", edges_json(s.k)},
                {"J", edges_json(s.j)},
                {"swept", s.swept},
                {"H_in_family", s.h_in_family},
                {"K_in_family", s.k_in_family},
                {"J_in_family", s.j_in_family},
                {"exact_ok", s.exact_ok},
                {"truncated_ok", s.truncated_ok},
                {"decomposition_ok", s.decomposition_ok},
                {"ok", s.ok()}};
}

}  // namespace

std::string graph_to_json(const Graph& g) { return graph_json(g).dump(); }

Graph graph_from_json(const std::string& text) { return graph_from(parse(text)); }

std::string multidegree_to_json(const Multidegree& a) { return json(a.exponents()).dump(); }

Multidegree multidegree_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_array()) throw input_error("multidegree JSON must be a flat array");
    return Multidegree(j.get<std::vector<int>>());
}

std::string ideal_to_json(const MonomialIdeal& I) { return ideal_json(I).dump(); }

MonomialIdeal ideal_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("n")) throw input_error("ideal JSON needs key \"n\"");
    const int n = j.at("n").get<int>();
    if (j.value("unit", false)) return MonomialIdeal::unit(n);
    std::vector<Multidegree> gens;
    for (const auto& g : j.value("gens", json::array())) {
        gens.emplace_back(g.get<std::vector<int>>());
    }
    return MonomialIdeal::from_generators(n, std::move(gens));
}

std::string toric_relation_to_json(const ToricRelation& r) {
    return json{{"left", json::array({edge_json(r.left[0]), edge_json(r.left[1])})},
                {"right", json::array({edge_json(r.right[0]), edge_json(r.right[1])})}}
        .dump();
}

std::string report_to_json(const VerificationReport& r) {
    json steps = json::array();
    for (const StepVerdict& s : r.steps) steps.push_back(step_json(s));
    return json{{"n", r.n},
                {"D", r.degree_bound},
                {"family_size", r.family_size},
                {"iso_classes", r.iso_class_count},
                {"zero_in_family", r.zero_in_family},
                {"maximal_in_family", r.maximal_in_family},
                {"steps", steps},
                {"counterexamples", r.counterexamples},
                {"verdict", r.verdict}}
        .dump(2);
}

std::string to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    os << "  node [shape=circle];\n";
    for (int v : g.support()) os << "  " << v << ";\n";
    for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
    os << "}\n";
    return os.str();
}

std::string monomial_to_string(const Multidegree& a) {
    if (a.sum() == 0) return "1";
    const auto edges = realize(a);
    if (!edges) throw input_error("multidegree is not a ring monomial");
    std::ostringstream os;
    for (size_t t = 0; t < edges->size(); ++t) {
        if (t) os << "*";
        os << "x(" << (*edges)[t].u << "," << (*edges)[t].v << ")";
    }
    return os.str();
}

std::string ideal_to_string(const MonomialIdeal& I) {
    if (I.is_unit()) return "(1)";
    if (I.is_zero()) return "(0)";
    std::ostringstream os;
    os << "(";
    const auto& gens = I.generators();
    for (size_t t = 0; t < gens.size(); ++t) {
        if (t) os << ", ";
        os << monomial_to_string(gens[t]);
    }
    os << ")";
    return os.str();
}

}  // namespace koszul
