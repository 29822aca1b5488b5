#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "koszul/errors.hpp"
#include "koszul/io.hpp"

using koszul::Edge;
using koszul::Graph;
using koszul::MonomialIdeal;
using koszul::Multidegree;

TEST_CASE("graph JSON") {
    const Graph g(3, {Edge(1, 2), Edge(1, 3)});
    CHECK(koszul::graph_to_json(g) == R"({"edges":[[1,2],[1,3]],"n":3})");
    CHECK(koszul::graph_from_json(koszul::graph_to_json(g)) == g);
    CHECK(koszul::graph_from_json(R"({"n":4,"edges":[]})") == Graph(4, {}));
    CHECK_THROWS_AS(koszul::graph_from_json("{"), koszul::input_error);
    CHECK_THROWS_AS(koszul::graph_from_json(R"({"n":2})"), koszul::input_error);
    CHECK_THROWS_AS(koszul::graph_from_json(R"({"n":2,"edges":[[1,1]]})"),
                    koszul::input_error);
}

TEST_CASE("multidegree and ideal JSON") {
    const Multidegree m(std::vector<int>{1, 0, 2, 1});
    CHECK(koszul::multidegree_to_json(m) == "[1,0,2,1]");
    CHECK(koszul::multidegree_from_json("[1,0,2,1]") == m);

    const auto I = MonomialIdeal::from_generators(
        3, {Multidegree(std::vector<int>{1, 1, 0}), Multidegree(std::vector<int>{0, 1, 1})});
    CHECK(koszul::ideal_to_json(I) == R"({"gens":[[0,1,1],[1,1,0]],"n":3,"unit":false})");
    CHECK(koszul::ideal_from_json(koszul::ideal_to_json(I)) == I);
    CHECK(koszul::ideal_from_json(R"({"n":3,"unit":true,"gens":[]})").is_unit());
    CHECK(koszul::ideal_from_json(R"({"n":3,"unit":false,"gens":[]})").is_zero());
}

TEST_CASE("toric relation JSON") {
    const auto rels = koszul::toric_generators(4);
    REQUIRE(rels.size() == 3);
    CHECK(koszul::toric_relation_to_json(rels[0]) ==
          R"({"left":[[1,2],[3,4]],"right":[[1,3],[2,4]]})");
}

TEST_CASE("report JSON carries the documented keys") {
    const auto r = koszul::verify_filtration(3, 2);
    const auto j = nlohmann::json::parse(koszul::report_to_json(r));
    CHECK(j.at("n") == 3);
    CHECK(j.at("D") == 2);
    CHECK(j.at("family_size") == 8);
    CHECK(j.at("iso_classes") == 3);
    CHECK(j.at("verdict") == true);
    REQUIRE(j.at("steps").size() == 7);
    const auto& step = j.at("steps").at(0);
    for (const char* key : {"H", "e", "K", "J", "exact_ok", "truncated_ok"}) {
        CHECK(step.contains(key));
    }
}

TEST_CASE("DOT export") {
    const Graph g(3, {Edge(1, 2), Edge(2, 3)});
    const std::string dot = koszul::to_dot(g);
    CHECK(dot == "graph G {\n  node [shape=circle];\n  1;\n  2;\n  3;\n"
                 "  1 -- 2;\n  2 -- 3;\n}\n");
    CHECK(koszul::to_dot(Graph(4, {})) == "graph G {\n  node [shape=circle];\n}\n");
}

TEST_CASE("monomial and ideal rendering") {
    CHECK(koszul::monomial_to_string(Multidegree(std::vector<int>{0, 0, 0})) == "1");
    CHECK(koszul::monomial_to_string(Multidegree(std::vector<int>{1, 1, 0})) == "x(1,2)");
    CHECK(koszul::monomial_to_string(Multidegree(std::vector<int>{1, 1, 0, 0, 2})) ==
          "x(1,5)*x(2,5)");
    CHECK(koszul::ideal_to_string(MonomialIdeal::zero(3)) == "(0)");
    CHECK(koszul::ideal_to_string(MonomialIdeal::unit(3)) == "(1)");
    CHECK(koszul::ideal_to_string(MonomialIdeal::from_generators(
              3, {Multidegree(std::vector<int>{1, 1, 0})})) == "(x(1,2))");
}
