#include <vector>

#include "doctest.h"
#include "koszul/edge_ring.hpp"
#include "koszul/errors.hpp"
#include "koszul/ideal.hpp"

using koszul::Edge;
using koszul::MonomialIdeal;
using koszul::Multidegree;

namespace {

Multidegree md(std::vector<int> a) { return Multidegree(std::move(a)); }

MonomialIdeal principal_edge(int i, int j, int n) {
    return MonomialIdeal::from_generators(n, {edge_multidegree(Edge(i, j), n)});
}

MonomialIdeal ideal_of(int n, const std::vector<Multidegree>& gens) {
    return MonomialIdeal::from_generators(n, gens);
}

}  // namespace

TEST_CASE("ideal construction") {
    CHECK(MonomialIdeal::zero(4).is_zero());
    CHECK(MonomialIdeal::unit(4).is_unit());
    CHECK_FALSE(MonomialIdeal::zero(4).is_unit());
    // the monomial 1 as a generator collapses to the unit ideal
    CHECK(ideal_of(3, {md({0, 0, 0})}).is_unit());
    CHECK_THROWS_AS(ideal_of(3, {md({2, 0, 0})}), koszul::input_error);
    CHECK_THROWS_AS(ideal_of(3, {md({1, 1})}), koszul::input_error);
    // generators are sorted and deduplicated
    const auto I = ideal_of(3, {md({1, 1, 0}), md({0, 1, 1}), md({1, 1, 0})});
    CHECK(I.generators() == std::vector<Multidegree>{md({0, 1, 1}), md({1, 1, 0})});
}

TEST_CASE("membership") {
    const auto I = principal_edge(1, 2, 4);
    CHECK(contains(I, md({2, 1, 1, 0})));
    CHECK_FALSE(contains(I, md({1, 0, 1, 2})));
    CHECK(contains(I, md({1, 1, 1, 1})));
    CHECK_FALSE(contains(MonomialIdeal::zero(4), md({1, 1, 0, 0})));
    CHECK(contains(MonomialIdeal::unit(4), md({0, 0, 0, 0})));
    CHECK_THROWS_AS(contains(I, md({2, 0, 0, 0})), koszul::input_error);
}

TEST_CASE("brute-force colon truncation") {
    const auto I = principal_edge(1, 2, 4);

    const auto by_13 = colon_brute(I, Edge(1, 3), 4, 1);
    CHECK(by_13 == std::vector<Multidegree>{md({0, 1, 0, 1}), md({1, 1, 0, 0})});

    // colon by the generator itself is the whole ring
    const auto by_12 = colon_brute(I, Edge(1, 2), 4, 1);
    CHECK(by_12.size() == 7);  // the monomial 1 and all six edges
    CHECK(MonomialIdeal::from_generators(4, by_12).is_unit());

    CHECK(colon_brute(MonomialIdeal::zero(4), Edge(1, 2), 4, 2).empty());

    CHECK_THROWS_AS(colon_brute(I, Edge(1, 3), 4, 0), koszul::input_error);
    CHECK_THROWS_AS(colon_brute(I, Edge(1, 3), 5, 2), koszul::input_error);
}

TEST_CASE("closed form: shared vertex") {
    const auto c = koszul::colon_same_vertex(1, 2, 3, 4);
    CHECK(c.generators() == std::vector<Multidegree>{md({0, 1, 0, 1}), md({1, 1, 0, 0})});

    const auto c5 = koszul::colon_same_vertex(1, 2, 3, 5);
    CHECK(c5.generators() == std::vector<Multidegree>{md({0, 1, 0, 0, 1}), md({0, 1, 0, 1, 0}),
                                                      md({1, 1, 0, 0, 0})});

    const auto c3 = koszul::colon_same_vertex(1, 2, 3, 3);
    CHECK(c3.generators() == std::vector<Multidegree>{md({1, 1, 0})});

    CHECK_THROWS_AS(koszul::colon_same_vertex(1, 1, 3, 4), koszul::input_error);
    CHECK_THROWS_AS(koszul::colon_same_vertex(1, 2, 5, 4), koszul::input_error);
}

TEST_CASE("closed form: disjoint edges") {
    const auto c5 = koszul::colon_disjoint(1, 2, 3, 4, 5);
    CHECK(c5.generators() ==
          std::vector<Multidegree>{md({1, 1, 0, 0, 0}), md({1, 1, 0, 0, 2})});

    const auto c4 = koszul::colon_disjoint(1, 2, 3, 4, 4);
    CHECK(c4.generators() == std::vector<Multidegree>{md({1, 1, 0, 0})});

    const auto c6 = koszul::colon_disjoint(1, 2, 3, 4, 6);
    CHECK(c6.generators() == std::vector<Multidegree>{md({1, 1, 0, 0, 0, 0}),
                                                      md({1, 1, 0, 0, 0, 2}),
                                                      md({1, 1, 0, 0, 2, 0})});

    CHECK_THROWS_AS(koszul::colon_disjoint(1, 2, 2, 3, 4), koszul::input_error);
}

TEST_CASE("principal colon dispatch") {
    CHECK(koszul::colon_principal(Edge(1, 2), Edge(1, 2), 4).is_unit());
    CHECK(koszul::colon_principal(Edge(1, 2), Edge(1, 3), 4) ==
          koszul::colon_same_vertex(1, 2, 3, 4));
    CHECK(koszul::colon_principal(Edge(1, 2), Edge(2, 3), 4) ==
          koszul::colon_same_vertex(2, 1, 3, 4));
    CHECK(koszul::colon_principal(Edge(1, 2), Edge(3, 4), 5) ==
          koszul::colon_disjoint(1, 2, 3, 4, 5));
}

TEST_CASE("degreewise ideal comparison") {
    const auto I = principal_edge(1, 2, 3);
    CHECK(koszul::equal_up_to(I, I, 3, 2));
    CHECK_FALSE(koszul::equal_up_to(I, principal_edge(1, 3, 3), 3, 1));

    const auto brute = colon_brute(principal_edge(1, 2, 4), Edge(1, 3), 4, 3);
    CHECK(koszul::equal_up_to(koszul::colon_same_vertex(1, 2, 3, 4),
                              MonomialIdeal::from_generators(4, brute), 4, 3));
}

TEST_CASE("minimalize") {
    const auto I = ideal_of(4, {md({1, 1, 0, 0}), md({1, 1, 1, 1})});
    CHECK(minimalize(I).generators() == std::vector<Multidegree>{md({1, 1, 0, 0})});

    // x(1,5)x(2,5) is not an edge-ring multiple of x(1,2)
    const auto J = ideal_of(5, {md({1, 1, 0, 0, 0}), md({1, 1, 0, 0, 2})});
    CHECK(minimalize(J) == J);

    CHECK(minimalize(MonomialIdeal::zero(3)).is_zero());
    CHECK(minimalize(MonomialIdeal::unit(3)).is_unit());
}

TEST_CASE("minimalize preserves membership degreewise") {
    // assorted generator sets, including redundant ones
    const std::vector<MonomialIdeal> ideals{
        ideal_of(5, {md({1, 1, 0, 0, 0}), md({1, 1, 1, 1, 0}), md({0, 0, 1, 1, 0}),
                     md({1, 0, 1, 0, 0})}),
        ideal_of(4, {md({1, 1, 0, 0}), md({1, 1, 2, 0}), md({2, 2, 0, 0})}),
        ideal_of(4, {md({0, 1, 1, 0}), md({1, 1, 1, 1}), md({0, 2, 2, 0})}),
        ideal_of(6, {md({1, 0, 0, 0, 0, 1}), md({1, 1, 0, 0, 1, 1}),
                     md({0, 0, 1, 1, 0, 0}), md({2, 0, 1, 1, 0, 2})}),
    };
    for (const auto& I : ideals) {
        const auto M = minimalize(I);
        CHECK(M.generators().size() <= I.generators().size());
        CHECK(koszul::equal_up_to(I, M, I.n(), 4));
    }
}

TEST_CASE("closed forms match the brute-force colon, n=3..5, D=3") {
    // inclusion into the colon is certified exactly; only the reverse
    // direction relies on the degree-D truncation
    const auto check_both = [](const MonomialIdeal& I, const Edge& x,
                               const MonomialIdeal& closed,
                               std::span<const Multidegree> pool) {
        const auto xd = edge_multidegree(x, I.n());
        for (const auto& g : closed.generators()) CHECK(contains(I, g.plus(xd)));
        const auto brute = colon_brute(I, x, pool);
        CHECK(koszul::equal_up_to(closed, MonomialIdeal::from_generators(I.n(), brute),
                                  pool));
    };
    for (int n = 3; n <= 5; ++n) {
        const auto pool = koszul::monomial_pool(n, 3);
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                for (int l = 1; l <= n; ++l) {
                    if (i == j || i == l || j == l) continue;
                    check_both(principal_edge(i, j, n), Edge(i, l),
                               koszul::colon_same_vertex(i, j, l, n), pool);
                }
            }
        }
    }
    for (int n = 4; n <= 5; ++n) {
        const auto pool = koszul::monomial_pool(n, 3);
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                for (int k = 1; k <= n; ++k) {
                    for (int l = k + 1; l <= n; ++l) {
                        if (!Edge(i, j).disjoint_from(Edge(k, l))) continue;
                        check_both(principal_edge(i, j, n), Edge(k, l),
                                   koszul::colon_disjoint(i, j, k, l, n), pool);
                    }
                }
            }
        }
    }
}

TEST_CASE("non-membership witnesses from the colon arguments") {
    // x(j,l) * x(i,l) has no edge-ring quotient by x(i,j)
    for (int n = 3; n <= 5; ++n) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                for (int l = 1; l <= n; ++l) {
                    if (i == j || i == l || j == l) continue;
                    const auto I = principal_edge(i, j, n);
                    const auto prod =
                        edge_multidegree(Edge(j, l), n).plus(edge_multidegree(Edge(i, l), n));
                    CHECK_FALSE(contains(I, prod));
                }
            }
        }
    }
    // x(i,k) * x(j,k) * x(k,l) has no edge-ring quotient by x(i,j)
    for (int n = 4; n <= 5; ++n) {
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                for (int k = 1; k <= n; ++k) {
                    for (int l = 1; l <= n; ++l) {
                        if (k == l || !Edge(i, j).disjoint_from(Edge(k, l))) continue;
                        const auto I = principal_edge(i, j, n);
                        const auto prod = edge_multidegree(Edge(i, k), n)
                                              .plus(edge_multidegree(Edge(j, k), n))
                                              .plus(edge_multidegree(Edge(k, l), n));
                        CHECK_FALSE(contains(I, prod));
                    }
                }
            }
        }
    }
}

TEST_CASE("an ideal is contained in its colon") {
    for (int n = 4; n <= 5; ++n) {
        const auto I = ideal_of(
            n, {edge_multidegree(Edge(1, 2), n), edge_multidegree(Edge(2, 3), n)});
        for (const Edge& x : {Edge(1, 3), Edge(3, 4), Edge(2, 4)}) {
            const auto xd = edge_multidegree(x, n);
            for (const auto& g : I.generators()) CHECK(contains(I, g.plus(xd)));
        }
    }
}
