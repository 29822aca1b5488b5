#include "koszul/ideal.hpp"

#include <algorithm>
#include <string>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

// divisibility for operands already known to be realizable
bool divides_unchecked(const Multidegree& g, const Multidegree& m) {
    const auto diff = m.minus(g);
    return diff && is_realizable(*diff);
}

void check_vertex(int v, int n) {
    if (v < 1 || v > n) {
        throw input_error("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
}

}  // namespace

MonomialIdeal MonomialIdeal::zero(int n) {
    MonomialIdeal I;
    I.n_ = n;
    return I;
}

MonomialIdeal MonomialIdeal::unit(int n) {
    MonomialIdeal I;
    I.n_ = n;
    I.unit_ = true;
    return I;
}

MonomialIdeal MonomialIdeal::from_generators(int n, std::vector<Multidegree> gens) {
    MonomialIdeal I;
    I.n_ = n;
    for (const Multidegree& g : gens) {
        if (g.n() != n) throw input_error("generator length differs from n");
        if (!is_realizable(g)) throw input_error("generator is not a ring monomial");
        if (g.sum() == 0) return unit(n);  // the monomial 1 generates everything
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    I.gens_ = std::move(gens);
    return I;
}

MonomialIdeal MonomialIdeal::edge_ideal(const Graph& g) {
    std::vector<Multidegree> gens;
    gens.reserve(g.edges().size());
    for (const Edge& e : g.edges()) gens.push_back(edge_multidegree(e, g.n()));
    return from_generators(g.n(), std::move(gens));
}

bool contains(const MonomialIdeal& I, const Multidegree& m) {
    if (m.n() != I.n()) throw input_error("multidegree length differs from the ideal's n");
    if (!is_realizable(m)) throw input_error("contains requires a realizable multidegree");
    if (I.is_unit()) return true;
    for (const Multidegree& g : I.generators()) {
        if (divides_unchecked(g, m)) return true;
    }
    return false;
}

std::vector<Multidegree> colon_brute(const MonomialIdeal& I, const Edge& x,
                                     std::span<const Multidegree> monomial_pool) {
    const Multidegree xd = edge_multidegree(x, I.n());
    std::vector<Multidegree> out;
    for (const Multidegree& m : monomial_pool) {
        if (contains(I, m.plus(xd))) out.push_back(m);
    }
    return out;
}

std::vector<Multidegree> colon_brute(const MonomialIdeal& I, const Edge& x, int n, int D) {
    if (n != I.n()) throw input_error("n differs from the ideal's n");
    if (D < 1) throw input_error("colon truncation degree must be >= 1");
    const auto pool = monomial_pool(n, D);
    return colon_brute(I, x, pool);
}

MonomialIdeal colon_same_vertex(int i, int j, int l, int n) {
    check_vertex(i, n);
    check_vertex(j, n);
    check_vertex(l, n);
    if (i == j || i == l || j == l) {
        throw input_error("colon_same_vertex needs three distinct vertices");
    }
    std::vector<Multidegree> gens;
    for (int p = 1; p <= n; ++p) {
        if (p == l || p == j) continue;  // x_jj does not exist
        gens.push_back(edge_multidegree(Edge(p, j), n));
    }
    return MonomialIdeal::from_generators(n, std::move(gens));
}

MonomialIdeal colon_disjoint(int i, int j, int k, int l, int n) {
    check_vertex(i, n);
    check_vertex(j, n);
    check_vertex(k, n);
    check_vertex(l, n);
    if (!Edge(i, j).disjoint_from(Edge(k, l))) {
        throw input_error("colon_disjoint needs two disjoint edges");
    }
    std::vector<Multidegree> gens{edge_multidegree(Edge(i, j), n)};
    for (int p = 1; p <= n; ++p) {
        if (p == i || p == j || p == k || p == l) continue;
        std::vector<int> a(n, 0);
        a[i - 1] = 1;
        a[j - 1] = 1;
        a[p - 1] = 2;  // x_ip * x_jp
        gens.emplace_back(std::move(a));
    }
    return MonomialIdeal::from_generators(n, std::move(gens));
}

MonomialIdeal colon_principal(const Edge& e, const Edge& x, int n) {
    if (e.u < 1 || e.v > n || x.u < 1 || x.v > n) {
        throw input_error("edge endpoint outside 1.." + std::to_string(n));
    }
    if (e == x) return MonomialIdeal::unit(n);
    if (e.disjoint_from(x)) return colon_disjoint(e.u, e.v, x.u, x.v, n);
    const int shared = x.touches(e.u) ? e.u : e.v;
    return colon_same_vertex(shared, e.other(shared), x.other(shared), n);
}

bool equal_up_to(const MonomialIdeal& I, const MonomialIdeal& J,
                 std::span<const Multidegree> monomial_pool) {
    for (const Multidegree& m : monomial_pool) {
        if (contains(I, m) != contains(J, m)) return false;
    }
    return true;
}

bool equal_up_to(const MonomialIdeal& I, const MonomialIdeal& J, int n, int D) {
    if (I.n() != n || J.n() != n) throw input_error("ideal n mismatch");
    if (D < 1) throw input_error("comparison degree must be >= 1");
    const auto pool = monomial_pool(n, D);
    return equal_up_to(I, J, pool);
}

MonomialIdeal minimalize(const MonomialIdeal& I) {
    if (I.is_unit()) return I;
    // A proper divisor has strictly smaller total degree, so scanning in
    // degree order against the survivors finds every redundancy.
    std::vector<Multidegree> sorted = I.generators();
    std::sort(sorted.begin(), sorted.end(), [](const Multidegree& a, const Multidegree& b) {
        const int sa = a.sum(), sb = b.sum();
        return sa != sb ? sa < sb : a < b;
    });
    std::vector<Multidegree> kept;
    for (const Multidegree& g : sorted) {
        bool redundant = false;
        for (const Multidegree& k : kept) {
            if (divides_unchecked(k, g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(g);
    }
    return MonomialIdeal::from_generators(I.n(), std::move(kept));
}

std::vector<Multidegree> monomial_pool(int n, int D) {
    std::vector<Multidegree> pool;
    for (int d = 0; d <= D; ++d) {
        auto level = enumerate_monomials(n, d);
        pool.insert(pool.end(), std::make_move_iterator(level.begin()),
                    std::make_move_iterator(level.end()));
    }
    return pool;
}

}  // namespace koszul
