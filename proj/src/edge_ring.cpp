#include "koszul/edge_ring.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "koszul/errors.hpp"

namespace koszul {

Multidegree::Multidegree(int n) {
    if (n < 1) throw input_error("multidegree needs at least one component");
    a_.assign(n, 0);
}

Multidegree::Multidegree(std::vector<int> exponents) : a_(std::move(exponents)) {
    if (a_.empty()) throw input_error("multidegree needs at least one component");
    for (int x : a_) {
        if (x < 0) throw input_error("multidegree exponents must be nonnegative");
    }
}

int Multidegree::sum() const {
    int s = 0;
    for (int x : a_) s += x;
    return s;
}

int Multidegree::max_exponent() const { return *std::max_element(a_.begin(), a_.end()); }

Multidegree Multidegree::plus(const Multidegree& o) const {
    if (o.n() != n()) throw input_error("multidegree length mismatch");
    std::vector<int> out(a_);
    for (int t = 0; t < n(); ++t) out[t] += o.a_[t];
    return Multidegree(std::move(out));
}

std::optional<Multidegree> Multidegree::minus(const Multidegree& o) const {
    if (o.n() != n()) throw input_error("multidegree length mismatch");
    std::vector<int> out(a_);
    for (int t = 0; t < n(); ++t) {
        out[t] -= o.a_[t];
        if (out[t] < 0) return std::nullopt;
    }
    return Multidegree(std::move(out));
}

Multidegree edge_multidegree(const Edge& e, int n) {
    if (e.u < 1 || e.v > n) throw input_error("edge endpoint outside 1.." + std::to_string(n));
    std::vector<int> a(n, 0);
    a[e.u - 1] = 1;
    a[e.v - 1] = 1;
    return Multidegree(std::move(a));
}

bool is_realizable(const Multidegree& a) {
    const int s = a.sum();
    return s % 2 == 0 && 2 * a.max_exponent() <= s;
}

std::optional<std::vector<Edge>> realize(const Multidegree& a) {
    std::vector<int> deg = a.exponents();
    std::vector<Edge> edges;
    for (;;) {
        // the two vertices of largest remaining degree, smallest index on ties
        int first = 0, second = -1;
        for (int t = 1; t < static_cast<int>(deg.size()); ++t) {
            if (deg[t] > deg[first]) {
                second = first;
                first = t;
            } else if (second < 0 || deg[t] > deg[second]) {
                second = t;
            }
        }
        if (deg[first] == 0) break;
        if (second < 0 || deg[second] == 0) return std::nullopt;  // a loop would be needed
        --deg[first];
        --deg[second];
        edges.emplace_back(first + 1, second + 1);
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

bool monomial_divides(const Multidegree& b, const Multidegree& a) {
    if (b.n() != a.n()) throw input_error("multidegree length mismatch");
    if (!is_realizable(b) || !is_realizable(a)) {
        throw input_error("monomial_divides requires realizable multidegrees");
    }
    const auto diff = a.minus(b);
    return diff && is_realizable(*diff);
}

std::vector<ToricRelation> toric_generators(int n) {
    if (n < 2) throw input_error("toric generators need n >= 2");
    std::vector<ToricRelation> rels;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (int k = j + 1; k <= n; ++k) {
                for (int l = k + 1; l <= n; ++l) {
                    // the three perfect matchings of {i,j,k,l}
                    const std::array<Edge, 2> m1{Edge(i, j), Edge(k, l)};
                    const std::array<Edge, 2> m2{Edge(i, k), Edge(j, l)};
                    const std::array<Edge, 2> m3{Edge(i, l), Edge(j, k)};
                    rels.push_back({m1, m2});
                    rels.push_back({m1, m3});
                    rels.push_back({m2, m3});
                }
            }
        }
    }
    return rels;
}

std::vector<Multidegree> enumerate_monomials(int n, int d) {
    if (n < 1) throw input_error("enumerate_monomials needs n >= 1");
    if (d < 0) throw input_error("enumerate_monomials needs d >= 0");
    std::vector<Multidegree> out;
    std::vector<int> cur(n, 0);
    // lexicographic recursion; entries above d can never satisfy 2*max <= sum
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == n - 1) {
            if (remaining <= d) {
                cur[pos] = remaining;
                Multidegree m(cur);
                if (is_realizable(m)) out.push_back(std::move(m));
            }
            return;
        }
        const int cap = std::min(remaining, d);
        for (int x = 0; x <= cap; ++x) {
            cur[pos] = x;
            rec(pos + 1, remaining - x);
        }
    };
    rec(0, 2 * d);
    return out;
}

}  // namespace koszul
