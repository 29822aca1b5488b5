#include "koszul/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "koszul/errors.hpp"

namespace koszul {

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) {
        throw input_error("edge endpoints must differ: {" + std::to_string(a) + "," +
                          std::to_string(b) + "}");
    }
}

int Edge::other(int w) const {
    if (w == u) return v;
    if (w == v) return u;
    throw input_error("vertex " + std::to_string(w) + " is not an endpoint");
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw input_error("ambient vertex count must be positive");
    for (const Edge& e : edges_) {
        if (e.u < 1 || e.v > n_) {
            throw input_error("edge endpoint outside 1.." + std::to_string(n_));
        }
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Graph::has_edge(int a, int b) const {
    if (a == b) return false;
    return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
}

std::vector<int> Graph::support() const {
    std::vector<int> s;
    s.reserve(edges_.size() * 2);
    for (const Edge& e : edges_) {
        s.push_back(e.u);
        s.push_back(e.v);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

std::vector<int> Graph::neighbors(int v) const {
    if (v < 1 || v > n_) {
        throw input_error("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
    }
    std::vector<int> nb;
    for (const Edge& e : edges_) {
        if (e.touches(v)) nb.push_back(e.other(v));
    }
    std::sort(nb.begin(), nb.end());
    return nb;
}

bool Graph::is_connected() const {
    const auto supp = support();
    if (supp.empty()) return true;
    std::vector<char> seen(n_ + 1, 0);
    std::vector<int> stack{supp.front()};
    seen[supp.front()] = 1;
    size_t reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == supp.size();
}

bool Graph::is_simplicial(int v) const {
    const auto nb = neighbors(v);
    if (nb.empty()) {
        throw input_error("vertex " + std::to_string(v) + " is not in the support");
    }
    for (size_t a = 0; a < nb.size(); ++a) {
        for (size_t b = a + 1; b < nb.size(); ++b) {
            if (!has_edge(nb[a], nb[b])) return false;
        }
    }
    return true;
}

bool Graph::edge_distance_condition() const {
    for (size_t a = 0; a < edges_.size(); ++a) {
        for (size_t b = a + 1; b < edges_.size(); ++b) {
            const Edge& e = edges_[a];
            const Edge& f = edges_[b];
            if (!e.disjoint_from(f)) continue;
            if (!has_edge(e.u, f.u) && !has_edge(e.u, f.v) && !has_edge(e.v, f.u) &&
                !has_edge(e.v, f.v)) {
                return false;
            }
        }
    }
    return true;
}

Graph Graph::remove_edge(const Edge& e) const {
    if (!std::binary_search(edges_.begin(), edges_.end(), e)) {
        throw input_error("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          "} is not present");
    }
    std::vector<Edge> rest;
    rest.reserve(edges_.size() - 1);
    for (const Edge& f : edges_) {
        if (f != e) rest.push_back(f);
    }
    return Graph(n_, std::move(rest));
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    }
    return Graph(n, std::move(edges));
}

std::optional<Peo> find_peo(const Graph& g) {
    const auto supp = g.support();
    const int k = static_cast<int>(supp.size());
    if (k == 0) return Peo{};

    std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            if (g.has_edge(supp[a], supp[b])) adj[a][b] = adj[b][a] = 1;
        }
    }

    // Maximum cardinality search: visit the vertex with the most already
    // visited neighbours, ties broken by smallest label.
    std::vector<int> order_idx;
    std::vector<char> picked(k, 0);
    for (int step = 0; step < k; ++step) {
        int best = -1, best_count = -1;
        for (int t = 0; t < k; ++t) {
            if (picked[t]) continue;
            int c = 0;
            for (int s : order_idx) c += adj[t][s];
            if (c > best_count) {
                best_count = c;
                best = t;
            }
        }
        picked[best] = 1;
        order_idx.push_back(best);
    }

    // The visit order is a valid elimination order exactly when the graph is
    // chordal; verify each vertex is simplicial among its predecessors.
    for (size_t t = 0; t < order_idx.size(); ++t) {
        std::vector<int> prev;
        for (size_t s = 0; s < t; ++s) {
            if (adj[order_idx[t]][order_idx[s]]) prev.push_back(order_idx[s]);
        }
        for (size_t a = 0; a < prev.size(); ++a) {
            for (size_t b = a + 1; b < prev.size(); ++b) {
                if (!adj[prev[a]][prev[b]]) return std::nullopt;
            }
        }
    }

    Peo order;
    order.reserve(k);
    for (int t : order_idx) order.push_back(supp[t]);
    return order;
}

bool is_chordal(const Graph& g) { return find_peo(g).has_value(); }

CanonicalForm canonical_form(const Graph& g, int max_support) {
    const auto supp = g.support();
    const int k = static_cast<int>(supp.size());
    if (k > max_support) {
        throw capability_error("canonical form limited to support size " +
                               std::to_string(max_support) + ", got " + std::to_string(k));
    }
    if (k == 0) return {};

    std::vector<int> index_of(g.n() + 1, -1);
    for (int t = 0; t < k; ++t) index_of[supp[t]] = t;

    std::vector<int> label(k);
    std::iota(label.begin(), label.end(), 1);

    std::optional<CanonicalForm> best;
    std::vector<Edge> relabeled;
    relabeled.reserve(g.edges().size());
    do {
        relabeled.clear();
        for (const Edge& e : g.edges()) {
            relabeled.emplace_back(label[index_of[e.u]], label[index_of[e.v]]);
        }
        std::sort(relabeled.begin(), relabeled.end());
        if (!best || relabeled < *best) best = relabeled;
    } while (std::next_permutation(label.begin(), label.end()));

    return *best;
}

}  // namespace koszul
