#pragma once

#include <compare>
#include <optional>
#include <vector>

namespace koszul {

/// Unordered pair of distinct vertices, stored with u < v. Vertices are 1-based.
struct Edge {
    int u;
    int v;

    Edge(int a, int b);

    auto operator<=>(const Edge&) const = default;

    bool touches(int w) const { return w == u || w == v; }
    bool disjoint_from(const Edge& other) const {
        return !touches(other.u) && !touches(other.v);
    }
    /// The endpoint different from w; w must be an endpoint.
    int other(int w) const;
};

/// Simple graph given by an edge set over the ambient vertex set {1,...,n}.
/// Only edges are stored; the working vertex set is support(), the union of
/// edge endpoints, so removing a vertex's last edge drops it from support.
class Graph {
  public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool empty() const { return edges_.empty(); }

    bool has_edge(int a, int b) const;
    std::vector<int> support() const;

    /// All vertices adjacent to v. v must lie in 1..n.
    std::vector<int> neighbors(int v) const;

    /// Connectivity judged on support(); the empty graph counts as connected.
    bool is_connected() const;

    /// True iff the neighbours of v induce a clique. v must lie in support().
    bool is_simplicial(int v) const;

    /// For every pair of disjoint edges {i,j},{k,l}, at least one of the four
    /// cross pairs {i,k},{i,l},{j,k},{j,l} is an edge. Vacuously true when no
    /// disjoint pair exists.
    bool edge_distance_condition() const;

    /// Copy of this graph without e; e must be present.
    Graph remove_edge(const Edge& e) const;

    auto operator<=>(const Graph&) const = default;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;  // sorted, no duplicates
};

Graph complete_graph(int n);

/// Vertex ordering covering support(G) in which each vertex is simplicial in
/// the subgraph induced by itself and its predecessors.
using Peo = std::vector<int>;

/// Maximum-cardinality-search elimination order, verified vertex by vertex.
/// Returns an order exactly when the graph is chordal.
std::optional<Peo> find_peo(const Graph& g);

bool is_chordal(const Graph& g);

/// Lexicographically least relabeling of the edge list over all bijections
/// support(G) -> {1..|support|}. Equal forms <=> isomorphic as abstract
/// graphs (isolated ambient labels ignored).
using CanonicalForm = std::vector<Edge>;

inline constexpr int kDefaultCanonicalBound = 8;

CanonicalForm canonical_form(const Graph& g, int max_support = kDefaultCanonicalBound);

}  // namespace koszul
