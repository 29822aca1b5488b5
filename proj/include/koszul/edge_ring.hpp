#pragma once

#include <array>
#include <compare>
#include <optional>
#include <vector>

#include "koszul/graph.hpp"

namespace koszul {

/// Z^n exponent vector of a monomial t^a; component k is the exponent of
/// t_{k+1}. A vector is a monomial of the edge ring of K_n exactly when it
/// is realizable as the degree sequence of a loopless multigraph.
class Multidegree {
  public:
    explicit Multidegree(int n);  // the zero vector (the monomial 1)
    explicit Multidegree(std::vector<int> exponents);

    int n() const { return static_cast<int>(a_.size()); }
    int operator[](int idx) const { return a_[static_cast<std::size_t>(idx)]; }
    const std::vector<int>& exponents() const { return a_; }

    int sum() const;
    int max_exponent() const;

    Multidegree plus(const Multidegree& o) const;
    /// Componentwise difference, or nullopt when any entry would go negative.
    std::optional<Multidegree> minus(const Multidegree& o) const;

    auto operator<=>(const Multidegree&) const = default;

  private:
    std::vector<int> a_;
};

/// Degree of the edge variable x_{uv}: e_u + e_v.
Multidegree edge_multidegree(const Edge& e, int n);

/// Ring membership of t^a: a is the degree sequence of a loopless multigraph
/// on [n], i.e. sum(a) is even and 2*max(a) <= sum(a).
bool is_realizable(const Multidegree& a);

/// Constructive counterpart of is_realizable: a loopless multigraph with
/// degree sequence a (repeated edges allowed), built greedily by pairing the
/// two largest remaining degrees. nullopt when no such multigraph exists.
std::optional<std::vector<Edge>> realize(const Multidegree& a);

/// t^b divides t^a inside the edge ring: a-b is nonnegative and realizable.
/// Both arguments must be realizable.
bool monomial_divides(const Multidegree& b, const Multidegree& a);

/// Quadratic binomial relation x_e1 x_e2 - x_f1 x_f2 coming from a 4-cycle;
/// both sides share one multidegree over four distinct vertices.
struct ToricRelation {
    std::array<Edge, 2> left;
    std::array<Edge, 2> right;

    auto operator<=>(const ToricRelation&) const = default;
};

/// Defining relations of the edge ring of K_n: for every 4-subset, the three
/// differences of its perfect matchings, one canonical orientation each.
/// Count is 3*C(n,4); empty for n < 4.
std::vector<ToricRelation> toric_generators(int n);

/// All realizable multidegrees with component sum 2d, in lexicographic order.
/// Each corresponds to exactly one monomial of the edge ring.
std::vector<Multidegree> enumerate_monomials(int n, int d);

}  // namespace koszul
