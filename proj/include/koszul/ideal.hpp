#pragma once

#include <span>
#include <vector>

#include "koszul/edge_ring.hpp"
#include "koszul/graph.hpp"

namespace koszul {

/// Monomial ideal of the edge ring, held as a finite set of realizable
/// generator multidegrees. The zero ideal is the empty generator set; the
/// unit ideal carries an explicit flag so it cannot be confused with zero.
class MonomialIdeal {
  public:
    static MonomialIdeal zero(int n);
    static MonomialIdeal unit(int n);
    /// Builds from arbitrary generators; a degree-0 generator (the monomial 1)
    /// collapses the ideal to the unit ideal.
    static MonomialIdeal from_generators(int n, std::vector<Multidegree> gens);
    /// The ideal generated by the edge variables of g.
    static MonomialIdeal edge_ideal(const Graph& g);

    int n() const { return n_; }
    bool is_unit() const { return unit_; }
    bool is_zero() const { return !unit_ && gens_.empty(); }
    const std::vector<Multidegree>& generators() const { return gens_; }

    auto operator<=>(const MonomialIdeal&) const = default;

  private:
    int n_ = 0;
    bool unit_ = false;
    std::vector<Multidegree> gens_;  // sorted, no duplicates, all realizable
};

/// A colon problem I : x_e for a single edge variable divisor.
struct ColonSpec {
    MonomialIdeal ideal;
    Edge divisor;
};

/// Monomial membership. In the Z^n-graded edge ring a monomial lies in a
/// monomial ideal iff it is a ring-monomial multiple of some generator.
bool contains(const MonomialIdeal& I, const Multidegree& m);

/// Every realizable m with sum(m) <= 2D such that m + deg(x) lies in I: the
/// degree-D truncation of the monomial set of I : x. Independent of the
/// closed colon forms below; used as their oracle.
std::vector<Multidegree> colon_brute(const MonomialIdeal& I, const Edge& x, int n, int D);
std::vector<Multidegree> colon_brute(const MonomialIdeal& I, const Edge& x,
                                     std::span<const Multidegree> monomial_pool);

/// Closed form for (x_ij) : x_il with the divisor sharing vertex i:
/// generated by { x_pj : p != l, p != j }.
MonomialIdeal colon_same_vertex(int i, int j, int l, int n);

/// Closed form for (x_ij) : x_kl with {i,j} and {k,l} disjoint:
/// generated by x_ij together with { x_ip x_jp : p not in {i,j,k,l} }.
MonomialIdeal colon_disjoint(int i, int j, int k, int l, int n);

/// Dispatch on how e and x overlap: equal -> unit ideal, one shared vertex ->
/// colon_same_vertex, disjoint -> colon_disjoint.
MonomialIdeal colon_principal(const Edge& e, const Edge& x, int n);

/// Degreewise equality: membership agrees on every monomial of degree <= D.
bool equal_up_to(const MonomialIdeal& I, const MonomialIdeal& J, int n, int D);
bool equal_up_to(const MonomialIdeal& I, const MonomialIdeal& J,
                 std::span<const Multidegree> monomial_pool);

/// Drops generators divisible (in the edge ring) by another generator.
MonomialIdeal minimalize(const MonomialIdeal& I);

/// All monomials of degree 0..D, the shared scan pool for degreewise checks.
std::vector<Multidegree> monomial_pool(int n, int D);

}  // namespace koszul
