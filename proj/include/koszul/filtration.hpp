#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "koszul/graph.hpp"
#include "koszul/ideal.hpp"

namespace koszul {

/// Largest n for exhaustive family enumeration (2^C(n,2) candidate subsets).
inline constexpr int kDefaultFamilyBound = 7;

struct EdgeDistanceCertificate {
    int disjoint_pairs_checked = 0;
    bool ok = true;
};

EdgeDistanceCertificate edge_distance_certificate(const Graph& g);

/// A member of the family F_n of connected chordal subgraphs of K_n that
/// satisfy the edge-distance condition, together with its certification data.
struct FamilyMember {
    Graph graph;
    Peo peo;  // empty for the empty graph
    EdgeDistanceCertificate certificate;
};

/// Empty, or connected and chordal and edge-distance.
bool is_family_member(const Graph& g);

/// All labeled subgraphs of K_n (including the empty one) passing
/// is_family_member, ordered by edge-subset bitmask over the lexicographic
/// edge order of K_n.
std::vector<FamilyMember> enumerate_family(int n, int bound = kDefaultFamilyBound);

struct IsoClass {
    Graph representative;  // first member encountered in enumeration order
    CanonicalForm form;
    int count = 0;
};

/// Groups members by canonical form; classes sorted by form.
std::vector<IsoClass> iso_classes(const std::vector<FamilyMember>& members);

/// The removal pair (v, i): v is the final vertex of the member's elimination
/// order (hence simplicial), i the smallest-labeled neighbour of v.
std::pair<int, int> descent_edge(const FamilyMember& h);

/// The graph J on [n] whose edge ideal realizes the colon I_K : x_vi:
/// E(J) = {{q,l} : q in N_K(i), l != v, l != q} u {{v,p} : p in N_K(v)}.
Graph annihilator_graph(const Graph& k, int v, int i, int n);

/// Outcome of checking one descent step H -> K = H minus {v,i}.
struct StepVerdict {
    Graph h;
    std::pair<int, int> e{0, 0};  // (v, i)
    Graph k;
    Graph j;
    bool swept = false;  // probed under the all-pairs sweep, not the primary pair
    bool h_in_family = true;
    bool k_in_family = true;
    bool j_in_family = true;
    bool exact_ok = true;      // I_J * x_vi contained in I_K, generator by generator
    bool truncated_ok = true;  // I_J equals the brute colon of I_K by x_vi up to D
    bool decomposition_ok = true;

    bool ok() const {
        return h_in_family && k_in_family && j_in_family && exact_ok &&
               truncated_ok && decomposition_ok;
    }
};

struct VerificationReport {
    int n = 0;
    int degree_bound = 0;
    std::size_t family_size = 0;
    std::size_t iso_class_count = 0;  // nonempty isomorphism classes
    bool zero_in_family = false;
    bool maximal_in_family = false;
    std::vector<StepVerdict> steps;
    std::vector<std::string> counterexamples;
    double elapsed_seconds = 0.0;  // diagnostic only, never serialized
    bool verdict = false;
};

/// Closure of the family under descent: every nonempty member H has
/// H minus descent_edge(H) again in the family.
VerificationReport verify_descent_closure(int n, int bound = kDefaultFamilyBound);

/// The full filtration check over F_n: the empty graph and K_n are members,
/// every nonempty member descends inside the family, its annihilator graph is
/// a member, the exact inclusion certificate holds, and the colon matches the
/// brute-force truncation up to degree D. With sweep set, every simplicial
/// vertex / neighbour pair is probed, not just the canonical one.
VerificationReport verify_filtration(int n, int D, bool sweep = false,
                                     int bound = kDefaultFamilyBound);

/// Same step checks as verify_filtration, run over an arbitrary candidate
/// list; candidates need not be family members, so failures are reportable.
VerificationReport verify_members(const std::vector<Graph>& candidates, int n, int D,
                                  bool sweep = false);

/// Per-claim outcome of the colon decomposition argument for one step.
struct DecompositionVerdict {
    bool principal_colons_ok = false;  // each (x_rs):x_vi inside sum_q (x_iq):x_vi
    bool neighbor_subset_ok = false;   // N_K(v) subset of N_K(i)
    bool matches_annihilator = false;  // assembled linear generators give I_J

    bool ok() const {
        return principal_colons_ok && neighbor_subset_ok && matches_annihilator;
    }
};

DecompositionVerdict check_decomposition_step(const Graph& k, int v, int i, int n, int D);

/// Runs check_decomposition_step over every descent step of F_n.
VerificationReport verify_colon_decomposition(int n, int D, int bound = kDefaultFamilyBound);

}  // namespace koszul
