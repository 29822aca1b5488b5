#include "koszul/filtration.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <sstream>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

std::string edges_to_string(const Graph& g) {
    std::ostringstream os;
    os << "{";
    for (size_t t = 0; t < g.edges().size(); ++t) {
        if (t) os << ",";
        os << g.edges()[t].u << "-" << g.edges()[t].v;
    }
    os << "}";
    return os.str();
}

// All per-step checks for the removal pair (v, i) of h.
StepVerdict check_step(const Graph& h, int v, int i, std::span<const Multidegree> pool) {
    const int n = h.n();
    StepVerdict s;
    s.h = h;
    s.e = {v, i};
    s.h_in_family = is_family_member(h);
    s.k = h.remove_edge(Edge(v, i));
    s.k_in_family = is_family_member(s.k);
    s.j = annihilator_graph(s.k, v, i, n);
    s.j_in_family = is_family_member(s.j);

    const auto ideal_k = MonomialIdeal::edge_ideal(s.k);
    const auto ideal_j = MonomialIdeal::edge_ideal(s.j);
    const auto xd = edge_multidegree(Edge(v, i), n);

    // exact inclusion certificate: g * x_vi in I_K for every generator g of I_J
    s.exact_ok = true;
    for (const Multidegree& g : ideal_j.generators()) {
        if (!contains(ideal_k, g.plus(xd))) {
            s.exact_ok = false;
            break;
        }
    }

    // reverse inclusion, truncated: I_J agrees degreewise with the ideal
    // generated by the brute-force colon monomials
    const auto brute = colon_brute(ideal_k, Edge(v, i), pool);
    const auto brute_ideal = minimalize(MonomialIdeal::from_generators(n, brute));
    s.truncated_ok = equal_up_to(ideal_j, brute_ideal, pool);
    return s;
}

void note_failures(const StepVerdict& s, std::vector<std::string>& out) {
    if (s.ok()) return;
    std::ostringstream os;
    os << "H=" << edges_to_string(s.h) << " (v,i)=(" << s.e.first << "," << s.e.second << "):";
    if (!s.h_in_family) os << " H not in family;";
    if (!s.k_in_family) os << " K not in family;";
    if (!s.j_in_family) os << " annihilator graph not in family;";
    if (!s.exact_ok) os << " exact inclusion certificate failed;";
    if (!s.truncated_ok) os << " truncated colon equality failed;";
    if (!s.decomposition_ok) os << " colon decomposition failed;";
    out.push_back(os.str());
}

std::pair<int, int> descent_pair(const Graph& g, const Peo& peo) {
    const int v = peo.back();
    return {v, g.neighbors(v).front()};
}

// Descent step plus, under sweep, every simplicial vertex / neighbour pair.
void verify_steps_into(VerificationReport& r, const Graph& h, const Peo& peo,
                       std::span<const Multidegree> pool, bool sweep) {
    const auto [v, i] = descent_pair(h, peo);
    StepVerdict s = check_step(h, v, i, pool);
    note_failures(s, r.counterexamples);
    r.steps.push_back(std::move(s));
    if (!sweep) return;
    for (int v2 : h.support()) {
        if (!h.is_simplicial(v2)) continue;
        for (int i2 : h.neighbors(v2)) {
            if (v2 == v && i2 == i) continue;
            StepVerdict s2 = check_step(h, v2, i2, pool);
            s2.swept = true;
            note_failures(s2, r.counterexamples);
            r.steps.push_back(std::move(s2));
        }
    }
}

std::size_t count_nonempty_iso_classes(const std::vector<FamilyMember>& fam) {
    std::vector<FamilyMember> nonempty;
    for (const auto& m : fam) {
        if (!m.graph.empty()) nonempty.push_back(m);
    }
    return iso_classes(nonempty).size();
}

void finish_report(VerificationReport& r, clock_type::time_point start) {
    bool all_ok = true;
    for (const StepVerdict& s : r.steps) all_ok = all_ok && s.ok();
    r.verdict = all_ok && r.zero_in_family && r.maximal_in_family;
    r.elapsed_seconds = seconds_since(start);
}

DecompositionVerdict decomposition_step(const Graph& k, int v, int i, int n,
                                        std::span<const Multidegree> pool) {
    DecompositionVerdict d;
    const auto nb_i = k.neighbors(i);
    const auto nb_v = k.neighbors(v);

    d.neighbor_subset_ok =
        std::includes(nb_i.begin(), nb_i.end(), nb_v.begin(), nb_v.end());

    // right side of the containment: sum over q in N_K(i) of (x_iq):x_vi
    std::vector<Multidegree> right_gens;
    for (int q : nb_i) {
        const auto part = colon_same_vertex(i, q, v, n);
        right_gens.insert(right_gens.end(), part.generators().begin(),
                          part.generators().end());
    }
    const auto right = MonomialIdeal::from_generators(n, right_gens);

    d.principal_colons_ok = true;
    for (const Edge& e : k.edges()) {
        if (e.touches(v) || e.touches(i)) continue;
        const auto left = colon_principal(e, Edge(v, i), n);
        for (const Multidegree& m : pool) {
            if (contains(left, m) && !contains(right, m)) {
                d.principal_colons_ok = false;
                break;
            }
        }
        if (!d.principal_colons_ok) break;
    }

    // assembling the closed forms must reproduce the annihilator graph's ideal
    std::vector<Multidegree> assembled = std::move(right_gens);
    for (int p : nb_v) assembled.push_back(edge_multidegree(Edge(v, p), n));
    d.matches_annihilator =
        MonomialIdeal::from_generators(n, std::move(assembled)) ==
        MonomialIdeal::edge_ideal(annihilator_graph(k, v, i, n));
    return d;
}

}  // namespace

EdgeDistanceCertificate edge_distance_certificate(const Graph& g) {
    EdgeDistanceCertificate cert;
    const auto& edges = g.edges();
    for (size_t a = 0; a < edges.size(); ++a) {
        for (size_t b = a + 1; b < edges.size(); ++b) {
            const Edge& e = edges[a];
            const Edge& f = edges[b];
            if (!e.disjoint_from(f)) continue;
            ++cert.disjoint_pairs_checked;
            if (!g.has_edge(e.u, f.u) && !g.has_edge(e.u, f.v) && !g.has_edge(e.v, f.u) &&
                !g.has_edge(e.v, f.v)) {
                cert.ok = false;
            }
        }
    }
    return cert;
}

bool is_family_member(const Graph& g) {
    if (g.empty()) return true;
    return g.is_connected() && g.edge_distance_condition() && is_chordal(g);
}

std::vector<FamilyMember> enumerate_family(int n, int bound) {
    if (n < 1) throw input_error("family enumeration needs n >= 1");
    if (n > bound) {
        throw capability_error("family enumeration bounded at n = " + std::to_string(bound) +
                               ", got n = " + std::to_string(n));
    }
    const Graph kn = complete_graph(n);
    const auto& all_edges = kn.edges();
    const int m = static_cast<int>(all_edges.size());
    if (m >= 63) throw capability_error("edge-subset bitmask would overflow");

    std::vector<FamilyMember> fam;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<Edge> edges;
        for (int t = 0; t < m; ++t) {
            if (mask >> t & 1) edges.push_back(all_edges[t]);
        }
        Graph g(n, std::move(edges));
        if (!g.is_connected()) continue;
        const auto cert = edge_distance_certificate(g);
        if (!cert.ok) continue;
        auto peo = find_peo(g);
        if (!peo) continue;
        fam.push_back({std::move(g), std::move(*peo), cert});
    }
    return fam;
}

std::vector<IsoClass> iso_classes(const std::vector<FamilyMember>& members) {
    std::map<CanonicalForm, IsoClass> classes;
    for (const FamilyMember& m : members) {
        auto form = canonical_form(m.graph);
        auto it = classes.find(form);
        if (it == classes.end()) {
            classes.emplace(form, IsoClass{m.graph, form, 1});
        } else {
            ++it->second.count;
        }
    }
    std::vector<IsoClass> out;
    out.reserve(classes.size());
    for (auto& [form, cls] : classes) out.push_back(std::move(cls));
    return out;
}

std::pair<int, int> descent_edge(const FamilyMember& h) {
    if (h.graph.empty()) throw input_error("the empty graph has no descent edge");
    if (h.peo.empty()) throw input_error("family member lacks an elimination order");
    return descent_pair(h.graph, h.peo);
}

Graph annihilator_graph(const Graph& k, int v, int i, int n) {
    if (k.n() != n) throw input_error("ambient vertex count mismatch");
    if (v < 1 || v > n || i < 1 || i > n || v == i) {
        throw input_error("descent pair must be two distinct vertices in 1..n");
    }
    std::vector<Edge> edges;
    for (int q : k.neighbors(i)) {
        for (int l = 1; l <= n; ++l) {
            if (l != v && l != q) edges.emplace_back(q, l);
        }
    }
    for (int p : k.neighbors(v)) edges.emplace_back(v, p);
    return Graph(n, std::move(edges));
}

VerificationReport verify_descent_closure(int n, int bound) {
    const auto start = clock_type::now();
    VerificationReport r;
    r.n = n;
    r.degree_bound = 0;  // no ideal arithmetic in this run
    const auto fam = enumerate_family(n, bound);
    r.family_size = fam.size();
    r.iso_class_count = count_nonempty_iso_classes(fam);
    r.zero_in_family = is_family_member(Graph(n, {}));
    r.maximal_in_family = is_family_member(complete_graph(n));
    for (const FamilyMember& m : fam) {
        if (m.graph.empty()) continue;
        const auto [v, i] = descent_edge(m);
        StepVerdict s;
        s.h = m.graph;
        s.e = {v, i};
        s.k = m.graph.remove_edge(Edge(v, i));
        s.j = Graph(n, {});
        s.k_in_family = is_family_member(s.k);
        note_failures(s, r.counterexamples);
        r.steps.push_back(std::move(s));
    }
    finish_report(r, start);
    return r;
}

VerificationReport verify_filtration(int n, int D, bool sweep, int bound) {
    if (D < 2) throw input_error("filtration verification needs degree bound >= 2");
    const auto start = clock_type::now();
    VerificationReport r;
    r.n = n;
    r.degree_bound = D;
    const auto fam = enumerate_family(n, bound);
    r.family_size = fam.size();
    r.iso_class_count = count_nonempty_iso_classes(fam);
    r.zero_in_family = is_family_member(Graph(n, {}));
    r.maximal_in_family = is_family_member(complete_graph(n));
    const auto pool = monomial_pool(n, D);
    for (const FamilyMember& m : fam) {
        if (m.graph.empty()) continue;
        verify_steps_into(r, m.graph, m.peo, pool, sweep);
    }
    finish_report(r, start);
    return r;
}

VerificationReport verify_members(const std::vector<Graph>& candidates, int n, int D,
                                  bool sweep) {
    if (D < 2) throw input_error("filtration verification needs degree bound >= 2");
    const auto start = clock_type::now();
    VerificationReport r;
    r.n = n;
    r.degree_bound = D;
    r.family_size = candidates.size();
    r.zero_in_family = is_family_member(Graph(n, {}));
    r.maximal_in_family = is_family_member(complete_graph(n));
    const auto pool = monomial_pool(n, D);
    for (const Graph& g : candidates) {
        if (g.n() != n) throw input_error("candidate ambient vertex count mismatch");
        if (g.empty()) continue;
        const auto peo = find_peo(g);
        if (!peo) {
            // no elimination order, so no descent step to check
            StepVerdict s;
            s.h = g;
            s.k = g;
            s.j = Graph(n, {});
            s.h_in_family = false;
            note_failures(s, r.counterexamples);
            r.steps.push_back(std::move(s));
            continue;
        }
        verify_steps_into(r, g, *peo, pool, sweep);
    }
    finish_report(r, start);
    return r;
}

DecompositionVerdict check_decomposition_step(const Graph& k, int v, int i, int n, int D) {
    if (D < 1) throw input_error("decomposition check needs degree bound >= 1");
    const auto pool = monomial_pool(n, D);
    return decomposition_step(k, v, i, n, pool);
}

VerificationReport verify_colon_decomposition(int n, int D, int bound) {
    if (D < 2) throw input_error("decomposition verification needs degree bound >= 2");
    const auto start = clock_type::now();
    VerificationReport r;
    r.n = n;
    r.degree_bound = D;
    const auto fam = enumerate_family(n, bound);
    r.family_size = fam.size();
    r.iso_class_count = count_nonempty_iso_classes(fam);
    r.zero_in_family = is_family_member(Graph(n, {}));
    r.maximal_in_family = is_family_member(complete_graph(n));
    const auto pool = monomial_pool(n, D);
    for (const FamilyMember& m : fam) {
        if (m.graph.empty()) continue;
        const auto [v, i] = descent_edge(m);
        StepVerdict s;
        s.h = m.graph;
        s.e = {v, i};
        s.k = m.graph.remove_edge(Edge(v, i));
        s.j = annihilator_graph(s.k, v, i, n);
        s.k_in_family = is_family_member(s.k);
        s.j_in_family = is_family_member(s.j);
        const auto d = decomposition_step(s.k, v, i, n, pool);
        s.decomposition_ok = d.ok();
        if (!d.ok()) {
            std::ostringstream os;
            os << "H=" << edges_to_string(s.h) << " (v,i)=(" << v << "," << i << "):";
            if (!d.principal_colons_ok) os << " principal colon containment failed;";
            if (!d.neighbor_subset_ok) os << " N_K(v) not contained in N_K(i);";
            if (!d.matches_annihilator) os << " assembled colon differs from annihilator ideal;";
            r.counterexamples.push_back(os.str());
        }
        r.steps.push_back(std::move(s));
    }
    finish_report(r, start);
    return r;
}

}  // namespace koszul
