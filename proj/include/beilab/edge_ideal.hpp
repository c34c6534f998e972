#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "beilab/closedness.hpp"
#include "beilab/errors.hpp"
#include "beilab/graph.hpp"
#include "beilab/groebner.hpp"

namespace beilab {

// f_ij = x_i y_j - x_j y_i in the ring on 2n variables.
template <class K>
Poly<K> edge_binomial(int n, int i, int j) {
    PolyRing ring{n, 0};
    if (i > j) std::swap(i, j);
    return Poly<K>::term(ring.x(i) * ring.y(j), K::one()) - Poly<K>::term(ring.x(j) * ring.y(i), K::one());
}

// Generators of the binomial edge ideal J_G: one f_ij per edge {i,j},
// i < j, in lexicographic edge order.
template <class K>
std::vector<Poly<K>> binomial_edge_ideal(const Graph& g) {
    std::vector<Poly<K>> gens;
    for (auto [i, j] : g.edges()) gens.push_back(edge_binomial<K>(g.vertex_count(), i, j));
    return gens;
}

// The bipartite graph on {x_1..x_n} u {y_1..y_n} whose edge ideal equals
// in_lex(J_G) for a graph closed with respect to its labeling. Vertices
// 1..n are x_1..x_n, vertices n+1..2n are y_1..y_n. Rejects labelings that
// are not closed (the identity in_lex(J_G) = I(H) would fail).
inline Graph ini_lex_graph(const Graph& g) {
    if (!is_closed_wrt_labeling(g))
        throw std::invalid_argument("ini_lex_graph: graph is not closed with respect to its labeling");
    const int n = g.vertex_count();
    if (2 * n > Graph::kMaxVertices) throw ScaleGuardError("ini_lex_graph: 2n exceeds vertex limit");
    Graph h(2 * n);
    for (auto [i, j] : g.edges()) h.add_edge(i, n + j);  // i < j
    return h;
}

// Number of connected components of G restricted to [n] minus S.
inline int components_after_deleting(const Graph& g, std::uint32_t s_mask) {
    std::uint32_t left = g.full_mask() & ~s_mask;
    int c = 0;
    while (left != 0) {
        int start = std::countr_zero(left) + 1;
        std::uint32_t comp = graph_detail::reach(g, left, start);
        left &= ~comp;
        ++c;
    }
    return c;
}

// All cut-point sets of a connected graph: S = {} or, for every i in S,
// deleting S minus {i} gives strictly fewer components than deleting S.
// Sorted by (size, sorted vertex list).
inline std::vector<VertexSet> cut_point_sets(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("cut_point_sets: graph must be connected");
    std::vector<VertexSet> out;
    const std::uint32_t full = g.full_mask();
    for (std::uint32_t s = 0; s <= full; ++s) {
        if ((s & ~full) != 0) continue;
        if (s == full && g.vertex_count() > 0) continue;  // c(S) = 0, never qualifies
        bool ok = true;
        if (s != 0) {
            int c = components_after_deleting(g, s);
            std::uint32_t rest = s;
            while (rest != 0) {
                int i = std::countr_zero(rest) + 1;
                rest &= rest - 1;
                if (components_after_deleting(g, s & ~Graph::bit(i)) >= c) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) out.push_back(VertexSet(s));
    }
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.to_vector() < b.to_vector();
    });
    return out;
}

// P_S(G): the cut set S, the connected components of G minus S, and the
// ideal generators ({x_i, y_i : i in S}) + J of the complete graph on each
// component. Singleton components contribute nothing.
struct PrimeComponent {
    VertexSet cut;
    std::vector<VertexSet> components;
};

inline PrimeComponent prime_component_structure(const Graph& g, VertexSet s) {
    PrimeComponent pc;
    pc.cut = s;
    std::uint32_t left = g.full_mask() & ~s.mask;
    while (left != 0) {
        int start = std::countr_zero(left) + 1;
        std::uint32_t comp = graph_detail::reach(g, left, start);
        pc.components.push_back(VertexSet(comp));
        left &= ~comp;
    }
    return pc;
}

template <class K>
std::vector<Poly<K>> prime_component_gens(const Graph& g, VertexSet s) {
    const int n = g.vertex_count();
    PolyRing ring{n, 0};
    PrimeComponent pc = prime_component_structure(g, s);
    std::vector<Poly<K>> gens;
    for (int i : s.to_vector()) {
        gens.push_back(Poly<K>::term(ring.x(i), K::one()));
        gens.push_back(Poly<K>::term(ring.y(i), K::one()));
    }
    for (const VertexSet& comp : pc.components) {
        std::vector<int> vs = comp.to_vector();
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b) gens.push_back(edge_binomial<K>(n, vs[a], vs[b]));
    }
    return gens;
}

// J_G = intersection of P_S(G) over cut-point sets. Full elimination-based
// intersection for n <= 4; for 5 <= n <= 6 only the containment direction
// J_G subset of P_S(G) is checked, for every cut-point S.
template <class K>
bool verify_prime_decomposition(const Graph& g) {
    const int n = g.vertex_count();
    if (!is_connected(g)) throw std::invalid_argument("verify_prime_decomposition: graph must be connected");
    if (n > 6) throw ScaleGuardError("verify_prime_decomposition: n > 6");
    std::vector<VertexSet> cuts = cut_point_sets(g);
    std::vector<Poly<K>> jg = binomial_edge_ideal<K>(g);
    if (n <= 4) {
        std::optional<std::vector<Poly<K>>> inter;
        for (const VertexSet& s : cuts) {
            std::vector<Poly<K>> ps = prime_component_gens<K>(g, s);
            inter = inter ? ideal_intersection(*inter, ps, 2 * n) : ps;
        }
        if (!inter) return jg.empty();
        return ideal_equal(jg, *inter, MonomialOrder{2 * n, 0});
    }
    for (const VertexSet& s : cuts) {
        GroebnerBasis<K> ps = buchberger(prime_component_gens<K>(g, s), MonomialOrder{2 * n, 0});
        for (const auto& f : jg)
            if (!ideal_membership(f, ps)) return false;
    }
    return true;
}

// Greedy leaf order on the facets of the clique complex: repeatedly remove
// a facet whose intersection with the union of the rest lies inside a
// single other facet, ties broken by smallest sorted vertex list. Returned
// in leaf order F_1..F_r, i.e. reverse removal order.
inline std::vector<VertexSet> leaf_order(const Graph& g) {
    std::vector<VertexSet> facets = maximal_cliques(g);
    std::vector<VertexSet> removed;
    std::vector<char> alive(facets.size(), 1);
    for (std::size_t round = 0; round < facets.size(); ++round) {
        int pick = -1;
        for (std::size_t i = 0; i < facets.size(); ++i) {
            if (!alive[i]) continue;
            std::uint32_t rest = 0;
            for (std::size_t j = 0; j < facets.size(); ++j)
                if (j != i && alive[j]) rest |= facets[j].mask;
            std::uint32_t shared = facets[i].mask & rest;
            bool is_leaf = rest == 0;  // final facet
            for (std::size_t j = 0; j < facets.size() && !is_leaf; ++j)
                if (j != i && alive[j] && (shared & ~facets[j].mask) == 0) is_leaf = true;
            if (is_leaf && (pick == -1 || facets[i].to_vector() < facets[static_cast<std::size_t>(pick)].to_vector()))
                pick = static_cast<int>(i);
        }
        if (pick == -1) throw std::invalid_argument("leaf_order: no leaf facet (graph not chordal?)");
        removed.push_back(facets[static_cast<std::size_t>(pick)]);
        alive[static_cast<std::size_t>(pick)] = 0;
    }
    std::reverse(removed.begin(), removed.end());
    return removed;
}

// The cut vertex of the last facet in the greedy leaf order: the unique
// vertex in which the leaf meets the rest of the complex. Empty for a
// single-facet graph.
inline std::optional<int> leaf_cut_vertex(const Graph& g) {
    std::vector<VertexSet> order = leaf_order(g);
    if (order.size() <= 1) return std::nullopt;
    std::uint32_t rest = 0;
    for (std::size_t j = 0; j + 1 < order.size(); ++j) rest |= order[j].mask;
    std::uint32_t shared = order.back().mask & rest;
    if (std::popcount(shared) != 1) return std::nullopt;
    return std::countr_zero(shared) + 1;
}

// Q1/Q2 decomposition at a vertex i: Q1 intersects the minimal primes
// P_S(G) with i not in S, Q2 those with i in S; the empty intersection is
// the unit ideal. Checks J_G = Q1 cap Q2 and, when the merged-clique graph
// G' is defined, Q1 + Q2 = (x_i, y_i) + J_{G'}.
template <class K>
struct QDecomposition {
    std::vector<Poly<K>> q1, q2;
    bool q1_is_unit = false, q2_is_unit = false;
    bool intersection_equals_jg = false;
    bool sum_identity = false;
};

template <class K>
QDecomposition<K> q1_q2_decomposition(const Graph& g, int i) {
    const int n = g.vertex_count();
    if (n > 4) throw ScaleGuardError("q1_q2_decomposition: n > 4");
    if (!is_connected(g) || !is_chordal(g) || !cliques_pairwise_intersect_at_most_one(g))
        throw std::invalid_argument("q1_q2_decomposition: graph must be connected chordal with clique intersections <= 1");
    std::vector<VertexSet> facets = maximal_cliques(g);
    std::optional<VertexSet> leaf_at_i;
    if (facets.size() > 1) {
        // i must be the vertex in which some leaf facet meets the rest
        for (std::size_t f = 0; f < facets.size() && !leaf_at_i; ++f) {
            std::uint32_t rest = 0;
            for (std::size_t j = 0; j < facets.size(); ++j)
                if (j != f) rest |= facets[j].mask;
            std::uint32_t shared = facets[f].mask & rest;
            bool leaf = false;
            for (std::size_t j = 0; j < facets.size() && !leaf; ++j)
                if (j != f && (shared & ~facets[j].mask) == 0) leaf = true;
            if (leaf && shared == Graph::bit(i)) leaf_at_i = facets[f];
        }
        if (!leaf_at_i) throw std::invalid_argument("q1_q2_decomposition: vertex is not a leaf-clique cut vertex");
    }

    const MonomialOrder order{2 * n, 0};
    QDecomposition<K> dec;
    std::optional<std::vector<Poly<K>>> q1, q2;
    for (const VertexSet& s : cut_point_sets(g)) {
        std::vector<Poly<K>> ps = prime_component_gens<K>(g, s);
        auto& target = s.contains(i) ? q2 : q1;
        target = target ? ideal_intersection(*target, ps, 2 * n) : ps;
    }
    const Poly<K> unit = Poly<K>::constant(2 * n, K::one());
    dec.q1_is_unit = !q1.has_value();
    dec.q2_is_unit = !q2.has_value();
    dec.q1 = q1.value_or(std::vector<Poly<K>>{unit});
    dec.q2 = q2.value_or(std::vector<Poly<K>>{unit});

    std::vector<Poly<K>> jg = binomial_edge_ideal<K>(g);
    std::vector<Poly<K>> q1q2 = ideal_intersection(dec.q1, dec.q2, 2 * n);
    dec.intersection_equals_jg = ideal_equal(jg, q1q2, order);

    if (facets.size() <= 1) {
        dec.sum_identity = true;  // degenerate: Q2 is the unit ideal
        return dec;
    }
    // G': merge the leaf facet met at i with all facets containing i.
    std::uint32_t merged = leaf_at_i->mask;
    for (const VertexSet& f : facets)
        if (f.contains(i)) merged |= f.mask;
    Graph gp(n);
    for (const VertexSet& f : facets) {
        if ((f.mask & ~merged) == 0) continue;  // absorbed into the merged clique
        std::vector<int> vs = f.to_vector();
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b) gp.add_edge(vs[a], vs[b]);
    }
    {
        std::vector<int> vs = VertexSet(merged).to_vector();
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b) gp.add_edge(vs[a], vs[b]);
    }
    PolyRing ring{n, 0};
    std::vector<Poly<K>> rhs = binomial_edge_ideal<K>(gp);
    rhs.push_back(Poly<K>::term(ring.x(i), K::one()));
    rhs.push_back(Poly<K>::term(ring.y(i), K::one()));
    dec.sum_identity = ideal_equal(ideal_sum(dec.q1, dec.q2), rhs, order);
    return dec;
}

}  // namespace beilab
