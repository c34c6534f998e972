#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "beilab/errors.hpp"

namespace beilab {

// Simple undirected graph on vertices 1..n (n <= 16), stored as one
// adjacency bitmask per vertex. All public interfaces are 1-based; bit v-1
// of adj[u-1] is set iff {u,v} is an edge.
class Graph {
public:
    static constexpr int kMaxVertices = 16;

    Graph() = default;
    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxVertices) throw std::invalid_argument("Graph: vertex count out of range");
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    static Graph path(int n) {
        Graph g(n);
        for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
        return g;
    }

    static Graph cycle(int n) {
        Graph g = path(n);
        if (n >= 3) g.add_edge(n, 1);
        return g;
    }

    static Graph complete(int n) {
        Graph g(n);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
        return g;
    }

    // Star K_{1,k} with center 1 and leaves 2..k+1.
    static Graph star(int leaves) {
        Graph g(leaves + 1);
        for (int v = 2; v <= leaves + 1; ++v) g.add_edge(1, v);
        return g;
    }

    int vertex_count() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
        adj_[u - 1] |= bit(v);
        adj_[v - 1] |= bit(u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && (adj_[u - 1] & bit(v)) != 0;
    }

    // Neighbours of v as a bitmask (bit w-1 for vertex w).
    std::uint32_t neighbors(int v) const {
        check_vertex(v);
        return adj_[v - 1];
    }

    int degree(int v) const { return std::popcount(neighbors(v)); }

    int edge_count() const {
        int twice = 0;
        for (int v = 1; v <= n_; ++v) twice += degree(v);
        return twice / 2;
    }

    // Edges {u,v} with u < v in lexicographic order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        for (int u = 1; u <= n_; ++u)
            for (int v = u + 1; v <= n_; ++v)
                if (has_edge(u, v)) es.emplace_back(u, v);
        return es;
    }

    std::uint32_t full_mask() const { return n_ == 32 ? ~0u : ((1u << n_) - 1u); }

    bool operator==(const Graph& o) const {
        if (n_ != o.n_) return false;
        for (int i = 0; i < n_; ++i)
            if (adj_[i] != o.adj_[i]) return false;
        return true;
    }

    static std::uint32_t bit(int v) { return 1u << (v - 1); }

private:
    void check_vertex(int v) const {
        if (v < 1 || v > n_) throw std::invalid_argument("Graph: vertex " + std::to_string(v) + " out of range");
    }

    int n_ = 0;
    std::array<std::uint32_t, kMaxVertices> adj_{};
};

// Subset of {1..n} as a bitmask with 1-based accessors.
struct VertexSet {
    std::uint32_t mask = 0;

    VertexSet() = default;
    explicit VertexSet(std::uint32_t m) : mask(m) {}
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    void add(int v) { mask |= Graph::bit(v); }
    bool contains(int v) const { return (mask & Graph::bit(v)) != 0; }
    int size() const { return std::popcount(mask); }
    bool empty() const { return mask == 0; }
    int min_element() const { return std::countr_zero(mask) + 1; }

    std::vector<int> to_vector() const {
        std::vector<int> vs;
        for (int v = 1; v <= 32 - std::countl_zero(mask | 1u); ++v)
            if (contains(v)) vs.push_back(v);
        return vs;
    }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (int v : to_vector()) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

    bool operator==(const VertexSet&) const = default;
};

namespace graph_detail {

// Vertices reachable from `start` staying inside `allowed`.
inline std::uint32_t reach(const Graph& g, std::uint32_t allowed, int start) {
    std::uint32_t seen = Graph::bit(start) & allowed;
    std::uint32_t frontier = seen;
    while (frontier != 0) {
        std::uint32_t next = 0;
        std::uint32_t f = frontier;
        while (f != 0) {
            int v = std::countr_zero(f) + 1;
            f &= f - 1;
            next |= g.neighbors(v) & allowed;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

inline bool mask_connected(const Graph& g, std::uint32_t mask) {
    if (mask == 0) return true;
    int start = std::countr_zero(mask) + 1;
    return reach(g, mask, start) == mask;
}

// Degree of v inside the induced subgraph on `mask`.
inline int mask_degree(const Graph& g, std::uint32_t mask, int v) {
    return std::popcount(g.neighbors(v) & mask);
}

// True iff the induced subgraph on `mask` is a path (single vertices count,
// length = popcount - 1).
inline bool induces_path(const Graph& g, std::uint32_t mask) {
    int m = std::popcount(mask);
    if (m == 0) return false;
    if (m == 1) return true;
    if (!mask_connected(g, mask)) return false;
    int deg1 = 0;
    std::uint32_t rest = mask;
    while (rest != 0) {
        int v = std::countr_zero(rest) + 1;
        rest &= rest - 1;
        int d = mask_degree(g, mask, v);
        if (d == 1)
            ++deg1;
        else if (d != 2)
            return false;
    }
    return deg1 == 2;
}

// True iff the induced subgraph on `mask` is a cycle.
inline bool induces_cycle(const Graph& g, std::uint32_t mask) {
    int m = std::popcount(mask);
    if (m < 3) return false;
    if (!mask_connected(g, mask)) return false;
    std::uint32_t rest = mask;
    while (rest != 0) {
        int v = std::countr_zero(rest) + 1;
        rest &= rest - 1;
        if (mask_degree(g, mask, v) != 2) return false;
    }
    return true;
}

}  // namespace graph_detail

inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::uint32_t left = g.full_mask();
    while (left != 0) {
        int start = std::countr_zero(left) + 1;
        std::uint32_t comp = graph_detail::reach(g, left, start);
        comps.push_back(VertexSet(comp));
        left &= ~comp;
    }
    // reach() consumes vertices in increasing order, so components are
    // already sorted by minimum element.
    return comps;
}

inline bool is_connected(const Graph& g) {
    return g.vertex_count() == 0 || graph_detail::mask_connected(g, g.full_mask());
}

inline bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

inline Graph complement(const Graph& g) {
    Graph c(g.vertex_count());
    for (int u = 1; u <= g.vertex_count(); ++u)
        for (int v = u + 1; v <= g.vertex_count(); ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

// Induced subgraph on the vertices of `mask`, relabeled 1..|mask| in
// increasing order of original label.
inline Graph induced_subgraph(const Graph& g, std::uint32_t mask) {
    std::vector<int> verts = VertexSet(mask).to_vector();
    Graph h(static_cast<int>(verts.size()));
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (g.has_edge(verts[a], verts[b])) h.add_edge(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
    return h;
}

// Relabel: new_label[v-1] is the label that vertex v receives.
inline Graph relabel(const Graph& g, const std::vector<int>& new_label) {
    if (static_cast<int>(new_label.size()) != g.vertex_count())
        throw std::invalid_argument("relabel: permutation size mismatch");
    Graph h(g.vertex_count());
    for (auto [u, v] : g.edges()) h.add_edge(new_label[u - 1], new_label[v - 1]);
    return h;
}

// Chordality via maximum cardinality search + perfect elimination check.
inline bool is_chordal(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 2) return true;
    std::vector<int> order;  // selection order; reverse is a PEO candidate
    std::vector<int> weight(n + 1, 0);
    std::uint32_t numbered = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 1; v <= n; ++v) {
            if (numbered & Graph::bit(v)) continue;
            if (best == -1 || weight[v] > weight[best]) best = v;
        }
        order.push_back(best);
        numbered |= Graph::bit(best);
        std::uint32_t nb = g.neighbors(best) & ~numbered;
        while (nb != 0) {
            int v = std::countr_zero(nb) + 1;
            nb &= nb - 1;
            ++weight[v];
        }
    }
    // Eliminate in reverse selection order: for each vertex, its
    // already-selected neighbours must form a clique through the latest one.
    std::vector<int> pos(n + 1, 0);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    for (int i = n - 1; i >= 1; --i) {
        int v = order[i];
        std::uint32_t earlier = 0;
        for (int j = 0; j < i; ++j) earlier |= Graph::bit(order[j]);
        std::uint32_t nb = g.neighbors(v) & earlier;
        if (nb == 0) continue;
        int parent = -1;
        std::uint32_t m = nb;
        while (m != 0) {
            int w = std::countr_zero(m) + 1;
            m &= m - 1;
            if (parent == -1 || pos[w] > pos[parent]) parent = w;
        }
        std::uint32_t rest = nb & ~Graph::bit(parent);
        if ((rest & ~g.neighbors(parent)) != 0) return false;
    }
    return true;
}

// Brute-force witness search: some induced cycle of length >= min_len.
inline bool has_induced_cycle_at_least(const Graph& g, int min_len) {
    const std::uint32_t full = g.full_mask();
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) < min_len) continue;
        if (graph_detail::induces_cycle(g, mask)) return true;
    }
    return false;
}

inline std::vector<VertexSet> find_induced_cycles_at_least(const Graph& g, int min_len) {
    std::vector<VertexSet> found;
    const std::uint32_t full = g.full_mask();
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) < min_len) continue;
        if (graph_detail::induces_cycle(g, mask)) found.push_back(VertexSet(mask));
    }
    return found;
}

// Claw = induced K_{1,3}. Returns the vertex set {center, a, b, c} if found.
inline std::vector<VertexSet> find_induced_claws(const Graph& g) {
    std::vector<VertexSet> claws;
    const int n = g.vertex_count();
    for (int c = 1; c <= n; ++c) {
        std::vector<int> nb = VertexSet(g.neighbors(c)).to_vector();
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b)
                for (std::size_t d = b + 1; d < nb.size(); ++d) {
                    if (!g.has_edge(nb[a], nb[b]) && !g.has_edge(nb[a], nb[d]) && !g.has_edge(nb[b], nb[d])) {
                        VertexSet s;
                        s.add(c);
                        s.add(nb[a]);
                        s.add(nb[b]);
                        s.add(nb[d]);
                        claws.push_back(s);
                    }
                }
    }
    return claws;
}

inline bool is_claw_free(const Graph& g) { return find_induced_claws(g).empty(); }

// All maximal cliques, each sorted, the list ordered lexicographically by
// sorted vertex list.
inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    const int n = g.vertex_count();
    if (n == 0) return out;
    // Bron-Kerbosch without pivoting; fine at n <= 16.
    struct Rec {
        const Graph& g;
        std::vector<VertexSet>& out;
        void run(std::uint32_t r, std::uint32_t p, std::uint32_t x) {
            if (p == 0 && x == 0) {
                out.push_back(VertexSet(r));
                return;
            }
            std::uint32_t cand = p;
            while (cand != 0) {
                int v = std::countr_zero(cand) + 1;
                cand &= cand - 1;
                std::uint32_t nb = g.neighbors(v);
                run(r | Graph::bit(v), p & nb, x & nb);
                p &= ~Graph::bit(v);
                x |= Graph::bit(v);
            }
        }
    } rec{g, out};
    rec.run(0, g.full_mask(), 0);
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a.to_vector() < b.to_vector(); });
    return out;
}

inline bool cliques_pairwise_intersect_at_most_one(const Graph& g) {
    auto cliques = maximal_cliques(g);
    for (std::size_t a = 0; a < cliques.size(); ++a)
        for (std::size_t b = a + 1; b < cliques.size(); ++b)
            if (std::popcount(cliques[a].mask & cliques[b].mask) > 1) return false;
    return true;
}

// Length of the longest induced path of a connected graph: exhaustive
// search over vertex subsets, each tested for inducing a path.
inline int longest_induced_path_length(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("longest_induced_path_length: graph must be connected");
    const std::uint32_t full = g.full_mask();
    int best = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        int m = std::popcount(mask);
        if (m - 1 <= best) continue;
        if (graph_detail::induces_path(g, mask)) best = m - 1;
    }
    return best;
}

// Largest number of pairwise disjoint edges spanning an induced subgraph
// with no other edges. Exhaustive branch and bound over edge subsets.
inline int induced_matching_number(const Graph& g) {
    auto es = g.edges();
    const int m = static_cast<int>(es.size());
    if (m == 0) return 0;
    // compatible(e,f): e,f disjoint and no edge of G joins their endpoints.
    std::vector<std::vector<char>> comp(m, std::vector<char>(m, 0));
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            auto [u1, v1] = es[a];
            auto [u2, v2] = es[b];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) continue;
            if (g.has_edge(u1, u2) || g.has_edge(u1, v2) || g.has_edge(v1, u2) || g.has_edge(v1, v2)) continue;
            comp[a][b] = comp[b][a] = 1;
        }
    int best = 0;
    std::vector<int> cand(m);
    for (int i = 0; i < m; ++i) cand[i] = i;
    struct Rec {
        const std::vector<std::vector<char>>& comp;
        int& best;
        void run(const std::vector<int>& cand, int size) {
            if (size + static_cast<int>(cand.size()) <= best) return;
            if (cand.empty()) {
                best = std::max(best, size);
                return;
            }
            for (std::size_t i = 0; i < cand.size(); ++i) {
                if (size + static_cast<int>(cand.size() - i) <= best) return;
                std::vector<int> next;
                for (std::size_t j = i + 1; j < cand.size(); ++j)
                    if (comp[cand[i]][cand[j]]) next.push_back(cand[j]);
                run(next, size + 1);
            }
        }
    } rec{comp, best};
    rec.run(cand, 0);
    return best;
}

// No induced cycle of length >= 5 in the graph or its complement.
inline bool is_weakly_chordal(const Graph& g) {
    return !has_induced_cycle_at_least(g, 5) && !has_induced_cycle_at_least(complement(g), 5);
}

struct GraphStats {
    std::vector<int> ell;  // longest induced path length per component
    int r = 0;             // number of maximal cliques
    bool chordal = false;
    bool claw_free = false;
    bool tree = false;
    bool connected = false;
};

inline GraphStats graph_stats(const Graph& g) {
    GraphStats s;
    for (const VertexSet& comp : connected_components(g))
        s.ell.push_back(longest_induced_path_length(induced_subgraph(g, comp.mask)));
    s.r = static_cast<int>(maximal_cliques(g).size());
    s.chordal = is_chordal(g);
    s.claw_free = is_claw_free(g);
    s.connected = is_connected(g);
    s.tree = is_tree(g);
    return s;
}

// True iff g is a path graph on its n vertices (the paper's "line graph").
inline bool is_path_graph(const Graph& g) {
    return is_connected(g) && graph_detail::induces_path(g, g.full_mask());
}

}  // namespace beilab
