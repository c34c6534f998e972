#pragma once

#include <optional>
#include <vector>

#include "beilab/errors.hpp"
#include "beilab/graph.hpp"

namespace beilab {

// new_label[v-1] = label that vertex v receives.
struct Labeling {
    std::vector<int> new_label;

    static Labeling identity(int n) {
        Labeling l;
        l.new_label.resize(n);
        for (int v = 1; v <= n; ++v) l.new_label[v - 1] = v;
        return l;
    }

    bool operator==(const Labeling&) const = default;
};

// Violating triple (i,j,k), j < k: {i,j} and {i,k} are edges on the same
// side of i but {j,k} is not an edge.
struct ClosednessWitness {
    int i = 0, j = 0, k = 0;
    bool operator==(const ClosednessWitness&) const = default;
};

// Empty result means g is closed with respect to its given labeling.
inline std::optional<ClosednessWitness> closedness_violation(const Graph& g) {
    const int n = g.vertex_count();
    for (int i = 1; i <= n; ++i) {
        std::vector<int> nb = VertexSet(g.neighbors(i)).to_vector();
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                int j = nb[a], k = nb[b];  // j < k
                bool same_side = (i < j && i < k) || (i > j && i > k);
                if (same_side && !g.has_edge(j, k)) return ClosednessWitness{i, j, k};
            }
    }
    return std::nullopt;
}

inline bool is_closed_wrt_labeling(const Graph& g) { return !closedness_violation(g).has_value(); }

// Every maximal clique is an interval [a,b] of labels.
inline bool facets_are_intervals(const Graph& g) {
    for (const VertexSet& f : maximal_cliques(g)) {
        std::vector<int> vs = f.to_vector();
        if (vs.back() - vs.front() + 1 != static_cast<int>(vs.size())) return false;
    }
    return true;
}

namespace closedness_detail {

// Checks the closed condition restricted to fully-labeled triples that
// involve the most recently labeled vertex v. label_of[u-1] = 0 means
// unassigned; triples among earlier vertices were checked earlier.
inline bool partial_ok(const Graph& g, const std::vector<int>& label_of, int v) {
    const int n = g.vertex_count();
    const int lv = label_of[v - 1];
    std::vector<int> nb;  // labeled neighbours of v
    for (int u = 1; u <= n; ++u)
        if (u != v && label_of[u - 1] != 0 && g.has_edge(u, v)) nb.push_back(u);
    // v as the common vertex of the two edges
    for (std::size_t x = 0; x < nb.size(); ++x)
        for (std::size_t y = x + 1; y < nb.size(); ++y) {
            int la = label_of[nb[x] - 1], lb = label_of[nb[y] - 1];
            bool same_side = (lv < la && lv < lb) || (lv > la && lv > lb);
            if (same_side && !g.has_edge(nb[x], nb[y])) return false;
        }
    // v as an outer vertex: common vertex a, other outer vertex b
    for (int a : nb) {
        int la = label_of[a - 1];
        for (int b = 1; b <= n; ++b) {
            if (b == v || b == a || label_of[b - 1] == 0 || !g.has_edge(a, b)) continue;
            int lb = label_of[b - 1];
            bool same_side = (la < lv && la < lb) || (la > lv && la > lb);
            if (same_side && !g.has_edge(v, b)) return false;
        }
    }
    return true;
}

inline bool dfs_labels(const Graph& g, std::vector<int>& label_of, std::uint32_t used_labels, int next_vertex) {
    const int n = g.vertex_count();
    if (next_vertex > n) return true;
    for (int l = 1; l <= n; ++l) {
        if (used_labels & Graph::bit(l)) continue;
        label_of[next_vertex - 1] = l;
        if (partial_ok(g, label_of, next_vertex) &&
            dfs_labels(g, label_of, used_labels | Graph::bit(l), next_vertex + 1))
            return true;
        label_of[next_vertex - 1] = 0;
    }
    return false;
}

}  // namespace closedness_detail

// Search for a labeling under which g is closed; returns the
// lexicographically smallest new_label vector when one exists. Exhaustive
// depth-first search with violation pruning (n <= 10).
inline std::optional<Labeling> find_closed_labeling(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 10) throw ScaleGuardError("find_closed_labeling: exhaustive mode requires n <= 10");
    if (n == 0) return Labeling{};
    // A closed graph is chordal and claw-free; cheap rejection before the
    // permutation search.
    if (!is_chordal(g) || !is_claw_free(g)) return std::nullopt;
    std::vector<int> label_of(n, 0);
    if (!closedness_detail::dfs_labels(g, label_of, 0, 1)) return std::nullopt;
    return Labeling{label_of};
}

inline bool is_closed(const Graph& g) { return find_closed_labeling(g).has_value(); }

// Certificate: either a closed labeling, or the exhausted search together
// with a structural obstruction (induced claw or chordless cycle) when one
// exists.
struct ClosednessCertificate {
    std::optional<Labeling> labeling;           // set iff closed
    std::optional<VertexSet> claw;              // induced K_{1,3}, when present
    std::optional<VertexSet> chordless_cycle;   // induced cycle of length >= 4, when present

    bool closed() const { return labeling.has_value(); }
};

inline ClosednessCertificate closedness_certificate(const Graph& g) {
    ClosednessCertificate cert;
    cert.labeling = find_closed_labeling(g);
    if (!cert.labeling) {
        auto claws = find_induced_claws(g);
        if (!claws.empty()) cert.claw = claws.front();
        auto cycles = find_induced_cycles_at_least(g, 4);
        if (!cycles.empty()) cert.chordless_cycle = cycles.front();
    }
    return cert;
}

}  // namespace beilab
