#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "beilab/errors.hpp"
#include "beilab/graph.hpp"
#include "beilab/graph_io.hpp"

namespace beilab {

namespace enum_detail {

// Adjacency bitstring in column order (1,2),(1,3),(2,3),(1,4),... packed
// into a uint64 with the first pair in the most significant used bit, so
// integer comparison equals lexicographic string comparison. This is the
// same bit order graph6 uses, so the canonical id below is just the graph6
// encoding of the canonical relabeling.
inline std::uint64_t bits_of(const Graph& g) {
    std::uint64_t bits = 0;
    for (int v = 2; v <= g.vertex_count(); ++v)
        for (int u = 1; u < v; ++u) bits = (bits << 1) | (g.has_edge(u, v) ? 1 : 0);
    return bits;
}

struct CanonSearch {
    const Graph& g;
    int n;
    int total_bits;
    std::uint64_t best;
    std::vector<int> placed;      // placed[k] = original vertex carrying new label k+1
    std::vector<int> best_perm;   // best_perm[v-1] = new label of v

    void run(int depth, std::uint64_t prefix, int prefix_bits, std::uint32_t used) {
        if (depth == n) {
            if (prefix < best) {
                best = prefix;
                best_perm.assign(n, 0);
                for (int k = 0; k < n; ++k) best_perm[placed[k] - 1] = k + 1;
            }
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used & Graph::bit(v)) continue;
            std::uint64_t ext = prefix;
            for (int k = 0; k < depth; ++k) ext = (ext << 1) | (g.has_edge(placed[k], v) ? 1 : 0);
            int ext_bits = prefix_bits + depth;
            // compare against the best string's prefix of the same length
            if (ext > (best >> (total_bits - ext_bits))) continue;
            placed[depth] = v;
            run(depth + 1, ext, ext_bits, used | Graph::bit(v));
        }
    }
};

}  // namespace enum_detail

// Lexicographically minimal adjacency bitstring over all vertex
// permutations, packed as in enum_detail::bits_of.
inline std::uint64_t canonical_bits(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 11) throw ScaleGuardError("canonical_bits: n > 11");
    if (n <= 1) return 0;
    enum_detail::CanonSearch s{g, n, n * (n - 1) / 2, enum_detail::bits_of(g), std::vector<int>(n, 0), {}};
    s.best_perm.assign(n, 0);
    for (int v = 1; v <= n; ++v) s.best_perm[v - 1] = v;
    s.run(0, 0, 0, 0);
    return s.best;
}

// The relabeling of g that achieves the canonical bitstring.
inline Graph canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 11) throw ScaleGuardError("canonical_form: n > 11");
    if (n <= 1) return g;
    enum_detail::CanonSearch s{g, n, n * (n - 1) / 2, enum_detail::bits_of(g), std::vector<int>(n, 0), {}};
    s.best_perm.assign(n, 0);
    for (int v = 1; v <= n; ++v) s.best_perm[v - 1] = v;
    s.run(0, 0, 0, 0);
    return relabel(g, s.best_perm);
}

// graph6 string of the canonical form; stable id for reports.
inline std::string canonical_id(const Graph& g) { return to_graph6(canonical_form(g)); }

// One representative per isomorphism class of simple graphs on n vertices
// (connected or not), grown by vertex augmentation. Sorted by canonical
// bitstring.
inline std::vector<Graph> enumerate_graphs(int n) {
    if (n < 1 || n > 8) throw ScaleGuardError("enumerate_graphs: n must be in 1..8");
    std::vector<Graph> reps = {Graph(1)};
    for (int k = 2; k <= n; ++k) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<std::pair<std::uint64_t, Graph>> next;
        for (const Graph& h : reps) {
            for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
                Graph g(k);
                for (auto [u, v] : h.edges()) g.add_edge(u, v);
                for (int u = 1; u < k; ++u)
                    if (mask & Graph::bit(u)) g.add_edge(u, k);
                Graph canon = canonical_form(g);
                std::uint64_t bits = enum_detail::bits_of(canon);
                if (seen.insert(bits).second) next.emplace_back(bits, canon);
            }
        }
        std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        reps.clear();
        for (auto& [bits, g] : next) reps.push_back(g);
    }
    return reps;
}

inline std::vector<Graph> enumerate_connected_graphs(int n) {
    std::vector<Graph> out;
    for (const Graph& g : enumerate_graphs(n))
        if (is_connected(g)) out.push_back(g);
    return out;
}

}  // namespace beilab
