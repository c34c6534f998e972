#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "beilab/graph_enum.hpp"

using namespace beilab;

namespace {

// Independent enumeration oracle: all edge masks, canonicalized by direct
// minimum over every permutation.
std::set<std::uint64_t> all_classes_brute(int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::set<std::uint64_t> classes;
    const int m = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int v = 2; v <= n; ++v)
        for (int u = 1; u < v; ++u) pairs.emplace_back(u, v);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        Graph g(n);
        for (int k = 0; k < m; ++k)
            if (mask & (1u << k)) g.add_edge(pairs[k].first, pairs[k].second);
        std::uint64_t best = ~0ull;
        std::sort(perm.begin(), perm.end());
        do {
            Graph h = relabel(g, perm);
            std::uint64_t bits = 0;
            for (int v = 2; v <= n; ++v)
                for (int u = 1; u < v; ++u) bits = (bits << 1) | (h.has_edge(u, v) ? 1 : 0);
            best = std::min(best, bits);
        } while (std::next_permutation(perm.begin(), perm.end()));
        classes.insert(best);
    }
    return classes;
}

}  // namespace

TEST_CASE("enumeration counts for small n") {
    CHECK(enumerate_connected_graphs(1).size() == 1);
    CHECK(enumerate_connected_graphs(2).size() == 1);
    CHECK(enumerate_connected_graphs(3).size() == 2);
    CHECK(enumerate_connected_graphs(4).size() == 6);
    CHECK(enumerate_connected_graphs(5).size() == 21);
    CHECK(enumerate_graphs(4).size() == 11);
    CHECK_THROWS_AS(enumerate_graphs(0), ScaleGuardError);
    CHECK_THROWS_AS(enumerate_graphs(9), ScaleGuardError);
}

TEST_CASE("enumeration agrees with the brute-force permutation oracle") {
    for (int n = 1; n <= 5; ++n) {
        std::set<std::uint64_t> brute = all_classes_brute(n);
        std::set<std::uint64_t> mine;
        for (const Graph& g : enumerate_graphs(n)) mine.insert(enum_detail::bits_of(g));
        CHECK(mine == brute);
    }
}

TEST_CASE("representatives are canonical and pairwise distinct") {
    for (int n = 2; n <= 6; ++n) {
        std::set<std::uint64_t> seen;
        for (const Graph& g : enumerate_graphs(n)) {
            CHECK(canonical_bits(g) == enum_detail::bits_of(g));
            CHECK(seen.insert(enum_detail::bits_of(g)).second);
        }
    }
}

TEST_CASE("canonical form is relabeling-invariant") {
    std::mt19937 rng(20240811);
    for (const Graph& g : enumerate_connected_graphs(6)) {
        std::vector<int> perm(6);
        for (int i = 0; i < 6; ++i) perm[i] = i + 1;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_bits(relabel(g, perm)) == canonical_bits(g));
    }
}

TEST_CASE("n = 3 representatives are the path and the triangle") {
    auto graphs = enumerate_connected_graphs(3);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0].edge_count() == 2);
    CHECK(graphs[1].edge_count() == 3);
}

TEST_CASE("connected counts at n = 6 and 7 match the literature") {
    CHECK(enumerate_connected_graphs(6).size() == 112);
    CHECK(enumerate_connected_graphs(7).size() == 853);
}
