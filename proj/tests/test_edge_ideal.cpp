#include <catch2/catch_amalgamated.hpp>

#include "beilab/edge_ideal.hpp"
#include "beilab/graph_enum.hpp"

using namespace beilab;
using F = Gf<32003>;

TEST_CASE("binomial edge ideal generators") {
    PolyRing ring2{2, 0};
    auto single = binomial_edge_ideal<F>(Graph::from_edges(2, {{1, 2}}));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == parse_poly<F>("x1*y2 - x2*y1", ring2));

    // K_n: all 2-minors of the 2 x n matrix
    for (int n = 2; n <= 5; ++n) {
        auto gens = binomial_edge_ideal<F>(Graph::complete(n));
        CHECK(gens.size() == static_cast<std::size_t>(n * (n - 1) / 2));
        PolyRing ring{n, 0};
        std::size_t idx = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                Poly<F> minor = Poly<F>::term(ring.x(i) * ring.y(j), 1) - Poly<F>::term(ring.x(j) * ring.y(i), 1);
                CHECK(gens[idx++] == minor);
            }
    }

    auto p3 = binomial_edge_ideal<F>(Graph::path(3));
    CHECK(p3.size() == 2);
}

TEST_CASE("in_lex bipartite graph") {
    Graph h = ini_lex_graph(Graph::path(3));  // x_i = vertex i, y_j = vertex 3 + j
    CHECK(h.vertex_count() == 6);
    CHECK(h.edge_count() == 2);
    CHECK(h.has_edge(1, 3 + 2));
    CHECK(h.has_edge(2, 3 + 3));

    Graph k3 = ini_lex_graph(Graph::complete(3));
    CHECK(k3.edge_count() == 3);
    CHECK(k3.has_edge(1, 3 + 2));
    CHECK(k3.has_edge(1, 3 + 3));
    CHECK(k3.has_edge(2, 3 + 3));

    CHECK(ini_lex_graph(Graph::from_edges(2, {{1, 2}})).has_edge(1, 2 + 2));
    CHECK_THROWS_AS(ini_lex_graph(Graph::star(3)), std::invalid_argument);
}

TEST_CASE("in_lex graph edge ideal equals the computed initial ideal for closed labelings") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : enumerate_connected_graphs(n)) {
            auto lab = find_closed_labeling(g);
            if (!lab) continue;
            Graph gc = relabel(g, lab->new_label);
            Graph h = ini_lex_graph(gc);
            GroebnerBasis<F> gb = buchberger(binomial_edge_ideal<F>(gc));
            std::vector<Monomial> in_lex = initial_ideal(gb);
            PolyRing ring{n, 0};
            std::vector<Monomial> from_h;
            for (auto [u, v] : h.edges()) from_h.push_back(ring.x(u) * ring.y(v - n));
            std::sort(from_h.begin(), from_h.end(), LexGreater{});
            CHECK(in_lex == from_h);
        }
}

TEST_CASE("cut-point sets") {
    for (int n = 2; n <= 5; ++n) CHECK(cut_point_sets(Graph::complete(n)) == std::vector<VertexSet>{VertexSet()});
    CHECK(cut_point_sets(Graph::path(3)) == std::vector<VertexSet>{VertexSet(), VertexSet::of({2})});
    CHECK(cut_point_sets(Graph::path(4)) ==
          std::vector<VertexSet>{VertexSet(), VertexSet::of({2}), VertexSet::of({3})});
    CHECK_THROWS_AS(cut_point_sets(Graph(3)), std::invalid_argument);
}

TEST_CASE("cut-point filter agrees with the quantified definition") {
    for (const Graph& g : enumerate_connected_graphs(5)) {
        auto cuts = cut_point_sets(g);
        auto is_listed = [&](std::uint32_t mask) {
            for (const auto& s : cuts)
                if (s.mask == mask) return true;
            return false;
        };
        for (std::uint32_t s = 0; s < (1u << 5); ++s) {
            bool expected = true;
            if (s == g.full_mask()) expected = false;
            if (s != 0 && expected) {
                int c = components_after_deleting(g, s);
                for (int i = 1; i <= 5 && expected; ++i)
                    if (s & Graph::bit(i))
                        if (components_after_deleting(g, s & ~Graph::bit(i)) >= c) expected = false;
            }
            CHECK(is_listed(s) == expected);
        }
    }
}

TEST_CASE("prime component generators") {
    PolyRing ring{3, 0};
    Graph p3 = Graph::path(3);
    auto empty_cut = prime_component_gens<F>(p3, VertexSet());
    CHECK(empty_cut.size() == 3);  // J of the completed component = all f_ij on {1,2,3}

    auto cut2 = prime_component_gens<F>(p3, VertexSet::of({2}));
    REQUIRE(cut2.size() == 2);  // components {1},{3} are singletons
    CHECK(cut2[0] == Poly<F>::term(ring.x(2), 1));
    CHECK(cut2[1] == Poly<F>::term(ring.y(2), 1));

    auto k3 = prime_component_gens<F>(Graph::complete(3), VertexSet());
    CHECK(ideal_equal(k3, binomial_edge_ideal<F>(Graph::complete(3))));

    PrimeComponent pc = prime_component_structure(p3, VertexSet::of({2}));
    CHECK(pc.components == std::vector<VertexSet>{VertexSet::of({1}), VertexSet::of({3})});
}

TEST_CASE("prime decomposition") {
    CHECK(verify_prime_decomposition<F>(Graph::complete(3)));
    CHECK(verify_prime_decomposition<F>(Graph::path(3)));
    CHECK(verify_prime_decomposition<F>(Graph::star(3)));
    CHECK(verify_prime_decomposition<F>(Graph::cycle(4)));
    // containment-only mode
    CHECK(verify_prime_decomposition<F>(Graph::path(5)));
    CHECK_THROWS_AS(verify_prime_decomposition<F>(Graph::path(7)), ScaleGuardError);
}

TEST_CASE("J_G lies in every P_S(G), cut set or not (n <= 5)") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : enumerate_connected_graphs(n)) {
            auto jg = binomial_edge_ideal<F>(g);
            for (std::uint32_t s = 0; s < (1u << n); ++s) {
                GroebnerBasis<F> ps = buchberger(prime_component_gens<F>(g, VertexSet(s)));
                for (const auto& f : jg) CHECK(ideal_membership(f, ps));
            }
        }
}

TEST_CASE("leaf order and leaf cut vertex") {
    Graph paw = Graph::from_edges(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});
    auto order = leaf_order(paw);
    REQUIRE(order.size() == 2);
    CHECK(order.back() == VertexSet::of({1, 2, 3}));  // smallest-sorted-list leaf removed first
    CHECK(leaf_cut_vertex(paw) == 3);
    CHECK_FALSE(leaf_cut_vertex(Graph::complete(4)).has_value());
    CHECK(leaf_cut_vertex(Graph::path(3)) == 2);
}

TEST_CASE("Q1/Q2 decomposition") {
    // path 1-2-3 at the cut vertex 2: Q1 = J_{K3}, Q2 = (x2, y2)
    Graph p3 = Graph::path(3);
    QDecomposition<F> dec = q1_q2_decomposition<F>(p3, 2);
    CHECK(ideal_equal(dec.q1, binomial_edge_ideal<F>(Graph::complete(3))));
    PolyRing ring{3, 0};
    CHECK(ideal_equal(dec.q2, std::vector<Poly<F>>{Poly<F>::term(ring.x(2), 1), Poly<F>::term(ring.y(2), 1)}));
    CHECK(dec.intersection_equals_jg);
    CHECK(dec.sum_identity);

    // single edge: only the empty cut set qualifies, so Q2 is the unit ideal
    QDecomposition<F> edge = q1_q2_decomposition<F>(Graph::from_edges(2, {{1, 2}}), 1);
    CHECK(edge.q2_is_unit);
    CHECK(ideal_equal(edge.q1, binomial_edge_ideal<F>(Graph::from_edges(2, {{1, 2}}))));
    CHECK(edge.intersection_equals_jg);

    // star at the center
    QDecomposition<F> star = q1_q2_decomposition<F>(Graph::star(3), 1);
    CHECK(star.intersection_equals_jg);
    CHECK(star.sum_identity);

    // paw at its cut vertex
    QDecomposition<F> paw = q1_q2_decomposition<F>(Graph::from_edges(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}}), 3);
    CHECK(paw.intersection_equals_jg);
    CHECK(paw.sum_identity);

    CHECK_THROWS_AS(q1_q2_decomposition<F>(p3, 1), std::invalid_argument);   // 1 is not a leaf cut vertex
    CHECK_THROWS_AS(q1_q2_decomposition<F>(Graph::cycle(4), 1), std::invalid_argument);
    CHECK_THROWS_AS(q1_q2_decomposition<F>(Graph::path(5), 2), ScaleGuardError);
}
