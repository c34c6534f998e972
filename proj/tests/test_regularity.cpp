#include <catch2/catch_amalgamated.hpp>

#include "beilab/graph_enum.hpp"
#include "beilab/regularity.hpp"

using namespace beilab;
using F = Gf<32003>;

TEST_CASE("squarefree monomial regularity examples") {
    PolyRing ring2{2, 0};
    CHECK(squarefree_monomial_regularity<F>(squarefree_ideal_from_monomials(4, {ring2.x(1) * ring2.y(2)})) == 1);
    CHECK(initial_ideal_regularity<F>(Graph::path(3)) == 2);
    CHECK(initial_ideal_regularity<F>(Graph::complete(3)) == 1);
}

TEST_CASE("woodroofe shortcut: weakly chordal regularity equals indmatch") {
    Graph h_p3 = ini_lex_graph(Graph::path(3));
    CHECK(edge_ideal_regularity_woodroofe(h_p3) == 2);
    CHECK(edge_ideal_regularity_woodroofe(ini_lex_graph(Graph::from_edges(2, {{1, 2}}))) == 1);
    CHECK(edge_ideal_regularity_woodroofe(ini_lex_graph(Graph::complete(4))) == 1);
    CHECK_THROWS_AS(edge_ideal_regularity_woodroofe(Graph::cycle(5)), std::invalid_argument);
}

TEST_CASE("woodroofe agrees with the Hochster pathway on in_lex graphs (n <= 7)") {
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : enumerate_connected_graphs(n)) {
            auto lab = find_closed_labeling(g);
            if (!lab) continue;
            Graph h = ini_lex_graph(relabel(g, lab->new_label));
            REQUIRE(is_weakly_chordal(h));
            CHECK(edge_ideal_regularity_woodroofe(h) ==
                  squarefree_monomial_regularity<F>(edge_ideal_of_graph(h)));
        }
}

TEST_CASE("binomial regularity examples") {
    CHECK(binomial_regularity<F>(Graph::from_edges(2, {{1, 2}})) == 1);
    for (int n = 2; n <= 6; ++n) CHECK(binomial_regularity<F>(Graph::path(n)) == n - 1);
    // claw: the MM sandwich gives 2 <= reg, the clique bound gives reg <= 3,
    // and the Groebner degeneration bound pins reg = 2 because
    // reg(S/in_lex(J_claw)) = 2.
    CHECK(initial_ideal_regularity<F>(Graph::star(3)) == 2);
    CHECK(binomial_regularity<F>(Graph::star(3)) == 2);
}

TEST_CASE("regularity is additive over components") {
    Graph two_edges = Graph::from_edges(4, {{1, 2}, {3, 4}});
    CHECK(binomial_regularity<F>(two_edges) == 2);
    Graph mixed = Graph::from_edges(5, {{1, 2}, {3, 4}, {4, 5}});
    CHECK(binomial_regularity<F>(mixed) == 1 + 2);
    CHECK(binomial_regularity<F>(Graph(3)) == 0);  // edgeless
}

TEST_CASE("Groebner degeneration bound: reg(S/J_G) <= reg(S/in_lex(J_G)) (n <= 5)") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : enumerate_connected_graphs(n))
            CHECK(binomial_regularity<F>(g) <= initial_ideal_regularity<F>(g));
}

TEST_CASE("MM sandwich on all connected graphs with n <= 4") {
    for (int n = 2; n <= 4; ++n)
        for (const Graph& g : enumerate_connected_graphs(n)) {
            int ell = longest_induced_path_length(g);
            int reg = binomial_regularity<F>(g);
            CHECK(ell <= reg);
            CHECK(reg <= n - 1);
        }
}

TEST_CASE("characteristic independence spot checks") {
    for (const Graph& g : {Graph::path(4), Graph::complete(4)}) {
        int p = binomial_regularity<F>(g);
        CHECK(binomial_regularity<Gf<2>>(g) == p);
        CHECK(binomial_regularity<Rational>(g) == p);
        int pi = initial_ideal_regularity<F>(g);
        CHECK(initial_ideal_regularity<Gf<2>>(g) == pi);
        CHECK(initial_ideal_regularity<Rational>(g) == pi);
    }
}

TEST_CASE("resolution scale guard on oversized components") {
    CHECK_THROWS_AS(binomial_regularity<F>(Graph::path(8)), ScaleGuardError);
}
