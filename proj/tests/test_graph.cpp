#include <sstream>

#include "doctest.h"
#include "edgebetti/errors.hpp"
#include "edgebetti/graph.hpp"
#include "edgebetti/graph_io.hpp"
#include "oracles.hpp"

using namespace edgebetti;

TEST_CASE("induced subgraph") {
    const SimpleGraph c4 = cycle_graph(4);
    const SimpleGraph p = induced_subgraph(c4, VertexSet::of({0, 1, 2}));
    CHECK(p.order() == 3);
    CHECK(p.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(p.labels() == std::vector<std::string>{"x1", "x2", "x3"});
    CHECK(induced_subgraph(c4, c4.vertices()) == c4);

    const SimpleGraph k23 = induced_subgraph(oracle::k23_with_tail(), VertexSet::range(5));
    auto part = bipartition(k23);
    REQUIRE(part);
    CHECK(part->left == VertexSet::of({0, 3, 4}));
    CHECK(part->right == VertexSet::of({1, 2}));
    CHECK(k23.edge_count() == 6);

    CHECK_THROWS_AS(induced_subgraph(c4, VertexSet::of({0, 5})), DomainError);
}

TEST_CASE("induced subgraph composes") {
    for (std::uint64_t mask = 0; mask < 64; mask += 5) {
        const SimpleGraph g = oracle::labelled_graph(4, mask);
        for (std::uint64_t s = 0; s < 16; ++s)
            for (std::uint64_t t = 0; t < 16; ++t) {
                const VertexSet sigma(s), tau(t);
                // Indices of sigma & tau inside G_sigma.
                VertexSet inner;
                int idx = 0;
                for (int v : sigma) {
                    if (tau.contains(v)) inner.insert(idx);
                    ++idx;
                }
                CHECK(induced_subgraph(g, sigma & tau) == induced_subgraph(induced_subgraph(g, sigma), inner));
            }
    }
}

TEST_CASE("complement") {
    const SimpleGraph c4 = cycle_graph(4);
    CHECK(complement(c4).edges() == std::vector<Edge>{{0, 2}, {1, 3}});
    CHECK(complement(complete_graph(5)).edge_count() == 0);
    for (std::uint64_t mask = 0; mask < 1024; mask += 37) {
        const SimpleGraph g = oracle::labelled_graph(5, mask);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("three-disjointness") {
    const SimpleGraph two = oracle::two_k2();
    CHECK(is_three_disjoint(two, {0, 1}, {2, 3}));
    const SimpleGraph c4 = cycle_graph(4);
    CHECK_FALSE(is_three_disjoint(c4, {0, 1}, {2, 3}));
    const SimpleGraph p4 = path_graph(4);
    CHECK_FALSE(is_three_disjoint(p4, {0, 1}, {2, 3}));
    CHECK_THROWS_AS(is_three_disjoint(c4, {0, 2}, {1, 3}), DomainError);

    for (std::uint64_t mask = 0; mask < 1024; mask += 13) {
        const SimpleGraph g = oracle::labelled_graph(5, mask);
        for (Edge a : g.edges())
            for (Edge b : g.edges()) CHECK(is_three_disjoint(g, a, b) == is_three_disjoint(g, b, a));
    }
}

TEST_CASE("a-number") {
    CHECK(a_number(oracle::two_k2()) == 2);
    CHECK(a_number(cycle_graph(4)) == 1);
    CHECK(a_number(path_graph(5)) == 2);
    CHECK(a_number(SimpleGraph(3, {})) == 0);
    for (std::uint64_t mask = 0; mask < (1u << 15); mask += 97) {
        const SimpleGraph g = oracle::labelled_graph(6, mask);
        CHECK(a_number(g) == oracle::a_number(g));
    }
}

TEST_CASE("a-number is additive on disjoint unions") {
    for (std::uint64_t a = 0; a < 64; a += 7)
        for (std::uint64_t b = 0; b < 64; b += 11) {
            const SimpleGraph g = oracle::labelled_graph(4, a), h = oracle::labelled_graph(4, b);
            CHECK(a_number(disjoint_union(g, h)) == a_number(g) + a_number(h));
        }
}

TEST_CASE("c-number matches partition search") {
    CHECK(c_number(cycle_graph(4)) == 2);
    CHECK(c_number(complete_graph(5)) == 5);
    CHECK(c_number(oracle::two_k2()) == 1);
    for (int n = 1; n <= 7; ++n) {
        const std::uint64_t pairs = std::uint64_t{1} << (n * (n - 1) / 2);
        const std::uint64_t step = n <= 5 ? 1 : (n == 6 ? 211 : 9973);
        for (std::uint64_t mask = 0; mask < pairs; mask += step) {
            const SimpleGraph g = oracle::labelled_graph(n, mask);
            REQUIRE(c_number(g) == oracle::c_number(g));
        }
    }
}

TEST_CASE("chordality") {
    CHECK(is_chordal(path_graph(6)));
    const SimpleGraph c4 = cycle_graph(4);
    CHECK_FALSE(is_chordal(c4));
    CHECK(is_cochordal(c4));
    const SimpleGraph c5 = cycle_graph(5);
    CHECK_FALSE(is_chordal(c5));
    CHECK_FALSE(is_cochordal(c5));
    for (std::uint64_t mask = 0; mask < (1u << 15); mask += 7) {
        const SimpleGraph g = oracle::labelled_graph(6, mask);
        REQUIRE(is_chordal(g) == oracle::is_chordal(g));
    }
}

TEST_CASE("bipartition") {
    auto c4 = bipartition(cycle_graph(4));
    REQUIRE(c4);
    CHECK(c4->left == VertexSet::of({0, 2}));
    CHECK(c4->right == VertexSet::of({1, 3}));
    CHECK_FALSE(bipartition(complete_graph(3)));
    auto g57 = bipartition(oracle::k23_with_tail());
    REQUIRE(g57);
    CHECK(g57->left == VertexSet::of({0, 3, 4}));
    CHECK(g57->right == VertexSet::of({1, 2, 5}));
    auto iso = bipartition(SimpleGraph(3, {{1, 2}}));
    REQUIRE(iso);
    CHECK(iso->left.contains(0));
}

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(SimpleGraph(3, {{0, 1}, {1, 0}}), DomainError);
    CHECK_THROWS_AS(SimpleGraph(3, {{0, 3}}), DomainError);
    CHECK_THROWS_AS(Edge(2, 2), DomainError);
    CHECK_THROWS_AS(SimpleGraph(2, {}, {"a", "a"}), DomainError);
    CHECK_THROWS_AS(SimpleGraph(65, {}), DomainError);
}

TEST_CASE("graph text and JSON formats") {
    std::istringstream in("# C4\n4\n0 1\n1 2 # chord-free\n\n2 3\n3 0\n");
    const SimpleGraph g = parse_edge_list(in);
    CHECK(g == cycle_graph(4));
    CHECK(parse_graph(to_edge_list(g)) == g);

    const SimpleGraph h = parse_graph(R"({"labels": ["a", "b", "c"], "edges": [[0, 1], [1, 2]]})");
    CHECK(h.label(2) == "c");
    CHECK(h.edge_count() == 2);
    CHECK(graph_from_json(graph_to_json(h)) == h);

    CHECK_THROWS_AS(parse_graph("3\n0 1\n1 0\n"), DomainError);
    CHECK_THROWS_AS(parse_graph("3\n0 7\n"), DomainError);
    CHECK_THROWS_AS(parse_graph("x\n"), DomainError);
}

TEST_CASE("ferrers graphs") {
    const SimpleGraph f22 = ferrers_graph({2, 2});
    CHECK(f22.edge_count() == 4);
    CHECK_FALSE(is_chordal(f22));
    CHECK(c_number(f22) == 2);
    const SimpleGraph f332 = ferrers_graph({3, 3, 2});
    CHECK(f332.edge_count() == 8);
    CHECK(is_cochordal(f332));
    CHECK_THROWS_AS(ferrers_graph({1, 2}), DomainError);
}
