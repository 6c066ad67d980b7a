#include "doctest.h"
#include "edgebetti/errors.hpp"
#include "edgebetti/hochster.hpp"
#include "oracles.hpp"

using namespace edgebetti;

namespace {

using Graded = std::map<std::pair<int, int>, std::uint64_t>;

BettiTable table_of(const SimpleGraph& g, FieldSpec field = FieldSpec::gf2()) {
    return betti_table(edge_ideal(g), field);
}

// Reduced Euler characteristic of Ind(G)|sigma from an independent-set count.
long long reduced_euler(const SimpleGraph& g, VertexSet sigma) {
    long long chi = 0;
    for_each_subset(sigma, [&](VertexSet f) {
        for (int a : f)
            if ((g.neighbors(a) & f).size() > 0) return;
        chi += (f.size() % 2 == 1) ? 1 : -1;  // dimension |f|-1
    });
    return chi;
}

}  // namespace

TEST_CASE("strand homology") {
    const SimplicialComplex c4 = independence_complex(cycle_graph(4));
    CHECK(strand_homology(c4, VertexSet::range(4), 0, FieldSpec::gf2()) == 1);
    CHECK(strand_homology(c4, VertexSet::range(4), 1, FieldSpec::gf2()) == 0);
    const SimplicialComplex simplex = independence_complex(SimpleGraph(4, {}));
    for (int d = -1; d <= 3; ++d) CHECK(strand_homology(simplex, VertexSet::range(4), d, FieldSpec::rationals()) == 0);
    const SimplicialComplex points = independence_complex(complete_graph(3));
    CHECK(strand_homology(points, VertexSet::range(3), 0, FieldSpec::gf2()) == 2);
    CHECK(strand_homology(points, VertexSet{}, -1, FieldSpec::gf2()) == 1);
}

TEST_CASE("boundary squares to zero") {
    for (std::uint64_t mask = 0; mask < (1u << 10); mask += 17) {
        const SimpleGraph g = oracle::labelled_graph(5, mask);
        const StrandComplex s = strand_from_ideal(edge_ideal(g), g.vertices());
        for (int d = 1; d <= s.top_dimension(); ++d) {
            const SparseMatrix hi = s.boundary(d), lo = s.boundary(d - 1);
            // hi: rows are d-faces, columns (d-1)-faces; compose row by row.
            for (int r = 0; r < hi.rows; ++r) {
                std::map<int, std::int64_t> acc;
                for (auto [c, v] : hi.entries[r])
                    for (auto [c2, v2] : lo.entries[c]) acc[c2] += v * v2;
                for (auto [c2, v] : acc) REQUIRE(v == 0);
            }
        }
    }
}

TEST_CASE("C4 betti table") {
    const BettiTable t = table_of(cycle_graph(4));
    CHECK(t.graded() == Graded{{{0, 0}, 1}, {{1, 2}, 4}, {{2, 3}, 4}, {{3, 4}, 1}});
    CHECK(t.pd() == 3);
    CHECK(t.reg() == 1);
    CHECK(t.at(3, VertexSet::range(4)) == 1);
}

TEST_CASE("Ferrers-type graph betti table") {
    const BettiTable t = table_of(oracle::k23_with_tail());
    CHECK(t.graded() == Graded{{{0, 0}, 1}, {{1, 2}, 8}, {{2, 3}, 14}, {{3, 4}, 9}, {{4, 5}, 2}});
    CHECK(t.pd() == 4);
    CHECK(table_of(oracle::k23_with_tail(), FieldSpec::rationals()).graded() == t.graded());
}

TEST_CASE("single edge") {
    const BettiTable t = table_of(SimpleGraph(2, {{0, 1}}));
    CHECK(t.entries().size() == 2);
    CHECK(t.at(1, VertexSet::of({0, 1})) == 1);
    CHECK(t.pd() == 1);
    CHECK(t.reg() == 1);
    const BettiTable ideal_table = t.as_ideal();
    CHECK(ideal_table.at(0, VertexSet::of({0, 1})) == 1);
    CHECK(ideal_table.entries().size() == 1);
    CHECK(ideal_table.as_quotient() == t);
}

TEST_CASE("unit ideal and resource cap") {
    const MonomialIdeal unit({"a", "b"}, {VertexSet{}});
    const BettiTable t = betti_table(unit, FieldSpec::gf2());
    CHECK(t.entries().empty());
    CHECK(t.pd() == -1);
    const BettiTable i = t.as_ideal();
    CHECK(i.at(0, VertexSet{}) == 1);

    BettiOptions small;
    small.max_variables = 4;
    try {
        (void)betti_table(edge_ideal(cycle_graph(5)), FieldSpec::gf2(), small);
        FAIL("expected a resource error");
    } catch (const ResourceError& e) {
        CHECK(std::string(e.what()).find('4') != std::string::npos);
    }
}

TEST_CASE("table agrees with unpruned Hochster sums and Euler characteristics") {
    for (std::uint64_t mask = 0; mask < (1u << 10); mask += 23) {
        const SimpleGraph g = oracle::labelled_graph(5, mask);
        const BettiTable t = table_of(g);
        const SimplicialComplex delta = independence_complex(g);
        for (std::uint64_t bits = 0; bits < 32; ++bits) {
            const VertexSet sigma(bits);
            long long alternating = 0;
            for (int i = 0; i <= sigma.size(); ++i) {
                const int d = sigma.size() - i - 1;
                const auto direct = static_cast<std::uint64_t>(strand_homology(delta, sigma, d, FieldSpec::gf2()));
                REQUIRE(t.at(i, sigma) == direct);
                alternating += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(direct);
            }
            REQUIRE(alternating == reduced_euler(g, sigma));
        }
    }
}

TEST_CASE("graded accounting, field agreement and Katzman bound on six vertices") {
    for (std::uint64_t mask = 0; mask < (1u << 15); mask += 331) {
        const SimpleGraph g = oracle::labelled_graph(6, mask);
        const BettiTable t = table_of(g);
        Graded sums;
        for (const auto& [key, value] : t.entries()) sums[{key.i, key.sigma.size()}] += value;
        REQUIRE(sums == t.graded());
        REQUIRE(table_of(g, FieldSpec::rationals()).graded() == t.graded());
        REQUIRE(table_of(g, FieldSpec::gf(3)).graded() == t.graded());
        REQUIRE(t.reg() >= a_number(g));
        if (g.edge_count() > 0) REQUIRE((t.reg() == 1) == is_cochordal(g));
    }
}

TEST_CASE("multithreaded table matches") {
    BettiOptions opts;
    opts.threads = 3;
    const MonomialIdeal ideal = edge_ideal(oracle::k23_with_tail());
    CHECK(betti_table(ideal, FieldSpec::gf2(), opts) == betti_table(ideal, FieldSpec::gf2()));
}

TEST_CASE("extremal betti numbers") {
    const MonomialIdeal dual = alexander_dual(edge_ideal(cycle_graph(4)));
    const auto ext = extremal_betti(betti_table(dual, FieldSpec::gf2()).as_ideal());
    REQUIRE(ext.size() == 1);
    CHECK(ext[0] == ExtremalEntry{1, VertexSet::range(4), 1});

    const auto single = extremal_betti(table_of(SimpleGraph(2, {{0, 1}})).as_ideal());
    REQUIRE(single.size() == 1);
    CHECK(single[0] == ExtremalEntry{0, VertexSet::of({0, 1}), 1});
}

TEST_CASE("BCP and Eagon-Reiner") {
    const BcpReport c4 = verify_bcp(cycle_graph(4), FieldSpec::gf2());
    CHECK(c4.ok());
    REQUIRE(c4.comparisons.size() == 1);
    CHECK(c4.comparisons[0].r == 1);
    CHECK(c4.comparisons[0].dual_value == 1);
    CHECK(c4.comparisons[0].quotient_value == 1);

    const BcpReport edge = verify_bcp(SimpleGraph(2, {{0, 1}}, {"u", "v"}), FieldSpec::gf2());
    REQUIRE(edge.comparisons.size() == 1);
    CHECK(edge.comparisons[0].r == 1);
    CHECK(edge.comparisons[0].sigma == VertexSet::of({0, 1}));
    CHECK(edge.ok());

    const BcpReport two = verify_bcp(oracle::two_k2(), FieldSpec::gf2());
    REQUIRE(two.comparisons.size() == 1);
    CHECK(two.comparisons[0].r == 2);
    CHECK(two.comparisons[0].dual_value == 1);
    CHECK(two.ok());

    const auto er = verify_eagon_reiner(cycle_graph(4), FieldSpec::gf2());
    CHECK(er.reg_dual == 3);
    CHECK(er.pd_dual == 1);
    CHECK(er.ok());
    const auto er_edge = verify_eagon_reiner(SimpleGraph(2, {{0, 1}}), FieldSpec::gf2());
    CHECK(er_edge.reg_dual == 1);
    CHECK(er_edge.pd_dual == 1);
    CHECK(verify_eagon_reiner(oracle::k23_with_tail(), FieldSpec::rationals()).reg_dual == 4);

    for (std::uint64_t mask = 1; mask < (1u << 10); mask += 41) {
        const SimpleGraph g = oracle::labelled_graph(5, mask);
        REQUIRE(verify_bcp(g, FieldSpec::gf2()).ok());
        REQUIRE(verify_eagon_reiner(g, FieldSpec::gf2()).ok());
    }
}

TEST_CASE("betti diagram layout") {
    const std::string diagram = format_betti_diagram(table_of(cycle_graph(4)));
    CHECK(diagram.find('4') != std::string::npos);
    const auto j = betti_to_json(table_of(cycle_graph(4)), true);
    CHECK(j["pd"] == 3);
    CHECK(j["reg"] == 1);
}
