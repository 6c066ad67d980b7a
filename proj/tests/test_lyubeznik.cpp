#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "edgebetti/errors.hpp"
#include "edgebetti/hochster.hpp"
#include "edgebetti/lyubeznik.hpp"
#include "oracles.hpp"

using namespace edgebetti;

namespace {

MonomialIdeal random_ideal(std::mt19937& rng, int vars, int max_gens) {
    std::vector<std::string> names;
    for (int v = 0; v < vars; ++v) names.push_back("z" + std::to_string(v + 1));
    std::uniform_int_distribution<int> count(1, max_gens);
    std::uniform_int_distribution<std::uint64_t> bits(1, (std::uint64_t{1} << vars) - 1);
    std::vector<Monomial> gens;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) gens.push_back(VertexSet(bits(rng)));
    return MonomialIdeal::minimalized(names, gens);
}

long long binomial(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

const MonomialIdeal kXY({"x", "y"}, {VertexSet::of({0}), VertexSet::of({1})});
const MonomialIdeal kXYYZ({"x", "y", "z"}, {VertexSet::of({0, 1}), VertexSet::of({1, 2})});

}  // namespace

TEST_CASE("taylor boundary") {
    const auto terms = taylor_boundary(kXY, VertexSet::of({0, 1}));
    REQUIRE(terms.size() == 2);
    CHECK(terms[0] == TaylorTerm{VertexSet::of({1}), 1, VertexSet::of({0})});
    CHECK(terms[1] == TaylorTerm{VertexSet::of({0}), -1, VertexSet::of({1})});
    CHECK_THROWS_AS(taylor_boundary(kXY, VertexSet{}), DomainError);
    CHECK_THROWS_AS(taylor_boundary(kXY, VertexSet::of({2})), DomainError);

    const MonomialIdeal k22 = bipartite_cycle(2, 2).ideal;
    int units = 0;
    for (const auto& t : taylor_boundary(k22, VertexSet::of({0, 1, 3})))
        if (t.cofactor.empty()) {
            ++units;
            CHECK(t.face == VertexSet::of({0, 3}));
            CHECK(t.sign == -1);
        }
    CHECK(units == 1);
}

TEST_CASE("K22 order and admissibility") {
    const MonomialIdeal k22 = bipartite_cycle(2, 2).ideal;
    CHECK(k22.format(k22.generator(0)) == "u1*v1");
    CHECK(k22.format(k22.generator(1)) == "u2*v1");
    CHECK(k22.format(k22.generator(2)) == "u1*v2");
    CHECK(k22.format(k22.generator(3)) == "u2*v2");
    for (int k = 0; k < 4; ++k) CHECK(is_admissible(k22, VertexSet::single(k)));
    CHECK_FALSE(is_admissible(k22, VertexSet::of({1, 2})));
    const LSymbol tau2 = VertexSet::of({0, 1, 3}), tau1 = VertexSet::of({0, 2, 3});
    CHECK(bipartite_tau(2, 2, {2}) == tau2);
    CHECK(bipartite_tau(2, 2, {1}) == tau1);
    CHECK(is_admissible(k22, tau2));
    CHECK(is_admissible(k22, tau1));
    CHECK_FALSE(is_admissible(k22, VertexSet::of({0, 1, 2, 3})));

    std::vector<LSymbol> full;
    for (LSymbol s : admissible_symbols(k22, 3))
        if (symbol_degree(k22, s) == k22.all_variables()) full.push_back(s);
    std::sort(full.begin(), full.end());
    CHECK(full == std::vector<LSymbol>{tau2, tau1});

    CHECK(admissible_symbols(MonomialIdeal({"a", "b"}, {VertexSet::of({0, 1})}), 1) ==
          std::vector<LSymbol>{VertexSet::of({0})});
}

TEST_CASE("maximality") {
    const MonomialIdeal k22 = bipartite_cycle(2, 2).ideal;
    const LSymbol tau2 = VertexSet::of({0, 1, 3}), tau1 = VertexSet::of({0, 2, 3});
    CHECK(is_maximal_admissible(k22, tau2));
    CHECK(is_maximal_admissible(k22, tau2, Maximality::global, true));
    // The only extension of tau(1) is by position 1, and u1v1 divides lcm(u2v1, u1v2, u2v2).
    CHECK(is_maximal_admissible(k22, tau1));
    CHECK(is_maximal_admissible(k22, tau1, Maximality::global, true));
    CHECK_FALSE(is_maximal_admissible(k22, VertexSet::of({0, 1})));
    CHECK(is_maximal_admissible(kXY, VertexSet::of({0, 1})));

    // In-degree maximality ignores generators outside the degree.
    const MonomialIdeal path({"a", "b", "c"}, {VertexSet::of({0, 1}), VertexSet::of({1, 2})});
    CHECK_FALSE(is_maximal_admissible(path, VertexSet::of({0})));
    CHECK(is_maximal_admissible(path, VertexSet::of({0}), Maximality::in_degree));
}

TEST_CASE("barile certificate") {
    CHECK(barile_certificate(kXYYZ, VertexSet::of({0, 1})) == Certificate{2, VertexSet::of({0, 1, 2})});
    CHECK_FALSE(barile_certificate(bipartite_cycle(2, 2).ideal, VertexSet::of({0, 1, 3})));
    const MonomialIdeal single({"a", "b"}, {VertexSet::of({0, 1})});
    CHECK(barile_certificate(single, VertexSet::of({0})) == Certificate{1, VertexSet::of({0, 1})});
}

TEST_CASE("cycle certificate") {
    const CycleBlock k22 = bipartite_cycle(2, 2);
    const LSymbol tau2 = VertexSet::of({0, 1, 3}), tau1 = VertexSet::of({0, 2, 3});
    CHECK(k22.cycle.leading == tau2);
    CHECK(k22.cycle.terms == std::map<LSymbol, std::int64_t>{{tau2, 1}, {tau1, -1}});
    for (FieldSpec f : {FieldSpec::gf2(), FieldSpec::gf(3), FieldSpec::rationals()})
        CHECK(check_cycle_certificate(k22.ideal, k22.cycle, f) == Certificate{3, VertexSet::range(4)});

    Cycle flipped = k22.cycle;
    flipped.terms[tau1] = 1;
    CHECK_FALSE(check_cycle_certificate(k22.ideal, flipped, FieldSpec::rationals()));
    // Over GF(2) the sign flip is invisible.
    CHECK(check_cycle_certificate(k22.ideal, flipped, FieldSpec::gf2()));

    Cycle one{2, VertexSet::of({0, 1, 2}), VertexSet::of({0, 1}), {{VertexSet::of({0, 1}), 1}}};
    CHECK(check_cycle_certificate(kXYYZ, one) == barile_certificate(kXYYZ, one.leading));

    Cycle mixed = k22.cycle;
    mixed.terms[VertexSet::of({0, 3})] = 1;
    CHECK_THROWS_AS(check_cycle_certificate(k22.ideal, mixed), DomainError);
    Cycle bad = k22.cycle;
    bad.terms[tau2] = 2;
    CHECK_THROWS_AS(check_cycle_certificate(k22.ideal, bad, FieldSpec::rationals()), DomainError);
}

TEST_CASE("bipartite cycles") {
    const CycleBlock k11 = bipartite_cycle(1, 1);
    CHECK(k11.cycle.terms == std::map<LSymbol, std::int64_t>{{VertexSet::of({0}), 1}});
    CHECK(k11.cycle.s == 1);
    const CycleBlock k31 = bipartite_cycle(3, 1);
    CHECK(k31.cycle.terms.size() == 1);
    CHECK(k31.cycle.leading == VertexSet::range(3));

    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            const CycleBlock b = bipartite_cycle(m, n);
            CHECK(static_cast<long long>(b.cycle.terms.size()) == binomial(m + n - 2, n - 1));
            for (const auto& [sym, c] : b.cycle.terms) {
                REQUIRE(is_admissible(b.ideal, sym));
                REQUIRE(sym.size() == m + n - 1);
                REQUIRE(symbol_degree(b.ideal, sym) == VertexSet::range(m + n));
            }
            REQUIRE(is_maximal_admissible(b.ideal, b.cycle.leading));
            for (FieldSpec f : {FieldSpec::gf2(), FieldSpec::rationals()}) {
                const auto cert = check_cycle_certificate(b.ideal, b.cycle, f);
                REQUIRE(cert);
                CHECK(cert->s == m + n - 1);
            }
            if (m + n <= 8) CHECK(betti_table(b.ideal, FieldSpec::gf2()).at(m + n - 1, VertexSet::range(m + n)) >= 1);
        }
}

TEST_CASE("product cycles") {
    const CycleBlock edge = bipartite_cycle(1, 1);
    CHECK(product_cycle({edge}).cycle == edge.cycle);
    CHECK_THROWS_AS(product_cycle({edge, edge}), DomainError);

    CycleBlock other = edge;
    other.ideal = MonomialIdeal({"a", "b"}, edge.ideal.generators());
    const CycleBlock two = product_cycle({edge, other});
    CHECK(two.cycle.s == 2);
    CHECK(two.cycle.terms == std::map<LSymbol, std::int64_t>{{VertexSet::of({0, 1}), 1}});
    CHECK(check_cycle_certificate(two.ideal, two.cycle) == Certificate{2, VertexSet::range(4)});

    const CycleBlock mixed = product_cycle({bipartite_cycle(2, 2), other});
    CHECK(mixed.cycle.s == 4);
    CHECK(mixed.cycle.terms.size() == 2);
    CHECK(check_cycle_certificate(mixed.ideal, mixed.cycle, FieldSpec::rationals()) ==
          Certificate{4, VertexSet::range(6)});
}

TEST_CASE("main theorem certificates") {
    const SimpleGraph c4 = cycle_graph(4);
    const DisjointFamily whole{{CompleteBipartiteSub::make(VertexSet::of({0, 2}), VertexSet::of({1, 3}))}, {}};
    const auto cert = main_theorem_certificate(c4, whole);
    CHECK(cert.i == 3);
    CHECK(cert.sigma == VertexSet::range(4));

    const SimpleGraph g57 = oracle::k23_with_tail();
    const DisjointFamily k23{{CompleteBipartiteSub::make(VertexSet::of({0, 3, 4}), VertexSet::of({1, 2}))}, {}};
    const auto c57 = main_theorem_certificate(g57, k23, FieldSpec::rationals());
    CHECK(c57.i == 4);
    CHECK(c57.sigma == VertexSet::range(5));

    const SimpleGraph two = oracle::two_k2();
    const DisjointFamily pair{{CompleteBipartiteSub::make(VertexSet::of({0}), VertexSet::of({1})),
                               CompleteBipartiteSub::make(VertexSet::of({2}), VertexSet::of({3}))},
                              {}};
    CHECK(main_theorem_certificate(two, pair).i == 2);

    const DisjointFamily opposite{{CompleteBipartiteSub::make(VertexSet::of({0}), VertexSet::of({1})),
                                   CompleteBipartiteSub::make(VertexSet::of({2}), VertexSet::of({3}))},
                                  {}};
    CHECK_THROWS_AS(main_theorem_certificate(c4, opposite), DomainError);
}

TEST_CASE("certificate survives permuting the other generators") {
    // The k23_with_tail graph plus the chord x1x6 keeps K23 on x1..x5 with x6 outside.
    const SimpleGraph g(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}, {0, 5}});
    const DisjointFamily k23{{CompleteBipartiteSub::make(VertexSet::of({0, 3, 4}), VertexSet::of({1, 2}))}, {}};
    const auto cert = main_theorem_certificate(g, k23);
    const int head = 6;
    std::vector<int> order(static_cast<std::size_t>(cert.ordered_ideal.size()));
    std::iota(order.begin(), order.end(), 0);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(order.begin() + head, order.end(), rng);
        const MonomialIdeal permuted = apply_order(cert.ordered_ideal, order);
        REQUIRE(check_cycle_certificate(permuted, cert.cycle) == Certificate{cert.i, cert.sigma});
    }
    CHECK_THROWS_AS(apply_order(cert.ordered_ideal, {0, 0, 1}), DomainError);
}

TEST_CASE("taylor complexes square to zero") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const MonomialIdeal ideal = random_ideal(rng, 6, 8);
        REQUIRE(taylor_dd_zero(ideal));
    }
}

TEST_CASE("admissibility is closed under subsets") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const MonomialIdeal ideal = random_ideal(rng, 7, 8);
        for_each_subset(VertexSet::range(ideal.size()), [&](LSymbol sym) {
            if (!is_admissible(ideal, sym)) return;
            for_each_subset(sym, [&](LSymbol sub) { REQUIRE(is_admissible(ideal, sub)); });
        });
    }
}

TEST_CASE("single-element maximality agrees with exhaustive search") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const MonomialIdeal ideal = random_ideal(rng, 6, 8);
        for (LSymbol sym : admissible_symbols(ideal)) {
            REQUIRE(is_maximal_admissible(ideal, sym) == is_maximal_admissible(ideal, sym, Maximality::global, true));
            REQUIRE(is_maximal_admissible(ideal, sym, Maximality::in_degree) ==
                    is_maximal_admissible(ideal, sym, Maximality::in_degree, true));
        }
    }
}

TEST_CASE("lyubeznik strands compute the Hochster table") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const MonomialIdeal ideal = random_ideal(rng, 6, 8);
        for (FieldSpec f : {FieldSpec::gf2(), FieldSpec::rationals()}) {
            std::map<std::pair<int, VertexSet>, int> expected;
            const BettiTable table = betti_table(ideal, f);
            for (const auto& [key, value] : table.entries())
                expected[{key.i, key.sigma}] = static_cast<int>(value);
            REQUIRE(lyubeznik_betti(ideal, f) == expected);
        }
    }
    const MonomialIdeal c4 = edge_ideal(cycle_graph(4));
    CHECK(lyubeznik_strand_homology(c4, VertexSet::range(4), 3, FieldSpec::gf2()) == 1);
    CHECK(lyubeznik_strand_homology(c4, VertexSet::range(4), 2, FieldSpec::gf2()) == 0);
}

TEST_CASE("symbol enumeration cap") {
    std::vector<std::string> names;
    std::vector<Monomial> gens;
    for (int v = 0; v < 26; ++v) {
        names.push_back("z" + std::to_string(v));
        gens.push_back(VertexSet::single(v));
    }
    CHECK_THROWS_AS(admissible_symbols(MonomialIdeal(names, gens)), ResourceError);
}

TEST_CASE("cycle JSON") {
    const auto j = cycle_to_json(bipartite_cycle(2, 2).cycle);
    CHECK(j["s"] == 3);
    CHECK(j["leading"] == nlohmann::json::array({0, 1, 3}));
    CHECK(j["terms"].size() == 2);
}
