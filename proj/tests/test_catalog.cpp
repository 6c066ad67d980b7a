#include <set>

#include "doctest.h"
#include "edgebetti/catalog.hpp"
#include "edgebetti/errors.hpp"
#include "edgebetti/unmixed.hpp"
#include "oracles.hpp"

using namespace edgebetti;

namespace {

std::size_t count(const std::string& text) {
    return generate_catalog(catalog_spec_from_json(nlohmann::json::parse(text))).size();
}

}  // namespace

TEST_CASE("canonical code is an isomorphism invariant") {
    const SimpleGraph a(4, {{0, 1}, {1, 2}, {2, 3}});
    const SimpleGraph b(4, {{2, 0}, {0, 3}, {3, 1}});
    CHECK(canonical_code(a) == canonical_code(b));
    CHECK(canonical_code(a) != canonical_code(SimpleGraph(4, {{0, 1}, {1, 2}, {1, 3}})));
    CHECK(canonical_form(b).edges() == canonical_form(a).edges());
    CHECK(canonical_code(cycle_graph(6)) != canonical_code(disjoint_union(cycle_graph(3), cycle_graph(3))));
}

TEST_CASE("graph counts") {
    // Numbers of graphs on 1..7 vertices up to isomorphism, and of connected ones.
    const std::vector<std::size_t> all = {1, 2, 4, 11, 34, 156, 1044};
    const std::vector<std::size_t> connected = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        CHECK(all_graphs(n).size() == all[n - 1]);
        CHECK(count(R"({"kind": "connected", "n": )" + std::to_string(n) + "}") == connected[n - 1]);
    }
    CHECK(count(R"({"kind": "connected", "n": 4})") == 6);
    CHECK(count(R"({"kind": "all", "max_n": 4})") == 1 + 2 + 4 + 11);
}

TEST_CASE("labelled graphs collapse onto the catalog") {
    std::set<std::uint64_t> codes;
    for (std::uint64_t mask = 0; mask < (1u << 10); ++mask) codes.insert(canonical_code(oracle::labelled_graph(5, mask)));
    CHECK(codes.size() == 34);
}

TEST_CASE("chordal and cochordal catalogs") {
    for (const auto& e : generate_catalog(catalog_spec_from_json({{"kind", "chordal"}, {"max_n", 5}})))
        CHECK(oracle::is_chordal(e.graph));
    for (const auto& e : generate_catalog(catalog_spec_from_json({{"kind", "cochordal"}, {"max_n", 5}})))
        CHECK(oracle::is_chordal(complement(e.graph)));
    // chordal graphs on 4 vertices: all 11 but C4 and its complement is 2K2 (chordal) -> 10
    CHECK(count(R"({"kind": "chordal", "n": 4})") == 10);
}

TEST_CASE("poset counts") {
    const std::vector<std::size_t> expected = {1, 2, 5, 16, 63, 318};
    for (int n = 1; n <= 6; ++n) CHECK(all_posets(n).size() == expected[n - 1]);
    CHECK(count(R"({"kind": "cm_posets", "n": 2})") == 2);
    for (const auto& e : generate_catalog(catalog_spec_from_json({{"kind", "cm_posets"}, {"max_n", 4}})))
        CHECK(cm_labeling(e.graph).has_value());
}

TEST_CASE("ferrers catalog") {
    const auto c4 = generate_catalog(catalog_spec_from_json(nlohmann::json::parse(R"({"kind": "ferrers", "partitions": [[2, 2]]})")));
    REQUIRE(c4.size() == 1);
    CHECK(canonical_code(c4[0].graph) == canonical_code(cycle_graph(4)));
    CHECK(is_ferrers(cycle_graph(4)));
    CHECK_FALSE(is_ferrers(cycle_graph(6)));
    CHECK_FALSE(is_ferrers(oracle::two_k2()));
    CHECK(partitions_of(4).size() == 5);
    CHECK(conjugate({3, 1}) == std::vector<int>{2, 1, 1});
    std::set<std::uint64_t> codes;
    const auto all = generate_catalog(catalog_spec_from_json({{"kind", "ferrers"}, {"max_cells", 6}}));
    for (const auto& e : all) {
        CHECK(is_ferrers(e.graph));
        codes.insert(canonical_code(e.graph));
    }
    CHECK(codes.size() == all.size());
}

TEST_CASE("unmixed catalog is duplicate free") {
    const auto entries = generate_catalog(catalog_spec_from_json(
        {{"kind", "unmixed"}, {"max_elements", 3}, {"zeta_cap", 3}, {"max_vertices", 10}}));
    std::set<std::uint64_t> codes;
    for (const auto& e : entries) {
        CHECK(e.graph.order() <= 10);
        CHECK(is_unmixed(e.graph));
        codes.insert(canonical_code(e.graph));
    }
    CHECK(codes.size() == entries.size());
    // Every unmixed bipartite graph without isolated vertices on <= 6 vertices is a blow-up.
    std::set<std::uint64_t> small;
    for (const auto& e : entries)
        if (e.graph.order() <= 6) small.insert(canonical_code(e.graph));
    std::set<std::uint64_t> direct;
    for (int n = 2; n <= 6; n += 2)
        for (const SimpleGraph& g : all_graphs(n)) {
            bool isolated = false;
            for (int v = 0; v < n; ++v) isolated = isolated || g.degree(v) == 0;
            if (!isolated && bipartition(g) && is_unmixed(g)) direct.insert(canonical_code(g));
        }
    CHECK(small == direct);
}

TEST_CASE("random catalog is reproducible") {
    const CatalogSpec spec = catalog_spec_from_json({{"kind", "random"}, {"n", 7}, {"p", 0.4}, {"count", 5}});
    const auto a = generate_catalog(spec, 3), b = generate_catalog(spec, 3), c = generate_catalog(spec, 4);
    REQUIRE(a.size() == 5);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].graph == b[i].graph);
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) differs = differs || !(a[i].graph == c[i].graph);
    CHECK(differs);
}

TEST_CASE("catalog spec errors") {
    CHECK_THROWS_AS(catalog_spec_from_json({{"kind", "trees"}, {"n", 4}}), UsageError);
    CHECK_THROWS_AS(catalog_spec_from_json({{"kind", "all"}}), UsageError);
    CHECK_THROWS_AS(catalog_spec_from_json({{"n", 4}}), UsageError);
    CHECK_THROWS_AS(catalog_spec_from_json({{"kind", "files"}}), UsageError);
    const CatalogSpec s = catalog_spec_from_json({{"kind", "unmixed"}, {"max_elements", 2}});
    CHECK(catalog_spec_from_json(catalog_spec_to_json(s)).max_vertices == s.max_vertices);
}
