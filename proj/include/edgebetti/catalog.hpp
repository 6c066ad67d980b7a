#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edgebetti/cm_bipartite.hpp"
#include "edgebetti/graph.hpp"
#include "json.hpp"

namespace edgebetti {

/// Canonical upper-triangle adjacency code (n <= 11): the largest code over all orderings that
/// respect the stable colour-refinement partition. Equal codes iff isomorphic.
std::uint64_t canonical_code(const SimpleGraph& g);
/// The graph whose vertex order realizes canonical_code.
SimpleGraph canonical_form(const SimpleGraph& g);

/// All graphs on exactly n vertices up to isomorphism (n <= 10), by vertex augmentation with
/// canonical-code deduplication. Sorted by (edge count, code).
std::vector<SimpleGraph> all_graphs(int n);

/// All posets on exactly n elements up to isomorphism (n <= 7), by adding a maximal element
/// above each poset ideal.
std::vector<Poset> all_posets(int n);

/// Canonical code of a poset's relation matrix; equal iff isomorphic.
std::uint64_t poset_code(const Poset& p);

/// Bipartite, no isolated vertices, and the neighbourhoods of one side form a chain.
bool is_ferrers(const SimpleGraph& g);

/// Partitions of m with weakly decreasing parts, in reverse lexicographic order.
std::vector<std::vector<int>> partitions_of(int m);
std::vector<int> conjugate(const std::vector<int>& lambda);

/// One graph source. Kinds:
///   all, connected, chordal, cochordal  {"n": 5} or {"max_n": 6}
///   cm_posets                           {"n": 4} or {"max_n": 4}
///   unmixed                             {"max_elements": 3, "zeta_cap": 3, "max_vertices": 12}
///   ferrers                             {"partitions": [[2, 2]]} or {"max_cells": 6}
///   random                              {"n": 8, "p": 0.4, "count": 20}
///   files                               {"paths": ["g.txt"]}
struct CatalogSpec {
    std::string kind;
    int min_n = 1;
    int max_n = 0;
    int zeta_cap = 3;
    int max_vertices = 12;
    std::vector<std::vector<int>> partitions;
    double p = 0.5;
    int count = 0;
    std::vector<std::string> paths;
};

/// UsageError on an unknown kind or missing fields.
CatalogSpec catalog_spec_from_json(const nlohmann::json& j);
nlohmann::json catalog_spec_to_json(const CatalogSpec& spec);

struct CatalogEntry {
    std::string name;
    SimpleGraph graph;
};

/// Duplicate-free up to isomorphism within the source (posets: up to poset isomorphism).
std::vector<CatalogEntry> generate_catalog(const CatalogSpec& spec, std::uint64_t seed = 0);

}  // namespace edgebetti
