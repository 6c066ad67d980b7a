#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edgebetti/graph.hpp"
#include "json.hpp"

namespace edgebetti {

/// Complete bipartite subgraph: every left-right pair is an edge of the host graph.
/// Canonical form puts the part holding the smallest vertex on the left.
struct CompleteBipartiteSub {
    VertexSet left;
    VertexSet right;

    /// Canonicalizes the part order; throws DomainError on empty or overlapping parts.
    static CompleteBipartiteSub make(VertexSet a, VertexSet b);

    VertexSet vertices() const { return left | right; }
    /// (smaller part size, larger part size).
    std::pair<int, int> type() const;
    bool has_edge(Edge e) const;
    bool is_complete_in(const SimpleGraph& g) const;
    std::vector<Edge> edges() const;

    auto operator<=>(const CompleteBipartiteSub&) const = default;
};

struct DisjointFamily {
    std::vector<CompleteBipartiteSub> blocks;
    std::vector<Edge> representatives;  // one per block, or empty when not chosen yet

    VertexSet sigma() const;
    int value() const { return sigma().size() - static_cast<int>(blocks.size()); }
    bool operator==(const DisjointFamily&) const = default;
};

/// Pairwise 3-disjoint representatives e_k in E(B_k), searched exhaustively.
std::optional<std::vector<Edge>> find_representatives(const SimpleGraph& g,
                                                      const std::vector<CompleteBipartiteSub>& blocks);

/// Blocks complete in G, pairwise vertex-disjoint, representatives valid and pairwise
/// 3-disjoint. Missing representatives are searched for.
bool is_valid_family(const SimpleGraph& g, const DisjointFamily& fam);

/// Same check, returning the family with representatives filled in.
std::optional<DisjointFamily> complete_family(const SimpleGraph& g, const DisjointFamily& fam);

enum class BlockMode { maximal, all };

struct BlockOptions {
    int max_vertices = 64;
    std::size_t max_blocks = 2'000'000;  // ResourceError beyond this
};

/// Complete bipartite subgraphs with at most max_vertices vertices, sorted by vertex count
/// (descending) then canonical order. `maximal` keeps the inclusion-maximal ones.
std::vector<CompleteBipartiteSub> enumerate_blocks(const SimpleGraph& g, BlockMode mode,
                                                   const BlockOptions& options = {});

struct WitnessOptions {
    std::uint64_t node_budget = 50'000'000;
    BlockOptions blocks;
};

struct WitnessResult {
    int value = 0;
    DisjointFamily family;
    bool exact = true;  // false: the node budget ran out and value is only a lower bound
};

/// Maximum of |V(B)| - r over valid families, by branch and bound.
WitnessResult max_pd_witness(const SimpleGraph& g, const WitnessOptions& options = {});

/// A valid family with union sigma and |sigma| - r = i, or nothing after exhaustive search.
std::optional<DisjointFamily> witness_for(const SimpleGraph& g, int i, VertexSet sigma,
                                          const WitnessOptions& options = {});

/// c(G_sigma) - 1.
int linear_strand_betti(const SimpleGraph& g, VertexSet sigma);

struct CochordalReport {
    int pd = 0;
    int reg = 0;
    CompleteBipartiteSub block;  // a maximizer of m + n - 1 (meaningless for edgeless graphs)
};

/// pd as max(m + n - 1) over complete bipartite subgraphs; reg = 1 when G has an edge.
/// Throws DomainError if G is not co-chordal.
CochordalReport cochordal_pd(const SimpleGraph& g);

nlohmann::json family_to_json(const DisjointFamily& fam);
DisjointFamily family_from_json(const nlohmann::json& j);

}  // namespace edgebetti
