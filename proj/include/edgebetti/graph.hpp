#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgebetti/vertex_set.hpp"

namespace edgebetti {

inline constexpr int kMaxVertices = 64;

/// Unordered pair of distinct vertex indices, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b);

    VertexSet ends() const { return VertexSet::of({u, v}); }
    auto operator<=>(const Edge&) const = default;
};

struct BipartitePartition {
    VertexSet left;
    VertexSet right;
};

/// Finite simple graph on at most 64 labelled vertices. Immutable once built.
class SimpleGraph {
public:
    SimpleGraph() = default;
    /// Throws DomainError on loops, duplicate edges, bad indices or bad labels.
    /// Empty `labels` means default names x1..xn.
    SimpleGraph(int n, const std::vector<Edge>& edges, std::vector<std::string> labels = {});

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::range(n_); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(v); }
    /// Index of a label, or -1.
    int index_of(const std::string& label) const;

    VertexSet neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    int degree(int v) const { return adj_[v].size(); }
    int edge_count() const;
    /// Edges in lexicographic order of (u, v) with u < v.
    std::vector<Edge> edges() const;
    /// Edges with both endpoints in `s`.
    std::vector<Edge> edges_within(VertexSet s) const;

    bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && adj_ == o.adj_ && labels_ == o.labels_; }

private:
    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<VertexSet> adj_;
};

/// Vertex set sigma, edges of G inside sigma; labels keep their relative order.
SimpleGraph induced_subgraph(const SimpleGraph& g, VertexSet sigma);
SimpleGraph complement(const SimpleGraph& g);
/// Disjoint union; labels of the second graph are suffixed if they collide.
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

/// Connected components as vertex sets, ordered by minimum vertex.
std::vector<VertexSet> connected_components(const SimpleGraph& g);

bool is_three_disjoint(const SimpleGraph& g, Edge e1, Edge e2);
/// Maximum size of a pairwise 3-disjoint edge set (induced matching number).
int a_number(const SimpleGraph& g);
/// Largest c such that G has a spanning complete c-partite subgraph (1 if none).
int c_number(const SimpleGraph& g);

bool is_chordal(const SimpleGraph& g);
bool is_cochordal(const SimpleGraph& g);
std::optional<BipartitePartition> bipartition(const SimpleGraph& g);

// Small named graphs used across tests, the CLI and the harness.
SimpleGraph cycle_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph complete_graph(int n);
SimpleGraph complete_bipartite_graph(int m, int n);
/// Ferrers graph of a partition lambda_1 >= ... >= lambda_k: rows r1..rk, columns c1..c_{lambda_1},
/// edge r_i c_j iff j <= lambda_i.
SimpleGraph ferrers_graph(const std::vector<int>& lambda);

}  // namespace edgebetti
