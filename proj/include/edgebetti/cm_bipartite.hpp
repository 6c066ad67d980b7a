#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "edgebetti/graph.hpp"
#include "edgebetti/ideal.hpp"
#include "edgebetti/witness.hpp"
#include "json.hpp"

namespace edgebetti {

/// Perfect matching i -> {x[i], y[i]} of a bipartite graph, given as host-graph vertices.
struct Labeling {
    std::vector<int> x;
    std::vector<int> y;

    int size() const { return static_cast<int>(x.size()); }
    VertexSet x_side() const;
    VertexSet y_side() const;
    bool operator==(const Labeling&) const = default;
};

using CMGraphLabeling = Labeling;

/// Finite poset on p_0..p_{n-1}; below[j] = {i : p_i <= p_j}, reflexive and transitive.
class Poset {
public:
    Poset() = default;
    /// Closes `relations` (pairs i < j meaning p_i <= p_j) transitively; DomainError on a cycle.
    static Poset from_relations(int n, const std::vector<std::pair<int, int>>& relations);
    static Poset antichain(int n);
    static Poset chain(int n);

    int size() const { return static_cast<int>(below_.size()); }
    bool leq(int i, int j) const { return below_[j].contains(i); }
    VertexSet down(int j) const { return below_[j]; }
    VertexSet up(int i) const;
    VertexSet elements() const { return VertexSet::range(size()); }
    bool is_ideal(VertexSet s) const;
    VertexSet maximal_elements(VertexSet s) const;
    bool is_antichain(VertexSet s) const;
    /// Cover relations (i, j): p_i < p_j with nothing strictly between.
    std::vector<std::pair<int, int>> covers() const;
    /// Same order up to relabeling, by brute force over permutations (n <= 9).
    bool isomorphic(const Poset& o) const;

    bool operator==(const Poset&) const = default;

private:
    std::vector<VertexSet> below_;
};

/// CM1-CM3 labeling, or nothing when G is not Cohen-Macaulay bipartite (including graphs with
/// isolated vertices). A CM bipartite graph has exactly one perfect matching, so one matching
/// per side choice decides the question.
std::optional<CMGraphLabeling> cm_labeling(const SimpleGraph& g);

/// Checks CM1, CM2 (i <= j for every edge x_i y_j) and CM3 for a labeling of g.
bool satisfies_cm(const SimpleGraph& g, const Labeling& lab, bool require_cm2 = true);

/// p_i <= p_j iff x_i y_j is an edge.
Poset poset_of_graph(const SimpleGraph& g, const Labeling& lab);

/// Vertices x1..xn (indices 0..n-1) and y1..yn (n..2n-1), edge x_i y_j iff p_i <= p_j.
SimpleGraph graph_from_poset(const Poset& p);
/// The identity labeling of graph_from_poset(p).
Labeling poset_graph_labeling(int n);

/// All poset ideals sorted by (size, bits). ResourceError beyond 20 elements.
std::vector<VertexSet> poset_ideals(const Poset& p);

/// H_P on x1..xn, y1..yn: one generator u_I per poset ideal, in poset_ideals order.
MonomialIdeal hg_generators(const Poset& p);

struct FreeBasis {
    VertexSet ideal;
    VertexSet t;
    int i = 0;
    VertexSet degree;  // over the variables x1..xn, y1..yn of H_P

    VertexSet ideal_part() const { return ideal & t; }
    bool operator==(const FreeBasis&) const = default;
};

/// Herzog-Hibi bases e(I, T) (all of them when i < 0).
std::vector<FreeBasis> free_bases(const Poset& p, int i = -1);

/// Explicit search over pairs of poset ideals for a strictly larger Boolean interval.
bool is_maximal_boolean(const Poset& p, const FreeBasis& b);
/// I cap T = M(I) and every element outside I lies above some element of M(I).
bool is_maximal_boolean_by_antichain(const Poset& p, const FreeBasis& b);

/// Host-graph vertices of a basis degree under a labeling.
VertexSet basis_vertices(const Labeling& lab, VertexSet degree);

/// Greedy extraction of a pairwise 3-disjoint family from an extremal basis. Throws DomainError
/// if b is not maximal Boolean and InvariantViolation if the result breaks its postconditions.
DisjointFamily extract_family(const SimpleGraph& g, const CMGraphLabeling& lab, const FreeBasis& b);

struct CmPdReport {
    int pd = 0;
    FreeBasis basis;
    DisjointFamily family;
};

/// pd(S/I(G)) as the best extracted family over extremal bases; DomainError if G is not CM.
CmPdReport cm_pd(const SimpleGraph& g);

nlohmann::json poset_to_json(const Poset& p);
/// {"n": 3, "covers": [[0, 1], [0, 2]]}
Poset poset_from_json(const nlohmann::json& j);

}  // namespace edgebetti
