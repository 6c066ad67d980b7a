#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edgebetti/cm_bipartite.hpp"
#include "edgebetti/hochster.hpp"
#include "edgebetti/witness.hpp"

namespace edgebetti {

/// CM1 and CM3 hold; CM2 is not required.
using UnmixedLabeling = Labeling;

struct UnmixedOptions {
    std::uint64_t matching_budget = 1'000'000;  // perfect matchings tried before giving up
};

/// Perfect matching (x side = part holding each component's smallest vertex) whose relation
/// satisfies CM3, or nothing. Throws ResourceError when the matching budget runs out.
std::optional<UnmixedLabeling> unmixed_labeling(const SimpleGraph& g, const UnmixedOptions& options = {});

struct DirectedGraph {
    std::vector<VertexSet> out;  // out[i] = {j : i -> j}

    int size() const { return static_cast<int>(out.size()); }
    bool has_arc(int i, int j) const { return out[i].contains(j); }
    bool is_transitive() const;
    bool is_acyclic() const;
    std::vector<std::pair<int, int>> arcs() const;
};

/// Arc i -> j (i != j) iff x_i y_j is an edge. Throws InvariantViolation if the result is not
/// transitive.
DirectedGraph directed_graph(const SimpleGraph& g, const UnmixedLabeling& lab);

struct AcyclicReduction {
    SimpleGraph graph;                  // G itself
    UnmixedLabeling labeling;
    DirectedGraph digraph;
    std::vector<VertexSet> components;  // Z_1..Z_t over labeling indices, topologically ordered
    std::vector<int> component_of;      // labeling index -> component
    std::vector<int> zeta;
    SimpleGraph reduced;                // u_a at index a, v_a at index t + a

    int t() const { return static_cast<int>(components.size()); }
};

/// Throws DomainError when G has no unmixed labeling.
AcyclicReduction acyclic_reduction(const SimpleGraph& g, const UnmixedOptions& options = {});

/// |sigma^zeta| for a vertex set of the reduced graph.
int sigma_zeta(VertexSet sigma_hat, const AcyclicReduction& red);

struct KumminiReport {
    int pd = 0;
    BettiTable dual_table;  // ideal-subject table of I(G^)*
};

KumminiReport kummini_report(const SimpleGraph& g, const UnmixedOptions& options = {});
int kummini_pd(const SimpleGraph& g, const UnmixedOptions& options = {});

/// Blows a family of the reduced graph up to G, taking the smallest member of each component
/// as representative endpoint. Throws InvariantViolation if the lifted family is not valid.
DisjointFamily lift_family(const AcyclicReduction& red, const DisjointFamily& fam_hat);

struct UnmixedWitness {
    int pd = 0;
    DisjointFamily family;         // over G
    DisjointFamily reduced_family; // over the reduced graph
    int r = 0;
    VertexSet sigma_hat;
    FreeBasis basis;
    std::vector<BettiKey> maximizers;  // every (r, sigma^) attaining the maximum
    int replacements = 0;              // extremality replacement steps taken
};

UnmixedWitness unmixed_pd_witness(const SimpleGraph& g, const UnmixedOptions& options = {});

/// x_p y_q is an edge iff class(p) <= class(q) in P; class a holds zeta[a] consecutive indices.
/// Vertices x1..xn at 0..n-1 and y1..yn at n..2n-1.
SimpleGraph blow_up(const Poset& p, const std::vector<int>& zeta);

}  // namespace edgebetti
