#pragma once

#include <string>
#include <vector>

#include "edgebetti/graph.hpp"
#include "edgebetti/vertex_set.hpp"
#include "json.hpp"

namespace edgebetti {

/// Squarefree monomial, identified with its support.
using Monomial = VertexSet;

/// Squarefree monomial ideal with an ordered minimal generating set.
/// Generator order matters: it drives Lyubeznik admissibility.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    /// Throws DomainError if a generator uses an unknown variable or divides another generator.
    MonomialIdeal(std::vector<std::string> variables, std::vector<Monomial> generators);

    /// Drops duplicates and non-minimal generators, keeping the first occurrence order.
    static MonomialIdeal minimalized(std::vector<std::string> variables, std::vector<Monomial> generators);

    int variable_count() const { return static_cast<int>(variables_.size()); }
    const std::vector<std::string>& variables() const { return variables_; }
    const std::vector<Monomial>& generators() const { return generators_; }
    const Monomial& generator(int k) const { return generators_.at(k); }
    int size() const { return static_cast<int>(generators_.size()); }
    VertexSet all_variables() const { return VertexSet::range(variable_count()); }

    /// Same ideal with generators listed in `order` (a permutation of 0..size-1).
    MonomialIdeal reordered(const std::vector<int>& order) const;
    /// True iff the generator sets agree, ignoring order.
    bool same_generators(const MonomialIdeal& o) const;
    /// Generators sorted lexicographically by their sorted variable index list.
    MonomialIdeal canonical() const;

    /// Product of variables written like "x1*x3"; "1" for the empty monomial.
    std::string format(Monomial m) const;

    bool operator==(const MonomialIdeal& o) const = default;

private:
    std::vector<std::string> variables_;
    std::vector<Monomial> generators_;
};

/// Compares monomials by their sorted index lists, lexicographically.
bool lex_less(Monomial a, Monomial b);

/// Simplicial complex given by its facets.
struct SimplicialComplex {
    std::vector<std::string> vertices;
    std::vector<VertexSet> facets;  // sorted with lex_less, no facet contains another

    bool contains_face(VertexSet f) const;
    bool operator==(const SimplicialComplex&) const = default;
};

/// One degree-2 generator per edge, lexicographic on (u, v).
MonomialIdeal edge_ideal(const SimpleGraph& g);

/// Maximal independent sets (Bron-Kerbosch on the complement with pivoting), sorted with lex_less.
std::vector<VertexSet> maximal_independent_sets(const SimpleGraph& g);
SimplicialComplex independence_complex(const SimpleGraph& g);
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);

std::vector<VertexSet> minimal_vertex_covers(const SimpleGraph& g);
/// Minimal transversals of the generator supports, i.e. the minimal primes.
std::vector<VertexSet> minimal_primes(const MonomialIdeal& ideal);
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);
bool is_unmixed(const SimpleGraph& g);

// {"variables": [...], "generators": [[e1, ..., eN], ...]} with 0/1 exponents.
MonomialIdeal ideal_from_json(const nlohmann::json& j);
nlohmann::json ideal_to_json(const MonomialIdeal& ideal);

}  // namespace edgebetti
