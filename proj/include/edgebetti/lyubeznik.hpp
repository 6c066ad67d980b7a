#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "edgebetti/field.hpp"
#include "edgebetti/ideal.hpp"
#include "edgebetti/witness.hpp"
#include "json.hpp"

namespace edgebetti {

// Lyubeznik computations read the generator order straight from the ideal: position k in
// generators() is m_{k+1}. Use MonomialIdeal::reordered or apply_order to fix another order.

/// Set of 0-based generator positions.
using LSymbol = VertexSet;

/// Throws DomainError unless `order` is a permutation of the generator positions.
MonomialIdeal apply_order(const MonomialIdeal& ideal, const std::vector<int>& order);

/// lcm of the member generators, as a variable set.
VertexSet symbol_degree(const MonomialIdeal& ideal, LSymbol sym);

struct TaylorTerm {
    LSymbol face;
    int sign = 1;
    Monomial cofactor;  // lcm(sym) / lcm(face)
    bool operator==(const TaylorTerm&) const = default;
};

/// The s terms of the Taylor differential, in the order the members are dropped.
std::vector<TaylorTerm> taylor_boundary(const MonomialIdeal& ideal, LSymbol sym);

bool is_admissible(const MonomialIdeal& ideal, LSymbol sym);

struct SymbolOptions {
    int max_generators = 24;
};

/// Calls f on every admissible symbol (of size s when s >= 0), including the empty symbol
/// when s <= 0. Enumeration extends symbols by larger positions only, which reaches every
/// admissible set because admissibility is closed under taking subsets.
void for_each_admissible(const MonomialIdeal& ideal, int s, const std::function<void(LSymbol)>& f,
                         const SymbolOptions& options = {});
std::vector<LSymbol> admissible_symbols(const MonomialIdeal& ideal, int s = -1, const SymbolOptions& options = {});

enum class Maximality {
    global,     // no admissible proper superset at all
    in_degree,  // no admissible proper superset of the same multidegree
};

/// Single-element extension test; `paranoid` searches every superset instead (mu <= 16).
bool is_maximal_admissible(const MonomialIdeal& ideal, LSymbol sym, Maximality kind = Maximality::global,
                           bool paranoid = false);

struct Certificate {
    int s = 0;
    VertexSet sigma;
    bool operator==(const Certificate&) const = default;
};

/// (s, deg sym) when sym is admissible, maximal in its degree, and every boundary term has a
/// non-unit cofactor.
std::optional<Certificate> barile_certificate(const MonomialIdeal& ideal, LSymbol sym);

/// Field-coefficient combination of admissible symbols of one size and one multidegree.
struct Cycle {
    int s = 0;
    VertexSet sigma;
    LSymbol leading;
    std::map<LSymbol, std::int64_t> terms;

    bool operator==(const Cycle&) const = default;
};

/// Image of the cycle in K (x) L: only boundary terms with unit cofactor survive.
std::map<LSymbol, std::int64_t> unit_boundary(const MonomialIdeal& ideal, const Cycle& xi, const FieldSpec& field);

/// (s, sigma) iff the unit-cofactor boundary of xi vanishes and the leading symbol is maximal
/// among admissible symbols of degree sigma. Throws DomainError when terms disagree in size or
/// degree, are not admissible, or the leading coefficient is not 1.
std::optional<Certificate> check_cycle_certificate(const MonomialIdeal& ideal, const Cycle& xi,
                                                   const FieldSpec& field = FieldSpec::gf2());

/// Ideal with its order together with a cycle over it.
struct CycleBlock {
    MonomialIdeal ideal;
    Cycle cycle;
};

/// Position of u_alpha v_beta (1-based alpha, beta) in the block order.
inline int bipartite_position(int m, int alpha, int beta) { return (beta - 1) * m + (alpha - 1); }

/// tau(t_1..t_{n-1}) for K_{m,n}: row beta runs over u_{t_{beta-1}}..u_{t_beta} with t_0 = 1, t_n = m.
LSymbol bipartite_tau(int m, int n, const std::vector<int>& t);

/// I(K_{m,n}) on u1..um, v1..vn in the row order u_1v_1..u_mv_1, u_1v_2, ..., together with
/// the alternating sum of all tau, scaled so that tau(m,..,m) has coefficient 1.
CycleBlock bipartite_cycle(int m, int n);

/// Product of cycles over ideals in disjoint variables; the combined order lists the blocks in
/// turn. Throws DomainError if two blocks share a variable name.
CycleBlock product_cycle(const std::vector<CycleBlock>& parts);

/// Re-indexes a cycle through a map from old to new generator positions.
Cycle reindex_cycle(const Cycle& xi, const std::vector<int>& position_map, VertexSet sigma);

struct MainCertificate {
    int i = 0;
    VertexSet sigma;
    MonomialIdeal ordered_ideal;  // I(G) in the block-first order
    Cycle cycle;
    DisjointFamily family;        // with representatives filled in
};

/// Builds the block-first order on I(G), the product of the K_{m,n} cycles, and certifies it.
/// Throws DomainError on an invalid family and InvariantViolation if the certificate fails.
MainCertificate main_theorem_certificate(const SimpleGraph& g, const DisjointFamily& fam,
                                         const FieldSpec& field = FieldSpec::gf2());

/// dim of the degree-sigma strand homology of K (x) L at homological degree i.
int lyubeznik_strand_homology(const MonomialIdeal& ideal, VertexSet sigma, int i, const FieldSpec& field);

/// All strand homologies of K (x) L, i.e. the quotient Betti table computed from the
/// Lyubeznik resolution instead of Hochster's formula.
std::map<std::pair<int, VertexSet>, int> lyubeznik_betti(const MonomialIdeal& ideal, const FieldSpec& field,
                                                          const SymbolOptions& options = {});

/// True iff d o d = 0 on the full Taylor complex, checked with monomial cofactors.
bool taylor_dd_zero(const MonomialIdeal& ideal);

nlohmann::json symbol_to_json(LSymbol sym);
nlohmann::json cycle_to_json(const Cycle& xi);

}  // namespace edgebetti
