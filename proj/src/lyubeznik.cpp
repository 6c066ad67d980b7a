#include "edgebetti/lyubeznik.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "edgebetti/errors.hpp"

namespace edgebetti {

namespace {

void check_symbol(const MonomialIdeal& ideal, LSymbol sym) {
    if (!sym.subset_of(VertexSet::range(ideal.size())))
        throw DomainError("symbol refers to a generator position beyond " + std::to_string(ideal.size()));
}

Cycle multiply(const Cycle& a, const Cycle& b) {
    if (a.leading.intersects(b.leading)) throw DomainError("cycle factors share generator positions");
    Cycle out;
    out.s = a.s + b.s;
    out.sigma = a.sigma | b.sigma;
    out.leading = a.leading | b.leading;
    for (const auto& [sa, ca] : a.terms)
        for (const auto& [sb, cb] : b.terms) out.terms[sa | sb] += ca * cb;
    return out;
}

}  // namespace

MonomialIdeal apply_order(const MonomialIdeal& ideal, const std::vector<int>& order) {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expected(static_cast<std::size_t>(ideal.size()));
    std::iota(expected.begin(), expected.end(), 0);
    if (sorted != expected) throw DomainError("generator order is not a permutation of 0.." + std::to_string(ideal.size() - 1));
    return ideal.reordered(order);
}

VertexSet symbol_degree(const MonomialIdeal& ideal, LSymbol sym) {
    check_symbol(ideal, sym);
    VertexSet deg;
    for (int k : sym) deg |= ideal.generator(k);
    return deg;
}

std::vector<TaylorTerm> taylor_boundary(const MonomialIdeal& ideal, LSymbol sym) {
    if (sym.empty()) throw DomainError("the empty symbol has no boundary terms");
    const VertexSet full = symbol_degree(ideal, sym);
    std::vector<TaylorTerm> terms;
    int t = 0;
    for (int k : sym) {
        const LSymbol face = sym - VertexSet::single(k);
        terms.push_back({face, t % 2 == 0 ? 1 : -1, full - symbol_degree(ideal, face)});
        ++t;
    }
    return terms;
}

bool is_admissible(const MonomialIdeal& ideal, LSymbol sym) {
    check_symbol(ideal, sym);
    const std::vector<int> members = sym.to_vector();
    const int s = static_cast<int>(members.size());
    VertexSet suffix;
    if (s > 0) suffix = ideal.generator(members[s - 1]);
    for (int t = s - 2; t >= 0; --t) {
        suffix |= ideal.generator(members[t]);
        for (int q = 0; q < members[t]; ++q)
            if (ideal.generator(q).subset_of(suffix)) return false;
    }
    return true;
}

void for_each_admissible(const MonomialIdeal& ideal, int s, const std::function<void(LSymbol)>& f,
                         const SymbolOptions& options) {
    const int mu = ideal.size();
    if (mu > options.max_generators)
        throw ResourceError("admissible-symbol enumeration is capped at " + std::to_string(options.max_generators) +
                            " generators (ideal has " + std::to_string(mu) + ")");
    std::function<void(LSymbol, int)> grow = [&](LSymbol sym, int next) {
        if (s < 0 || sym.size() == s) f(sym);
        if (s >= 0 && sym.size() >= s) return;
        for (int q = next; q < mu; ++q) {
            const LSymbol bigger = sym | VertexSet::single(q);
            if (is_admissible(ideal, bigger)) grow(bigger, q + 1);
        }
    };
    grow(LSymbol{}, 0);
}

std::vector<LSymbol> admissible_symbols(const MonomialIdeal& ideal, int s, const SymbolOptions& options) {
    std::vector<LSymbol> out;
    for_each_admissible(ideal, s, [&](LSymbol sym) { out.push_back(sym); }, options);
    return out;
}

bool is_maximal_admissible(const MonomialIdeal& ideal, LSymbol sym, Maximality kind, bool paranoid) {
    if (!is_admissible(ideal, sym)) return false;
    const VertexSet deg = symbol_degree(ideal, sym);
    LSymbol candidates;
    for (int q = 0; q < ideal.size(); ++q)
        if (!sym.contains(q) && (kind == Maximality::global || ideal.generator(q).subset_of(deg)))
            candidates.insert(q);
    if (!paranoid) {
        for (int q : candidates)
            if (is_admissible(ideal, sym | VertexSet::single(q))) return false;
        return true;
    }
    if (ideal.size() > 16) throw ResourceError("exhaustive maximality search is capped at 16 generators");
    bool maximal = true;
    for_each_subset(candidates, [&](VertexSet extra) {
        if (maximal && !extra.empty() && is_admissible(ideal, sym | extra)) maximal = false;
    });
    return maximal;
}

std::optional<Certificate> barile_certificate(const MonomialIdeal& ideal, LSymbol sym) {
    if (sym.empty() || !is_maximal_admissible(ideal, sym, Maximality::in_degree)) return std::nullopt;
    for (const TaylorTerm& term : taylor_boundary(ideal, sym))
        if (term.cofactor.empty()) return std::nullopt;
    return Certificate{sym.size(), symbol_degree(ideal, sym)};
}

std::map<LSymbol, std::int64_t> unit_boundary(const MonomialIdeal& ideal, const Cycle& xi, const FieldSpec& field) {
    std::map<LSymbol, std::int64_t> image;
    for (const auto& [sym, coeff] : xi.terms) {
        if (sym.empty()) continue;
        for (const TaylorTerm& term : taylor_boundary(ideal, sym))
            if (term.cofactor.empty()) image[term.face] = field.reduce(image[term.face] + field.reduce(coeff * term.sign));
    }
    std::erase_if(image, [](const auto& kv) { return kv.second == 0; });
    return image;
}

std::optional<Certificate> check_cycle_certificate(const MonomialIdeal& ideal, const Cycle& xi, const FieldSpec& field) {
    auto lead = xi.terms.find(xi.leading);
    if (lead == xi.terms.end() || field.reduce(lead->second) != 1)
        throw DomainError("cycle must contain its leading symbol with coefficient 1");
    for (const auto& [sym, coeff] : xi.terms) {
        if (field.reduce(coeff) == 0) continue;
        if (sym.size() != xi.s) throw DomainError("cycle mixes homological degrees");
        if (symbol_degree(ideal, sym) != xi.sigma) throw DomainError("cycle mixes multidegrees");
        if (!is_admissible(ideal, sym)) throw DomainError("cycle contains a symbol that is not L-admissible");
    }
    if (!unit_boundary(ideal, xi, field).empty()) return std::nullopt;
    if (!is_maximal_admissible(ideal, xi.leading, Maximality::in_degree)) return std::nullopt;
    return Certificate{xi.s, xi.sigma};
}

LSymbol bipartite_tau(int m, int n, const std::vector<int>& t) {
    if (m < 1 || n < 1) throw DomainError("bipartite type needs m, n >= 1");
    if (static_cast<int>(t.size()) != n - 1) throw DomainError("tau needs n - 1 thresholds");
    for (std::size_t k = 0; k < t.size(); ++k)
        if (t[k] < 1 || t[k] > m || (k > 0 && t[k] < t[k - 1]))
            throw DomainError("tau thresholds must satisfy 1 <= t_1 <= ... <= t_{n-1} <= m");
    LSymbol sym;
    for (int beta = 1; beta <= n; ++beta) {
        const int lo = beta == 1 ? 1 : t[beta - 2];
        const int hi = beta == n ? m : t[beta - 1];
        for (int alpha = lo; alpha <= hi; ++alpha) sym.insert(bipartite_position(m, alpha, beta));
    }
    return sym;
}

CycleBlock bipartite_cycle(int m, int n) {
    if (m < 1 || n < 1) throw DomainError("bipartite type needs m, n >= 1");
    if (m * n > 64 || m + n > 64) throw DomainError("K_{m,n} too large for 64-bit symbols");
    std::vector<std::string> vars;
    for (int a = 1; a <= m; ++a) vars.push_back("u" + std::to_string(a));
    for (int b = 1; b <= n; ++b) vars.push_back("v" + std::to_string(b));
    std::vector<Monomial> gens;
    for (int beta = 1; beta <= n; ++beta)
        for (int alpha = 1; alpha <= m; ++alpha) gens.push_back(VertexSet::of({alpha - 1, m + beta - 1}));

    CycleBlock block{MonomialIdeal(vars, gens), {}};
    Cycle& xi = block.cycle;
    xi.s = m + n - 1;
    xi.sigma = VertexSet::range(m + n);
    xi.leading = bipartite_tau(m, n, std::vector<int>(static_cast<std::size_t>(n - 1), m));
    const int lead_sign = (m * (n - 1)) % 2 == 0 ? 1 : -1;

    std::vector<int> t(static_cast<std::size_t>(n - 1), 1);
    std::function<void(int, int)> fill = [&](int k, int lo) {
        if (k == n - 1) {
            const int sum = std::accumulate(t.begin(), t.end(), 0);
            xi.terms[bipartite_tau(m, n, t)] = (sum % 2 == 0 ? 1 : -1) * lead_sign;
            return;
        }
        for (int v = lo; v <= m; ++v) {
            t[k] = v;
            fill(k + 1, v);
        }
    };
    fill(0, 1);
    return block;
}

Cycle reindex_cycle(const Cycle& xi, const std::vector<int>& position_map, VertexSet sigma) {
    auto move = [&](LSymbol sym) {
        LSymbol out;
        for (int k : sym) out.insert(position_map.at(k));
        return out;
    };
    Cycle out;
    out.s = xi.s;
    out.sigma = sigma;
    out.leading = move(xi.leading);
    for (const auto& [sym, c] : xi.terms) out.terms[move(sym)] = c;
    return out;
}

CycleBlock product_cycle(const std::vector<CycleBlock>& parts) {
    if (parts.empty()) throw DomainError("product of no cycles");
    std::vector<std::string> vars;
    std::vector<Monomial> gens;
    std::set<std::string> seen;
    Cycle product;
    product.terms[LSymbol{}] = 1;
    for (const CycleBlock& part : parts) {
        const int var_offset = static_cast<int>(vars.size());
        const int gen_offset = static_cast<int>(gens.size());
        for (const std::string& v : part.ideal.variables()) {
            if (!seen.insert(v).second) throw DomainError("cycle blocks share the variable '" + v + "'");
            vars.push_back(v);
        }
        if (vars.size() > 64 || gens.size() + part.ideal.generators().size() > 64)
            throw DomainError("product exceeds 64 variables or generators");
        for (Monomial g : part.ideal.generators()) gens.push_back(VertexSet(g.bits() << var_offset));
        std::vector<int> positions(static_cast<std::size_t>(part.ideal.size()));
        std::iota(positions.begin(), positions.end(), gen_offset);
        product = multiply(product, reindex_cycle(part.cycle, positions, VertexSet(part.cycle.sigma.bits() << var_offset)));
    }
    return {MonomialIdeal(vars, gens), product};
}

MainCertificate main_theorem_certificate(const SimpleGraph& g, const DisjointFamily& fam, const FieldSpec& field) {
    auto completed = complete_family(g, fam);
    if (!completed) throw DomainError("family is not a valid pairwise 3-disjoint family of complete bipartite subgraphs");
    if (completed->blocks.empty()) throw DomainError("family has no blocks");
    const DisjointFamily& family = *completed;

    const std::vector<Edge> lex = g.edges();
    auto lex_position = [&](Edge e) {
        return static_cast<int>(std::lower_bound(lex.begin(), lex.end(), e) - lex.begin());
    };
    std::vector<bool> used(lex.size(), false);
    std::vector<int> order;
    Cycle xi;
    xi.terms[LSymbol{}] = 1;

    for (std::size_t k = 0; k < family.blocks.size(); ++k) {
        const CompleteBipartiteSub& block = family.blocks[k];
        const Edge rep = family.representatives[k];
        // u side holds rep.u; the representative becomes u_m v_n.
        const VertexSet u_side = block.left.contains(rep.u) ? block.left : block.right;
        const VertexSet v_side = block.vertices() - u_side;
        const int rep_u = rep.u, rep_v = rep.v;
        std::vector<int> us, vs;
        for (int x : u_side) if (x != rep_u) us.push_back(x);
        us.push_back(rep_u);
        for (int y : v_side) if (y != rep_v) vs.push_back(y);
        vs.push_back(rep_v);
        const int m = static_cast<int>(us.size()), n = static_cast<int>(vs.size());

        const int offset = static_cast<int>(order.size());
        for (int beta = 1; beta <= n; ++beta)
            for (int alpha = 1; alpha <= m; ++alpha) {
                const int p = lex_position(Edge(us[alpha - 1], vs[beta - 1]));
                used[p] = true;
                order.push_back(p);
            }
        for (Edge e : g.edges_within(block.vertices())) {
            const int p = lex_position(e);
            if (!used[p]) {
                used[p] = true;
                order.push_back(p);
            }
        }
        const CycleBlock kmn = bipartite_cycle(m, n);
        std::vector<int> positions(static_cast<std::size_t>(m * n));
        std::iota(positions.begin(), positions.end(), offset);
        xi = multiply(xi, reindex_cycle(kmn.cycle, positions, block.vertices()));
    }
    for (std::size_t p = 0; p < lex.size(); ++p)
        if (!used[p]) order.push_back(static_cast<int>(p));

    MainCertificate result;
    result.ordered_ideal = apply_order(edge_ideal(g), order);
    result.sigma = family.sigma();
    result.i = result.sigma.size() - static_cast<int>(family.blocks.size());
    result.cycle = xi;
    result.family = family;
    if (xi.s != result.i) throw InvariantViolation("product cycle degree disagrees with |sigma| - r");
    const auto cert = check_cycle_certificate(result.ordered_ideal, xi, field);
    if (!cert || cert->sigma != result.sigma || cert->s != result.i)
        throw InvariantViolation("main theorem certificate failed for a valid family");
    return result;
}

namespace {

// Homology of the degree-sigma strand from its symbols grouped by size.
std::map<int, int> strand_homology_from_symbols(const MonomialIdeal& ideal, VertexSet sigma,
                                                const std::map<int, std::vector<LSymbol>>& by_size,
                                                const FieldSpec& field) {
    std::map<int, int> rank_out;  // rank of d_i : C_i -> C_{i-1}
    for (const auto& [i, syms] : by_size) {
        if (i == 0) continue;
        auto lower = by_size.find(i - 1);
        if (lower == by_size.end()) {
            rank_out[i] = 0;
            continue;
        }
        const std::vector<LSymbol>& faces = lower->second;
        SparseMatrix d(static_cast<int>(syms.size()), static_cast<int>(faces.size()));
        for (std::size_t r = 0; r < syms.size(); ++r)
            for (const TaylorTerm& term : taylor_boundary(ideal, syms[r])) {
                if (!term.cofactor.empty()) continue;
                auto it = std::lower_bound(faces.begin(), faces.end(), term.face);
                if (it == faces.end() || *it != term.face)
                    throw InvariantViolation("unit-cofactor face missing from the strand of " + std::to_string(sigma.bits()));
                d.add(static_cast<int>(r), static_cast<int>(it - faces.begin()), term.sign);
            }
        rank_out[i] = rank(d, field);
    }
    std::map<int, int> homology;
    for (const auto& [i, syms] : by_size) {
        const int below = rank_out.count(i) ? rank_out[i] : 0;
        const int above = rank_out.count(i + 1) ? rank_out[i + 1] : 0;
        const int h = static_cast<int>(syms.size()) - below - above;
        if (h != 0) homology[i] = h;
    }
    return homology;
}

}  // namespace

int lyubeznik_strand_homology(const MonomialIdeal& ideal, VertexSet sigma, int i, const FieldSpec& field) {
    std::map<int, std::vector<LSymbol>> by_size;
    // Generators outside sigma can neither join a degree-sigma symbol nor divide its lcm.
    std::vector<int> inside;
    for (int k = 0; k < ideal.size(); ++k)
        if (ideal.generator(k).subset_of(sigma)) inside.push_back(k);
    std::vector<Monomial> sub_gens;
    for (int k : inside) sub_gens.push_back(ideal.generator(k));
    const MonomialIdeal sub(ideal.variables(), sub_gens);
    for_each_admissible(sub, -1, [&](LSymbol sym) {
        if (symbol_degree(sub, sym) == sigma) by_size[sym.size()].push_back(sym);
    });
    for (auto& [size, syms] : by_size) std::sort(syms.begin(), syms.end());
    const auto homology = strand_homology_from_symbols(sub, sigma, by_size, field);
    auto it = homology.find(i);
    return it == homology.end() ? 0 : it->second;
}

std::map<std::pair<int, VertexSet>, int> lyubeznik_betti(const MonomialIdeal& ideal, const FieldSpec& field,
                                                          const SymbolOptions& options) {
    std::map<VertexSet, std::map<int, std::vector<LSymbol>>> strands;
    for_each_admissible(ideal, -1, [&](LSymbol sym) {
        strands[symbol_degree(ideal, sym)][sym.size()].push_back(sym);
    }, options);
    std::map<std::pair<int, VertexSet>, int> table;
    for (auto& [sigma, by_size] : strands) {
        for (auto& [size, syms] : by_size) std::sort(syms.begin(), syms.end());
        for (const auto& [i, h] : strand_homology_from_symbols(ideal, sigma, by_size, field)) table[{i, sigma}] = h;
    }
    return table;
}

bool taylor_dd_zero(const MonomialIdeal& ideal) {
    if (ideal.size() > 16) throw ResourceError("Taylor d o d check is capped at 16 generators");
    bool ok = true;
    for_each_subset(VertexSet::range(ideal.size()), [&](LSymbol sym) {
        if (!ok || sym.size() < 2) return;
        std::map<std::pair<LSymbol, Monomial>, std::int64_t> acc;
        for (const TaylorTerm& outer : taylor_boundary(ideal, sym))
            for (const TaylorTerm& inner : taylor_boundary(ideal, outer.face)) {
                if (outer.cofactor.intersects(inner.cofactor)) throw InvariantViolation("cofactors overlap");
                acc[{inner.face, outer.cofactor | inner.cofactor}] += outer.sign * inner.sign;
            }
        for (const auto& [key, c] : acc)
            if (c != 0) ok = false;
    });
    return ok;
}

nlohmann::json symbol_to_json(LSymbol sym) { return sym.to_vector(); }

nlohmann::json cycle_to_json(const Cycle& xi) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [sym, c] : xi.terms) terms.push_back({{"indices", sym.to_vector()}, {"coefficient", c}});
    return {{"s", xi.s}, {"sigma", xi.sigma.to_vector()}, {"leading", xi.leading.to_vector()}, {"terms", terms}};
}

}  // namespace edgebetti
