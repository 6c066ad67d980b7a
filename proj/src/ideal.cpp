#include "edgebetti/ideal.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "edgebetti/errors.hpp"

namespace edgebetti {

bool lex_less(Monomial a, Monomial b) {
    const auto va = a.to_vector(), vb = b.to_vector();
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

namespace {

void check_variables(const std::vector<std::string>& variables) {
    if (variables.size() > 64) throw DomainError("at most 64 variables are supported");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (v.empty()) throw DomainError("variable names must be nonempty");
        if (!seen.insert(v).second) throw DomainError("duplicate variable '" + v + "'");
    }
}

// Keep the inclusion-minimal sets, first occurrence order.
std::vector<VertexSet> minimal_sets(const std::vector<VertexSet>& sets) {
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < sets.size() && keep; ++j) {
            if (i == j) continue;
            if (sets[j].subset_of(sets[i]) && (sets[j] != sets[i] || j < i)) keep = false;
        }
        if (keep) out.push_back(sets[i]);
    }
    return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::vector<std::string> variables, std::vector<Monomial> generators)
    : variables_(std::move(variables)), generators_(std::move(generators)) {
    check_variables(variables_);
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (!generators_[i].subset_of(all_variables()))
            throw DomainError("generator " + std::to_string(i) + " uses an unknown variable");
        for (std::size_t j = 0; j < generators_.size(); ++j) {
            if (i != j && generators_[j].subset_of(generators_[i]))
                throw DomainError("generating set is not minimal: generator " + std::to_string(j) +
                                  " divides generator " + std::to_string(i));
        }
    }
}

MonomialIdeal MonomialIdeal::minimalized(std::vector<std::string> variables, std::vector<Monomial> generators) {
    return MonomialIdeal(std::move(variables), minimal_sets(generators));
}

MonomialIdeal MonomialIdeal::reordered(const std::vector<int>& order) const {
    if (order.size() != generators_.size()) throw DomainError("generator order has the wrong length");
    std::vector<char> used(generators_.size(), 0);
    std::vector<Monomial> gens;
    for (int k : order) {
        if (k < 0 || k >= size() || used[k]) throw DomainError("generator order is not a permutation");
        used[k] = 1;
        gens.push_back(generators_[k]);
    }
    MonomialIdeal out;
    out.variables_ = variables_;
    out.generators_ = std::move(gens);
    return out;
}

bool MonomialIdeal::same_generators(const MonomialIdeal& o) const {
    if (variables_ != o.variables_) return false;
    std::set<Monomial> a(generators_.begin(), generators_.end()), b(o.generators_.begin(), o.generators_.end());
    return a == b;
}

MonomialIdeal MonomialIdeal::canonical() const {
    MonomialIdeal out = *this;
    std::sort(out.generators_.begin(), out.generators_.end(), lex_less);
    return out;
}

std::string MonomialIdeal::format(Monomial m) const {
    if (m.empty()) return "1";
    std::string s;
    for (int v : m) {
        if (!s.empty()) s += '*';
        s += variables_.at(v);
    }
    return s;
}

bool SimplicialComplex::contains_face(VertexSet f) const {
    return std::any_of(facets.begin(), facets.end(), [f](VertexSet F) { return f.subset_of(F); });
}

MonomialIdeal edge_ideal(const SimpleGraph& g) {
    std::vector<Monomial> gens;
    for (const Edge& e : g.edges()) gens.push_back(e.ends());
    return MonomialIdeal(g.labels(), gens);
}

std::vector<VertexSet> maximal_independent_sets(const SimpleGraph& g) {
    std::vector<VertexSet> out;
    const VertexSet all = g.vertices();
    // Bron-Kerbosch with pivoting on the complement graph.
    std::function<void(VertexSet, VertexSet, VertexSet)> bk = [&](VertexSet r, VertexSet p, VertexSet x) {
        if (p.empty() && x.empty()) {
            out.push_back(r);
            return;
        }
        const VertexSet px = p | x;
        int pivot = px.min();
        int best = -1;
        for (int u : px) {
            const int cnt = (p - g.neighbors(u)).size();
            if (cnt > best) best = cnt, pivot = u;
        }
        const VertexSet non_pivot = all - g.neighbors(pivot) - VertexSet::single(pivot);
        for (int v : (p - non_pivot)) {
            const VertexSet nv = all - g.neighbors(v) - VertexSet::single(v);
            bk(r | VertexSet::single(v), p & nv, x & nv);
            p.erase(v);
            x.insert(v);
        }
    };
    bk(VertexSet(), all, VertexSet());
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

SimplicialComplex independence_complex(const SimpleGraph& g) {
    return SimplicialComplex{g.labels(), maximal_independent_sets(g)};
}

std::vector<VertexSet> minimal_primes(const MonomialIdeal& ideal) {
    // Berge's incremental transversal computation.
    std::vector<VertexSet> transversals{VertexSet()};
    for (const Monomial& m : ideal.generators()) {
        std::vector<VertexSet> next;
        for (VertexSet t : transversals) {
            if (t.intersects(m)) {
                next.push_back(t);
            } else {
                for (int v : m) next.push_back(t | VertexSet::single(v));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        transversals = minimal_sets(next);
    }
    std::sort(transversals.begin(), transversals.end(), lex_less);
    return transversals;
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
    SimplicialComplex c{ideal.variables(), {}};
    for (VertexSet p : minimal_primes(ideal)) c.facets.push_back(ideal.all_variables() - p);
    std::sort(c.facets.begin(), c.facets.end(), lex_less);
    return c;
}

std::vector<VertexSet> minimal_vertex_covers(const SimpleGraph& g) {
    std::vector<VertexSet> covers;
    for (VertexSet s : maximal_independent_sets(g)) covers.push_back(g.vertices() - s);
    std::sort(covers.begin(), covers.end(), lex_less);
    return covers;
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
    return MonomialIdeal::minimalized(ideal.variables(), minimal_primes(ideal));
}

bool is_unmixed(const SimpleGraph& g) {
    const auto covers = minimal_vertex_covers(g);
    return std::all_of(covers.begin(), covers.end(), [&](VertexSet c) { return c.size() == covers.front().size(); });
}

MonomialIdeal ideal_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("variables") || !j.contains("generators"))
        throw DomainError("ideal JSON needs 'variables' and 'generators'");
    auto variables = j.at("variables").get<std::vector<std::string>>();
    std::vector<Monomial> gens;
    for (const auto& row : j.at("generators")) {
        const auto exps = row.get<std::vector<int>>();
        if (exps.size() != variables.size()) throw DomainError("ideal JSON: exponent vector has the wrong length");
        Monomial m;
        for (std::size_t v = 0; v < exps.size(); ++v) {
            if (exps[v] < 0 || exps[v] > 1) throw DomainError("ideal JSON: only squarefree generators are supported");
            if (exps[v] == 1) m.insert(static_cast<int>(v));
        }
        gens.push_back(m);
    }
    return MonomialIdeal(std::move(variables), std::move(gens));
}

nlohmann::json ideal_to_json(const MonomialIdeal& ideal) {
    nlohmann::json gens = nlohmann::json::array();
    for (const Monomial& m : ideal.generators()) {
        std::vector<int> exps(ideal.variable_count(), 0);
        for (int v : m) exps[v] = 1;
        gens.push_back(exps);
    }
    return {{"variables", ideal.variables()}, {"generators", gens}};
}

}  // namespace edgebetti
