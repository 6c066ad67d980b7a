#include "edgebetti/cm_bipartite.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "edgebetti/errors.hpp"

namespace edgebetti {

VertexSet Labeling::x_side() const {
    VertexSet s;
    for (int v : x) s.insert(v);
    return s;
}

VertexSet Labeling::y_side() const {
    VertexSet s;
    for (int v : y) s.insert(v);
    return s;
}

Poset Poset::from_relations(int n, const std::vector<std::pair<int, int>>& relations) {
    if (n < 0 || n > kMaxVertices) throw DomainError("poset size must be between 0 and 64");
    Poset p;
    p.below_.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) p.below_[j] = VertexSet::single(j);
    for (auto [i, j] : relations) {
        if (i < 0 || j < 0 || i >= n || j >= n) throw DomainError("poset relation refers to a missing element");
        p.below_[j].insert(i);
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (int j = 0; j < n; ++j) {
            VertexSet closed = p.below_[j];
            for (int i : p.below_[j]) closed |= p.below_[i];
            if (closed != p.below_[j]) {
                p.below_[j] = closed;
                changed = true;
            }
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p.leq(i, j) && p.leq(j, i)) throw DomainError("poset relations contain a cycle");
    return p;
}

Poset Poset::antichain(int n) { return from_relations(n, {}); }

Poset Poset::chain(int n) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
    return from_relations(n, rel);
}

VertexSet Poset::up(int i) const {
    VertexSet s;
    for (int j = 0; j < size(); ++j)
        if (leq(i, j)) s.insert(j);
    return s;
}

bool Poset::is_ideal(VertexSet s) const {
    for (int j : s)
        if (!below_[j].subset_of(s)) return false;
    return true;
}

VertexSet Poset::maximal_elements(VertexSet s) const {
    VertexSet out;
    for (int j : s)
        if ((up(j) & s) == VertexSet::single(j)) out.insert(j);
    return out;
}

bool Poset::is_antichain(VertexSet s) const {
    for (int j : s)
        if ((below_[j] & s) != VertexSet::single(j)) return false;
    return true;
}

std::vector<std::pair<int, int>> Poset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j < size(); ++j)
        for (int i : below_[j] - VertexSet::single(j)) {
            const VertexSet between = (below_[j] & up(i)) - VertexSet::of({i, j});
            if (between.empty()) out.emplace_back(i, j);
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool Poset::isomorphic(const Poset& o) const {
    const int n = size();
    if (n != o.size()) return false;
    if (n > 9) throw ResourceError("poset isomorphism test is capped at 9 elements");
    auto profile = [](const Poset& p) {
        std::vector<std::pair<int, int>> v;
        for (int i = 0; i < p.size(); ++i) v.emplace_back(p.down(i).size(), p.up(i).size());
        std::sort(v.begin(), v.end());
        return v;
    };
    if (profile(*this) != profile(o)) return false;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool same = true;
        for (int i = 0; i < n && same; ++i)
            for (int j = 0; j < n && same; ++j)
                if (leq(i, j) != o.leq(perm[i], perm[j])) same = false;
        if (same) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool satisfies_cm(const SimpleGraph& g, const Labeling& lab, bool require_cm2) {
    const int n = lab.size();
    if (static_cast<int>(lab.y.size()) != n || 2 * n != g.order()) return false;
    const VertexSet xs = lab.x_side(), ys = lab.y_side();
    if (xs.size() != n || ys.size() != n || xs.intersects(ys) || (xs | ys) != g.vertices()) return false;
    std::vector<int> xi(static_cast<std::size_t>(g.order()), -1), yi(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < n; ++i) {
        xi[lab.x[i]] = i;
        yi[lab.y[i]] = i;
    }
    for (Edge e : g.edges()) {
        int a = e.u, b = e.v;
        if (xi[a] < 0) std::swap(a, b);
        if (xi[a] < 0 || yi[b] < 0) return false;  // edge inside one side
        if (require_cm2 && xi[a] > yi[b]) return false;
    }
    for (int i = 0; i < n; ++i)
        if (!g.adjacent(lab.x[i], lab.y[i])) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !g.adjacent(lab.x[i], lab.y[j])) continue;
            for (int k = 0; k < n; ++k)
                if (k != i && k != j && g.adjacent(lab.x[j], lab.y[k]) && !g.adjacent(lab.x[i], lab.y[k])) return false;
        }
    return true;
}

namespace {

// X side per component: the part holding the component's smallest vertex.
std::optional<VertexSet> component_sides(const SimpleGraph& g) {
    const auto parts = bipartition(g);
    if (!parts) return std::nullopt;
    VertexSet xs;
    for (VertexSet comp : connected_components(g)) {
        const VertexSet a = comp & parts->left, b = comp & parts->right;
        if (a.size() != b.size()) return std::nullopt;
        xs |= a.contains(comp.min()) ? a : b;
    }
    return xs;
}

// Kuhn's augmenting paths; match_of_y[y] = x.
std::optional<std::vector<int>> perfect_matching(const SimpleGraph& g, VertexSet xs) {
    std::vector<int> match_of_y(static_cast<std::size_t>(g.order()), -1);
    for (int x : xs) {
        VertexSet visited;
        std::function<bool(int)> augment = [&](int u) {
            for (int y : g.neighbors(u)) {
                if (visited.contains(y)) continue;
                visited.insert(y);
                if (match_of_y[y] < 0 || augment(match_of_y[y])) {
                    match_of_y[y] = u;
                    return true;
                }
            }
            return false;
        };
        if (!augment(x)) return std::nullopt;
    }
    return match_of_y;
}

}  // namespace

std::optional<CMGraphLabeling> cm_labeling(const SimpleGraph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return std::nullopt;
    const auto xs = component_sides(g);
    if (!xs) return std::nullopt;
    const auto match = perfect_matching(g, *xs);
    if (!match) return std::nullopt;

    Labeling lab;
    for (int y = 0; y < g.order(); ++y)
        if ((*match)[y] >= 0) {
            lab.x.push_back((*match)[y]);
            lab.y.push_back(y);
        }
    const int n = lab.size();
    // Order by the number of predecessors in the relation i -> j (x_i y_j an edge); for a
    // transitive acyclic relation this is a topological order.
    std::vector<int> preds(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && g.adjacent(lab.x[i], lab.y[j])) ++preds[j];
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return preds[a] != preds[b] ? preds[a] < preds[b] : lab.x[a] < lab.x[b];
    });
    Labeling sorted;
    for (int k : idx) {
        sorted.x.push_back(lab.x[k]);
        sorted.y.push_back(lab.y[k]);
    }
    if (!satisfies_cm(g, sorted)) return std::nullopt;
    return sorted;
}

Poset poset_of_graph(const SimpleGraph& g, const Labeling& lab) {
    if (!satisfies_cm(g, lab, false)) throw DomainError("labeling does not satisfy CM1 and CM3 for this graph");
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < lab.size(); ++i)
        for (int j = 0; j < lab.size(); ++j)
            if (i != j && g.adjacent(lab.x[i], lab.y[j])) rel.emplace_back(i, j);
    return Poset::from_relations(lab.size(), rel);
}

SimpleGraph graph_from_poset(const Poset& p) {
    const int n = p.size();
    if (2 * n > kMaxVertices) throw DomainError("poset too large for a 64-vertex graph");
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) labels.push_back("y" + std::to_string(i));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.leq(i, j)) edges.emplace_back(i, n + j);
    return SimpleGraph(2 * n, edges, labels);
}

Labeling poset_graph_labeling(int n) {
    Labeling lab;
    for (int i = 0; i < n; ++i) {
        lab.x.push_back(i);
        lab.y.push_back(n + i);
    }
    return lab;
}

std::vector<VertexSet> poset_ideals(const Poset& p) {
    const int n = p.size();
    if (n > 20) throw ResourceError("poset ideal enumeration is capped at 20 elements");
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return p.down(a).size() != p.down(b).size() ? p.down(a).size() < p.down(b).size() : a < b;
    });
    std::vector<VertexSet> out;
    std::function<void(int, VertexSet)> grow = [&](int k, VertexSet current) {
        if (k == n) {
            out.push_back(current);
            return;
        }
        const int e = order[k];
        grow(k + 1, current);
        if ((p.down(e) - VertexSet::single(e)).subset_of(current)) grow(k + 1, current | VertexSet::single(e));
    };
    grow(0, VertexSet{});
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
    });
    return out;
}

MonomialIdeal hg_generators(const Poset& p) {
    const int n = p.size();
    std::vector<std::string> vars;
    for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) vars.push_back("y" + std::to_string(i));
    std::vector<Monomial> gens;
    for (VertexSet ideal : poset_ideals(p))
        gens.push_back(ideal | VertexSet((p.elements() - ideal).bits() << n));
    return MonomialIdeal(vars, gens);
}

std::vector<FreeBasis> free_bases(const Poset& p, int i) {
    const int n = p.size();
    std::vector<FreeBasis> out;
    for (VertexSet ideal : poset_ideals(p)) {
        const VertexSet outside = p.elements() - ideal;
        for_each_subset(p.maximal_elements(ideal), [&](VertexSet a) {
            if (i >= 0 && a.size() != i) return;
            const VertexSet degree = ideal | VertexSet((outside | a).bits() << n);
            out.push_back({ideal, outside | a, a.size(), degree});
        });
    }
    return out;
}

namespace {

void check_basis(const Poset& p, const FreeBasis& b) {
    const VertexSet a = b.ideal & b.t;
    if (!p.is_ideal(b.ideal) || !a.subset_of(p.maximal_elements(b.ideal)) || (b.ideal | b.t) != p.elements() ||
        b.i != a.size())
        throw DomainError("not a Herzog-Hibi free basis of this poset");
}

bool is_boolean_interval(const Poset& p, VertexSet low, VertexSet high) {
    bool ok = true;
    for_each_subset(high - low, [&](VertexSet b) {
        if (ok && !p.is_ideal(low | b)) ok = false;
    });
    return ok;
}

}  // namespace

bool is_maximal_boolean(const Poset& p, const FreeBasis& b) {
    check_basis(p, b);
    const VertexSet high = b.ideal, low = b.ideal - b.t;
    const auto ideals = poset_ideals(p);
    for (VertexSet k : ideals) {
        if (!k.subset_of(low)) continue;
        for (VertexSet k2 : ideals) {
            if (!high.subset_of(k2) || (k == low && k2 == high)) continue;
            if (is_boolean_interval(p, k, k2)) return false;
        }
    }
    return true;
}

bool is_maximal_boolean_by_antichain(const Poset& p, const FreeBasis& b) {
    check_basis(p, b);
    const VertexSet m = p.maximal_elements(b.ideal);
    if ((b.ideal & b.t) != m) return false;
    for (int q : p.elements() - b.ideal)
        if (!(p.down(q) & m).size()) return false;
    return true;
}

VertexSet basis_vertices(const Labeling& lab, VertexSet degree) {
    const int n = lab.size();
    VertexSet out;
    for (int v : degree) {
        if (v >= 2 * n) throw DomainError("basis degree refers to a variable beyond the labeling");
        out.insert(v < n ? lab.x[v] : lab.y[v - n]);
    }
    return out;
}

DisjointFamily extract_family(const SimpleGraph& g, const CMGraphLabeling& lab, const FreeBasis& b) {
    const Poset p = poset_of_graph(g, lab);
    if (!is_maximal_boolean(p, b)) throw DomainError("basis does not span a maximal Boolean interval");
    const VertexSet sigma = basis_vertices(lab, b.degree);
    const VertexSet xs = lab.x_side(), ys = lab.y_side();
    DisjointFamily fam;
    VertexSet claimed;
    for (int l : b.ideal & b.t) {
        const int x = lab.x[l], y = lab.y[l];
        VertexSet vk;
        for (int z : sigma - claimed)
            if (g.adjacent(z, x) || g.adjacent(z, y)) vk.insert(z);
        claimed |= vk;
        const CompleteBipartiteSub block = CompleteBipartiteSub::make(vk & xs, vk & ys);
        if (!block.is_complete_in(g)) throw InvariantViolation("extracted block is not complete bipartite");
        fam.blocks.push_back(block);
        fam.representatives.emplace_back(x, y);
    }
    if (claimed != sigma) throw InvariantViolation("extracted blocks do not cover the basis degree");
    if (!is_valid_family(g, fam)) throw InvariantViolation("extracted family is not pairwise 3-disjoint");
    return fam;
}

CmPdReport cm_pd(const SimpleGraph& g) {
    const auto lab = cm_labeling(g);
    if (!lab) throw DomainError("graph is not Cohen-Macaulay bipartite");
    const Poset p = poset_of_graph(g, *lab);
    CmPdReport best;
    bool found = false;
    for (const FreeBasis& b : free_bases(p)) {
        if (!is_maximal_boolean(p, b)) continue;
        DisjointFamily fam = extract_family(g, *lab, b);
        if (fam.value() != b.degree.size() - b.i) throw InvariantViolation("extracted family value differs from |sigma| - r");
        if (!found || fam.value() > best.pd) {
            best = {fam.value(), b, fam};
            found = true;
        }
    }
    return best;
}

nlohmann::json poset_to_json(const Poset& p) {
    nlohmann::json covers = nlohmann::json::array();
    for (auto [i, j] : p.covers()) covers.push_back({i, j});
    return {{"n", p.size()}, {"covers", covers}};
}

Poset poset_from_json(const nlohmann::json& j) {
    try {
        std::vector<std::pair<int, int>> rel;
        const auto& list = j.contains("covers") ? j.at("covers") : j.at("relations");
        for (const auto& r : list) rel.emplace_back(r.at(0).get<int>(), r.at(1).get<int>());
        return Poset::from_relations(j.at("n").get<int>(), rel);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed poset JSON: ") + e.what());
    }
}

}  // namespace edgebetti
