#include "edgebetti/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "edgebetti/errors.hpp"
#include "edgebetti/graph_io.hpp"
#include "edgebetti/unmixed.hpp"

namespace edgebetti {

namespace {

// Stable colour refinement starting from `initial`; colours are ranks of sorted signatures,
// so they do not depend on the vertex numbering.
std::vector<int> refine(const std::vector<VertexSet>& adj, std::vector<int> initial) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> colour = initial;
    for (int classes = -1;;) {
        std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            sig[v].first = colour[v];
            for (int u : adj[v]) sig[v].second.push_back(colour[u]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        auto distinct = sig;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int v = 0; v < n; ++v)
            colour[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
        const int now = static_cast<int>(distinct.size());
        if (now == classes) break;
        classes = now;
    }
    return colour;
}

// Calls f on every vertex ordering that lists colour classes in increasing colour.
void for_each_ordering(const std::vector<int>& colour, const std::function<void(const std::vector<int>&)>& f) {
    const int n = static_cast<int>(colour.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return colour[a] < colour[b]; });
    std::vector<std::pair<int, int>> cells;  // [begin, end)
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && colour[order[j]] == colour[order[i]]) ++j;
        cells.emplace_back(i, j);
        i = j;
    }
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == cells.size()) {
            f(order);
            return;
        }
        auto first = order.begin() + cells[c].first, last = order.begin() + cells[c].second;
        std::sort(first, last);
        do rec(c + 1);
        while (std::next_permutation(first, last));
    };
    rec(0);
}

std::uint64_t graph_code(const SimpleGraph& g, const std::vector<int>& order) {
    const int n = g.order();
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1u : 0u);
    return code;
}

std::pair<std::uint64_t, std::vector<int>> best_graph_ordering(const SimpleGraph& g) {
    if (g.order() > 11) throw ResourceError("canonical codes are limited to 11 vertices");
    std::vector<VertexSet> adj;
    std::vector<int> degree;
    for (int v = 0; v < g.order(); ++v) {
        adj.push_back(g.neighbors(v));
        degree.push_back(g.degree(v));
    }
    std::uint64_t best = 0;
    std::vector<int> best_order;
    bool first = true;
    for_each_ordering(refine(adj, degree), [&](const std::vector<int>& order) {
        const std::uint64_t c = graph_code(g, order);
        if (first || c > best) {
            best = c;
            best_order = order;
            first = false;
        }
    });
    return {best, best_order};
}

SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& order) {
    std::vector<int> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (Edge e : g.edges()) edges.emplace_back(pos[e.u], pos[e.v]);
    return SimpleGraph(g.order(), edges);
}

// Relation bits over ordered pairs, then the permuted weights.
struct PosetKey {
    std::uint64_t relation = 0;
    std::vector<int> weights;
    auto operator<=>(const PosetKey&) const = default;
};

PosetKey weighted_poset_key(const Poset& p, const std::vector<int>& w, std::vector<int>* best_order = nullptr) {
    const int n = p.size();
    if (n > 8) throw ResourceError("poset canonical codes are limited to 8 elements");
    std::vector<VertexSet> comparable;
    std::vector<int> initial;
    for (int i = 0; i < n; ++i) {
        comparable.push_back((p.down(i) | p.up(i)) - VertexSet::single(i));
        initial.push_back(p.down(i).size() * 64 * 64 + p.up(i).size() * 64 + (w.empty() ? 0 : w[i]));
    }
    // Rank the initial invariants so colours stay small and numbering-independent.
    std::vector<int> sorted = initial;
    std::sort(sorted.begin(), sorted.end());
    for (int& c : initial) c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
    PosetKey best;
    bool first = true;
    for_each_ordering(refine(comparable, initial), [&](const std::vector<int>& order) {
        PosetKey k;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) k.relation = (k.relation << 1) | (p.leq(order[i], order[j]) ? 1u : 0u);
        if (!w.empty())
            for (int i = 0; i < n; ++i) k.weights.push_back(w[order[i]]);
        if (first || k > best) {
            best = k;
            if (best_order) *best_order = order;
            first = false;
        }
    });
    return best;
}

Poset relabel(const Poset& p, const std::vector<int>& order) {
    std::vector<int> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> rel;
    for (auto [i, j] : p.covers()) rel.emplace_back(pos[i], pos[j]);
    return Poset::from_relations(p.size(), rel);
}

Poset subposet(const Poset& p, const std::vector<int>& members) {
    std::vector<std::pair<int, int>> rel;
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = 0; b < members.size(); ++b)
            if (a != b && p.leq(members[a], members[b])) rel.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return Poset::from_relations(static_cast<int>(members.size()), rel);
}

Poset opposite(const Poset& p) {
    std::vector<std::pair<int, int>> rel;
    for (auto [i, j] : p.covers()) rel.emplace_back(j, i);
    return Poset::from_relations(p.size(), rel);
}

// Key of the blown-up graph up to isomorphism: swapping the sides of one connected component
// of the graph replaces that component of the weighted poset by its opposite.
std::vector<PosetKey> blow_up_key(const Poset& p, const std::vector<int>& zeta) {
    const int n = p.size();
    std::vector<PosetKey> parts;
    VertexSet left = VertexSet::range(n);
    while (!left.empty()) {
        VertexSet comp = VertexSet::single(left.min()), frontier = comp;
        while (!frontier.empty()) {
            const int v = frontier.min();
            frontier.erase(v);
            const VertexSet fresh = (p.down(v) | p.up(v)) - comp;
            comp |= fresh;
            frontier |= fresh;
        }
        left -= comp;
        const std::vector<int> members = comp.to_vector();
        std::vector<int> w;
        for (int m : members) w.push_back(zeta[m]);
        const Poset sub = subposet(p, members);
        parts.push_back(std::min(weighted_poset_key(sub, w), weighted_poset_key(opposite(sub), w)));
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

bool is_connected(const SimpleGraph& g) { return connected_components(g).size() <= 1; }

std::string hex(std::uint64_t v) {
    std::ostringstream out;
    out << std::hex << v;
    return out.str();
}

std::string partition_name(const std::vector<int>& lambda) {
    std::string s = "(";
    for (std::size_t i = 0; i < lambda.size(); ++i) s += (i ? "," : "") + std::to_string(lambda[i]);
    return s + ")";
}

}  // namespace

std::uint64_t canonical_code(const SimpleGraph& g) { return best_graph_ordering(g).first; }

SimpleGraph canonical_form(const SimpleGraph& g) { return relabel(g, best_graph_ordering(g).second); }

std::vector<SimpleGraph> all_graphs(int n) {
    if (n < 0 || n > 8) throw ResourceError("graph catalogs are generated for at most 8 vertices");
    if (n == 0) return {SimpleGraph(0, {})};
    std::map<std::pair<int, std::uint64_t>, SimpleGraph> found;
    for (const SimpleGraph& h : all_graphs(n - 1)) {
        const std::vector<Edge> base = h.edges();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
            std::vector<Edge> edges = base;
            for (int v = 0; v < n - 1; ++v)
                if (mask >> v & 1) edges.emplace_back(v, n - 1);
            const SimpleGraph g(n, edges);
            const auto [code, order] = best_graph_ordering(g);
            const std::pair<int, std::uint64_t> key{g.edge_count(), code};
            if (!found.count(key)) found.emplace(key, relabel(g, order));
        }
    }
    std::vector<SimpleGraph> out;
    for (auto& [key, g] : found) out.push_back(std::move(g));
    return out;
}

std::uint64_t poset_code(const Poset& p) { return weighted_poset_key(p, {}).relation; }

std::vector<Poset> all_posets(int n) {
    if (n < 0 || n > 7) throw ResourceError("poset catalogs are generated for at most 7 elements");
    if (n == 0) return {Poset::antichain(0)};
    std::map<std::uint64_t, Poset> found;
    for (const Poset& q : all_posets(n - 1)) {
        const auto base = q.covers();
        for (VertexSet ideal : poset_ideals(q)) {
            auto rel = base;
            for (int j : ideal) rel.emplace_back(j, n - 1);
            const Poset p = Poset::from_relations(n, rel);
            std::vector<int> order;
            const PosetKey k = weighted_poset_key(p, {}, &order);
            if (!found.count(k.relation)) found.emplace(k.relation, relabel(p, order));
        }
    }
    std::vector<Poset> out;
    for (auto& [code, p] : found) out.push_back(std::move(p));
    return out;
}

bool is_ferrers(const SimpleGraph& g) {
    if (g.order() < 2 || !is_connected(g)) return false;
    const auto parts = bipartition(g);
    if (!parts) return false;
    std::vector<VertexSet> nbhd;
    for (int v : parts->left) nbhd.push_back(g.neighbors(v));
    std::sort(nbhd.begin(), nbhd.end(), [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
    for (std::size_t i = 0; i + 1 < nbhd.size(); ++i)
        if (!nbhd[i].subset_of(nbhd[i + 1])) return false;
    return true;
}

std::vector<std::vector<int>> partitions_of(int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(rest, cap); part >= 1; --part) {
            cur.push_back(part);
            rec(rest - part, part);
            cur.pop_back();
        }
    };
    if (m >= 1) rec(m, m);
    return out;
}

std::vector<int> conjugate(const std::vector<int>& lambda) {
    std::vector<int> out;
    if (lambda.empty()) return out;
    for (int j = 1; j <= lambda.front(); ++j) {
        int c = 0;
        for (int part : lambda)
            if (part >= j) ++c;
        out.push_back(c);
    }
    return out;
}

CatalogSpec catalog_spec_from_json(const nlohmann::json& j) {
    static const std::set<std::string> kinds = {"all",       "connected", "chordal", "cochordal", "cm_posets",
                                                "unmixed",   "ferrers",   "random",  "files"};
    try {
        CatalogSpec s;
        s.kind = j.at("kind").get<std::string>();
        if (!kinds.count(s.kind)) throw UsageError("unsupported catalog kind '" + s.kind + "'");
        if (j.contains("n")) s.min_n = s.max_n = j.at("n").get<int>();
        if (j.contains("min_n")) s.min_n = j.at("min_n").get<int>();
        if (j.contains("max_n")) s.max_n = j.at("max_n").get<int>();
        if (j.contains("max_elements")) s.max_n = j.at("max_elements").get<int>();
        if (j.contains("zeta_cap")) s.zeta_cap = j.at("zeta_cap").get<int>();
        if (j.contains("max_vertices")) s.max_vertices = j.at("max_vertices").get<int>();
        if (j.contains("max_cells")) s.max_n = j.at("max_cells").get<int>();
        if (j.contains("partitions")) s.partitions = j.at("partitions").get<std::vector<std::vector<int>>>();
        if (j.contains("p")) s.p = j.at("p").get<double>();
        if (j.contains("count")) s.count = j.at("count").get<int>();
        if (j.contains("paths")) s.paths = j.at("paths").get<std::vector<std::string>>();
        const bool needs_n = s.kind != "files" && !(s.kind == "ferrers" && !s.partitions.empty());
        if (needs_n && s.max_n <= 0) throw UsageError("catalog '" + s.kind + "' needs a positive size bound");
        if (s.kind == "random" && s.count <= 0) throw UsageError("random catalog needs a positive count");
        if (s.kind == "files" && s.paths.empty()) throw UsageError("files catalog needs paths");
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed catalog description: ") + e.what());
    }
}

nlohmann::json catalog_spec_to_json(const CatalogSpec& s) {
    nlohmann::json j = {{"kind", s.kind}};
    if (s.kind == "files") {
        j["paths"] = s.paths;
    } else if (s.kind == "ferrers" && !s.partitions.empty()) {
        j["partitions"] = s.partitions;
    } else if (s.kind == "ferrers") {
        j["max_cells"] = s.max_n;
    } else if (s.kind == "unmixed") {
        j["max_elements"] = s.max_n;
        j["zeta_cap"] = s.zeta_cap;
        j["max_vertices"] = s.max_vertices;
    } else if (s.kind == "random") {
        j["n"] = s.max_n;
        j["p"] = s.p;
        j["count"] = s.count;
    } else {
        j["min_n"] = s.min_n;
        j["max_n"] = s.max_n;
    }
    return j;
}

std::vector<CatalogEntry> generate_catalog(const CatalogSpec& spec, std::uint64_t seed) {
    std::vector<CatalogEntry> out;
    const std::string& k = spec.kind;
    if (k == "all" || k == "connected" || k == "chordal" || k == "cochordal") {
        for (int n = std::max(1, spec.min_n); n <= spec.max_n; ++n) {
            int index = 0;
            for (const SimpleGraph& g : all_graphs(n)) {
                if (k == "connected" && !is_connected(g)) continue;
                if (k == "chordal" && !is_chordal(g)) continue;
                if (k == "cochordal" && !is_cochordal(g)) continue;
                out.push_back({k + ":n" + std::to_string(n) + "#" + std::to_string(index++), g});
            }
        }
    } else if (k == "cm_posets") {
        for (int n = std::max(1, spec.min_n); n <= spec.max_n; ++n) {
            int index = 0;
            for (const Poset& p : all_posets(n))
                out.push_back({"poset:n" + std::to_string(n) + "#" + std::to_string(index++), graph_from_poset(p)});
        }
    } else if (k == "unmixed") {
        std::set<std::vector<PosetKey>> seen;
        for (int n = 1; n <= spec.max_n; ++n)
            for (const Poset& p : all_posets(n)) {
                std::vector<int> zeta(static_cast<std::size_t>(n), 1);
                std::function<void(int, int)> rec = [&](int a, int total) {
                    if (a == n) {
                        if (!seen.insert(blow_up_key(p, zeta)).second) return;
                        std::string name = "blowup:" + hex(poset_code(p)) + ":z";
                        for (int z : zeta) name += std::to_string(z);
                        out.push_back({name, blow_up(p, zeta)});
                        return;
                    }
                    for (int z = 1; z <= spec.zeta_cap && 2 * (total + z + (n - a - 1)) <= spec.max_vertices; ++z) {
                        zeta[a] = z;
                        rec(a + 1, total + z);
                    }
                };
                rec(0, 0);
            }
    } else if (k == "ferrers") {
        std::vector<std::vector<int>> lambdas = spec.partitions;
        if (lambdas.empty())
            for (int m = 1; m <= spec.max_n; ++m)
                for (auto& l : partitions_of(m))
                    if (l >= conjugate(l)) lambdas.push_back(l);  // conjugates give isomorphic graphs
        for (const auto& l : lambdas) out.push_back({"ferrers:" + partition_name(l), ferrers_graph(l)});
    } else if (k == "random") {
        std::mt19937_64 rng(seed);
        std::set<std::uint64_t> codes;
        const int n = spec.max_n;
        const std::uint64_t threshold = static_cast<std::uint64_t>(spec.p * 1'000'000.0);
        for (int attempt = 0; attempt < 100 * spec.count && static_cast<int>(out.size()) < spec.count; ++attempt) {
            std::vector<Edge> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() % 1'000'000 < threshold) edges.emplace_back(u, v);
            const SimpleGraph g(n, edges);
            if (n <= 11 && !codes.insert(canonical_code(g)).second) continue;
            out.push_back({"random:" + std::to_string(out.size()), g});
        }
    } else if (k == "files") {
        for (const std::string& path : spec.paths) out.push_back({path, load_graph(path)});
    } else {
        throw UsageError("unsupported catalog kind '" + k + "'");
    }
    return out;
}

}  // namespace edgebetti
