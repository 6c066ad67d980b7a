#include "edgebetti/witness.hpp"

#include <algorithm>
#include <functional>

#include "edgebetti/errors.hpp"

namespace edgebetti {

CompleteBipartiteSub CompleteBipartiteSub::make(VertexSet a, VertexSet b) {
    if (a.empty() || b.empty()) throw DomainError("complete bipartite parts must be nonempty");
    if (a.intersects(b)) throw DomainError("complete bipartite parts must be disjoint");
    if (b.min() < a.min()) std::swap(a, b);
    return {a, b};
}

std::pair<int, int> CompleteBipartiteSub::type() const {
    return std::minmax(left.size(), right.size());
}

bool CompleteBipartiteSub::has_edge(Edge e) const {
    return (left.contains(e.u) && right.contains(e.v)) || (left.contains(e.v) && right.contains(e.u));
}

bool CompleteBipartiteSub::is_complete_in(const SimpleGraph& g) const {
    if (left.empty() || right.empty() || left.intersects(right)) return false;
    if (!vertices().subset_of(g.vertices())) return false;
    for (int x : left)
        if (!right.subset_of(g.neighbors(x))) return false;
    return true;
}

std::vector<Edge> CompleteBipartiteSub::edges() const {
    std::vector<Edge> out;
    for (int x : left)
        for (int y : right) out.emplace_back(x, y);
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet DisjointFamily::sigma() const {
    VertexSet s;
    for (const auto& b : blocks) s |= b.vertices();
    return s;
}

std::optional<std::vector<Edge>> find_representatives(const SimpleGraph& g,
                                                      const std::vector<CompleteBipartiteSub>& blocks) {
    std::vector<Edge> chosen;
    std::function<bool(std::size_t)> search = [&](std::size_t k) {
        if (k == blocks.size()) return true;
        for (Edge e : blocks[k].edges()) {
            bool ok = true;
            for (Edge f : chosen)
                if (!is_three_disjoint(g, e, f)) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back(e);
            if (search(k + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!search(0)) return std::nullopt;
    return chosen;
}

std::optional<DisjointFamily> complete_family(const SimpleGraph& g, const DisjointFamily& fam) {
    VertexSet seen;
    for (const auto& b : fam.blocks) {
        if (!b.is_complete_in(g) || b.vertices().intersects(seen)) return std::nullopt;
        seen |= b.vertices();
    }
    DisjointFamily out = fam;
    if (fam.representatives.empty()) {
        auto reps = find_representatives(g, fam.blocks);
        if (!reps) return std::nullopt;
        out.representatives = *reps;
        return out;
    }
    if (fam.representatives.size() != fam.blocks.size()) return std::nullopt;
    for (std::size_t k = 0; k < fam.blocks.size(); ++k) {
        if (!fam.blocks[k].has_edge(fam.representatives[k])) return std::nullopt;
        for (std::size_t l = 0; l < k; ++l)
            if (!is_three_disjoint(g, fam.representatives[k], fam.representatives[l])) return std::nullopt;
    }
    return out;
}

bool is_valid_family(const SimpleGraph& g, const DisjointFamily& fam) { return complete_family(g, fam).has_value(); }

namespace {

// Components of the complement of G_w, each as a vertex set.
std::vector<VertexSet> complement_components(const SimpleGraph& g, VertexSet w) {
    std::vector<VertexSet> comps;
    VertexSet rest = w;
    while (!rest.empty()) {
        VertexSet comp = VertexSet::single(rest.min());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            const int v = frontier.min();
            frontier.erase(v);
            const VertexSet fresh = (w - g.neighbors(v) - comp) - VertexSet::single(v);
            comp |= fresh;
            frontier |= fresh;
        }
        comps.push_back(comp);
        rest -= comp;
    }
    return comps;
}

bool extendable(const SimpleGraph& g, const CompleteBipartiteSub& b) {
    const VertexSet outside = g.vertices() - b.vertices();
    for (int z : outside) {
        if (b.right.subset_of(g.neighbors(z)) || b.left.subset_of(g.neighbors(z))) return true;
    }
    return false;
}

}  // namespace

std::vector<CompleteBipartiteSub> enumerate_blocks(const SimpleGraph& g, BlockMode mode, const BlockOptions& options) {
    std::vector<CompleteBipartiteSub> out;
    const int n = g.order();
    if (n > 30) throw ResourceError("block enumeration scans vertex subsets and is capped at 30 vertices");
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        const VertexSet w(bits);
        if (w.size() < 2 || w.size() > options.max_vertices) continue;
        const std::vector<VertexSet> comps = complement_components(g, w);
        const int c = static_cast<int>(comps.size());
        if (c < 2) continue;
        // comps[0] holds min(w) and stays on the left.
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (c - 1)); ++mask) {
            VertexSet right;
            for (int k = 1; k < c; ++k)
                if (mask >> (k - 1) & 1) right |= comps[k];
            const CompleteBipartiteSub b{w - right, right};
            if (mode == BlockMode::maximal && extendable(g, b)) continue;
            out.push_back(b);
            if (out.size() > options.max_blocks)
                throw ResourceError("more than " + std::to_string(options.max_blocks) + " complete bipartite subgraphs");
        }
    }
    std::sort(out.begin(), out.end(), [](const CompleteBipartiteSub& a, const CompleteBipartiteSub& b) {
        if (a.vertices().size() != b.vertices().size()) return a.vertices().size() > b.vertices().size();
        return a < b;
    });
    return out;
}

WitnessResult max_pd_witness(const SimpleGraph& g, const WitnessOptions& options) {
    WitnessResult best;
    if (g.edge_count() == 0) return best;
    const auto blocks = enumerate_blocks(g, BlockMode::all, options.blocks);
    struct Pair {
        int block;
        Edge rep;
    };
    std::vector<Pair> pairs;
    for (int k = 0; k < static_cast<int>(blocks.size()); ++k)
        for (Edge e : blocks[k].edges()) pairs.push_back({k, e});

    const int n = g.order();
    std::vector<int> chosen;
    std::uint64_t nodes = 0;
    std::function<void(std::size_t, VertexSet, int)> search = [&](std::size_t start, VertexSet used, int value) {
        if (value > best.value) {
            best.value = value;
            best.family = {};
            for (int p : chosen) {
                best.family.blocks.push_back(blocks[pairs[p].block]);
                best.family.representatives.push_back(pairs[p].rep);
            }
        }
        const int remaining = n - used.size();
        if (value + remaining - 1 <= best.value) return;
        for (std::size_t p = start; p < pairs.size(); ++p) {
            if (++nodes > options.node_budget) {
                best.exact = false;
                return;
            }
            const CompleteBipartiteSub& b = blocks[pairs[p].block];
            if (b.vertices().intersects(used)) continue;
            bool ok = true;
            for (int q : chosen)
                if (!is_three_disjoint(g, pairs[p].rep, pairs[q].rep)) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back(static_cast<int>(p));
            search(p + 1, used | b.vertices(), value + b.vertices().size() - 1);
            chosen.pop_back();
            if (!best.exact || value + remaining - 1 <= best.value) return;
        }
    };
    search(0, VertexSet{}, 0);
    return best;
}

std::optional<DisjointFamily> witness_for(const SimpleGraph& g, int i, VertexSet sigma, const WitnessOptions& options) {
    if (!sigma.subset_of(g.vertices())) throw DomainError("sigma is not a vertex subset of the graph");
    const int r = sigma.size() - i;
    if (sigma.empty()) return i == 0 ? std::optional<DisjointFamily>(DisjointFamily{}) : std::nullopt;
    if (r < 1 || r > sigma.size() / 2) return std::nullopt;

    // Blocks of G_sigma mapped back to G's indices.
    const std::vector<int> members = sigma.to_vector();
    auto lift = [&](VertexSet local) {
        VertexSet out;
        for (int v : local) out.insert(members[v]);
        return out;
    };
    std::vector<CompleteBipartiteSub> blocks;
    for (const auto& b : enumerate_blocks(induced_subgraph(g, sigma), BlockMode::all, options.blocks))
        blocks.push_back(CompleteBipartiteSub::make(lift(b.left), lift(b.right)));

    DisjointFamily fam;
    std::uint64_t nodes = 0;
    std::function<bool(VertexSet)> cover = [&](VertexSet uncovered) {
        const int left = r - static_cast<int>(fam.blocks.size());
        if (uncovered.empty()) return left == 0;
        if (left == 0 || uncovered.size() < 2 * left) return false;
        const int pivot = uncovered.min();
        for (const auto& b : blocks) {
            if (!b.vertices().contains(pivot) || !b.vertices().subset_of(uncovered)) continue;
            for (Edge e : b.edges()) {
                if (++nodes > options.node_budget) throw ResourceError("witness search exceeded its node budget");
                bool ok = true;
                for (Edge f : fam.representatives)
                    if (!is_three_disjoint(g, e, f)) { ok = false; break; }
                if (!ok) continue;
                fam.blocks.push_back(b);
                fam.representatives.push_back(e);
                if (cover(uncovered - b.vertices())) return true;
                fam.blocks.pop_back();
                fam.representatives.pop_back();
            }
        }
        return false;
    };
    if (!cover(sigma)) return std::nullopt;
    return fam;
}

int linear_strand_betti(const SimpleGraph& g, VertexSet sigma) {
    if (sigma.size() < 2) throw DomainError("linear strand entries need |sigma| >= 2");
    return c_number(induced_subgraph(g, sigma)) - 1;
}

CochordalReport cochordal_pd(const SimpleGraph& g) {
    if (!is_cochordal(g)) throw DomainError("graph is not co-chordal");
    CochordalReport report;
    if (g.edge_count() == 0) return report;
    const auto blocks = enumerate_blocks(g, BlockMode::maximal);
    report.block = blocks.front();
    report.pd = blocks.front().vertices().size() - 1;
    report.reg = 1;
    return report;
}

nlohmann::json family_to_json(const DisjointFamily& fam) {
    nlohmann::json blocks = nlohmann::json::array(), reps = nlohmann::json::array();
    for (const auto& b : fam.blocks) blocks.push_back({{"left", b.left.to_vector()}, {"right", b.right.to_vector()}});
    for (Edge e : fam.representatives) reps.push_back({e.u, e.v});
    return {{"blocks", blocks}, {"representatives", reps}};
}

DisjointFamily family_from_json(const nlohmann::json& j) {
    try {
        DisjointFamily fam;
        auto set_of = [](const nlohmann::json& arr) {
            VertexSet s;
            for (int v : arr.get<std::vector<int>>()) {
                if (v < 0 || v >= kMaxVertices) throw DomainError("vertex index out of range in family");
                s.insert(v);
            }
            return s;
        };
        for (const auto& b : j.at("blocks")) fam.blocks.push_back(CompleteBipartiteSub::make(set_of(b.at("left")), set_of(b.at("right"))));
        if (j.contains("representatives"))
            for (const auto& e : j.at("representatives")) fam.representatives.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return fam;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed family JSON: ") + e.what());
    }
}

}  // namespace edgebetti
