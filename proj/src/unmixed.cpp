#include "edgebetti/unmixed.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "edgebetti/errors.hpp"

namespace edgebetti {

namespace {

std::optional<VertexSet> x_sides(const SimpleGraph& g) {
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

}  // namespace

std::optional<UnmixedLabeling> unmixed_labeling(const SimpleGraph& g, const UnmixedOptions& options) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return std::nullopt;
    const auto xs = x_sides(g);
    if (!xs) return std::nullopt;
    const std::vector<int> xlist = xs->to_vector();

    Labeling lab;
    lab.x = xlist;
    lab.y.assign(xlist.size(), -1);
    std::uint64_t tried = 0;
    std::optional<UnmixedLabeling> found;
    std::function<bool(std::size_t, VertexSet)> match = [&](std::size_t k, VertexSet used) {
        if (k == xlist.size()) {
            if (++tried > options.matching_budget) throw ResourceError("unmixed labeling exceeded its matching budget");
            if (satisfies_cm(g, lab, false)) {
                found = lab;
                return true;
            }
            return false;
        }
        for (int y : g.neighbors(xlist[k]) - used) {
            lab.y[k] = y;
            if (match(k + 1, used | VertexSet::single(y))) return true;
        }
        return false;
    };
    match(0, VertexSet{});
    return found;
}

bool DirectedGraph::is_transitive() const {
    for (int i = 0; i < size(); ++i)
        for (int j : out[i])
            if (!(out[j] - VertexSet::single(i)).subset_of(out[i])) return false;
    return true;
}

bool DirectedGraph::is_acyclic() const {
    // Kahn's algorithm
    std::vector<int> indeg(out.size(), 0);
    for (const VertexSet& s : out)
        for (int j : s) ++indeg[j];
    std::vector<int> ready;
    for (int i = 0; i < size(); ++i)
        if (indeg[i] == 0) ready.push_back(i);
    int seen = 0;
    while (!ready.empty()) {
        const int i = ready.back();
        ready.pop_back();
        ++seen;
        for (int j : out[i])
            if (--indeg[j] == 0) ready.push_back(j);
    }
    return seen == size();
}

std::vector<std::pair<int, int>> DirectedGraph::arcs() const {
    std::vector<std::pair<int, int>> a;
    for (int i = 0; i < size(); ++i)
        for (int j : out[i]) a.emplace_back(i, j);
    return a;
}

DirectedGraph directed_graph(const SimpleGraph& g, const UnmixedLabeling& lab) {
    DirectedGraph d;
    d.out.resize(static_cast<std::size_t>(lab.size()));
    for (int i = 0; i < lab.size(); ++i)
        for (int j = 0; j < lab.size(); ++j)
            if (i != j && g.adjacent(lab.x[i], lab.y[j])) d.out[i].insert(j);
    if (!d.is_transitive()) throw InvariantViolation("directed graph of the labeling is not transitive");
    return d;
}

AcyclicReduction acyclic_reduction(const SimpleGraph& g, const UnmixedOptions& options) {
    const auto lab = unmixed_labeling(g, options);
    if (!lab) throw DomainError("graph is not an unmixed bipartite graph without isolated vertices");
    AcyclicReduction red;
    red.graph = g;
    red.labeling = *lab;
    red.digraph = directed_graph(g, *lab);
    const DirectedGraph& d = red.digraph;
    const int n = lab->size();

    // The relation is transitive, so strong components are the classes of mutual arcs.
    std::vector<VertexSet> comps;
    VertexSet left = VertexSet::range(n);
    while (!left.empty()) {
        const int i = left.min();
        VertexSet z = VertexSet::single(i);
        for (int j : d.out[i])
            if (d.has_arc(j, i)) z.insert(j);
        comps.push_back(z);
        left -= z;
    }
    auto preds = [&](const VertexSet& z) {
        const int i = z.min();
        int c = 0;
        for (int j = 0; j < n; ++j)
            if (!z.contains(j) && d.has_arc(j, i)) ++c;
        return c;
    };
    std::stable_sort(comps.begin(), comps.end(), [&](const VertexSet& a, const VertexSet& b) {
        const int pa = preds(a), pb = preds(b);
        return pa != pb ? pa < pb : a.min() < b.min();
    });
    red.components = comps;
    red.component_of.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < red.t(); ++a) {
        for (int i : comps[a]) red.component_of[i] = a;
        red.zeta.push_back(comps[a].size());
    }

    const int t = red.t();
    std::vector<std::string> labels;
    for (int a = 1; a <= t; ++a) labels.push_back("u" + std::to_string(a));
    for (int a = 1; a <= t; ++a) labels.push_back("v" + std::to_string(a));
    std::vector<Edge> edges;
    for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b)
            if (a == b || d.has_arc(comps[a].min(), comps[b].min())) edges.emplace_back(a, t + b);
    red.reduced = SimpleGraph(2 * t, edges, labels);
    if (!satisfies_cm(red.reduced, poset_graph_labeling(t)))
        throw InvariantViolation("acyclic reduction is not Cohen-Macaulay in its natural labeling");
    return red;
}

int sigma_zeta(VertexSet sigma_hat, const AcyclicReduction& red) {
    const int t = red.t();
    int total = 0;
    for (int v : sigma_hat) {
        if (v >= 2 * t) throw DomainError("vertex outside the reduced graph");
        total += red.zeta[v < t ? v : v - t];
    }
    return total;
}

namespace {

BettiTable dual_table_of(const AcyclicReduction& red) {
    return betti_table(alexander_dual(edge_ideal(red.reduced)), FieldSpec::gf2()).as_ideal();
}

int kummini_value(const BettiTable& table, const AcyclicReduction& red) {
    int best = -1;
    for (const auto& [key, v] : table.entries())
        if (v != 0) best = std::max(best, sigma_zeta(key.sigma, red) - key.i);
    return best;
}

}  // namespace

KumminiReport kummini_report(const SimpleGraph& g, const UnmixedOptions& options) {
    KumminiReport report;
    if (g.order() == 0) return report;
    const AcyclicReduction red = acyclic_reduction(g, options);
    report.dual_table = dual_table_of(red);
    report.pd = kummini_value(report.dual_table, red);
    return report;
}

int kummini_pd(const SimpleGraph& g, const UnmixedOptions& options) { return kummini_report(g, options).pd; }

DisjointFamily lift_family(const AcyclicReduction& red, const DisjointFamily& fam_hat) {
    const int t = red.t();
    if (!is_valid_family(red.reduced, fam_hat)) throw DomainError("family is not valid in the reduced graph");
    auto blow = [&](VertexSet side) {
        VertexSet out;
        for (int v : side) {
            const bool is_u = v < t;
            for (int p : red.components[is_u ? v : v - t]) out.insert(is_u ? red.labeling.x[p] : red.labeling.y[p]);
        }
        return out;
    };
    auto endpoint = [&](int v) {
        return v < t ? red.labeling.x[red.components[v].min()] : red.labeling.y[red.components[v - t].min()];
    };
    DisjointFamily fam;
    for (const CompleteBipartiteSub& b : fam_hat.blocks)
        fam.blocks.push_back(CompleteBipartiteSub::make(blow(b.left), blow(b.right)));
    for (Edge e : fam_hat.representatives) fam.representatives.emplace_back(endpoint(e.u), endpoint(e.v));

    VertexSet seen;
    for (const CompleteBipartiteSub& b : fam.blocks) {
        if (!b.is_complete_in(red.graph)) throw InvariantViolation("lifted block is not complete bipartite in G");
        if (b.vertices().intersects(seen)) throw InvariantViolation("lifted blocks overlap");
        seen |= b.vertices();
    }
    if (!fam_hat.representatives.empty() && !is_valid_family(red.graph, fam))
        throw InvariantViolation("lifted representatives are not pairwise 3-disjoint");
    if (fam.value() != sigma_zeta(fam_hat.sigma(), red) - static_cast<int>(fam_hat.blocks.size()))
        throw InvariantViolation("lifting changed |sigma^zeta| - r");
    return fam;
}

namespace {

bool dominates(const BettiKey& big, const BettiKey& small) {
    return big.i >= small.i && small.sigma.subset_of(big.sigma) && big.sigma != small.sigma &&
           big.sigma.size() - small.sigma.size() >= big.i - small.i;
}

}  // namespace

UnmixedWitness unmixed_pd_witness(const SimpleGraph& g, const UnmixedOptions& options) {
    UnmixedWitness w;
    if (g.order() == 0) return w;
    const AcyclicReduction red = acyclic_reduction(g, options);
    const BettiTable table = dual_table_of(red);
    const int best = kummini_value(table, red);

    std::optional<BettiKey> chosen;
    for (const auto& [key, v] : table.entries()) {
        if (v == 0 || sigma_zeta(key.sigma, red) - key.i != best) continue;
        w.maximizers.push_back(key);
        if (!chosen || lex_less(key.sigma, chosen->sigma) || (key.sigma == chosen->sigma && key.i < chosen->i))
            chosen = key;
    }
    if (!chosen) throw InvariantViolation("dual Betti table of the reduced graph is empty");

    // Replace a non-extremal entry by one dominating it until extremal.
    for (bool moved = true; moved;) {
        moved = false;
        for (const auto& [key, v] : table.entries()) {
            if (v == 0 || !dominates(key, *chosen)) continue;
            const int before = sigma_zeta(chosen->sigma, red) - chosen->i;
            const int after = sigma_zeta(key.sigma, red) - key.i;
            if (after < before) throw InvariantViolation("extremality replacement decreased |sigma^zeta| - r");
            chosen = key;
            ++w.replacements;
            moved = true;
            break;
        }
    }
    w.r = chosen->i;
    w.sigma_hat = chosen->sigma;

    const Labeling lab = poset_graph_labeling(red.t());
    const Poset p = poset_of_graph(red.reduced, lab);
    bool found = false;
    for (const FreeBasis& b : free_bases(p, w.r))
        if (b.degree == w.sigma_hat && is_maximal_boolean(p, b)) {
            w.basis = b;
            found = true;
            break;
        }
    if (!found) throw InvariantViolation("no maximal Boolean free basis matches the extremal entry");
    w.reduced_family = extract_family(red.reduced, lab, w.basis);
    w.family = lift_family(red, w.reduced_family);
    w.pd = w.family.value();
    if (w.pd != best) throw InvariantViolation("lifted family value differs from the Kummini maximum");
    return w;
}

SimpleGraph blow_up(const Poset& p, const std::vector<int>& zeta) {
    if (static_cast<int>(zeta.size()) != p.size()) throw DomainError("one zeta entry per poset element is required");
    std::vector<int> cls;
    for (int a = 0; a < p.size(); ++a) {
        if (zeta[a] < 1) throw DomainError("zeta entries must be positive");
        cls.insert(cls.end(), static_cast<std::size_t>(zeta[a]), a);
    }
    const int n = static_cast<int>(cls.size());
    if (2 * n > kMaxVertices) throw DomainError("blow-up exceeds 64 vertices");
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) labels.push_back("y" + std::to_string(i));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.leq(cls[i], cls[j])) edges.emplace_back(i, n + j);
    return SimpleGraph(2 * n, edges, labels);
}

}  // namespace edgebetti
