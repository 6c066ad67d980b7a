#include "edgebetti/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "edgebetti/errors.hpp"

namespace edgebetti {

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) throw DomainError("edge endpoints must be distinct (vertex " + std::to_string(a) + ")");
}

SimpleGraph::SimpleGraph(int n, const std::vector<Edge>& edges, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0 || n > kMaxVertices)
        throw DomainError("vertex count " + std::to_string(n) + " outside [0, 64]");
    if (labels_.empty()) {
        for (int v = 0; v < n; ++v) labels_.push_back("x" + std::to_string(v + 1));
    }
    if (static_cast<int>(labels_.size()) != n)
        throw DomainError("expected " + std::to_string(n) + " labels, got " + std::to_string(labels_.size()));
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty()) throw DomainError("vertex labels must be nonempty");
        if (!seen.insert(l).second) throw DomainError("duplicate vertex label '" + l + "'");
    }
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= n)
            throw DomainError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
        if (adj_[e.u].contains(e.v))
            throw DomainError("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        adj_[e.u].insert(e.v);
        adj_[e.v].insert(e.u);
    }
}

int SimpleGraph::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

int SimpleGraph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += adj_[v].size();
    return twice / 2;
}

std::vector<Edge> SimpleGraph::edges() const { return edges_within(vertices()); }

std::vector<Edge> SimpleGraph::edges_within(VertexSet s) const {
    std::vector<Edge> out;
    for (int u : s) {
        for (int v : (adj_[u] & s)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, VertexSet sigma) {
    if (!sigma.subset_of(g.vertices()))
        throw DomainError("induced_subgraph: vertex set contains an index >= " + std::to_string(g.order()));
    std::vector<int> new_index(g.order(), -1);
    std::vector<std::string> labels;
    for (int v : sigma) {
        new_index[v] = static_cast<int>(labels.size());
        labels.push_back(g.label(v));
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges_within(sigma)) edges.emplace_back(new_index[e.u], new_index[e.v]);
    return SimpleGraph(static_cast<int>(labels.size()), edges, labels);
}

SimpleGraph complement(const SimpleGraph& g) {
    std::vector<Edge> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return SimpleGraph(g.order(), edges, g.labels());
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
    std::vector<std::string> labels = a.labels();
    std::set<std::string> used(labels.begin(), labels.end());
    for (const auto& l : b.labels()) {
        std::string name = l;
        while (used.count(name)) name += "'";
        used.insert(name);
        labels.push_back(name);
    }
    std::vector<Edge> edges = a.edges();
    for (const Edge& e : b.edges()) edges.emplace_back(e.u + a.order(), e.v + a.order());
    return SimpleGraph(a.order() + b.order(), edges, labels);
}

std::vector<VertexSet> connected_components(const SimpleGraph& g) {
    std::vector<VertexSet> comps;
    VertexSet rest = g.vertices();
    while (!rest.empty()) {
        VertexSet comp = VertexSet::single(rest.min());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next |= g.neighbors(v);
            next -= comp;
            comp |= next;
            frontier = next;
        }
        comps.push_back(comp);
        rest -= comp;
    }
    return comps;
}

bool is_three_disjoint(const SimpleGraph& g, Edge e1, Edge e2) {
    for (const Edge& e : {e1, e2}) {
        if (e.u < 0 || e.v >= g.order() || !g.adjacent(e.u, e.v))
            throw DomainError("is_three_disjoint: (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              ") is not an edge");
    }
    if (e1.ends().intersects(e2.ends())) return false;
    return g.edges_within(e1.ends() | e2.ends()).size() == 2;
}

int a_number(const SimpleGraph& g) {
    const std::vector<Edge> edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (m == 0) return 0;
    std::vector<std::vector<char>> compatible(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            compatible[i][j] = compatible[j][i] = is_three_disjoint(g, edges[i], edges[j]);

    int best = 0;
    std::function<void(int, const std::vector<int>&)> dfs = [&](int chosen, const std::vector<int>& cand) {
        if (chosen > best) best = chosen;
        for (std::size_t k = 0; k < cand.size(); ++k) {
            // Remaining candidates bound the gain.
            if (chosen + static_cast<int>(cand.size() - k) <= best) return;
            std::vector<int> next;
            for (std::size_t l = k + 1; l < cand.size(); ++l)
                if (compatible[cand[k]][cand[l]]) next.push_back(cand[l]);
            dfs(chosen + 1, next);
        }
    };
    std::vector<int> all(m);
    for (int i = 0; i < m; ++i) all[i] = i;
    dfs(0, all);
    return best;
}

int c_number(const SimpleGraph& g) {
    if (g.order() == 0) return 1;
    return static_cast<int>(connected_components(complement(g)).size());
}

bool is_chordal(const SimpleGraph& g) {
    const int n = g.order();
    // Maximum cardinality search; visit[k] is the k-th visited vertex.
    std::vector<int> weight(n, 0), visit;
    VertexSet unvisited = g.vertices();
    while (!unvisited.empty()) {
        int pick = unvisited.min();
        for (int v : unvisited)
            if (weight[v] > weight[pick]) pick = v;
        visit.push_back(pick);
        unvisited.erase(pick);
        for (int w : (g.neighbors(pick) & unvisited)) ++weight[w];
    }
    // The reverse visit order must be a perfect elimination ordering.
    std::vector<int> pos(n);
    for (int k = 0; k < n; ++k) pos[visit[k]] = k;
    for (int k = 0; k < n; ++k) {
        const int v = visit[k];
        VertexSet earlier;
        for (int w : g.neighbors(v))
            if (pos[w] < k) earlier.insert(w);
        if (earlier.empty()) continue;
        int parent = earlier.min();
        for (int w : earlier)
            if (pos[w] > pos[parent]) parent = w;
        VertexSet rest = earlier;
        rest.erase(parent);
        if (!rest.subset_of(g.neighbors(parent))) return false;
    }
    return true;
}

bool is_cochordal(const SimpleGraph& g) { return is_chordal(complement(g)); }

std::optional<BipartitePartition> bipartition(const SimpleGraph& g) {
    BipartitePartition part;
    for (VertexSet comp : connected_components(g)) {
        VertexSet side[2];
        side[0].insert(comp.min());
        VertexSet frontier = side[0];
        int colour = 0;
        VertexSet seen = frontier;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next |= g.neighbors(v);
            if (next.intersects(side[colour])) return std::nullopt;
            next -= seen;
            colour ^= 1;
            side[colour] |= next;
            seen |= next;
            frontier = next;
        }
        for (int c = 0; c < 2; ++c)
            for (int v : side[c])
                if (g.neighbors(v).intersects(side[c])) return std::nullopt;
        part.left |= side[0];
        part.right |= side[1];
    }
    return part;
}

SimpleGraph cycle_graph(int n) {
    if (n < 3) throw DomainError("cycle_graph needs n >= 3");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return SimpleGraph(n, edges);
}

SimpleGraph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return SimpleGraph(n, edges);
}

SimpleGraph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return SimpleGraph(n, edges);
}

SimpleGraph complete_bipartite_graph(int m, int n) {
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (int a = 0; a < m; ++a) labels.push_back("u" + std::to_string(a + 1));
    for (int b = 0; b < n; ++b) labels.push_back("v" + std::to_string(b + 1));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < n; ++b) edges.emplace_back(a, m + b);
    return SimpleGraph(m + n, edges, labels);
}

SimpleGraph ferrers_graph(const std::vector<int>& lambda) {
    if (lambda.empty()) throw DomainError("ferrers_graph: empty partition");
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 1 || (i > 0 && lambda[i] > lambda[i - 1]))
            throw DomainError("ferrers_graph: parts must be positive and weakly decreasing");
    }
    const int rows = static_cast<int>(lambda.size());
    const int cols = lambda.front();
    std::vector<std::string> labels;
    for (int i = 0; i < rows; ++i) labels.push_back("r" + std::to_string(i + 1));
    for (int j = 0; j < cols; ++j) labels.push_back("c" + std::to_string(j + 1));
    std::vector<Edge> edges;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < lambda[i]; ++j) edges.emplace_back(i, rows + j);
    return SimpleGraph(rows + cols, edges, labels);
}

}  // namespace edgebetti
