#include "edgebetti/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "edgebetti/cm_bipartite.hpp"
#include "edgebetti/errors.hpp"
#include "edgebetti/graph_io.hpp"
#include "edgebetti/hochster.hpp"
#include "edgebetti/lyubeznik.hpp"
#include "edgebetti/unmixed.hpp"
#include "edgebetti/witness.hpp"

namespace edgebetti {

const std::vector<std::string>& theorem_registry() {
    static const std::vector<std::string> tags = {"T1.1", "T2.2", "T2.3", "T2.4", "T2.5", "P5.1", "C5.2", "C5.4",
                                                  "T5.8", "T6.1", "T6.2", "P6.6", "C6.7", "C6.8", "P7.2", "T7.1"};
    return tags;
}

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skip: return "skip";
        case Status::incomplete: return "incomplete";
    }
    return "?";
}

Campaign campaign_from_json(const nlohmann::json& j) {
    try {
        Campaign c;
        c.name = j.value("name", std::string("campaign"));
        if (j.contains("source")) c.sources.push_back(catalog_spec_from_json(j.at("source")));
        if (j.contains("sources"))
            for (const auto& s : j.at("sources")) c.sources.push_back(catalog_spec_from_json(s));
        if (c.sources.empty()) throw UsageError("campaign names no graph source");
        if (j.contains("fields")) {
            c.fields.clear();
            for (const auto& f : j.at("fields")) {
                try {
                    c.fields.push_back(FieldSpec::parse(f.get<std::string>()));
                } catch (const DomainError& e) {
                    throw UsageError(e.what());
                }
            }
            if (c.fields.empty()) throw UsageError("campaign lists no fields");
        }
        if (j.contains("caps")) {
            const auto& caps = j.at("caps");
            c.caps.max_n = caps.value("max_n", c.caps.max_n);
            c.caps.max_block_vertices = caps.value("max_block_vertices", c.caps.max_block_vertices);
            c.caps.max_family_size = caps.value("max_family_size", c.caps.max_family_size);
            c.caps.node_budget = caps.value("node_budget", c.caps.node_budget);
        }
        const auto& registry = theorem_registry();
        for (const auto& a : j.at("assertions")) {
            const std::string tag = a.get<std::string>();
            if (std::find(registry.begin(), registry.end(), tag) == registry.end())
                throw UsageError("unknown assertion tag '" + tag + "'");
            c.assertions.push_back(tag);
        }
        if (c.assertions.empty()) throw UsageError("campaign lists no assertions");
        c.seed = j.value("seed", std::uint64_t{0});
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed campaign: ") + e.what());
    }
}

nlohmann::json campaign_to_json(const Campaign& c) {
    nlohmann::json sources = nlohmann::json::array(), fields = nlohmann::json::array();
    for (const auto& s : c.sources) sources.push_back(catalog_spec_to_json(s));
    for (const auto& f : c.fields) fields.push_back(f.name());
    return {{"name", c.name},
            {"sources", sources},
            {"fields", fields},
            {"caps",
             {{"max_n", c.caps.max_n},
              {"max_block_vertices", c.caps.max_block_vertices},
              {"max_family_size", c.caps.max_family_size},
              {"node_budget", c.caps.node_budget}}},
            {"assertions", c.assertions},
            {"seed", c.seed}};
}

namespace {

nlohmann::json set_json(VertexSet s) { return s.to_vector(); }

// Lazily computed facts about one graph, shared by the assertions.
class GraphContext {
public:
    GraphContext(const SimpleGraph& g, const CampaignCaps& caps) : g_(g), caps_(caps) {
        betti_.max_variables = std::max(16, caps.max_n);
    }

    const SimpleGraph& graph() const { return g_; }
    const CampaignCaps& caps() const { return caps_; }
    const BettiOptions& betti_options() const { return betti_; }

    const BettiTable& table(const FieldSpec& f) {
        auto it = tables_.find(f.name());
        if (it == tables_.end()) it = tables_.emplace(f.name(), betti_table(edge_ideal(g_), f, betti_)).first;
        return it->second;
    }
    int a() {
        if (!a_) a_ = a_number(g_);
        return *a_;
    }
    const std::vector<CompleteBipartiteSub>& blocks() {
        if (!blocks_) {
            BlockOptions opts;
            opts.max_vertices = caps_.max_block_vertices;
            blocks_ = g_.edge_count() ? enumerate_blocks(g_, BlockMode::all, opts) : std::vector<CompleteBipartiteSub>{};
        }
        return *blocks_;
    }
    int best_block() {
        int best = 0;
        for (const auto& b : enumerate_blocks(g_, BlockMode::maximal)) best = std::max(best, b.vertices().size() - 1);
        return best;
    }
    int witness_value() {
        if (!witness_) {
            WitnessOptions opts;
            opts.node_budget = caps_.node_budget;
            const WitnessResult r = max_pd_witness(g_, opts);
            if (!r.exact) throw ResourceError("max_pd_witness ran out of its node budget");
            witness_ = r.value;
        }
        return *witness_;
    }
    const std::optional<Labeling>& cm() {
        if (!cm_done_) {
            cm_ = cm_labeling(g_);
            cm_done_ = true;
        }
        return cm_;
    }
    const std::optional<Labeling>& unmixed() {
        if (!unmixed_done_) {
            unmixed_ = unmixed_labeling(g_);
            unmixed_done_ = true;
        }
        return unmixed_;
    }
    bool cochordal() {
        if (!cochordal_) cochordal_ = is_cochordal(g_);
        return *cochordal_;
    }

private:
    const SimpleGraph& g_;
    CampaignCaps caps_;
    BettiOptions betti_;
    std::map<std::string, BettiTable> tables_;
    std::optional<int> a_, witness_;
    std::optional<bool> cochordal_;
    std::optional<std::vector<CompleteBipartiteSub>> blocks_;
    std::optional<Labeling> cm_, unmixed_;
    bool cm_done_ = false, unmixed_done_ = false;
};

struct Sink {
    std::uint64_t checks = 0;
    std::vector<nlohmann::json> failures;
    void expect(bool ok, nlohmann::json detail) {
        ++checks;
        if (!ok) failures.push_back(std::move(detail));
    }
};

// Returns false when the assertion does not apply to this graph.
using Check = std::function<bool(GraphContext&, const FieldSpec&, Sink&)>;

// Vertex-disjoint families of at most caps.max_family_size blocks with representatives.
void for_each_family(GraphContext& ctx, bool bouquets_only, const std::function<void(const DisjointFamily&)>& f) {
    std::vector<CompleteBipartiteSub> blocks;
    for (const auto& b : ctx.blocks())
        if (!bouquets_only || b.type().first == 1) blocks.push_back(b);
    std::vector<CompleteBipartiteSub> chosen;
    std::function<void(std::size_t, VertexSet)> rec = [&](std::size_t start, VertexSet used) {
        if (!chosen.empty()) {
            if (auto reps = find_representatives(ctx.graph(), chosen)) f(DisjointFamily{chosen, *reps});
        }
        if (static_cast<int>(chosen.size()) == ctx.caps().max_family_size) return;
        for (std::size_t k = start; k < blocks.size(); ++k) {
            if (blocks[k].vertices().intersects(used)) continue;
            chosen.push_back(blocks[k]);
            rec(k + 1, used | blocks[k].vertices());
            chosen.pop_back();
        }
    };
    rec(0, VertexSet{});
}

bool check_main_theorem(GraphContext& ctx, const FieldSpec& f, Sink& sink) {
    const BettiTable& t = ctx.table(f);
    for_each_family(ctx, false, [&](const DisjointFamily& fam) {
        const VertexSet sigma = fam.sigma();
        const int i = sigma.size() - static_cast<int>(fam.blocks.size());
        const std::uint64_t beta = t.at(i, sigma);
        nlohmann::json detail = {{"sigma", set_json(sigma)}, {"i", i}, {"family", family_to_json(fam)}, {"beta", beta}};
        sink.expect(beta >= 1, detail);
        try {
            const MainCertificate cert = main_theorem_certificate(ctx.graph(), fam, f);
            detail["certificate"] = {{"i", cert.i}, {"sigma", set_json(cert.sigma)}};
            sink.expect(cert.i == i && cert.sigma == sigma, detail);
        } catch (const InvariantViolation& e) {
            detail["certificate_error"] = e.what();
            sink.expect(false, detail);
        }
    });
    return true;
}

bool check_katzman_reg(GraphContext& ctx, const FieldSpec& f, Sink& sink) {
    const BettiTable& t = ctx.table(f);
    const SimpleGraph& g = ctx.graph();
    sink.expect(t.reg() >= ctx.a(), {{"reg", t.reg()}, {"a", ctx.a()}});

    std::map<std::pair<int, int>, std::uint64_t> summed;
    for (const auto& [key, v] : t.entries()) summed[{key.i, key.sigma.size()}] += v;
    sink.expect(summed == t.graded(), {{"check", "sum over sigma of beta_{i,sigma} equals beta_{i,j}"}});

    // Alternating sums against the K-polynomial sum_F t^|F| (1-t)^(n-|F|) of the independence complex.
    const int n = g.order();
    std::vector<std::int64_t> faces(static_cast<std::size_t>(n + 1), 0);
    for_each_subset(g.vertices(), [&](VertexSet s) {
        for (int v : s)
            if (g.neighbors(v).intersects(s)) return;
        ++faces[s.size()];
    });
    auto binom = [](int a, int b) {
        std::int64_t r = 1;
        for (int k = 1; k <= b; ++k) r = r * (a - b + k) / k;
        return r;
    };
    for (int j = 0; j <= n; ++j) {
        std::int64_t expected = 0;
        for (int k = 0; k <= j; ++k) expected += faces[k] * ((j - k) % 2 ? -1 : 1) * binom(n - k, j - k);
        std::int64_t alternating = 0;
        for (const auto& [ij, v] : t.graded())
            if (ij.second == j) alternating += (ij.first % 2 ? -1 : 1) * static_cast<std::int64_t>(v);
        sink.expect(alternating == expected, {{"j", j}, {"alternating_sum", alternating}, {"k_polynomial", expected}});
    }
    return true;
}

bool check_reg_classes(GraphContext& ctx, const FieldSpec& f, Sink& sink) {
    const bool chordal = is_chordal(ctx.graph());
    const bool unmixed_bip = bipartition(ctx.graph()).has_value() && is_unmixed(ctx.graph());
    if (!chordal && !unmixed_bip) return false;
    const int reg = ctx.table(f).reg();
    sink.expect(reg == ctx.a(), {{"reg", reg}, {"a", ctx.a()}, {"chordal", chordal}, {"unmixed_bipartite", unmixed_bip}});
    return true;
}

// Components of G_sigma when every one is a star with at least one edge; empty otherwise.
std::optional<int> bouquet_count(const SimpleGraph& g, VertexSet sigma) {
    const SimpleGraph h = induced_subgraph(g, sigma);
    int r = 0;
    for (VertexSet comp : connected_components(h)) {
        const int size = comp.size();
        if (size < 2) return std::nullopt;
        int edges = 0;
        bool centre = false;
        for (int v : comp) {
            edges += h.degree(v);
            centre = centre || h.degree(v) == size - 1;
        }
        if (edges / 2 != size - 1 || !centre) return std::nullopt;
        ++r;
    }
    return r;
}

bool check_katzman_bouquets(GraphContext& ctx, const FieldSpec& f, Sink& sink) {
    const auto graded = ctx.table(f).graded();
    for_each_subset(ctx.graph().vertices(), [&](VertexSet sigma) {
        if (sigma.size() < 2) return;
        const auto r = bouquet_count(ctx.graph(), sigma);
        if (!r) return;
        const int i = sigma.size() - *r;
        const auto it = graded.find({i, sigma.size()});
        const std::uint64_t beta = it == graded.end() ? 0 : it->second;
        sink.expect(beta != 0, {{"sigma", set_json(sigma)}, {"r", *r}, {"i", i}, {"j", sigma.size()}, {"beta", beta}});
    });
    return true;
}

bool check_kimura(GraphContext& ctx, const FieldSpec& f, Sink& sink) {
    const BettiTable& t = ctx.table(f);
    for_each_family(ctx, true, [&](const DisjointFamily& fam) {
        const VertexSet sigma = fam.sigma();
        const int i = sigma.size() - static_cast<int>(fam.blocks.size());
        sink.expect(t.at(i, sigma) != 0, {{"sigma", set_json(sigma)}, {"i", i}, {"family", family_to_json(fam)}});
    });
    return true;
}

bool check_linear_strand(GraphContext& ctx, const FieldSpec& f, Sink& sink) {
    const BettiTable& t = ctx.table(f);
    for_each_subset(ctx.graph().vertices(), [&](VertexSet sigma) {
        if (sigma.size() < 2) return;
        const int i = sigma.size() - 1;
        const auto beta = static_cast<std::int64_t>(t.at(i, sigma));
        const int c = c_number(induced_subgraph(ctx.graph(), sigma));
        sink.expect(beta == c - 1, {{"sigma", set_json(sigma)}, {"i", i}, {"beta", beta}, {"c_minus_1", c - 1}});
    });
    return true;
}

bool check_cochordal_betti(GraphContext& ctx, const FieldSpec& f, Sink& sink) {
    if (!ctx.cochordal()) return false;
    const BettiTable& t = ctx.table(f);
    const SimpleGraph& g = ctx.graph();
    for (const auto& [key, v] : t.entries()) {
        if (key.i < 1 || v == 0) continue;
        const bool linear = key.sigma.size() == key.i + 1;
        const int c = c_number(induced_subgraph(g, key.sigma));
        sink.expect(linear && c >= 2, {{"sigma", set_json(key.sigma)}, {"i", key.i}, {"beta", v}, {"c", c}});
    }
    for_each_subset(g.vertices(), [&](VertexSet sigma) {
        if (sigma.size() < 2 || c_number(induced_subgraph(g, sigma)) < 2) return;
        sink.expect(t.at(sigma.size() - 1, sigma) != 0, {{"sigma", set_json(sigma)}, {"i", sigma.size() - 1}, {"beta", 0}});
    });
    return true;
}

bool check_cochordal_pd(GraphContext& ctx, const FieldSpec& f, Sink& sink) {
    if (!ctx.cochordal()) return false;
    const BettiTable& t = ctx.table(f);
    if (ctx.graph().edge_count() == 0) {
        sink.expect(t.pd() == 0, {{"pd", t.pd()}});
        return true;
    }
    const int best = ctx.best_block();
    const CochordalReport rep = cochordal_pd(ctx.graph());
    sink.expect(t.pd() == best && rep.pd == best, {{"pd", t.pd()}, {"max_m_plus_n_minus_1", best}, {"cochordal_pd", rep.pd}});
    sink.expect(t.reg() == 1 && ctx.a() == 1, {{"reg", t.reg()}, {"a", ctx.a()}});
    return true;
}

bool check_ferrers(GraphContext& ctx, const FieldSpec& f, Sink& sink) {
    const SimpleGraph& g = ctx.graph();
    if (!is_ferrers(g)) return false;
    const BettiTable& t = ctx.table(f);
    for_each_subset(g.vertices(), [&](VertexSet sigma) {
        if (sigma.size() < 2) return;
        const SimpleGraph h = induced_subgraph(g, sigma);
        const auto parts = bipartition(h);
        bool complete = false;
        if (parts && !parts->left.empty() && !parts->right.empty())
            complete = h.edge_count() == parts->left.size() * parts->right.size();
        for (int i = 1; i < sigma.size(); ++i) {
            const std::uint64_t expected = (complete && sigma.size() == i + 1) ? 1 : 0;
            const std::uint64_t beta = t.at(i, sigma);
            sink.expect(beta == expected, {{"sigma", set_json(sigma)}, {"i", i}, {"beta", beta}, {"expected", expected}});
        }
    });
    return true;
}

bool check_bcp(GraphContext& ctx, const FieldSpec& f, Sink& sink) {
    for (const BcpComparison& c : verify_bcp(ctx.graph(), f, ctx.betti_options()).comparisons)
        sink.expect(c.holds(), {{"r", c.r}, {"sigma", set_json(c.sigma)}, {"dual", c.dual_value}, {"quotient", c.quotient_value}});
    return true;
}

bool check_eagon_reiner(GraphContext& ctx, const FieldSpec& f, Sink& sink) {
    const EagonReinerReport r = verify_eagon_reiner(ctx.graph(), f, ctx.betti_options());
    sink.expect(r.reg_dual == r.pd_quotient, {{"reg_dual", r.reg_dual}, {"pd_quotient", r.pd_quotient}});
    sink.expect(r.pd_dual == r.reg_quotient, {{"pd_dual", r.pd_dual}, {"reg_quotient", r.reg_quotient}});
    return true;
}

bool check_cm_extraction(GraphContext& ctx, const FieldSpec& f, Sink& sink) {
    const auto& lab = ctx.cm();
    if (!lab) return false;
    const Poset p = poset_of_graph(ctx.graph(), *lab);
    const BettiTable& t = ctx.table(f);
    for (const FreeBasis& b : free_bases(p)) {
        if (!is_maximal_boolean(p, b)) continue;
        const VertexSet sigma = basis_vertices(*lab, b.degree);
        nlohmann::json detail = {{"sigma", set_json(sigma)}, {"r", b.i}};
        try {
            const DisjointFamily fam = extract_family(ctx.graph(), *lab, b);
            detail["family"] = family_to_json(fam);
            sink.expect(is_valid_family(ctx.graph(), fam) && fam.sigma() == sigma, detail);
        } catch (const InvariantViolation& e) {
            detail["error"] = e.what();
            sink.expect(false, detail);
        }
        sink.expect(t.at(sigma.size() - b.i, sigma) != 0, detail);
    }
    return true;
}

bool check_cm_reg(GraphContext& ctx, const FieldSpec& f, Sink& sink) {
    if (!ctx.cm()) return false;
    sink.expect(ctx.table(f).reg() == ctx.a(), {{"reg", ctx.table(f).reg()}, {"a", ctx.a()}});
    return true;
}

bool check_cm_pd(GraphContext& ctx, const FieldSpec& f, Sink& sink) {
    if (!ctx.cm()) return false;
    const int formula = cm_pd(ctx.graph()).pd;
    const int pd = ctx.table(f).pd();
    const int witness = ctx.witness_value();
    sink.expect(formula == pd && pd == witness, {{"cm_pd", formula}, {"pd", pd}, {"max_pd_witness", witness}});
    return true;
}

bool check_kummini(GraphContext& ctx, const FieldSpec& f, Sink& sink) {
    if (!ctx.unmixed()) return false;
    const int formula = kummini_pd(ctx.graph());
    sink.expect(formula == ctx.table(f).pd(), {{"kummini_pd", formula}, {"pd", ctx.table(f).pd()}});
    return true;
}

bool check_unmixed_witness(GraphContext& ctx, const FieldSpec& f, Sink& sink) {
    if (!ctx.unmixed()) return false;
    nlohmann::json detail;
    try {
        const UnmixedWitness w = unmixed_pd_witness(ctx.graph());
        detail = {{"witness_pd", w.pd}, {"pd", ctx.table(f).pd()}, {"family", family_to_json(w.family)}};
        const int search = ctx.witness_value();
        detail["max_pd_witness"] = search;
        sink.expect(w.pd == ctx.table(f).pd() && w.pd == search && is_valid_family(ctx.graph(), w.family), detail);
    } catch (const InvariantViolation& e) {
        detail["error"] = e.what();
        sink.expect(false, detail);
    }
    return true;
}

const std::map<std::string, Check>& checks() {
    static const std::map<std::string, Check> table = {
        {"T1.1", check_main_theorem},     {"T2.2", check_katzman_reg},   {"T2.3", check_reg_classes},
        {"T2.4", check_katzman_bouquets}, {"T2.5", check_kimura},        {"P5.1", check_linear_strand},
        {"C5.2", check_cochordal_betti},  {"C5.4", check_cochordal_pd},  {"T5.8", check_ferrers},
        {"T6.1", check_bcp},              {"T6.2", check_eagon_reiner},  {"P6.6", check_cm_extraction},
        {"C6.7", check_cm_reg},           {"C6.8", check_cm_pd},         {"P7.2", check_kummini},
        {"T7.1", check_unmixed_witness},
    };
    return table;
}

GraphOutcome run_one(const Campaign& c, const CatalogEntry& entry) {
    GraphOutcome out;
    out.graph = entry.name;
    out.graph_json = graph_to_json(entry.graph);
    GraphContext ctx(entry.graph, c.caps);
    for (const std::string& tag : c.assertions) {
        const Check& check = checks().at(tag);
        Status status = Status::skip;
        std::uint64_t count = 0;
        for (const FieldSpec& f : c.fields) {
            Sink sink;
            try {
                if (!check(ctx, f, sink)) continue;
                if (status == Status::skip) status = Status::pass;
            } catch (const ResourceError& e) {
                out.notes.push_back(tag + " " + f.name() + ": " + e.what());
                if (status != Status::fail) status = Status::incomplete;
            } catch (const std::exception& e) {
                sink.failures.push_back({{"exception", e.what()}});
            }
            count += sink.checks;
            for (auto& d : sink.failures) {
                out.violations.push_back({tag, entry.name, f.name(), std::move(d)});
                status = Status::fail;
            }
        }
        out.status[tag] = status;
        out.checks[tag] = count;
    }
    return out;
}

}  // namespace

int workers_from_env() {
    if (const char* v = std::getenv("EDGEBETTI_WORKERS")) {
        const int w = std::atoi(v);
        if (w >= 1) return w;
    }
    return 1;
}

std::uint64_t cost_estimate(const std::vector<CatalogEntry>& graphs) {
    std::uint64_t total = 0;
    for (const auto& e : graphs) total += std::uint64_t{1} << std::min(e.graph.order(), 63);
    return total;
}

Report run_campaign(const Campaign& c, const RunOptions& options) {
    std::vector<CatalogEntry> graphs;
    for (const CatalogSpec& s : c.sources) {
        auto part = generate_catalog(s, c.seed);
        graphs.insert(graphs.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return run_campaign_on(c, graphs, options);
}

Report run_campaign_on(const Campaign& campaign, const std::vector<CatalogEntry>& graphs, const RunOptions& options) {
    Campaign c = campaign;
    if (options.max_n_override > 0) c.caps.max_n = options.max_n_override;
    for (const auto& e : graphs)
        if (e.graph.order() > c.caps.max_n)
            throw UsageError("graph " + e.name + " has " + std::to_string(e.graph.order()) +
                             " vertices, above the campaign cap of " + std::to_string(c.caps.max_n) +
                             "; raise it with --max-n");

    const auto start = std::chrono::steady_clock::now();
    Report report;
    report.campaign = c.name;
    report.seed = c.seed;
    report.assertions = c.assertions;
    for (const auto& f : c.fields) report.fields.push_back(f.name());
    report.graphs.resize(graphs.size());

    std::atomic<std::size_t> next{0}, done{0};
    std::mutex progress_lock;
    auto worker = [&] {
        for (std::size_t k; (k = next++) < graphs.size();) {
            report.graphs[k] = run_one(c, graphs[k]);
            const std::size_t d = ++done;
            if (options.progress) {
                std::lock_guard<std::mutex> lock(progress_lock);
                options.progress(d, graphs.size());
            }
        }
    };
    const int workers = std::max(1, options.workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& g : report.graphs)
        for (const auto& [tag, s] : g.status)
            if (s == Status::incomplete) report.complete = false;
    if (options.timing)
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::uint64_t Report::violation_count() const {
    std::uint64_t n = 0;
    for (const auto& g : graphs) n += g.violations.size();
    return n;
}

std::map<std::string, std::map<Status, int>> Report::summary() const {
    std::map<std::string, std::map<Status, int>> out;
    for (const auto& tag : assertions)
        for (Status s : {Status::pass, Status::fail, Status::skip, Status::incomplete}) out[tag][s] = 0;
    for (const auto& g : graphs)
        for (const auto& [tag, s] : g.status) ++out[tag][s];
    return out;
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["schema_version"] = schema_version;
    j["campaign"] = campaign;
    j["seed"] = seed;
    j["assertions"] = assertions;
    j["fields"] = fields;
    j["complete"] = complete;
    j["graph_count"] = graphs.size();
    j["violation_count"] = violation_count();
    nlohmann::json summary_json = nlohmann::json::object();
    for (const auto& [tag, counts] : summary()) {
        nlohmann::json row = nlohmann::json::object();
        for (const auto& [s, n] : counts) row[to_string(s)] = n;
        std::uint64_t checks = 0;
        for (const auto& g : graphs)
            if (auto it = g.checks.find(tag); it != g.checks.end()) checks += it->second;
        row["checks"] = checks;
        summary_json[tag] = row;
    }
    j["summary"] = summary_json;
    nlohmann::json graph_rows = nlohmann::json::array(), violations = nlohmann::json::array();
    for (const auto& g : graphs) {
        nlohmann::json status = nlohmann::json::object();
        for (const auto& [tag, s] : g.status) status[tag] = to_string(s);
        nlohmann::json row = {{"graph", g.graph}, {"status", status}, {"checks", g.checks}};
        if (!g.notes.empty()) row["notes"] = g.notes;
        graph_rows.push_back(row);
        for (const auto& v : g.violations)
            violations.push_back(
                {{"assertion", v.assertion}, {"graph", v.graph}, {"field", v.field}, {"detail", v.detail}, {"graph_json", g.graph_json}});
    }
    j["graphs"] = graph_rows;
    j["violations"] = violations;
    if (seconds >= 0) j["seconds"] = seconds;
    return j;
}

std::string Report::to_text() const {
    std::ostringstream out;
    out << "campaign " << campaign << "  seed " << seed << "  graphs " << graphs.size() << "  fields";
    for (const auto& f : fields) out << ' ' << f;
    out << "\n";
    out << "assertion      pass   fail   skip  incomplete      checks\n";
    const auto j = to_json();
    for (const auto& tag : assertions) {
        const auto& row = j["summary"][tag];
        char line[128];
        std::snprintf(line, sizeof line, "%-10s %8d %6d %6d %11d %11llu\n", tag.c_str(), row["pass"].get<int>(),
                      row["fail"].get<int>(), row["skip"].get<int>(), row["incomplete"].get<int>(),
                      static_cast<unsigned long long>(row["checks"].get<std::uint64_t>()));
        out << line;
    }
    out << "violations: " << violation_count() << (complete ? "" : "  (report incomplete)") << "\n";
    std::size_t shown = 0;
    for (const auto& g : graphs)
        for (const auto& v : g.violations) {
            if (shown++ == 20) {
                out << "  ...\n";
                return out.str();
            }
            out << "  " << v.assertion << ' ' << v.graph << ' ' << v.field << ' ' << v.detail.dump() << "\n";
        }
    if (seconds >= 0) out << "seconds: " << seconds << "\n";
    return out.str();
}

std::string Report::to_csv() const {
    std::ostringstream out;
    out << "graph,assertion,status,checks,violations\n";
    for (const auto& g : graphs)
        for (const auto& [tag, s] : g.status) {
            std::size_t nv = 0;
            for (const auto& v : g.violations) nv += v.assertion == tag;
            out << g.graph << ',' << tag << ',' << to_string(s) << ',' << g.checks.at(tag) << ',' << nv << "\n";
        }
    return out.str();
}

}  // namespace edgebetti
