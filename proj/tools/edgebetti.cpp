// edgebetti command-line front end.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "edgebetti/campaign.hpp"
#include "edgebetti/cm_bipartite.hpp"
#include "edgebetti/errors.hpp"
#include "edgebetti/graph_io.hpp"
#include "edgebetti/hochster.hpp"
#include "edgebetti/lyubeznik.hpp"
#include "edgebetti/unmixed.hpp"
#include "edgebetti/witness.hpp"

using namespace edgebetti;

namespace {

constexpr int kSingleGraphCap = 14;

enum Exit { ok = 0, violated = 1, usage = 2, domain = 3, resource = 4, internal = 5 };

struct Common {
    std::string input;
    std::string field = "gf2";
    std::string json_out;
    int max_n = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

FieldSpec field_of(const Common& c) {
    try {
        return FieldSpec::parse(c.field);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

// Enforces the single-graph cap; an explicit --max-n lifts it and prints the cost.
BettiOptions checked_options(const Common& c, int n) {
    const int cap = c.max_n > 0 ? c.max_n : kSingleGraphCap;
    if (n > cap)
        throw UsageError(std::to_string(n) + " vertices exceed the cap of " + std::to_string(cap) + "; pass --max-n " +
                         std::to_string(n) + " to proceed");
    if (c.max_n > 0)
        std::cerr << "cost estimate: 2^" << n << " = " << (std::uint64_t{1} << n) << " multidegrees\n";
    BettiOptions o;
    o.max_variables = std::max(cap, 16);
    return o;
}

SimpleGraph load(const Common& c) {
    const SimpleGraph g = load_graph(c.input);
    checked_options(c, g.order());
    return g;
}

void emit_json(const std::string& target, const nlohmann::json& j) {
    if (target.empty()) return;
    if (target == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(target);
    if (!out) throw UsageError("cannot write " + target);
    out << j.dump(2) << "\n";
}

std::vector<std::string> names_of(const SimpleGraph& g) {
    std::vector<std::string> names;
    for (int v = 0; v < g.order(); ++v) names.push_back(g.label(v));
    return names;
}

std::string family_text(const SimpleGraph& g, const DisjointFamily& fam) {
    const auto names = names_of(g);
    std::string out;
    for (std::size_t k = 0; k < fam.blocks.size(); ++k) {
        const auto& b = fam.blocks[k];
        const auto [m, n] = b.type();
        out += "  K" + std::to_string(m) + "," + std::to_string(n) + " " + format_sigma(b.left, names) + " | " +
               format_sigma(b.right, names);
        if (k < fam.representatives.size())
            out += "  rep " + names[fam.representatives[k].u] + names[fam.representatives[k].v];
        out += "\n";
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    for (std::string tok; std::getline(ss, tok, ',');) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw UsageError("not an integer list: " + s);
        }
    }
    return out;
}

int cmd_betti(const Common& c, bool multigraded) {
    const SimpleGraph g = load_graph(c.input);
    const BettiTable t = betti_table(edge_ideal(g), field_of(c), checked_options(c, g.order()));
    std::cout << format_betti_diagram(t);
    if (multigraded)
        for (const auto& [key, v] : t.entries())
            std::cout << "beta_{" << key.i << "," << format_sigma(key.sigma, t.variables()) << "} = " << v << "\n";
    std::cout << "pd = " << t.pd() << "  reg = " << t.reg() << "\n";
    emit_json(c.json_out, betti_to_json(t, multigraded));
    return ok;
}

int cmd_invariant(const Common& c, bool want_pd) {
    const SimpleGraph g = load_graph(c.input);
    const BettiTable t = betti_table(edge_ideal(g), field_of(c), checked_options(c, g.order()));
    const int value = want_pd ? t.pd() : t.reg();
    std::cout << value << "\n";
    emit_json(c.json_out, {{want_pd ? "pd" : "reg", value}, {"field", t.field().name()}});
    return ok;
}

int cmd_dual(const Common& c) {
    const SimpleGraph g = load(c);
    const MonomialIdeal dual = alexander_dual(edge_ideal(g));
    for (const auto& m : dual.generators()) std::cout << dual.format(m) << "\n";
    emit_json(c.json_out, ideal_to_json(dual));
    return ok;
}

int cmd_witness(const Common& c, const std::string& target, bool max) {
    const SimpleGraph g = load(c);
    if (!target.empty()) {
        const std::vector<int> parts = parse_int_list(target);
        if (parts.size() < 2) throw UsageError("--target expects i,v1,v2,... (0-based vertices)");
        VertexSet sigma;
        for (std::size_t k = 1; k < parts.size(); ++k) {
            if (parts[k] < 0 || parts[k] >= g.order()) throw UsageError("vertex " + std::to_string(parts[k]) + " out of range");
            sigma |= VertexSet::single(parts[k]);
        }
        const auto fam = witness_for(g, parts[0], sigma);
        if (!fam) {
            std::cout << "no family with |sigma| - r = " << parts[0] << "\n";
            return violated;
        }
        std::cout << "family:\n" << family_text(g, *fam);
        emit_json(c.json_out, family_to_json(*fam));
        return ok;
    }
    (void)max;
    const WitnessResult r = max_pd_witness(g);
    std::cout << "max |V(B)| - r = " << r.value << (r.exact ? "" : "  (budget exhausted: lower bound only)") << "\n";
    std::cout << family_text(g, r.family);
    emit_json(c.json_out, {{"value", r.value}, {"exact", r.exact}, {"family", family_to_json(r.family)}});
    return ok;
}

int cmd_lyubeznik(const Common& c, const std::string& order_text, int symbols, const std::string& certify,
                  bool paranoid) {
    const std::string text = read_file(c.input);
    const nlohmann::json parsed = nlohmann::json::parse(text, nullptr, false);
    std::optional<SimpleGraph> g;
    MonomialIdeal ideal;
    if (!parsed.is_discarded() && parsed.contains("generators")) {
        ideal = ideal_from_json(parsed);
    } else {
        g = parse_graph(text);
        checked_options(c, g->order());
        ideal = edge_ideal(*g);
    }
    const FieldSpec field = field_of(c);
    nlohmann::json out;

    if (!certify.empty()) {
        if (!g) throw UsageError("--certify needs a graph input");
        nlohmann::json fam_json = nlohmann::json::parse(read_file(certify));
        if (fam_json.contains("family")) fam_json = fam_json.at("family");  // output of `witness --json`
        const DisjointFamily fam = family_from_json(fam_json);
        const MainCertificate cert = main_theorem_certificate(*g, fam, field);
        std::cout << "certified: beta_{" << cert.i << "," << format_sigma(cert.sigma, ideal.variables())
                  << "} >= 1\norder:";
        for (const auto& m : cert.ordered_ideal.generators()) std::cout << ' ' << cert.ordered_ideal.format(m);
        std::cout << "\ncycle terms: " << cert.cycle.terms.size() << "\n";
        out = {{"i", cert.i}, {"sigma", cert.sigma.to_vector()}, {"cycle", cycle_to_json(cert.cycle)},
               {"family", family_to_json(cert.family)}};
        emit_json(c.json_out, out);
        return ok;
    }

    if (!order_text.empty()) {
        std::vector<int> order = parse_int_list(order_text);
        for (int& k : order) --k;  // 1-based on the command line
        ideal = apply_order(ideal, order);
    }
    std::cout << "order:";
    for (const auto& m : ideal.generators()) std::cout << ' ' << ideal.format(m);
    std::cout << "\n";
    out["order"] = ideal_to_json(ideal);
    nlohmann::json rows = nlohmann::json::array();
    for (LSymbol sym : admissible_symbols(ideal, symbols)) {
        const bool maximal = is_maximal_admissible(ideal, sym, Maximality::global, paranoid);
        const auto cert = barile_certificate(ideal, sym);
        std::cout << symbol_to_json(sym).dump() << "  deg " << format_sigma(symbol_degree(ideal, sym), ideal.variables())
                  << (maximal ? "  maximal" : "") << (cert ? "  barile" : "") << "\n";
        rows.push_back({{"symbol", symbol_to_json(sym)}, {"maximal", maximal}, {"barile", cert.has_value()}});
    }
    out["symbols"] = rows;
    emit_json(c.json_out, out);
    return ok;
}

std::string labeling_text(const SimpleGraph& g, const Labeling& lab) {
    std::string s;
    for (int i = 0; i < lab.size(); ++i)
        s += "  x" + std::to_string(i + 1) + " = " + g.label(lab.x[i]) + "   y" + std::to_string(i + 1) + " = " +
             g.label(lab.y[i]) + "\n";
    return s;
}

int cmd_cm(const Common& c) {
    const SimpleGraph g = load(c);
    const auto lab = cm_labeling(g);
    if (!lab) {
        std::cout << "not Cohen-Macaulay bipartite\n";
        return domain;
    }
    const Poset p = poset_of_graph(g, *lab);
    std::cout << "labeling:\n" << labeling_text(g, *lab) << "Hasse diagram (covers p_i < p_j):\n";
    for (const auto& [i, j] : p.covers()) std::cout << "  p" << i + 1 << " < p" << j + 1 << "\n";
    const MonomialIdeal h = hg_generators(p);
    std::cout << "H_G:";
    for (const auto& m : h.generators()) std::cout << ' ' << h.format(m);
    std::cout << "\n";
    const auto bases = free_bases(p);
    std::map<int, int> counts;
    for (const auto& b : bases) ++counts[b.i];
    std::cout << "beta_i(H_G):";
    for (const auto& [i, n] : counts) std::cout << "  " << i << ":" << n;
    std::cout << "\nextremal bases:\n";
    nlohmann::json families = nlohmann::json::array();
    for (const auto& b : bases) {
        if (!is_maximal_boolean(p, b)) continue;
        const DisjointFamily fam = extract_family(g, *lab, b);
        std::cout << " i = " << b.i << "  degree " << format_sigma(b.degree, h.variables()) << "  |sigma| - r = "
                  << fam.value() << "\n"
                  << family_text(g, fam);
        families.push_back({{"i", b.i}, {"degree", b.degree.to_vector()}, {"family", family_to_json(fam)}});
    }
    const int formula = cm_pd(g).pd;
    const int hochster = betti_table(edge_ideal(g), field_of(c), checked_options(c, g.order())).pd();
    const int search = max_pd_witness(g).value;
    std::cout << "pd = " << formula << "  (Hochster " << hochster << ", witness search " << search << ")\n";
    emit_json(c.json_out, {{"poset", poset_to_json(p)}, {"pd", formula}, {"hochster_pd", hochster},
                           {"witness_pd", search}, {"extremal", families}});
    return formula == hochster && hochster == search ? ok : violated;
}

int cmd_unmixed(const Common& c) {
    const SimpleGraph g = load(c);
    if (!unmixed_labeling(g)) {
        std::cout << "not unmixed bipartite\n";
        return domain;
    }
    const AcyclicReduction red = acyclic_reduction(g);
    std::cout << "labeling:\n" << labeling_text(g, red.labeling) << "arcs:";
    for (const auto& [i, j] : red.digraph.arcs()) std::cout << "  " << i + 1 << "->" << j + 1;
    std::cout << "\ncomponents:";
    for (std::size_t a = 0; a < red.components.size(); ++a) {
        std::cout << "  Z" << a + 1 << " = {";
        bool first = true;
        for (int k : red.components[a]) {
            std::cout << (first ? "" : ",") << k + 1;
            first = false;
        }
        std::cout << "}";
    }
    std::cout << "\nzeta:";
    for (int z : red.zeta) std::cout << ' ' << z;
    std::cout << "\nreduced edges:";
    for (const Edge& e : red.reduced.edges()) std::cout << ' ' << red.reduced.label(e.u) << red.reduced.label(e.v);
    const KumminiReport k = kummini_report(g);
    std::cout << "\nBetti table of I(reduced)*:\n" << format_betti_diagram(k.dual_table);
    const UnmixedWitness w = unmixed_pd_witness(g);
    std::cout << "maximizer: r = " << w.r << "  sigma^ = " << format_sigma(w.sigma_hat, names_of(red.reduced))
              << "  sigma^zeta - r = " << w.pd << "\nlifted family:\n"
              << family_text(g, w.family);
    const int hochster = betti_table(edge_ideal(g), field_of(c), checked_options(c, g.order())).pd();
    std::cout << "pd = " << k.pd << "  (Hochster " << hochster << ")\n";
    emit_json(c.json_out, {{"zeta", red.zeta}, {"pd", k.pd}, {"hochster_pd", hochster}, {"r", w.r},
                           {"sigma_hat", w.sigma_hat.to_vector()}, {"family", family_to_json(w.family)}});
    return k.pd == hochster && w.pd == hochster ? ok : violated;
}

int cmd_verify(const Common& c, const std::string& csv_out, std::optional<std::uint64_t> seed, bool timing) {
    Campaign campaign;
    try {
        campaign = campaign_from_json(nlohmann::json::parse(read_file(c.input)));
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(std::string("campaign is not JSON: ") + e.what());
    }
    if (seed) campaign.seed = *seed;
    RunOptions opts;
    opts.workers = workers_from_env();
    opts.max_n_override = c.max_n;
    opts.timing = timing;
    if (c.max_n > 0) {
        std::vector<CatalogEntry> graphs;
        for (const auto& s : campaign.sources) {
            auto part = generate_catalog(s, campaign.seed);
            graphs.insert(graphs.end(), part.begin(), part.end());
        }
        std::cerr << "cost estimate: " << graphs.size() << " graphs, " << cost_estimate(graphs)
                  << " multidegrees per field\n";
    }
    const Report r = run_campaign(campaign, opts);
    std::cout << r.to_text();
    emit_json(c.json_out, r.to_json());
    if (!csv_out.empty()) {
        if (csv_out == "-") {
            std::cout << r.to_csv();
        } else {
            std::ofstream out(csv_out);
            out << r.to_csv();
        }
    }
    return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Betti numbers of edge ideals and the witnesses that explain them"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub, const std::string& what) {
        sub->add_option("input", common.input, what)->required();
        sub->add_option("--field", common.field, "gf2 (default), rat, or gfP for a prime P");
        sub->add_option("--json", common.json_out, "write JSON to this file ('-' for stdout)");
        sub->add_option("--max-n", common.max_n, "raise the vertex cap");
    };

    bool multigraded = false, max = false, paranoid = false, timing = false;
    std::string target, order, certify, csv_out;
    int symbols = -1;
    std::optional<std::uint64_t> seed;

    auto* betti = app.add_subcommand("betti", "Betti diagram of S/I(G)");
    add_common(betti, "graph file");
    betti->add_flag("--multigraded", multigraded, "also list every nonzero beta_{i,sigma}");
    auto* pd = app.add_subcommand("pd", "projective dimension of S/I(G)");
    add_common(pd, "graph file");
    auto* reg = app.add_subcommand("reg", "regularity of S/I(G)");
    add_common(reg, "graph file");
    auto* dual = app.add_subcommand("dual", "generators of the Alexander dual of I(G)");
    add_common(dual, "graph file");
    auto* witness = app.add_subcommand("witness", "3-disjoint families of complete bipartite subgraphs");
    add_common(witness, "graph file");
    witness->add_option("--target", target, "i,v1,v2,...: a family with union sigma and |sigma| - r = i");
    witness->add_flag("--max", max, "maximize |V(B)| - r (the default)");
    auto* lyub = app.add_subcommand("lyubeznik", "admissible symbols and main-theorem certificates");
    add_common(lyub, "ideal JSON or graph file");
    lyub->add_option("--order", order, "generator order as a 1-based permutation");
    lyub->add_option("--symbols", symbols, "only symbols of this size");
    lyub->add_option("--certify", certify, "family JSON to certify");
    lyub->add_flag("--paranoid", paranoid, "maximality by full superset search");
    auto* cm = app.add_subcommand("cm", "Cohen-Macaulay bipartite graphs");
    auto* cm_analyze = cm->add_subcommand("analyze", "labeling, poset, H_G and extracted families");
    add_common(cm_analyze, "graph file");
    cm->require_subcommand(1);
    auto* um = app.add_subcommand("unmixed", "unmixed bipartite graphs");
    auto* um_analyze = um->add_subcommand("analyze", "labeling, components, reduction and lifted witness");
    add_common(um_analyze, "graph file");
    um->require_subcommand(1);
    auto* verify = app.add_subcommand("verify", "run a verification campaign");
    add_common(verify, "campaign JSON");
    verify->add_option("--csv", csv_out, "write CSV to this file ('-' for stdout)");
    verify->add_option("--seed", seed, "seed for random sources");
    verify->add_flag("--timing", timing, "record wall time in the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : usage;
    }

    try {
        if (*betti) return cmd_betti(common, multigraded);
        if (*pd) return cmd_invariant(common, true);
        if (*reg) return cmd_invariant(common, false);
        if (*dual) return cmd_dual(common);
        if (*witness) return cmd_witness(common, target, max);
        if (*lyub) return cmd_lyubeznik(common, order, symbols, certify, paranoid);
        if (*cm_analyze) return cmd_cm(common);
        if (*um_analyze) return cmd_unmixed(common);
        if (*verify) return cmd_verify(common, csv_out, seed, timing);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return domain;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return resource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return internal;
    }
    return usage;
}
