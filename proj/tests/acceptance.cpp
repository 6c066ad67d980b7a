// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>

#include "edgebetti/campaign.hpp"
#include "edgebetti/catalog.hpp"
#include "edgebetti/cm_bipartite.hpp"
#include "edgebetti/hochster.hpp"
#include "edgebetti/lyubeznik.hpp"
#include "edgebetti/witness.hpp"
#include "oracles.hpp"

using namespace edgebetti;

namespace {

using Graded = std::map<std::pair<int, int>, std::uint64_t>;

constexpr double kExampleSeconds = 1.0;
constexpr double kSweepSeconds = 600.0;
constexpr double kUnmixedSeconds = 900.0;

struct Outcome {
    bool ok = true;
    std::string note;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

int failures = 0;

void criterion(int number, const std::string& title, double limit, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.ok = false;
        out.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs > limit) {
        out.ok = false;
        out.note = "took " + std::to_string(secs) + " s, limit " + std::to_string(limit) + " s";
    }
    if (!out.ok) ++failures;
    std::printf("%s %2d %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", number, title.c_str(), secs,
                out.note.empty() ? "" : ": ", out.note.c_str());
    std::fflush(stdout);
}

Outcome campaign_outcome(const nlohmann::json& spec) {
    Outcome out;
    const Report r = run_campaign(campaign_from_json(spec));
    out.require(r.complete, "report incomplete");
    out.require(r.violation_count() == 0, std::to_string(r.violation_count()) + " violations, first: " +
                                              (r.violation_count() ? r.to_json()["violations"][0].dump() : ""));
    std::uint64_t checks = 0;
    int applicable = 0;
    for (const auto& g : r.graphs)
        for (const auto& [tag, s] : g.status) {
            checks += g.checks.at(tag);
            applicable += s != Status::skip;
        }
    out.require(checks > 0 && applicable > 0, "nothing was checked");
    out.note = out.ok ? std::to_string(r.graphs.size()) + " graphs, " + std::to_string(checks) + " checks" : out.note;
    return out;
}

MonomialIdeal random_ideal(std::mt19937& rng, int vars, int max_gens) {
    std::vector<std::string> names;
    for (int v = 0; v < vars; ++v) names.push_back("z" + std::to_string(v + 1));
    std::uniform_int_distribution<int> count(1, max_gens);
    std::uniform_int_distribution<std::uint64_t> bits(1, (std::uint64_t{1} << vars) - 1);
    std::vector<Monomial> gens;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) gens.push_back(VertexSet(bits(rng)));
    return MonomialIdeal::minimalized(names, gens);
}

long long binomial(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

int main() {
    criterion(1, "C4 diagram over GF(2) and Q", kExampleSeconds, [] {
        Outcome out;
        const Graded expected{{{0, 0}, 1}, {{1, 2}, 4}, {{2, 3}, 4}, {{3, 4}, 1}};
        for (FieldSpec f : {FieldSpec::gf2(), FieldSpec::rationals()}) {
            const BettiTable t = betti_table(edge_ideal(cycle_graph(4)), f);
            out.require(t.graded() == expected, "diagram over " + f.name());
            out.require(t.pd() == 3 && t.reg() == 1, "pd/reg over " + f.name());
        }
        return out;
    });

    criterion(2, "K2,3-with-tail diagram and witness", kExampleSeconds, [] {
        Outcome out;
        const SimpleGraph g = oracle::k23_with_tail();
        const Graded expected{{{0, 0}, 1}, {{1, 2}, 8}, {{2, 3}, 14}, {{3, 4}, 9}, {{4, 5}, 2}};
        const BettiTable t = betti_table(edge_ideal(g), FieldSpec::gf2());
        out.require(t.graded() == expected, "diagram");
        out.require(t.pd() == 4 && t.reg() == 1, "pd/reg");
        const WitnessResult w = max_pd_witness(g);
        out.require(w.exact && w.value == 4, "witness value " + std::to_string(w.value));
        bool found = false;
        for (const auto& b : w.family.blocks)
            found = found || (b.type() == std::pair{2, 3} &&
                              (b.vertices() == VertexSet::range(5) || b.vertices() == VertexSet::range(6) - VertexSet::single(0)));
        out.require(w.family.blocks.size() == 1 && found, "witness block " + family_to_json(w.family).dump());
        out.require(is_valid_family(g, w.family), "witness family invalid");
        return out;
    });

    criterion(3, "main theorem sweep, connected graphs n <= 6", kSweepSeconds, [] {
        return campaign_outcome({{"name", "main-theorem"},
                                 {"source", {{"kind", "connected"}, {"max_n", 6}}},
                                 {"caps", {{"max_block_vertices", 5}, {"max_family_size", 2}}},
                                 {"assertions", {"T1.1"}}});
    });

    criterion(4, "Katzman bound and N-grading, graphs n <= 6", kSweepSeconds, [] {
        return campaign_outcome({{"name", "katzman"}, {"source", {{"kind", "all"}, {"max_n", 6}}}, {"assertions", {"T2.2"}}});
    });

    criterion(5, "linear strand equals c(G_sigma) - 1, graphs n <= 6, both fields", kSweepSeconds, [] {
        return campaign_outcome({{"name", "linear-strand"},
                                 {"source", {{"kind", "all"}, {"max_n", 6}}},
                                 {"fields", {"gf2", "rat"}},
                                 {"assertions", {"P5.1"}}});
    });

    criterion(6, "co-chordal Betti support, pd and reg, n <= 7", kSweepSeconds, [] {
        return campaign_outcome(
            {{"name", "cochordal"}, {"source", {{"kind", "cochordal"}, {"max_n", 7}}}, {"assertions", {"C5.2", "C5.4"}}});
    });

    criterion(7, "Herzog-Hibi consistency, posets <= 4 elements", kSweepSeconds, [] {
        Outcome out;
        int posets = 0;
        for (int n = 1; n <= 4; ++n)
            for (const Poset& p : all_posets(n)) {
                ++posets;
                const SimpleGraph g = graph_from_poset(p);
                const MonomialIdeal h = hg_generators(p);
                out.require(h.same_generators(alexander_dual(edge_ideal(g))), "H_G differs from the dual");
                const BettiTable hb = betti_table(h, FieldSpec::gf2()).as_ideal();
                std::map<int, std::uint64_t> by_i, bases;
                for (const auto& [key, v] : hb.entries()) by_i[key.i] += v;
                for (const FreeBasis& b : free_bases(p)) ++bases[b.i];
                out.require(by_i == bases, "free basis counts");
            }
        const Outcome swept = campaign_outcome({{"name", "herzog-hibi"},
                                                {"source", {{"kind", "cm_posets"}, {"max_n", 4}}},
                                                {"caps", {{"max_n", 8}}},
                                                {"assertions", {"P6.6", "C6.7", "C6.8"}}});
        out.require(swept.ok, swept.note);
        if (out.ok) out.note = std::to_string(posets) + " posets; " + swept.note;
        return out;
    });

    criterion(8, "unmixed blow-ups: posets <= 3, zeta <= 3, <= 12 vertices", kUnmixedSeconds, [] {
        return campaign_outcome(
            {{"name", "unmixed"},
             {"source", {{"kind", "unmixed"}, {"max_elements", 3}, {"zeta_cap", 3}, {"max_vertices", 12}}},
             {"caps", {{"max_n", 12}}},
             {"assertions", {"P7.2", "T7.1", "T2.3"}}});
    });

    criterion(9, "Lyubeznik engine properties", kSweepSeconds, [] {
        Outcome out;
        std::mt19937 rng(2024);
        for (int trial = 0; trial < 200 && out.ok; ++trial) {
            const MonomialIdeal ideal = random_ideal(rng, 6, 8);
            out.require(taylor_dd_zero(ideal), "d o d != 0 at trial " + std::to_string(trial));
            for (FieldSpec f : {FieldSpec::gf2(), FieldSpec::rationals()}) {
                std::map<std::pair<int, VertexSet>, int> expected;
                const BettiTable table = betti_table(ideal, f);
                for (const auto& [key, value] : table.entries()) expected[{key.i, key.sigma}] = static_cast<int>(value);
                out.require(lyubeznik_betti(ideal, f) == expected, "strand homology at trial " + std::to_string(trial));
            }
            for_each_subset(VertexSet::range(ideal.size()), [&](LSymbol sym) {
                if (!is_admissible(ideal, sym)) return;
                for_each_subset(sym, [&](LSymbol sub) { out.require(is_admissible(ideal, sub), "not downward closed"); });
            });
        }
        for (int m = 1; m <= 4; ++m)
            for (int n = 1; n <= 4; ++n) {
                const std::string mn = std::to_string(m) + "," + std::to_string(n);
                const CycleBlock b = bipartite_cycle(m, n);
                out.require(static_cast<long long>(b.cycle.terms.size()) == binomial(m + n - 2, n - 1), "tau count K" + mn);
                for (const auto& [sym, c] : b.cycle.terms) out.require(is_admissible(b.ideal, sym), "tau not admissible K" + mn);
                const auto cert = check_cycle_certificate(b.ideal, b.cycle);
                out.require(cert && cert->s == m + n - 1 && cert->sigma == VertexSet::range(m + n), "certificate K" + mn);
                if (cert)
                    out.require(betti_table(b.ideal, FieldSpec::gf2()).at(cert->s, cert->sigma) >= 1, "Hochster entry K" + mn);
            }
        return out;
    });

    criterion(10, "BCP and Eagon-Reiner, graphs n <= 6", kSweepSeconds, [] {
        return campaign_outcome({{"name", "duality"},
                                 {"source", {{"kind", "all"}, {"max_n", 6}}},
                                 {"fields", {"gf2", "rat"}},
                                 {"assertions", {"T6.1", "T6.2"}}});
    });

    return failures ? 1 : 0;
}
