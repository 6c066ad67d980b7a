#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "edgebetti/catalog.hpp"
#include "edgebetti/field.hpp"
#include "json.hpp"

namespace edgebetti {

struct CampaignCaps {
    int max_n = 7;                  // largest graph a campaign will build full Betti tables for
    int max_block_vertices = 5;     // family sweeps: largest block
    int max_family_size = 2;        // family sweeps: largest r
    std::uint64_t node_budget = 50'000'000;
};

struct Campaign {
    std::string name;
    std::vector<CatalogSpec> sources;
    std::vector<FieldSpec> fields{FieldSpec::gf2()};
    CampaignCaps caps;
    std::vector<std::string> assertions;
    std::uint64_t seed = 0;
};

/// Tags a campaign may name.
const std::vector<std::string>& theorem_registry();

/// {"name", "source" | "sources", "fields", "caps", "assertions", "seed"}. UsageError on unknown
/// tags, fields or catalog kinds.
Campaign campaign_from_json(const nlohmann::json& j);
nlohmann::json campaign_to_json(const Campaign& c);

enum class Status { pass, fail, skip, incomplete };
std::string to_string(Status s);

struct Violation {
    std::string assertion;
    std::string graph;
    std::string field;
    nlohmann::json detail;  // sigma, i and both sides of the failed comparison
};

struct GraphOutcome {
    std::string graph;
    nlohmann::json graph_json;
    std::map<std::string, Status> status;     // per assertion
    std::map<std::string, std::uint64_t> checks;
    std::vector<Violation> violations;
    std::vector<std::string> notes;           // resource messages
};

struct Report {
    static constexpr int schema_version = 1;
    std::string campaign;
    std::uint64_t seed = 0;
    std::vector<std::string> assertions;
    std::vector<std::string> fields;
    std::vector<GraphOutcome> graphs;
    bool complete = true;
    double seconds = -1;  // filled only when timing is requested

    std::uint64_t violation_count() const;
    std::map<std::string, std::map<Status, int>> summary() const;
    int exit_code() const { return violation_count() > 0 ? 1 : 0; }

    nlohmann::json to_json() const;
    std::string to_text() const;
    std::string to_csv() const;
};

struct RunOptions {
    int workers = 1;
    int max_n_override = 0;  // > 0 replaces caps.max_n
    bool timing = false;
    std::function<void(std::size_t, std::size_t)> progress;  // (done, total)
};

/// Number of workers from EDGEBETTI_WORKERS, default 1.
int workers_from_env();

/// Sum over the catalog of 2^n, the number of multidegrees a full table visits.
std::uint64_t cost_estimate(const std::vector<CatalogEntry>& graphs);

/// Runs every assertion on every graph of every source. Graphs above caps.max_n are rejected
/// with UsageError before any work starts.
Report run_campaign(const Campaign& c, const RunOptions& options = {});

/// Same, on an explicit graph list.
Report run_campaign_on(const Campaign& c, const std::vector<CatalogEntry>& graphs, const RunOptions& options = {});

}  // namespace edgebetti
