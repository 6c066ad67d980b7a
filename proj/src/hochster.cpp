#include "edgebetti/hochster.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include "edgebetti/errors.hpp"

namespace edgebetti {

std::uint64_t BettiTable::at(int i, VertexSet sigma) const {
    auto it = entries_.find({i, sigma});
    return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int i, VertexSet sigma, std::uint64_t value) {
    if (value == 0) entries_.erase({i, sigma});
    else entries_[{i, sigma}] = value;
}

BettiTable BettiTable::as_ideal() const {
    if (subject_ == BettiSubject::ideal) return *this;
    BettiTable out(BettiSubject::ideal, field_, variables_);
    for (const auto& [key, value] : entries_)
        if (key.i >= 1) out.set(key.i - 1, key.sigma, value);
    if (at(0, VertexSet()) == 0) out.set(0, VertexSet(), out.at(0, VertexSet()) + 1);  // I = S
    return out;
}

BettiTable BettiTable::as_quotient() const {
    if (subject_ == BettiSubject::quotient) return *this;
    BettiTable out(BettiSubject::quotient, field_, variables_);
    const bool unit = at(0, VertexSet()) > 0;
    for (const auto& [key, value] : entries_) {
        if (unit && key.i == 0 && key.sigma.empty()) continue;
        out.set(key.i + 1, key.sigma, value);
    }
    if (!unit) out.set(0, VertexSet(), 1);
    return out;
}

std::map<std::pair<int, int>, std::uint64_t> BettiTable::graded() const {
    std::map<std::pair<int, int>, std::uint64_t> out;
    for (const auto& [key, value] : entries_) out[{key.i, key.sigma.size()}] += value;
    return out;
}

int BettiTable::pd() const {
    int best = -1;
    for (const auto& [key, value] : entries_) best = std::max(best, key.i);
    return best;
}

int BettiTable::reg() const {
    if (entries_.empty()) return -1;
    int best = std::numeric_limits<int>::min();
    for (const auto& [key, value] : entries_) best = std::max(best, key.sigma.size() - key.i);
    return best;
}

std::size_t StrandComplex::face_count(int d) const {
    const int idx = d + 1;
    if (idx < 0 || idx >= static_cast<int>(faces_by_dim.size())) return 0;
    return faces_by_dim[idx].size();
}

SparseMatrix StrandComplex::boundary(int d) const {
    const auto rows = static_cast<int>(face_count(d));
    const auto cols = static_cast<int>(face_count(d - 1));
    SparseMatrix m(rows, cols);
    if (rows == 0 || cols == 0) return m;
    const auto& lower = faces_by_dim[d];
    for (int r = 0; r < rows; ++r) {
        const VertexSet face = faces_by_dim[d + 1][r];
        int k = 0;
        for (int v : face) {
            VertexSet facet = face;
            facet.erase(v);
            auto it = std::lower_bound(lower.begin(), lower.end(), facet);
            if (it == lower.end() || *it != facet) throw InvariantViolation("strand complex is not closed under faces");
            m.add(r, static_cast<int>(it - lower.begin()), (k % 2 == 0) ? 1 : -1);
            ++k;
        }
    }
    return m;
}

namespace {

StrandComplex from_face_list(VertexSet sigma, std::vector<VertexSet> faces) {
    StrandComplex s;
    s.sigma = sigma;
    for (VertexSet f : faces) {
        const auto idx = static_cast<std::size_t>(f.size());
        if (s.faces_by_dim.size() <= idx) s.faces_by_dim.resize(idx + 1);
        s.faces_by_dim[idx].push_back(f);
    }
    for (auto& layer : s.faces_by_dim) std::sort(layer.begin(), layer.end());
    return s;
}

// Generators of `ideal` supported inside sigma.
std::vector<Monomial> generators_within(const MonomialIdeal& ideal, VertexSet sigma) {
    std::vector<Monomial> out;
    for (const Monomial& m : ideal.generators())
        if (m.subset_of(sigma)) out.push_back(m);
    return out;
}

}  // namespace

StrandComplex strand_from_ideal(const MonomialIdeal& ideal, VertexSet sigma) {
    const auto gens = generators_within(ideal, sigma);
    std::vector<VertexSet> faces;
    if (std::any_of(gens.begin(), gens.end(), [](Monomial m) { return m.empty(); }))
        return from_face_list(sigma, faces);  // void complex
    // Faces are downward closed, so grow them one vertex at a time in increasing order.
    std::vector<VertexSet> stack{VertexSet()};
    while (!stack.empty()) {
        const VertexSet face = stack.back();
        stack.pop_back();
        faces.push_back(face);
        const int start = face.empty() ? 0 : face.max() + 1;
        for (int v : sigma) {
            if (v < start) continue;
            const VertexSet grown = face | VertexSet::single(v);
            const bool is_face = std::none_of(gens.begin(), gens.end(), [&](Monomial m) {
                return m.contains(v) && m.subset_of(grown);
            });
            if (is_face) stack.push_back(grown);
        }
    }
    return from_face_list(sigma, std::move(faces));
}

StrandComplex strand_from_complex(const SimplicialComplex& delta, VertexSet sigma) {
    std::set<VertexSet> faces;
    for (VertexSet facet : delta.facets) for_each_subset(facet & sigma, [&](VertexSet f) { faces.insert(f); });
    return from_face_list(sigma, {faces.begin(), faces.end()});
}

std::vector<int> reduced_homology(const StrandComplex& strand, const FieldSpec& field) {
    const int top = strand.top_dimension();
    if (top < -1) return {};
    // ranks[d + 1] = rank of the boundary d -> d-1; the map out of dimension -1 is zero.
    std::vector<int> ranks(top + 3, 0);
    for (int d = 0; d <= top; ++d) ranks[d + 1] = rank(strand.boundary(d), field);
    std::vector<int> h(top + 2, 0);
    for (int d = -1; d <= top; ++d)
        h[d + 1] = static_cast<int>(strand.face_count(d)) - ranks[d + 1] - ranks[d + 2];
    return h;
}

int strand_homology(const SimplicialComplex& delta, VertexSet sigma, int d, const FieldSpec& field) {
    if (d < -1) throw DomainError("strand_homology: dimension must be >= -1");
    const auto h = reduced_homology(strand_from_complex(delta, sigma), field);
    return d + 1 < static_cast<int>(h.size()) ? h[d + 1] : 0;
}

namespace {

// Fills `out` with quotient entries for every sigma in [begin, end) of the subset enumeration
// of the variable set, interpreted as raw bit patterns.
void table_slice(const MonomialIdeal& ideal, const FieldSpec& field, std::uint64_t begin, std::uint64_t end,
                 std::map<BettiKey, std::uint64_t>& out) {
    for (std::uint64_t bits = begin; bits < end; ++bits) {
        const VertexSet sigma(bits);
        const auto gens = generators_within(ideal, sigma);
        VertexSet covered;
        for (Monomial m : gens) covered |= m;
        // A vertex of sigma in no minimal nonface is a cone point: all reduced homology vanishes.
        if (!(sigma - covered).empty()) continue;
        const auto h = reduced_homology(strand_from_ideal(ideal, sigma), field);
        for (int d = -1; d + 1 < static_cast<int>(h.size()); ++d) {
            if (h[d + 1] == 0) continue;
            const int i = sigma.size() - d - 1;
            out[{i, sigma}] = static_cast<std::uint64_t>(h[d + 1]);
        }
    }
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field, const BettiOptions& options) {
    const int n = ideal.variable_count();
    if (n > options.max_variables)
        throw ResourceError("betti_table: " + std::to_string(n) + " variables exceed the cap of " +
                            std::to_string(options.max_variables) + " (raise it with --max-n)");
    BettiTable table(BettiSubject::quotient, field, ideal.variables());
    const std::uint64_t total = std::uint64_t{1} << n;
    const int workers = std::max(1, std::min<int>(options.threads, static_cast<int>(std::min<std::uint64_t>(total, 64))));
    std::vector<std::map<BettiKey, std::uint64_t>> parts(workers);
    if (workers == 1) {
        table_slice(ideal, field, 0, total, parts[0]);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (total + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t b = std::min(total, chunk * w), e = std::min(total, chunk * (w + 1));
            pool.emplace_back([&, w, b, e] { table_slice(ideal, field, b, e, parts[w]); });
        }
        for (auto& t : pool) t.join();
    }
    for (const auto& part : parts)
        for (const auto& [key, value] : part) table.set(key.i, key.sigma, value);
    return table;
}

std::vector<ExtremalEntry> extremal_betti(const BettiTable& table) {
    std::vector<ExtremalEntry> out;
    const auto& entries = table.entries();
    for (const auto& [key, value] : entries) {
        bool extremal = true;
        for (const auto& [other, v2] : entries) {
            if (other.i >= key.i && key.sigma.subset_of(other.sigma) && other.sigma != key.sigma &&
                other.sigma.size() - key.sigma.size() >= other.i - key.i) {
                extremal = false;
                break;
            }
        }
        if (extremal) out.push_back({key.i, key.sigma, value});
    }
    return out;
}

bool BcpReport::ok() const {
    return std::all_of(comparisons.begin(), comparisons.end(), [](const BcpComparison& c) { return c.holds(); });
}

BcpReport verify_bcp(const MonomialIdeal& ideal, const FieldSpec& field, const BettiOptions& options) {
    const BettiTable quotient = betti_table(ideal, field, options);
    const BettiTable dual = betti_table(alexander_dual(ideal), field, options).as_ideal();
    BcpReport report;
    for (const ExtremalEntry& e : extremal_betti(dual))
        report.comparisons.push_back({e.i, e.sigma, e.rank, quotient.at(e.sigma.size() - e.i, e.sigma)});
    return report;
}

BcpReport verify_bcp(const SimpleGraph& g, const FieldSpec& field, const BettiOptions& options) {
    return verify_bcp(edge_ideal(g), field, options);
}

EagonReinerReport verify_eagon_reiner(const MonomialIdeal& ideal, const FieldSpec& field,
                                      const BettiOptions& options) {
    const BettiTable quotient = betti_table(ideal, field, options);
    const BettiTable dual = betti_table(alexander_dual(ideal), field, options).as_ideal();
    return {dual.reg(), quotient.pd(), dual.pd(), quotient.reg()};
}

EagonReinerReport verify_eagon_reiner(const SimpleGraph& g, const FieldSpec& field, const BettiOptions& options) {
    return verify_eagon_reiner(edge_ideal(g), field, options);
}

std::string format_sigma(VertexSet sigma, const std::vector<std::string>& names) {
    std::string s = "{";
    bool first = true;
    for (int v : sigma) {
        if (!first) s += ",";
        s += v < static_cast<int>(names.size()) ? names[v] : std::to_string(v);
        first = false;
    }
    return s + "}";
}

std::string format_betti_diagram(const BettiTable& table) {
    const auto graded = table.graded();
    if (graded.empty()) return "(zero module)\n";
    int max_i = 0, min_j = std::numeric_limits<int>::max(), max_j = std::numeric_limits<int>::min();
    for (const auto& [ij, value] : graded) {
        max_i = std::max(max_i, ij.first);
        min_j = std::min(min_j, ij.second - ij.first);
        max_j = std::max(max_j, ij.second - ij.first);
    }
    std::size_t width = 1;
    for (const auto& [ij, value] : graded) width = std::max(width, std::to_string(value).size());
    width = std::max(width, std::to_string(max_i).size());
    std::ostringstream out;
    auto pad = [&](const std::string& s) { return std::string(width + 1 - std::min(width, s.size()), ' ') + s; };
    out << "j\\i |";
    for (int i = 0; i <= max_i; ++i) out << pad(std::to_string(i));
    out << "\n" << std::string(5 + (width + 1) * (max_i + 1), '-') << "\n";
    for (int j = min_j; j <= max_j; ++j) {
        std::string row = std::to_string(j);
        out << std::string(4 - std::min<std::size_t>(4, row.size()), ' ') << row << "|";
        for (int i = 0; i <= max_i; ++i) {
            auto it = graded.find({i, i + j});
            out << pad(it == graded.end() ? "." : std::to_string(it->second));
        }
        out << "\n";
    }
    return out.str();
}

nlohmann::json betti_to_json(const BettiTable& table, bool multigraded) {
    nlohmann::json j;
    j["subject"] = table.subject() == BettiSubject::quotient ? "quotient" : "ideal";
    j["field"] = table.field().name();
    j["variables"] = table.variables();
    j["pd"] = table.pd();
    j["reg"] = table.reg();
    nlohmann::json graded = nlohmann::json::array();
    for (const auto& [ij, value] : table.graded()) graded.push_back({{"i", ij.first}, {"j", ij.second}, {"value", value}});
    j["graded"] = graded;
    if (multigraded) {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& [key, value] : table.entries())
            entries.push_back({{"i", key.i}, {"sigma", key.sigma.to_vector()}, {"value", value}});
        j["multigraded"] = entries;
    }
    return j;
}

}  // namespace edgebetti
