#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "edgebetti/field.hpp"
#include "edgebetti/graph.hpp"
#include "edgebetti/ideal.hpp"
#include "json.hpp"

namespace edgebetti {

/// Which module a Betti table describes.
enum class BettiSubject { quotient, ideal };

struct BettiKey {
    int i = 0;
    VertexSet sigma;
    auto operator<=>(const BettiKey&) const = default;
};

/// Sparse multigraded Betti table; absent entries are zero.
class BettiTable {
public:
    BettiTable() = default;
    BettiTable(BettiSubject subject, FieldSpec field, std::vector<std::string> variables)
        : subject_(subject), field_(field), variables_(std::move(variables)) {}

    BettiSubject subject() const { return subject_; }
    const FieldSpec& field() const { return field_; }
    const std::vector<std::string>& variables() const { return variables_; }
    const std::map<BettiKey, std::uint64_t>& entries() const { return entries_; }

    std::uint64_t at(int i, VertexSet sigma) const;
    void set(int i, VertexSet sigma, std::uint64_t value);

    /// beta_{i,sigma}(I) = beta_{i+1,sigma}(S/I); a quotient without (0, {}) is the zero module S/S.
    BettiTable as_ideal() const;
    BettiTable as_quotient() const;

    /// N-graded table: (i, j) -> sum of beta_{i,sigma} over |sigma| = j.
    std::map<std::pair<int, int>, std::uint64_t> graded() const;
    /// Projective dimension and regularity; both -1 for an empty table (the zero module).
    int pd() const;
    int reg() const;

    bool operator==(const BettiTable&) const = default;

private:
    BettiSubject subject_ = BettiSubject::quotient;
    FieldSpec field_;
    std::vector<std::string> variables_;
    std::map<BettiKey, std::uint64_t> entries_;
};

inline int pd(const BettiTable& t) { return t.pd(); }
inline int reg(const BettiTable& t) { return t.reg(); }

/// Faces of a restricted complex, grouped by dimension; faces_by_dim[d + 1] lists the
/// d-dimensional faces in increasing bit order, so index 0 holds the empty face.
struct StrandComplex {
    VertexSet sigma;
    std::vector<std::vector<VertexSet>> faces_by_dim;

    int top_dimension() const { return static_cast<int>(faces_by_dim.size()) - 2; }
    std::size_t face_count(int d) const;
    /// Reduced boundary d -> d-1 with the usual alternating signs; d >= 0.
    SparseMatrix boundary(int d) const;
};

/// Restriction of the Stanley-Reisner complex of `ideal` to sigma.
StrandComplex strand_from_ideal(const MonomialIdeal& ideal, VertexSet sigma);
/// Restriction of a facet-presented complex to sigma.
StrandComplex strand_from_complex(const SimplicialComplex& delta, VertexSet sigma);

/// dim H~_d for d = -1 .. top_dimension(); index 0 is d = -1.
std::vector<int> reduced_homology(const StrandComplex& strand, const FieldSpec& field);

/// dim_K H~_d(Delta|sigma; K).
int strand_homology(const SimplicialComplex& delta, VertexSet sigma, int d, const FieldSpec& field);

struct BettiOptions {
    int max_variables = 16;
    int threads = 1;
};

/// Quotient table of S/I by Hochster's formula over every squarefree sigma.
BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field, const BettiOptions& options = {});

struct ExtremalEntry {
    int i = 0;
    VertexSet sigma;
    std::uint64_t rank = 0;
    bool operator==(const ExtremalEntry&) const = default;
};

std::vector<ExtremalEntry> extremal_betti(const BettiTable& table);

struct BcpComparison {
    int r = 0;              // homological index in the dual's ideal table
    VertexSet sigma;
    std::uint64_t dual_value = 0;      // beta_{r,sigma}(I*)
    std::uint64_t quotient_value = 0;  // beta_{|sigma|-r,sigma}(S/I)
    bool holds() const { return dual_value == quotient_value; }
};

struct BcpReport {
    std::vector<BcpComparison> comparisons;
    bool ok() const;
};

struct EagonReinerReport {
    int reg_dual = 0, pd_quotient = 0;
    int pd_dual = 0, reg_quotient = 0;
    bool ok() const { return reg_dual == pd_quotient && pd_dual == reg_quotient; }
};

BcpReport verify_bcp(const MonomialIdeal& ideal, const FieldSpec& field, const BettiOptions& options = {});
BcpReport verify_bcp(const SimpleGraph& g, const FieldSpec& field, const BettiOptions& options = {});
EagonReinerReport verify_eagon_reiner(const MonomialIdeal& ideal, const FieldSpec& field,
                                      const BettiOptions& options = {});
EagonReinerReport verify_eagon_reiner(const SimpleGraph& g, const FieldSpec& field, const BettiOptions& options = {});

/// Diagram with rows j and columns i holding beta_{i,i+j}.
std::string format_betti_diagram(const BettiTable& table);
std::string format_sigma(VertexSet sigma, const std::vector<std::string>& names);
nlohmann::json betti_to_json(const BettiTable& table, bool multigraded);

}  // namespace edgebetti
