#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace edgebetti {

/// Coefficient field: GF(p) for a prime p, or the rationals.
struct FieldSpec {
    enum class Kind { prime, rational };
    Kind kind = Kind::prime;
    std::uint32_t p = 2;

    static FieldSpec gf2() { return {}; }
    static FieldSpec gf(std::uint32_t prime);
    static FieldSpec rationals() { return {Kind::rational, 0}; }
    /// "gf2", "gf3", "gf(5)", "rat", "qq".
    static FieldSpec parse(const std::string& name);

    bool is_rational() const { return kind == Kind::rational; }
    std::string name() const;
    /// Image of an integer in the field, as a canonical integer representative
    /// (reduced mod p, or unchanged for the rationals).
    std::int64_t reduce(std::int64_t value) const;

    bool operator==(const FieldSpec&) const = default;
};

/// Integer matrix in row-major sparse form; entries are exact integers.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, std::int64_t>>> entries;  // per row: (column, value)

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r)) {}
    void add(int row, int col, std::int64_t value) { entries[row].emplace_back(col, value); }
};

/// Rank over the given field. GF(2) uses packed-bit elimination, GF(p) dense modular
/// elimination, the rationals fraction-free Bareiss elimination.
int rank(const SparseMatrix& m, const FieldSpec& field);

int rank_gf2(const SparseMatrix& m);
int rank_mod_p(const SparseMatrix& m, std::uint32_t p);
int rank_bareiss(const SparseMatrix& m);

}  // namespace edgebetti
