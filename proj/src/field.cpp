#include "edgebetti/field.hpp"

#include <algorithm>
#include <cctype>
#include <gmpxx.h>

#include "edgebetti/errors.hpp"

namespace edgebetti {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

struct Overflow {};

// Checked int64 arithmetic for the Bareiss fast path.
struct CheckedInt {
    std::int64_t v = 0;

    friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
        CheckedInt r;
        if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw Overflow{};
        return r;
    }
    friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
        CheckedInt r;
        if (__builtin_add_overflow(a.v, b.v, &r.v)) throw Overflow{};
        return r;
    }
    friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
        CheckedInt r;
        if (__builtin_sub_overflow(a.v, b.v, &r.v)) throw Overflow{};
        return r;
    }
    // Bareiss divisions are exact.
    friend CheckedInt operator/(CheckedInt a, CheckedInt b) { return {a.v / b.v}; }
    bool is_zero() const { return v == 0; }
};

bool is_zero(const CheckedInt& x) { return x.is_zero(); }
bool is_zero(const mpz_class& x) { return x == 0; }

template <class Int>
int bareiss_rank(const SparseMatrix& m) {
    std::vector<std::vector<Int>> a(m.rows, std::vector<Int>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (const auto& [c, val] : m.entries[r]) a[r][c] = a[r][c] + Int{val};
    Int prev{1};
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (!is_zero(a[r][col])) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < m.rows; ++r) {
            for (int c = col + 1; c < m.cols; ++c)
                a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
            a[r][col] = Int{0};
        }
        // Columns left of `col` in rows below are already zero, so they need no update.
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

}  // namespace

FieldSpec FieldSpec::gf(std::uint32_t prime) {
    if (!is_prime(prime)) throw DomainError("field order " + std::to_string(prime) + " is not prime");
    return {Kind::prime, prime};
}

FieldSpec FieldSpec::parse(const std::string& name) {
    std::string s;
    for (char ch : name)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (s == "rat" || s == "qq" || s == "q" || s == "rational" || s == "rationals") return rationals();
    std::string digits;
    if (s.rfind("gf", 0) == 0) {
        for (char ch : s.substr(2))
            if (std::isdigit(static_cast<unsigned char>(ch))) digits += ch;
            else if (ch != '(' && ch != ')') throw DomainError("unknown field '" + name + "'");
    }
    if (digits.empty() || digits.size() > 9) throw DomainError("unknown field '" + name + "'");
    return gf(static_cast<std::uint32_t>(std::stoul(digits)));
}

std::string FieldSpec::name() const { return is_rational() ? "rat" : "gf" + std::to_string(p); }

std::int64_t FieldSpec::reduce(std::int64_t value) const {
    if (is_rational()) return value;
    const auto q = static_cast<std::int64_t>(p);
    return ((value % q) + q) % q;
}

int rank_gf2(const SparseMatrix& m) {
    const int words = (m.cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(m.rows, std::vector<std::uint64_t>(words, 0));
    for (int r = 0; r < m.rows; ++r)
        for (const auto& [c, val] : m.entries[r])
            if (val & 1) rows[r][c / 64] ^= std::uint64_t{1} << (c % 64);
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        const int w = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (rows[r][w] & bit) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = rank + 1; r < m.rows; ++r) {
            if (rows[r][w] & bit)
                for (int k = w; k < words; ++k) rows[r][k] ^= rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

int rank_mod_p(const SparseMatrix& m, std::uint32_t p) {
    if (p == 2) return rank_gf2(m);
    const auto q = static_cast<std::int64_t>(p);
    std::vector<std::vector<std::int64_t>> a(m.rows, std::vector<std::int64_t>(m.cols, 0));
    for (int r = 0; r < m.rows; ++r)
        for (const auto& [c, val] : m.entries[r]) a[r][c] = (((a[r][c] + val) % q) + q) % q;
    auto inverse = [q](std::int64_t x) {
        std::int64_t result = 1, base = x, e = q - 2;
        while (e > 0) {
            if (e & 1) result = result * base % q;
            base = base * base % q;
            e >>= 1;
        }
        return result;
    };
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (a[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        const std::int64_t inv = inverse(a[rank][col]);
        for (int r = rank + 1; r < m.rows; ++r) {
            if (a[r][col] == 0) continue;
            const std::int64_t f = a[r][col] * inv % q;
            for (int c = col; c < m.cols; ++c) a[r][c] = ((a[r][c] - f * a[rank][c]) % q + q) % q;
        }
        ++rank;
    }
    return rank;
}

int rank_bareiss(const SparseMatrix& m) {
    try {
        return bareiss_rank<CheckedInt>(m);
    } catch (const Overflow&) {
        return bareiss_rank<mpz_class>(m);
    }
}

int rank(const SparseMatrix& m, const FieldSpec& field) {
    if (field.is_rational()) return rank_bareiss(m);
    return rank_mod_p(m, field.p);
}

}  // namespace edgebetti
