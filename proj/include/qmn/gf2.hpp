#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace qmn::gf2 {

// Dense bit-vector over GF(2).
using Vec = std::vector<std::uint64_t>;

inline Vec make_vec(std::size_t dim) { return Vec((dim + 63) / 64, 0); }
inline bool get(const Vec& v, std::size_t i) { return (v[i / 64] >> (i % 64)) & 1u; }
inline void flip(Vec& v, std::size_t i) { v[i / 64] ^= (std::uint64_t{1} << (i % 64)); }
inline void add(Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}
inline bool is_zero(const Vec& v) {
    for (auto w : v)
        if (w) return false;
    return true;
}

// Row space in echelon form; rows are kept with strictly increasing pivot
// column so reduction is deterministic (lowest index first).
struct Span {
    std::size_t dim = 0;
    std::vector<Vec> rows;      // echelonized
    std::vector<std::size_t> pivots;

    explicit Span(std::size_t d) : dim(d) {}

    // Reduces v by the stored rows; returns the residue.
    Vec residue(Vec v) const {
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (get(v, pivots[r])) add(v, rows[r]);
        return v;
    }

    bool contains(const Vec& v) const { return is_zero(residue(v)); }

    // Inserts v if independent; returns true if the span grew.
    bool insert(Vec v) {
        v = residue(v);
        if (is_zero(v)) return false;
        std::size_t p = 0;
        while (!get(v, p)) ++p;
        // Keep echelon order by pivot.
        std::size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < p) ++pos;
        rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(pos), v);
        pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(pos), p);
        // Back-substitute to keep rows reduced.
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (pivots[r] != p && get(rows[r], p)) add(rows[r], rows[pos]);
        return true;
    }

    std::size_t rank() const { return rows.size(); }
};

// Union of two spans as a fresh span.
inline Span sum(const Span& a, const Span& b) {
    Span s(a.dim);
    for (const auto& r : a.rows) s.insert(r);
    for (const auto& r : b.rows) s.insert(r);
    return s;
}

// Expresses target in the given generating set; the returned mask marks the
// generators used.  Empty optional if target is outside the span.
inline std::optional<std::vector<bool>> solve(const std::vector<Vec>& gens, std::size_t dim,
                                              Vec target) {
    std::vector<Vec> rows;
    std::vector<std::vector<bool>> combos;
    std::vector<std::size_t> pivots;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        Vec v = gens[g];
        std::vector<bool> combo(gens.size(), false);
        combo[g] = true;
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (get(v, pivots[r])) {
                add(v, rows[r]);
                for (std::size_t i = 0; i < combo.size(); ++i)
                    combo[i] = combo[i] != combos[r][i];
            }
        if (is_zero(v)) continue;
        std::size_t p = 0;
        while (!get(v, p)) ++p;
        rows.push_back(v);
        combos.push_back(combo);
        pivots.push_back(p);
    }
    std::vector<bool> used(gens.size(), false);
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (get(target, pivots[r])) {
            add(target, rows[r]);
            for (std::size_t i = 0; i < used.size(); ++i) used[i] = used[i] != combos[r][i];
        }
    if (!is_zero(target)) return std::nullopt;
    (void)dim;
    return used;
}

// Basis of the intersection of two spans (Zassenhaus: echelonize (v | v) for
// a-vectors against (w | 0) for b-vectors; null left parts give the
// intersection on the right).
inline std::vector<Vec> intersection(const Span& a, const Span& b) {
    std::size_t dim = a.dim;
    std::size_t words = make_vec(dim).size();
    auto augmented = [&](const Vec& left, const Vec& right) {
        Vec v(2 * words, 0);
        for (std::size_t i = 0; i < words; ++i) v[i] = left[i];
        for (std::size_t i = 0; i < words; ++i) v[words + i] = right[i];
        return v;
    };
    std::vector<Vec> rows;
    std::vector<std::size_t> pivots;  // pivot in the left block only
    std::vector<Vec> inter;
    auto reduce_insert = [&](Vec v) {
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (get(v, pivots[r])) add(v, rows[r]);
        bool left_zero = true;
        for (std::size_t i = 0; i < words; ++i)
            if (v[i]) left_zero = false;
        if (left_zero) {
            Vec right(words, 0);
            for (std::size_t i = 0; i < words; ++i) right[i] = v[words + i];
            if (!is_zero(right)) inter.push_back(right);
            return;
        }
        std::size_t p = 0;
        while (!get(v, p)) ++p;
        rows.push_back(v);
        pivots.push_back(p);
    };
    for (const auto& r : a.rows) reduce_insert(augmented(r, r));
    for (const auto& r : b.rows) reduce_insert(augmented(r, make_vec(dim)));
    // Echelonize the collected intersection vectors.
    Span s(dim);
    for (const auto& v : inter) s.insert(v);
    return s.rows;
}

}  // namespace qmn::gf2
