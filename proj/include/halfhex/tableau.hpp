#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace halfhex {

// Staircase tableaux are the canonical states of the half-hexagon.
//
// Conventions used throughout the library:
//   - rows r = 0..n, top to bottom; row r holds r+1 entries g(r,0..r),
//     0-indexed and strictly increasing;
//   - the bottom row is pinned: g(n,j) = 2j+1;
//   - consecutive rows interlace: g(r+1,j) <= g(r,j) < g(r+1,j+1);
//   - entry bounds 1 <= g(r,j) <= 2n+1 follow from the above but are
//     asserted independently in validate() for defense.
//
// Subtracting j+1 entrywise gives a Gelfand-Tsetlin pattern with
// bottom row (0,1,...,n); the sum of its non-bottom entries is the
// volume statistic used for q-enumeration.

class StaircaseTableau {
public:
    // Minimal valid state of the given order: every row (2j+1)_j.
    explicit StaircaseTableau(int order) : order_(order) {
        assert(order >= 0);
        cells_.resize(static_cast<std::size_t>(order + 1) * (order + 2) / 2);
        std::size_t k = 0;
        for (int r = 0; r <= order; ++r)
            for (int c = 0; c <= r; ++c) cells_[k++] = 2 * c + 1;
    }

    static std::size_t row_offset(int r) {
        return static_cast<std::size_t>(r) * (r + 1) / 2;
    }

    int order() const { return order_; }

    int at(int r, int c) const { return cells_[row_offset(r) + c]; }
    int& at(int r, int c) { return cells_[row_offset(r) + c]; }

    std::span<const std::int32_t> row(int r) const {
        return {cells_.data() + row_offset(r), static_cast<std::size_t>(r + 1)};
    }
    std::span<std::int32_t> row(int r) {
        return {cells_.data() + row_offset(r), static_cast<std::size_t>(r + 1)};
    }

    const std::vector<std::int32_t>& cells() const { return cells_; }

    // Row-major flat comparison = lexicographic with the top row most
    // significant; this is the order enumerate_states emits.
    friend bool operator==(const StaircaseTableau& a, const StaircaseTableau& b) {
        return a.order_ == b.order_ && a.cells_ == b.cells_;
    }
    friend std::strong_ordering operator<=>(const StaircaseTableau& a,
                                            const StaircaseTableau& b) {
        if (a.order_ != b.order_) return a.order_ <=> b.order_;
        return a.cells_ <=> b.cells_;
    }

private:
    int order_;
    std::vector<std::int32_t> cells_;
};

enum class TableauError {
    none,
    malformed_shape,
    bad_bottom_row,
    interlacing_violation,
    out_of_range,
};

inline const char* describe(TableauError e) {
    switch (e) {
        case TableauError::none: return "ok";
        case TableauError::malformed_shape: return "malformed shape";
        case TableauError::bad_bottom_row: return "bad bottom row";
        case TableauError::interlacing_violation: return "interlacing violation";
        case TableauError::out_of_range: return "entry out of range";
    }
    return "unknown";
}

// Full invariant check; never mutates.  Shape is correct by
// construction for StaircaseTableau, so this covers the bottom row,
// interlacing (which implies strict within-row increase), and the
// defensive entry bounds.
inline TableauError check(const StaircaseTableau& t) {
    const int n = t.order();
    for (int j = 0; j <= n; ++j)
        if (t.at(n, j) != 2 * j + 1) return TableauError::bad_bottom_row;
    for (int r = 0; r <= n; ++r)
        for (int c = 0; c <= r; ++c) {
            const int g = t.at(r, c);
            if (g < 1 || g > 2 * n + 1) return TableauError::out_of_range;
            if (c > 0 && t.at(r, c - 1) >= g)
                return TableauError::interlacing_violation;
        }
    for (int r = 0; r < n; ++r)
        for (int c = 0; c <= r; ++c) {
            const int g = t.at(r, c);
            if (!(t.at(r + 1, c) <= g && g < t.at(r + 1, c + 1)))
                return TableauError::interlacing_violation;
        }
    return TableauError::none;
}

inline bool validate(const StaircaseTableau& t) {
    return check(t) == TableauError::none;
}

// Ragged input (e.g. parsed from a file): shape errors are reported
// distinctly from invariant violations.
inline TableauError check_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) return TableauError::malformed_shape;
    const int n = static_cast<int>(rows.size()) - 1;
    for (int r = 0; r <= n; ++r)
        if (rows[r].size() != static_cast<std::size_t>(r) + 1)
            return TableauError::malformed_shape;
    StaircaseTableau t(n);
    for (int r = 0; r <= n; ++r)
        for (int c = 0; c <= r; ++c) t.at(r, c) = rows[r][c];
    return check(t);
}

inline StaircaseTableau tableau_from_rows(const std::vector<std::vector<int>>& rows) {
    assert(check_rows(rows) == TableauError::none);
    StaircaseTableau t(static_cast<int>(rows.size()) - 1);
    for (int r = 0; r <= t.order(); ++r)
        for (int c = 0; c <= r; ++c) t.at(r, c) = rows[r][c];
    return t;
}

// Gelfand-Tsetlin form: h(r,j) = g(r,j) - j - 1, weak interlacing,
// bottom row (0,1,...,n).
class GTPattern {
public:
    explicit GTPattern(int order) : order_(order) {
        cells_.resize(static_cast<std::size_t>(order + 1) * (order + 2) / 2, 0);
        for (int j = 0; j <= order; ++j)
            cells_[StaircaseTableau::row_offset(order) + j] = j;
    }

    int order() const { return order_; }
    int at(int r, int c) const { return cells_[StaircaseTableau::row_offset(r) + c]; }
    int& at(int r, int c) { return cells_[StaircaseTableau::row_offset(r) + c]; }

    friend bool operator==(const GTPattern&, const GTPattern&) = default;

private:
    int order_;
    std::vector<std::int32_t> cells_;
};

inline bool validate(const GTPattern& p) {
    const int n = p.order();
    for (int j = 0; j <= n; ++j)
        if (p.at(n, j) != j) return false;
    for (int r = 0; r <= n; ++r)
        for (int c = 0; c <= r; ++c)
            if (p.at(r, c) < 0) return false;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c <= r; ++c)
            if (!(p.at(r + 1, c) <= p.at(r, c) && p.at(r, c) <= p.at(r + 1, c + 1)))
                return false;
    return true;
}

inline GTPattern to_gt(const StaircaseTableau& t) {
    GTPattern p(t.order());
    for (int r = 0; r <= t.order(); ++r)
        for (int c = 0; c <= r; ++c) p.at(r, c) = t.at(r, c) - c - 1;
    return p;
}

inline StaircaseTableau from_gt(const GTPattern& p) {
    StaircaseTableau t(p.order());
    for (int r = 0; r <= p.order(); ++r)
        for (int c = 0; c <= r; ++c) t.at(r, c) = p.at(r, c) + c + 1;
    return t;
}

// Sum of the non-bottom GT entries; uniquely minimized on the minimal
// state, where it equals binomial(n+1, 3).
inline long long volume(const StaircaseTableau& t) {
    long long v = 0;
    for (int r = 0; r < t.order(); ++r)
        for (int c = 0; c <= r; ++c) v += t.at(r, c) - c - 1;
    return v;
}

}
