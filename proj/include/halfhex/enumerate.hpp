#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <halfhex/poly.hpp>
#include <halfhex/tableau.hpp>

namespace halfhex {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Exhaustive generation
//
// States are generated by depth-first search over the flat cell order
// (row-major, top row first), so they are emitted in exact
// lexicographic order with no duplicates.  Feasibility intervals per
// cell come from interlacing with the already-chosen row above plus
// the entry range 2c+1 <= g(r,c) <= 2c+1+(n-r) implied by the pinned
// bottom row; with both, every partial prefix extends to a full state
// and the search never dead-ends.

template <class Visit>
void enumerate_visit(int n, Visit&& visit) {
    StaircaseTableau cur(n);
    if (n == 0) {
        visit(static_cast<const StaircaseTableau&>(cur));
        return;
    }
    const int cells = n * (n + 1) / 2;
    std::vector<int> rr(cells), cc(cells);
    for (int r = 0, k = 0; r < n; ++r)
        for (int c = 0; c <= r; ++c, ++k) {
            rr[k] = r;
            cc[k] = c;
        }
    auto lo_of = [&](int k) {
        const int r = rr[k], c = cc[k];
        int lo = 2 * c + 1;
        if (c > 0) {
            lo = std::max(lo, cur.at(r, c - 1) + 1);
            if (r > 0) lo = std::max(lo, cur.at(r - 1, c - 1) + 1);
        }
        return lo;
    };
    auto hi_of = [&](int k) {
        const int r = rr[k], c = cc[k];
        int hi = 2 * c + 1 + (n - r);
        if (r > 0 && c <= r - 1) hi = std::min(hi, cur.at(r - 1, c));
        return hi;
    };
    int k = 0;
    cur.at(0, 0) = lo_of(0);
    while (k >= 0) {
        if (cur.at(rr[k], cc[k]) > hi_of(k)) {
            // exhausted this cell, backtrack and advance the previous one
            --k;
            if (k >= 0) ++cur.at(rr[k], cc[k]);
            continue;
        }
        if (k + 1 == cells) {
            visit(static_cast<const StaircaseTableau&>(cur));
            ++cur.at(rr[k], cc[k]);
        } else {
            ++k;
            cur.at(rr[k], cc[k]) = lo_of(k);
        }
    }
}

inline BigInt enumerate_count(int n) {
    BigInt c = 0;
    enumerate_visit(n, [&](const StaircaseTableau&) { ++c; });
    return c;
}

// Materialized, lexicographically sorted, duplicate-free.  Guarded:
// order 6 is the last one that fits comfortably (2^21 states).
inline std::vector<StaircaseTableau> enumerate_states(int n) {
    if (n < 0 || n > 6) throw std::invalid_argument("enumerate_states: order too large");
    std::vector<StaircaseTableau> out;
    out.reserve(static_cast<std::size_t>(1) << std::min(21, n * (n + 1) / 2));
    enumerate_visit(n, [&](const StaircaseTableau& t) { out.push_back(t); });
    return out;
}

inline BigInt count_closed(int n) {
    return BigInt(1) << (n * (n + 1) / 2);
}

// ---------------------------------------------------------------------------
// Non-intersecting lattice path counts
//
// Sources (0,-x_i), sinks (j,-j), monotone R/U steps; the number of
// single paths from (0,-x) to (j,-j) is binom(x,j), and families are
// counted by det[binom(x_i,j)].  Exact big-integer arithmetic via
// fraction-free Gaussian elimination.

inline BigInt binomial_big(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    BigInt sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

inline BigInt nilp_count_determinant(const std::vector<int>& xs) {
    const int n = static_cast<int>(xs.size());
    for (int i = 1; i < n; ++i)
        if (xs[i - 1] >= xs[i])
            throw std::invalid_argument("nilp_count_determinant: xs must increase");
    if (n > 0 && xs[0] < 1) throw std::invalid_argument("nilp_count_determinant: xs must be positive");
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= n; ++j) m[i][j - 1] = binomial_big(xs[i], j);
    return bareiss_determinant(std::move(m));
}

// Secondary closed form.  The bare double product
// prod_{i<j}(x_j-x_i)/(j-i) does not reproduce the determinant; the
// correction factor prod_i(x_i/i) = prod(x_i)/n! makes the two agree
// (verified against brute force in the tests).
inline boost::rational<BigInt> nilp_count_product(const std::vector<int>& xs) {
    const int n = static_cast<int>(xs.size());
    boost::rational<BigInt> r(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            r *= boost::rational<BigInt>(xs[j] - xs[i], j - i);
    for (int i = 0; i < n; ++i) r *= boost::rational<BigInt>(xs[i], i + 1);
    return r;
}

// Brute-force family count for the same endpoints, vertex-disjoint,
// identity connection.  Tiny inputs only (max(xs) <= 8 or so): paths
// live on a grid small enough for a 64-bit vertex mask.
namespace detail {

inline void nilp_paths_from(int x0, int y0, int x1, int y1, int width,
                            std::uint64_t mask, std::vector<std::uint64_t>& out) {
    mask |= std::uint64_t(1) << (y0 * width + x0);
    if (x0 == x1 && y0 == y1) {
        out.push_back(mask);
        return;
    }
    if (x0 < x1) nilp_paths_from(x0 + 1, y0, x1, y1, width, mask, out);
    if (y0 < y1) nilp_paths_from(x0, y0 + 1, x1, y1, width, mask, out);
}

inline void nilp_families(const std::vector<std::vector<std::uint64_t>>& per_source,
                          std::size_t k, std::uint64_t used, BigInt& count) {
    if (k == per_source.size()) {
        ++count;
        return;
    }
    for (std::uint64_t m : per_source[k])
        if (!(m & used)) nilp_families(per_source, k + 1, used | m, count);
}

}  // namespace detail

inline BigInt nilp_count_bruteforce(const std::vector<int>& xs) {
    const int n = static_cast<int>(xs.size());
    if (n == 0) return 1;
    const int maxx = xs.back();
    if (maxx * (n + 1) > 63)
        throw std::invalid_argument("nilp_count_bruteforce: grid too large");
    // Grid coordinates shifted to y' = y + x_max, so path k runs from
    // (0, x_max - x_k) up-right to (k, x_max - k); width n+1 columns.
    std::vector<std::vector<std::uint64_t>> per_source(n);
    for (int k = 1; k <= n; ++k)
        detail::nilp_paths_from(0, maxx - xs[k - 1], k, maxx - k, n + 1, 0,
                                per_source[k - 1]);
    BigInt count = 0;
    detail::nilp_families(per_source, 0, 0, count);
    return count;
}

// ---------------------------------------------------------------------------
// Schur staircase product and q-enumeration

inline BigInt schur_staircase_product(const std::vector<BigInt>& xs) {
    BigInt r = 1;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) r *= xs[i] + xs[j];
    return r;
}

inline Poly q_enumerate_bruteforce(int n) {
    Poly p;
    enumerate_visit(n, [&](const StaircaseTableau& t) {
        p.add_term(static_cast<int>(volume(t)), 1);
    });
    return p;
}

// The principal-specialization product prod_{1<=i<j<=n+1}(q^i + q^j);
// matches the brute-force volume polynomial after dividing by a single
// monomial (the valuation gap), which the caller detects.
inline Poly q_enumerate_closed(int n) {
    Poly p = Poly::one();
    for (int i = 1; i <= n + 1; ++i)
        for (int j = i + 1; j <= n + 1; ++j)
            p = p * (Poly::monomial(i) + Poly::monomial(j));
    return p;
}

}
