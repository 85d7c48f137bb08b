#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include <halfhex/bitstream.hpp>
#include <halfhex/dyadic.hpp>
#include <halfhex/enumerate.hpp>
#include <halfhex/tableau.hpp>

namespace halfhex {

// Domino shuffling on staircase tableaux.  The forward map grows
// order n to n+1: rows are processed top to bottom, each entry either
// stays or steps right by one, and the move is forced exactly when a
// free choice would break interlacing with the already-updated row
// above.  Appending the pinned bottom row (1,3,...,2n+3) finishes the
// step.  The reverse map is the time reversal: rows bottom to top,
// steps left, forced against the already-updated row below.
//
// Bits are consumed by (row, col) address; free and forced cells are
// disjoint, so a trace is reproducible from the addressed stream.

template <class Bits>
StaircaseTableau shuffle_forward(const StaircaseTableau& t, Bits&& bits) {
    const int n = t.order();
    StaircaseTableau out(n + 1);  // bottom row already pinned
    for (int r = 0; r <= n; ++r) {
        auto src = t.row(r);
        auto dst = out.row(r);
        auto up = out.row(r > 0 ? r - 1 : 0);
        for (int c = 0; c <= r; ++c) {
            const int g = src[c];
            if (c < r && g == up[c])
                dst[c] = g;  // a step right would tie the new row above
            else if (c > 0 && g == up[c - 1])
                dst[c] = g + 1;  // pushed: staying would tie the new diagonal
            else
                dst[c] = g + (bits(r, c) ? 1 : 0);
        }
    }
    assert(validate(out));
    return out;
}

template <class Bits>
StaircaseTableau shuffle_reverse(const StaircaseTableau& t, Bits&& bits) {
    const int n = t.order() - 1;
    assert(n >= 0);
    StaircaseTableau out(n);  // bottom row pinned; input rows n, n+1 unread
    for (int r = n - 1; r >= 0; --r) {
        auto src = t.row(r);
        auto dst = out.row(r);
        auto down = out.row(r + 1);
        for (int c = 0; c <= r; ++c) {
            const int g = src[c];
            if (g == down[c])
                dst[c] = g;
            else if (g == down[c + 1])
                dst[c] = g - 1;
            else
                dst[c] = g - (bits(r, c) ? 1 : 0);
        }
    }
    assert(validate(out));
    return out;
}

// Caches the per-(step,row) hash so the hot loop does one mix per bit.
struct StepBits {
    const BitStream& stream;
    std::uint64_t step;
    mutable int cached_row = -1;
    mutable std::uint64_t row_base = 0;

    bool operator()(int row, int col) const {
        if (row != cached_row) {
            cached_row = row;
            row_base = stream.row_base(step, row);
        }
        return BitStream::bit_in_row(row_base, col);
    }
};

/// Exactly uniform on the order-n states: iterate the forward shuffle
// from the unique order-0 state, one addressed step per order.
inline StaircaseTableau sample(int n, std::uint64_t seed, std::uint64_t trajectory = 0) {
    BitStream stream(seed, trajectory);
    StaircaseTableau t(0);
    for (int s = 1; s <= n; ++s)
        t = shuffle_forward(t, StepBits{stream, static_cast<std::uint64_t>(s)});
    return t;
}

// ---------------------------------------------------------------------------
// Exact transition probabilities
//
// Given source and target, the forced/free classification of every
// cell is determined by scanning the forward (or reverse) pass against
// the target's rows, so the probability is 2^(-#free) without any
// branching, or 0 if some cell cannot reach its target value.

inline Dyadic forward_probability(const StaircaseTableau& from, const StaircaseTableau& to) {
    const int n = from.order();
    assert(to.order() == n + 1);
    int free = 0;
    for (int r = 0; r <= n; ++r)
        for (int c = 0; c <= r; ++c) {
            const int g = from.at(r, c);
            const int target = to.at(r, c);
            if (c < r && g == to.at(r - 1, c)) {
                if (target != g) return Dyadic::zero();
            } else if (c > 0 && g == to.at(r - 1, c - 1)) {
                if (target != g + 1) return Dyadic::zero();
            } else {
                if (target != g && target != g + 1) return Dyadic::zero();
                ++free;
            }
        }
    return Dyadic::half_pow(free);
}

inline Dyadic reverse_probability(const StaircaseTableau& from, const StaircaseTableau& to) {
    const int n = to.order();
    assert(from.order() == n + 1);
    int free = 0;
    for (int r = n - 1; r >= 0; --r)
        for (int c = 0; c <= r; ++c) {
            const int g = from.at(r, c);
            const int target = to.at(r, c);
            if (g == to.at(r + 1, c)) {
                if (target != g) return Dyadic::zero();
            } else if (g == to.at(r + 1, c + 1)) {
                if (target != g - 1) return Dyadic::zero();
            } else {
                if (target != g && target != g - 1) return Dyadic::zero();
                ++free;
            }
        }
    return Dyadic::half_pow(free);
}

// Dense exact matrix of P[state -> state'] between consecutive orders.
struct TransitionMatrix {
    int order_from = 0;
    std::vector<StaircaseTableau> sources;
    std::vector<StaircaseTableau> targets;
    std::vector<Dyadic> p;  // row-major, sources.size() x targets.size()

    Dyadic at(std::size_t i, std::size_t j) const { return p[i * targets.size() + j]; }
};

inline TransitionMatrix transition_matrix(int order_from) {
    TransitionMatrix m;
    m.order_from = order_from;
    m.sources = enumerate_states(order_from);
    m.targets = enumerate_states(order_from + 1);
    m.p.reserve(m.sources.size() * m.targets.size());
    for (const auto& s : m.sources)
        for (const auto& t : m.targets) m.p.push_back(forward_probability(s, t));
    return m;
}

struct VerifyResult {
    bool ok = true;
    std::string detail;
};

// <psi pi, pi'> = 2^(-n) <pi, psi' pi'> for every pair, exactly;
// reachability must also coincide (both sides zero together).
inline VerifyResult verify_adjointness(int n) {
    const auto sources = enumerate_states(n - 1);
    const auto targets = enumerate_states(n);
    for (std::size_t i = 0; i < sources.size(); ++i)
        for (std::size_t j = 0; j < targets.size(); ++j) {
            const Dyadic fwd = forward_probability(sources[i], targets[j]);
            const Dyadic rev = reverse_probability(targets[j], sources[i]);
            if (fwd != rev.scaled_down(n))
                return {false, "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") order " + std::to_string(n) + ": forward " +
                                   fwd.to_string() + " vs 2^-n * reverse " +
                                   rev.to_string()};
        }
    return {};
}

// Row sums exactly 1; uniform row vector maps to uniform, i.e. every
// column sums to 2^(-n); and the counting recurrence follows.
inline VerifyResult verify_uniform_preservation(int n) {
    const TransitionMatrix m = transition_matrix(n - 1);
    const std::size_t S = m.sources.size(), T = m.targets.size();
    if (T != (std::size_t{1} << n) * S)
        return {false, "order " + std::to_string(n) + ": |ST(n)| != 2^n |ST(n-1)|"};
    for (std::size_t i = 0; i < S; ++i) {
        Dyadic sum;
        for (std::size_t j = 0; j < T; ++j) sum = sum + m.at(i, j);
        if (sum != Dyadic::one())
            return {false, "row " + std::to_string(i) + " sums to " + sum.to_string()};
    }
    for (std::size_t j = 0; j < T; ++j) {
        Dyadic sum;
        for (std::size_t i = 0; i < S; ++i) sum = sum + m.at(i, j);
        if (sum != Dyadic::half_pow(n))
            return {false, "column " + std::to_string(j) + " sums to " + sum.to_string()};
    }
    return {};
}

}
