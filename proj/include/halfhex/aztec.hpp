#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <halfhex/bitstream.hpp>
#include <halfhex/tableau.hpp>

namespace halfhex {

// Particle dynamics of the Aztec diamond shuffle and its half-diamond
// restriction.
//
// Conventions: x(j,i) is the position of particle i (1-based) on row j
// (1-based).  The unconstrained process at real time t has rows
// j = 1..t, row j holding j particles, born at time j at x(j,i) = i.
// One synchronous step t -> t+1 with independent bits gamma(j,i):
//
//   tentative = x + gamma
//   x_new = tentative - 1{tentative = x(j-1,i) + 1}     (blocking, i <= j-1)
//                     + 1{tentative = x(j-1,i-1)}       (pushing,  i >= 2)
//
// where row j-1 is read at its old (time-t) positions.  The two
// indicators never fire together.  At equal times rows interlace,
// x(j+1,i) <= x(j,i) <= x(j+1,i+1), each row strictly increasing, and
// the unconstrained process stays inside i <= x(j,i) <= i + t - j.
//
// The half-diamond restriction pins row m+1 at time 2m+1 to the evenly
// spaced positions 2i (the last particle's pin exceeds the free bound
// by exactly one); the row evolves freely afterwards.  A row's pre-pin
// history never influences any post-pin value, so the dormant
// simulator materializes each row directly at its pin instant, while
// the literal simulator runs every row from birth and overwrites at
// the pin; their pinned rows agree bit for bit.  The literal
// simulator's not-yet-pinned rows are coupling bookkeeping, not part
// of the constrained process: a pin's last particle always outruns
// the free row born below it, so only the pinned prefix interlaces.

struct AztecParticles {
    int time = 0;
    // rows[j-1] = row j; the dormant simulator keeps only the rows
    // already pinned, the literal one all rows 1..time.
    std::vector<std::vector<int>> rows;
    friend bool operator==(const AztecParticles&, const AztecParticles&) = default;
};

namespace detail {

inline bool interlaced_rows(const std::vector<std::vector<int>>& rows, std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) {
        const auto& row = rows[k];
        if (row.size() != k + 1) return false;
        for (std::size_t i = 0; i + 1 < row.size(); ++i)
            if (row[i] >= row[i + 1]) return false;
        if (k > 0) {
            const auto& above = rows[k - 1];
            for (std::size_t i = 0; i < above.size(); ++i)
                if (!(row[i] <= above[i] && above[i] <= row[i + 1])) return false;
        }
    }
    return true;
}

}  // namespace detail

inline bool interlaced(const AztecParticles& s) {
    return detail::interlaced_rows(s.rows, s.rows.size());
}

// Interlacing of the rows already pinned at the state's time, the
// part of a coupled half-diamond trajectory the process owns.
inline bool pinned_rows_interlaced(const AztecParticles& s) {
    const std::size_t pinned = static_cast<std::size_t>((s.time + 1) / 2);
    return detail::interlaced_rows(s.rows, std::min(s.rows.size(), pinned));
}

// Bounds of the unconstrained process only; pinned rows break the
// upper bound at the last particle by exactly one.
inline bool within_bounds(const AztecParticles& s) {
    for (std::size_t k = 0; k < s.rows.size(); ++k)
        for (std::size_t i = 0; i < s.rows[k].size(); ++i) {
            const int x = s.rows[k][i], lo = int(i) + 1;
            if (x < lo || x > lo + s.time - int(k) - 1) return false;
        }
    return true;
}

namespace detail {

template <class Bits>
std::vector<int> update_row(const std::vector<int>& row, const std::vector<int>* above, int j,
                            Bits&& gamma) {
    std::vector<int> out(row.size());
    for (int i = 1; i <= static_cast<int>(row.size()); ++i) {
        const int tentative = row[i - 1] + (gamma(j, i) ? 1 : 0);
        int x = tentative;
        if (i <= j - 1 && tentative == (*above)[i - 1] + 1) x -= 1;
        if (i >= 2 && tentative == (*above)[i - 2]) x += 1;
        out[i - 1] = x;
    }
    return out;
}

}  // namespace detail

// One unconstrained step; gamma(j,i) supplies the bit for particle i
// of row j.
template <class Bits>
AztecParticles ad_step(const AztecParticles& s, Bits&& gamma) {
    assert(static_cast<int>(s.rows.size()) == s.time);
    assert(interlaced(s));
    AztecParticles out;
    out.time = s.time + 1;
    out.rows.reserve(s.rows.size() + 1);
    for (int j = 1; j <= s.time; ++j)
        out.rows.push_back(
            detail::update_row(s.rows[j - 1], j >= 2 ? &s.rows[j - 2] : nullptr, j, gamma));
    std::vector<int> born(out.time);
    for (int i = 0; i < out.time; ++i) born[i] = i + 1;
    out.rows.push_back(std::move(born));
    assert(interlaced(out));
    return out;
}

// Pin row m+1 to (2, 4, ..., 2(m+1)).  Materializes the row if the
// state is dormant, overwrites it otherwise.
inline AztecParticles half_diamond_constraint(const AztecParticles& s, int m) {
    if (s.time != 2 * m + 1)
        throw std::invalid_argument("half-diamond pin of row m+1 applies at time 2m+1");
    if (static_cast<int>(s.rows.size()) < m)
        throw std::invalid_argument("state is missing rows above the pin row");
    AztecParticles out = s;
    std::vector<int> pinned(m + 1);
    for (int i = 1; i <= m + 1; ++i) pinned[i - 1] = 2 * i;
    if (static_cast<int>(out.rows.size()) == m)
        out.rows.push_back(std::move(pinned));
    else
        out.rows[m] = std::move(pinned);
    assert(detail::interlaced_rows(out.rows, static_cast<std::size_t>(m) + 1));
    return out;
}

namespace detail {

// Bit address of the update of row j, particle i, during the step
// t -> t+1: step key t-j+1, aligned so that the X-step tau -> tau+1
// consumes exactly the bits of Algorithm-1 step tau+1.
struct AztecStepBits {
    const BitStream& stream;
    int t;
    bool operator()(int j, int i) const {
        return stream.bit(static_cast<std::uint64_t>(t - j + 1), j - 1, i - 1);
    }
};

}  // namespace detail

// Full dynamics from the empty state: every row from birth, pin
// overrides on odd times.  Returns the states at times 0..horizon.
// Not ad_step: once a pin has fired, rows below it need not interlace
// with it, so the update runs without the unconstrained asserts.
inline std::vector<AztecParticles> simulate_half_diamond_literal(int horizon,
                                                                 const BitStream& bits) {
    std::vector<AztecParticles> history;
    AztecParticles s;
    history.push_back(s);
    for (int t = 0; t < horizon; ++t) {
        AztecParticles next;
        next.time = t + 1;
        next.rows.reserve(s.rows.size() + 1);
        const detail::AztecStepBits gamma{bits, t};
        for (int j = 1; j <= static_cast<int>(s.rows.size()); ++j)
            next.rows.push_back(
                detail::update_row(s.rows[j - 1], j >= 2 ? &s.rows[j - 2] : nullptr, j, gamma));
        std::vector<int> born(next.time);
        for (int i = 0; i < next.time; ++i) born[i] = i + 1;
        next.rows.push_back(std::move(born));
        s = std::move(next);
        if (s.time % 2 == 1) s = half_diamond_constraint(s, (s.time - 1) / 2);
        assert(pinned_rows_interlaced(s));
        history.push_back(s);
    }
    return history;
}

// Same visible process, but each row first exists at its pin instant;
// consumes exactly the post-pin bits of the literal simulator.
inline std::vector<AztecParticles> simulate_half_diamond_dormant(int horizon,
                                                                 const BitStream& bits) {
    std::vector<AztecParticles> history;
    AztecParticles s;
    history.push_back(s);
    for (int t = 0; t < horizon; ++t) {
        AztecParticles next;
        next.time = t + 1;
        next.rows.reserve(s.rows.size() + 1);
        const detail::AztecStepBits gamma{bits, t};
        for (int j = 1; j <= static_cast<int>(s.rows.size()); ++j)
            next.rows.push_back(
                detail::update_row(s.rows[j - 1], j >= 2 ? &s.rows[j - 2] : nullptr, j, gamma));
        s = std::move(next);
        if (s.time % 2 == 1) s = half_diamond_constraint(s, (s.time - 1) / 2);
        assert(interlaced(s));
        history.push_back(s);
    }
    return history;
}

// Staircase-tableau view of a half-diamond trajectory at shifted time
// tau: row r is particle row r+1 read at real time tau+r+1, minus one.
// The bottom row lands on its pin instant, so the result is always a
// valid tableau of order tau.
inline StaircaseTableau x_view(const std::vector<AztecParticles>& history, int tau) {
    if (tau < 0 || 2 * tau + 1 >= static_cast<int>(history.size()))
        throw std::invalid_argument("trajectory too short for the requested view");
    StaircaseTableau t(tau);
    for (int r = 0; r <= tau; ++r) {
        const AztecParticles& s = history[tau + r + 1];
        for (int c = 0; c <= r; ++c) t.at(r, c) = s.rows[r][c] - 1;
    }
    assert(validate(t));
    return t;
}

// All extractable views, order 0 upward.
inline std::vector<StaircaseTableau> change_of_variables(
    const std::vector<AztecParticles>& history) {
    if (history.size() < 2)
        throw std::invalid_argument("trajectory too short for any view");
    std::vector<StaircaseTableau> out;
    for (int tau = 0; 2 * tau + 1 < static_cast<int>(history.size()); ++tau)
        out.push_back(x_view(history, tau));
    return out;
}

}  // namespace halfhex
