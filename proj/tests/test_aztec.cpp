#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <map>
#include <vector>

#include <halfhex/aztec.hpp>
#include <halfhex/enumerate.hpp>
#include <halfhex/shuffle.hpp>

using namespace halfhex;

namespace {

// Explicit per-step bit tables keyed (t, j, i) for hand traces; bits
// not listed default to 0.
struct TraceBits {
    const std::map<std::tuple<int, int, int>, int>& table;
    int t;
    bool operator()(int j, int i) const {
        const auto it = table.find({t, j, i});
        return it != table.end() && it->second != 0;
    }
};

// The particle update of one staircase step written directly from the
// row recursions: row j advances using the already-updated row j-1,
// because at real times the row above is one tick ahead.  Bit of
// particle (j, i) is bit j(j-1)/2 + (i-1) of `word`; the next pinned
// row is supplied by the tableau constructor.
StaircaseTableau x_step_raw(const StaircaseTableau& in, std::uint64_t word) {
    const int m = in.order();
    StaircaseTableau out(m + 1);
    std::vector<int> above;
    for (int j = 1; j <= m + 1; ++j) {
        std::vector<int> row(j), nxt(j);
        for (int i = 1; i <= j; ++i) row[i - 1] = in.at(j - 1, i - 1) + 1;
        for (int i = 1; i <= j; ++i) {
            const int bit = static_cast<int>((word >> (j * (j - 1) / 2 + (i - 1))) & 1u);
            const int tentative = row[i - 1] + bit;
            int x = tentative;
            if (i <= j - 1 && tentative == above[i - 1] + 1) x -= 1;
            if (i >= 2 && tentative == above[i - 2]) x += 1;
            nxt[i - 1] = x;
        }
        for (int i = 1; i <= j; ++i) out.at(j - 1, i - 1) = nxt[i - 1] - 1;
        above = std::move(nxt);
    }
    return out;
}

}  // namespace

TEST_CASE("single-particle step examples") {
    AztecParticles s{1, {{1}}};

    auto up = ad_step(s, [](int, int) { return true; });
    CHECK(up.time == 2);
    CHECK(up.rows == std::vector<std::vector<int>>{{2}, {1, 2}});

    auto down = ad_step(s, [](int, int) { return false; });
    CHECK(down.rows == std::vector<std::vector<int>>{{1}, {1, 2}});
}

TEST_CASE("blocking and pushing indicators") {
    // Blocking: particle (2,1) tries to move onto the site just past
    // x(1,1) and is held back.
    AztecParticles s{2, {{1}, {1, 2}}};
    auto out = ad_step(s, [](int j, int i) { return j == 2 && i == 1; });
    CHECK(out.rows[1] == std::vector<int>{1, 2});

    // Pushing does not fire when the tentative site differs from the
    // previous particle of the row above.
    auto idle = ad_step(s, [](int, int) { return false; });
    CHECK(idle.rows[1] == std::vector<int>{1, 2});

    // Pushing fires: x(2,2) = 2 would collide with x(1,1) = 2 from
    // behind and is dragged one site forward.
    AztecParticles pushy{2, {{2}, {1, 2}}};
    auto pushed = ad_step(pushy, [](int, int) { return false; });
    CHECK(pushed.rows[0] == std::vector<int>{2});
    CHECK(pushed.rows[1] == std::vector<int>{1, 3});
}

TEST_CASE("four-step unconstrained golden trace") {
    const std::map<std::tuple<int, int, int>, int> bits = {
        {{1, 1, 1}, 1},
        {{2, 1, 1}, 0}, {{2, 2, 1}, 1}, {{2, 2, 2}, 0},
        {{3, 1, 1}, 1}, {{3, 2, 1}, 1}, {{3, 2, 2}, 1},
        {{3, 3, 1}, 0}, {{3, 3, 2}, 0}, {{3, 3, 3}, 0},
    };
    const std::vector<std::vector<std::vector<int>>> golden = {
        {{1}},
        {{2}, {1, 2}},
        {{2}, {2, 3}, {1, 2, 3}},
        {{3}, {2, 4}, {1, 3, 4}, {1, 2, 3, 4}},
    };

    AztecParticles s;
    for (int t = 0; t < 4; ++t) {
        s = ad_step(s, TraceBits{bits, t});
        CHECK(s.time == t + 1);
        CHECK(s.rows == golden[t]);
        CHECK(interlaced(s));
        CHECK(within_bounds(s));
    }
}

TEST_CASE("unconstrained runs keep the invariants") {
    int bad = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const BitStream stream(0xA27ECULL + seed);
        AztecParticles s;
        for (int t = 0; t < 40; ++t) {
            s = ad_step(s, detail::AztecStepBits{stream, t});
            if (static_cast<int>(s.rows.size()) != s.time) ++bad;
            for (std::size_t j = 0; j < s.rows.size(); ++j)
                if (s.rows[j].size() != j + 1) ++bad;
            if (!interlaced(s) || !within_bounds(s)) ++bad;
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("half-diamond pins land on even positions") {
    const BitStream stream(0xC0FFEEULL);
    const auto hist = simulate_half_diamond_literal(7, stream);

    // The pin overrides even the birth position of the first row.
    CHECK(hist[1].rows[0] == std::vector<int>{2});
    CHECK(hist[3].rows[1] == std::vector<int>{2, 4});
    CHECK(hist[5].rows[2] == std::vector<int>{2, 4, 6});
    CHECK(hist[7].rows[3] == std::vector<int>{2, 4, 6, 8});

    // The pinned last particle sits exactly one past the free upper
    // bound i + t - j of the unconstrained process.
    for (int m = 0; m <= 3; ++m) {
        const AztecParticles& s = hist[2 * m + 1];
        CHECK(s.rows[m][m] == (m + 1) + s.time - (m + 1) + 1);
    }

    CHECK_THROWS_AS(half_diamond_constraint(hist[4], 1), std::invalid_argument);
    CHECK_THROWS_AS(half_diamond_constraint(hist[3], 2), std::invalid_argument);
}

TEST_CASE("random literal trajectories stay interlaced") {
    // Interlacing is owed only by the rows the half-diamond has
    // pinned; the free rows still below their pin instants lag the
    // pins by construction.
    int bad = 0;
    for (std::uint64_t k = 0; k < 1000; ++k) {
        const BitStream stream(0x5EEDULL, k);
        const auto hist = simulate_half_diamond_literal(17, stream);
        for (const auto& s : hist)
            if (!pinned_rows_interlaced(s)) ++bad;
        for (int m = 0; 2 * m + 1 < static_cast<int>(hist.size()); ++m)
            for (int i = 1; i <= m + 1; ++i)
                if (hist[2 * m + 1].rows[m][i - 1] != 2 * i) ++bad;
    }
    CHECK(bad == 0);
}

TEST_CASE("staircase views of a trajectory") {
    const BitStream stream(0xFACADEULL);
    const auto hist = simulate_half_diamond_literal(13, stream);

    CHECK(x_view(hist, 0) == StaircaseTableau(0));
    const auto views = change_of_variables(hist);
    REQUIRE(views.size() == 7);
    int bad = 0;
    for (std::size_t tau = 0; tau < views.size(); ++tau) {
        if (views[tau].order() != static_cast<int>(tau)) ++bad;
        if (!validate(views[tau])) ++bad;
    }
    CHECK(bad == 0);

    CHECK_THROWS_AS(x_view(hist, 7), std::invalid_argument);
    CHECK_THROWS_AS(x_view(hist, -1), std::invalid_argument);
    CHECK_THROWS_AS(change_of_variables(std::vector<AztecParticles>{}), std::invalid_argument);
}

TEST_CASE("dormant and literal simulators agree on every view") {
    int bad = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const BitStream stream(0xD1CEULL + seed);
        const auto lit = simulate_half_diamond_literal(25, stream);
        const auto dorm = simulate_half_diamond_dormant(25, stream);
        // The dormant state is exactly the pinned prefix of the
        // literal one at every time.
        for (std::size_t t = 0; t < dorm.size(); ++t) {
            if (dorm[t].time != lit[t].time) ++bad;
            const std::size_t pinned = dorm[t].rows.size();
            if (pinned != static_cast<std::size_t>((dorm[t].time + 1) / 2)) ++bad;
            if (pinned > lit[t].rows.size()) { ++bad; continue; }
            for (std::size_t j = 0; j < pinned; ++j)
                if (dorm[t].rows[j] != lit[t].rows[j]) ++bad;
        }
        for (int tau = 0; tau <= 12; ++tau)
            if (x_view(lit, tau) != x_view(dorm, tau)) ++bad;
    }
    CHECK(bad == 0);

    // Same bits, same history.
    const BitStream stream(0xD1CEULL);
    CHECK(simulate_half_diamond_dormant(25, stream) == simulate_half_diamond_dormant(25, stream));
}

TEST_CASE("particle dynamics induce the staircase transition kernel") {
    // Exact distributional equivalence, order by order: pushing every
    // possible coin word through the row recursions reproduces the
    // transition matrix of the tableau shuffle.
    for (int m = 0; m <= 3; ++m) {
        const TransitionMatrix matrix = transition_matrix(m);
        const int cells = (m + 1) * (m + 2) / 2;
        int bad = 0;
        for (std::size_t si = 0; si < matrix.sources.size(); ++si) {
            std::map<StaircaseTableau, Dyadic> dist;
            for (std::uint64_t w = 0; w < (std::uint64_t{1} << cells); ++w) {
                const StaircaseTableau out = x_step_raw(matrix.sources[si], w);
                if (!validate(out)) ++bad;
                dist[out] = dist[out] + Dyadic::half_pow(cells);
            }
            for (std::size_t ti = 0; ti < matrix.targets.size(); ++ti) {
                const auto it = dist.find(matrix.targets[ti]);
                const Dyadic got = it == dist.end() ? Dyadic::zero() : it->second;
                if (!(got == matrix.at(si, ti))) ++bad;
            }
            if (dist.size() > matrix.targets.size()) ++bad;
        }
        CHECK(bad == 0);
    }
}

TEST_CASE("bit-aligned trajectories follow the tableau shuffle") {
    // The half-diamond process, viewed through the change of
    // variables, must retrace the exact tableau chain driven by the
    // same bit stream, step for step up to order 20.
    int bad = 0;
    for (std::uint64_t k = 0; k < 1000; ++k) {
        const BitStream stream(0xB17A11E4ULL, k);
        const auto hist = simulate_half_diamond_dormant(41, stream);
        StaircaseTableau cur(0);
        if (x_view(hist, 0) != cur) ++bad;
        for (int tau = 1; tau <= 20; ++tau) {
            cur = shuffle_forward(cur, StepBits{stream, static_cast<std::uint64_t>(tau)});
            if (x_view(hist, tau) != cur) ++bad;
        }
    }
    CHECK(bad == 0);
}
