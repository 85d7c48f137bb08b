#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <vector>

#include <halfhex/height.hpp>

using namespace halfhex;

namespace {

int color_imbalance(const PlanarRegion& r) {
    int d = 0;
    for (const auto& [x, y] : r.squares) d += ((x + y) & 1) == 0 ? 1 : -1;
    return d;
}

std::vector<Domino> sorted(std::vector<Domino> t) {
    std::sort(t.begin(), t.end());
    return t;
}

// The 6-brick tiling of the order-2 diamond, rows of horizontal
// dominoes.
const std::vector<Domino> kBrickA2 = {
    {-1, -2, true}, {-2, -1, true}, {0, -1, true},
    {-2, 0, true},  {0, 0, true},   {-1, 1, true},
};

}  // namespace

TEST_CASE("diamond and half-diamond square counts") {
    for (int n = 0; n <= 8; ++n)
        CHECK(PlanarRegion::aztec_diamond(n).squares.size() ==
              static_cast<std::size_t>(2 * n * (n + 1)));

    const auto a1 = PlanarRegion::aztec_diamond(1);
    CHECK(a1.squares == std::set<std::pair<int, int>>{{-1, -1}, {-1, 0}, {0, -1}, {0, 0}});

    const std::vector<std::size_t> frozen = {4, 9, 15, 24, 36, 49};
    for (int n = 1; n <= 6; ++n)
        CHECK(PlanarRegion::aztec_half_diamond(n).squares.size() == frozen[n - 1]);

    // Closed forms for the half-diamond area, by residue of n mod 4.
    for (int n = 0; n <= 30; ++n) {
        const std::size_t want = (n % 4 == 1 || n % 4 == 2)
                                     ? static_cast<std::size_t>((n + 1) * (n + 1))
                                     : static_cast<std::size_t>(n * (n + 2));
        CHECK(PlanarRegion::aztec_half_diamond(n).squares.size() == want);
    }
}

TEST_CASE("half diamond sits inside the diamond") {
    int bad = 0;
    for (int n = 0; n <= 12; ++n) {
        const auto h = PlanarRegion::aztec_half_diamond(n);
        for (const auto& [x, y] : h.squares)
            if (!in_aztec_diamond(n, x, y)) ++bad;
    }
    CHECK(bad == 0);

    CHECK(in_half_diamond(2, 0, 0));
    CHECK_FALSE(in_half_diamond(2, 0, -1));
    const auto h2 = PlanarRegion::aztec_half_diamond(2);
    CHECK(region_membership(h2, 0, 0));
    CHECK_FALSE(region_membership(h2, 0, -1));
}

TEST_CASE("adjacent half diamonds fill a diamond by area") {
    // Companion pairs H_n, H_{n+1} for even n add up to the order
    // n+1 diamond, the split shown for orders 18/19 and 20/21.
    for (int n = 2; n <= 28; n += 2) {
        const auto a = PlanarRegion::aztec_diamond(n + 1).squares.size();
        const auto h0 = PlanarRegion::aztec_half_diamond(n).squares.size();
        const auto h1 = PlanarRegion::aztec_half_diamond(n + 1).squares.size();
        CHECK(h0 + h1 == a);
    }
}

TEST_CASE("boundary heights of the order-1 diamond") {
    const auto h = boundary_height(PlanarRegion::aztec_diamond(1));
    const std::map<std::pair<int, int>, int> want = {
        {{-1, -1}, 0}, {{0, -1}, 1}, {{1, -1}, 0}, {{1, 0}, -1},
        {{1, 1}, 0},   {{0, 1}, 1},  {{-1, 1}, 0}, {{-1, 0}, -1},
    };
    CHECK(h.values == want);
}

TEST_CASE("diamond boundaries always close") {
    for (int n = 1; n <= 30; ++n) {
        const auto h = boundary_height(PlanarRegion::aztec_diamond(n));
        CHECK(h.values.size() > 0);
        // Base vertex: the least corner of the leftmost column.
        CHECK(h.at(-n, -1) == 0);
    }
}

TEST_CASE("half-diamond boundaries close exactly when balanced") {
    // The staircase cut leaves the two square colors unbalanced for
    // n = 2, 3 mod 4; those regions carry no domino tiling and their
    // boundary walk cannot close.
    for (int n = 1; n <= 30; ++n) {
        const auto region = PlanarRegion::aztec_half_diamond(n);
        const int imbalance = color_imbalance(region);
        if (n % 4 == 1 || n % 4 == 2)
            CHECK(imbalance == (n % 4 == 1 ? 0 : -1));
        else
            CHECK(imbalance == (n % 4 == 3 ? 1 : 0));
        if (imbalance == 0) {
            CHECK(boundary_height(region).values.size() > 0);
        } else {
            CHECK_THROWS_AS(boundary_height(region), UntileableRegion);
        }
    }
}

TEST_CASE("mutilated regions are rejected") {
    auto squares = PlanarRegion::aztec_diamond(2).squares;

    auto punctured = squares;
    punctured.erase({0, 0});
    CHECK_THROWS_AS(
        boundary_height(PlanarRegion::from_squares({punctured.begin(), punctured.end()})),
        UntileableRegion);

    auto clipped = squares;
    clipped.erase({1, 0});
    CHECK_THROWS_AS(
        boundary_height(PlanarRegion::from_squares({clipped.begin(), clipped.end()})),
        UntileableRegion);
}

TEST_CASE("height fields of the two order-1 tilings") {
    const auto a1 = PlanarRegion::aztec_diamond(1);
    const std::vector<Domino> horizontals = {{-1, -1, true}, {-1, 0, true}};
    const std::vector<Domino> verticals = {{-1, -1, false}, {0, -1, false}};

    const auto hh = height_of_tiling(a1, horizontals);
    const auto hv = height_of_tiling(a1, verticals);

    std::map<std::pair<int, int>, int> base = {
        {{-1, -1}, 0}, {{0, -1}, 1}, {{1, -1}, 0}, {{1, 0}, -1},
        {{1, 1}, 0},   {{0, 1}, 1},  {{-1, 1}, 0}, {{-1, 0}, -1},
    };
    auto want_h = base;
    want_h[{0, 0}] = -2;
    auto want_v = base;
    want_v[{0, 0}] = 2;
    CHECK(hh.values == want_h);
    CHECK(hv.values == want_v);

    // The two tilings differ exactly at the center vertex.
    CHECK(hh.at(0, 0) != hv.at(0, 0));
}

TEST_CASE("tiling heights restrict to the boundary heights") {
    const auto a1 = PlanarRegion::aztec_diamond(1);
    const auto a2 = PlanarRegion::aztec_diamond(2);
    const std::vector<std::pair<PlanarRegion, std::vector<Domino>>> cases = {
        {a1, {{-1, -1, true}, {-1, 0, true}}},
        {a1, {{-1, -1, false}, {0, -1, false}}},
        {a2, kBrickA2},
    };
    for (const auto& [region, tiling] : cases) {
        const auto full = height_of_tiling(region, tiling);
        const auto edge = boundary_height(region);
        int bad = 0;
        for (const auto& [v, value] : edge.values)
            if (!full.contains(v.first, v.second) || full.at(v.first, v.second) != value) ++bad;
        CHECK(bad == 0);
    }
}

TEST_CASE("tilings round-trip through their height fields") {
    const auto a1 = PlanarRegion::aztec_diamond(1);
    const auto a2 = PlanarRegion::aztec_diamond(2);
    const std::vector<std::pair<PlanarRegion, std::vector<Domino>>> cases = {
        {a1, {{-1, -1, true}, {-1, 0, true}}},
        {a1, {{-1, -1, false}, {0, -1, false}}},
        {a2, kBrickA2},
    };
    for (const auto& [region, tiling] : cases) {
        const auto rebuilt = tiling_from_heights(region, height_of_tiling(region, tiling));
        CHECK(sorted(rebuilt) == sorted(tiling));
    }
}

TEST_CASE("bad tilings are rejected") {
    const auto a1 = PlanarRegion::aztec_diamond(1);
    CHECK_THROWS_AS(height_of_tiling(a1, {{-1, -1, true}}), std::invalid_argument);
    CHECK_THROWS_AS(height_of_tiling(a1, {{-1, -1, true}, {-1, -1, true}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(height_of_tiling(a1, {{-1, -1, true}, {1, 1, true}}), std::invalid_argument);

    // A corrupted height field crosses no interior edge, so the
    // reconstruction cannot cover the region.
    auto h = height_of_tiling(a1, {{-1, -1, true}, {-1, 0, true}});
    h.values[{0, 0}] = 0;
    CHECK_THROWS_AS(tiling_from_heights(a1, h), std::invalid_argument);
}
