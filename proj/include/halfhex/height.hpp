#pragma once

#include <array>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace halfhex {

// Domino height functions on subsets of the square lattice.
//
// Squares are named by their lower-left corner.  The Aztec diamond
// A_n consists of the unit squares whose interiors lie inside
// |x| + |y| < n+1; the half diamond H_n keeps the squares of A_n on
// or above the staircase y = 2*floor(x/2) (n even) or
// y + 1 = 2*floor((x+1)/2) (n odd).
//
// Heights live on lattice vertices.  Crossing the edge from (x,y) to
// (x+1,y) changes h by +1 when x+y is even, by -1 otherwise; the edge
// from (x,y) to (x,y+1) changes h by +1 when x+y is odd, by -1
// otherwise.  Traversing an edge backwards negates the increment, and
// an edge crossed by a domino gets -3 times its plain increment.
// These rules make h single-valued around every vertex of a tiled
// region, so a region is tileable only if the boundary rules alone
// close up around the boundary walk.

namespace detail {

constexpr int floor_div(int a, int b) {
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

}  // namespace detail

inline bool in_aztec_diamond(int n, int x, int y) {
    const int tx = x >= 0 ? x + 1 : -x;
    const int ty = y >= 0 ? y + 1 : -y;
    return tx + ty <= n + 1;
}

inline bool in_half_diamond(int n, int x, int y) {
    if (!in_aztec_diamond(n, x, y)) return false;
    if (n % 2 == 0) return y >= 2 * detail::floor_div(x, 2);
    return y + 1 >= 2 * detail::floor_div(x + 1, 2);
}

struct PlanarRegion {
    std::set<std::pair<int, int>> squares;

    bool contains(int x, int y) const { return squares.count({x, y}) != 0; }

    static PlanarRegion aztec_diamond(int n) {
        PlanarRegion r;
        for (int x = -n - 1; x <= n + 1; ++x)
            for (int y = -n - 1; y <= n + 1; ++y)
                if (in_aztec_diamond(n, x, y)) r.squares.insert({x, y});
        return r;
    }

    static PlanarRegion aztec_half_diamond(int n) {
        PlanarRegion r;
        for (int x = -n - 1; x <= n + 1; ++x)
            for (int y = -n - 1; y <= n + 1; ++y)
                if (in_half_diamond(n, x, y)) r.squares.insert({x, y});
        return r;
    }

    static PlanarRegion from_squares(const std::vector<std::pair<int, int>>& sq) {
        PlanarRegion r;
        r.squares.insert(sq.begin(), sq.end());
        return r;
    }
};

inline bool region_membership(const PlanarRegion& r, int x, int y) { return r.contains(x, y); }

// A domino covers its anchor square plus the square to the right
// (horizontal) or above (vertical).
struct Domino {
    int x = 0;
    int y = 0;
    bool horizontal = true;

    std::array<std::pair<int, int>, 2> cells() const {
        if (horizontal) return {{{x, y}, {x + 1, y}}};
        return {{{x, y}, {x, y + 1}}};
    }

    friend bool operator==(const Domino&, const Domino&) = default;
    friend bool operator<(const Domino& a, const Domino& b) {
        return std::tie(a.y, a.x, a.horizontal) < std::tie(b.y, b.x, b.horizontal);
    }
};

struct HeightField {
    std::map<std::pair<int, int>, int> values;

    bool contains(int x, int y) const { return values.count({x, y}) != 0; }
    int at(int x, int y) const { return values.at({x, y}); }

    friend bool operator==(const HeightField&, const HeightField&) = default;
};

struct UntileableRegion : std::runtime_error {
    UntileableRegion() : std::runtime_error("untileable region") {}
};

// Plain increments for forward traversal; an edge crossed by a domino
// multiplies them by -3.
inline int edge_increment_right(int x, int y) { return ((x + y) & 1) == 0 ? 1 : -1; }
inline int edge_increment_up(int x, int y) { return ((x + y) & 1) == 0 ? -1 : 1; }

namespace detail {

using Vertex = std::pair<int, int>;
using EdgeMap = std::map<std::pair<Vertex, Vertex>, int>;

inline void put_edge(EdgeMap& edges, Vertex a, Vertex b, int inc) {
    edges.emplace(std::make_pair(a, b), inc);
}

// Assigns heights over the edge graph, one component at a time in
// lexicographic order, base value 0 at each component's least vertex.
template <class Conflict>
HeightField propagate(const EdgeMap& edges, Conflict&& on_conflict) {
    std::map<Vertex, std::vector<std::pair<Vertex, int>>> adj;
    for (const auto& [e, inc] : edges) {
        adj[e.first].push_back({e.second, inc});
        adj[e.second].push_back({e.first, -inc});
    }
    HeightField out;
    for (const auto& [start, unused] : adj) {
        if (out.values.count(start)) continue;
        out.values[start] = 0;
        std::deque<Vertex> queue{start};
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            const int hu = out.values.at(u);
            for (const auto& [v, inc] : adj.at(u)) {
                auto [it, inserted] = out.values.emplace(v, hu + inc);
                if (inserted)
                    queue.push_back(v);
                else if (it->second != hu + inc)
                    on_conflict();
            }
        }
    }
    return out;
}

inline std::map<Vertex, std::size_t> check_exact_cover(const PlanarRegion& region,
                                                       const std::vector<Domino>& tiling) {
    std::map<Vertex, std::size_t> owner;
    for (std::size_t i = 0; i < tiling.size(); ++i)
        for (const auto& cell : tiling[i].cells()) {
            if (!region.contains(cell.first, cell.second))
                throw std::invalid_argument("domino outside the region");
            if (!owner.emplace(cell, i).second)
                throw std::invalid_argument("overlapping dominoes");
        }
    if (owner.size() != region.squares.size())
        throw std::invalid_argument("tiling does not cover the region");
    return owner;
}

}  // namespace detail

// Heights along the region boundary, fixed by the uncrossed-edge rules
// alone; throws UntileableRegion when some boundary cycle cannot
// close.
inline HeightField boundary_height(const PlanarRegion& r) {
    detail::EdgeMap edges;
    for (const auto& [x, y] : r.squares) {
        if (!r.contains(x, y - 1))
            detail::put_edge(edges, {x, y}, {x + 1, y}, edge_increment_right(x, y));
        if (!r.contains(x, y + 1))
            detail::put_edge(edges, {x, y + 1}, {x + 1, y + 1}, edge_increment_right(x, y + 1));
        if (!r.contains(x - 1, y))
            detail::put_edge(edges, {x, y}, {x, y + 1}, edge_increment_up(x, y));
        if (!r.contains(x + 1, y))
            detail::put_edge(edges, {x + 1, y}, {x + 1, y + 1}, edge_increment_up(x + 1, y));
    }
    return detail::propagate(edges, [] { throw UntileableRegion(); });
}

// Full height field of a tiling, base 0 at the least region vertex.
inline HeightField height_of_tiling(const PlanarRegion& region, const std::vector<Domino>& tiling) {
    const auto owner = detail::check_exact_cover(region, tiling);
    const auto crossed = [&](int ax, int ay, int bx, int by) {
        const auto a = owner.find({ax, ay});
        const auto b = owner.find({bx, by});
        return a != owner.end() && b != owner.end() && a->second == b->second;
    };
    detail::EdgeMap edges;
    for (const auto& [x, y] : region.squares) {
        const int bottom = crossed(x, y, x, y - 1) ? -3 : 1;
        detail::put_edge(edges, {x, y}, {x + 1, y}, bottom * edge_increment_right(x, y));
        const int top = crossed(x, y, x, y + 1) ? -3 : 1;
        detail::put_edge(edges, {x, y + 1}, {x + 1, y + 1}, top * edge_increment_right(x, y + 1));
        const int left = crossed(x - 1, y, x, y) ? -3 : 1;
        detail::put_edge(edges, {x, y}, {x, y + 1}, left * edge_increment_up(x, y));
        const int right = crossed(x, y, x + 1, y) ? -3 : 1;
        detail::put_edge(edges, {x + 1, y}, {x + 1, y + 1}, right * edge_increment_up(x + 1, y));
    }
    return detail::propagate(
        edges, [] { throw std::invalid_argument("tiling induces no consistent height field"); });
}

// Inverse of height_of_tiling: an internal edge is crossed exactly
// when its height step is +-3.
inline std::vector<Domino> tiling_from_heights(const PlanarRegion& region, const HeightField& h) {
    std::vector<Domino> out;
    const auto step3 = [&](int ax, int ay, int bx, int by) {
        const int d = h.at(bx, by) - h.at(ax, ay);
        return d == 3 || d == -3;
    };
    for (const auto& [x, y] : region.squares) {
        if (region.contains(x + 1, y) && step3(x + 1, y, x + 1, y + 1))
            out.push_back({x, y, true});
        if (region.contains(x, y + 1) && step3(x, y + 1, x + 1, y + 1))
            out.push_back({x, y, false});
    }
    detail::check_exact_cover(region, out);
    return out;
}

}  // namespace halfhex
