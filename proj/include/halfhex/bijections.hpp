#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <halfhex/models.hpp>
#include <halfhex/tableau.hpp>

namespace halfhex {

namespace detail {

// Occupancy grid over the region's triangles; q in [-1, n-1],
// p in [-n, n-1].
class TriangleMarks {
public:
    explicit TriangleMarks(int n)
        : n_(n), up_(std::size_t(n + 1) * 2 * n, 0), down_(up_.size(), 0) {}

    bool mark(const Triangle& t) {
        char& cell = t.up ? up_[index(t)] : down_[index(t)];
        if (cell) return false;
        cell = 1;
        return true;
    }

    bool marked(const Triangle& t) const {
        return t.up ? up_[index(t)] : down_[index(t)];
    }

private:
    std::size_t index(const Triangle& t) const {
        return std::size_t(t.q + 1) * 2 * n_ + (t.p + n_);
    }

    int n_;
    std::vector<char> up_, down_;
};

// Pairs the unclaimed triangles of every strip into E and W lozenges.
// Leftover triangles must pair as consecutive edge-adjacent neighbors;
// any gap means the claimed set cannot be completed.
inline void complete_strips(const TrapezoidRegion& region, const TriangleMarks& marks,
                            std::vector<Lozenge>& tiles) {
    for (int q = -1; q <= region.order() - 1; ++q) {
        std::vector<Triangle> leftover;
        for (const Triangle& t : region.strip(q))
            if (!marks.marked(t)) leftover.push_back(t);
        if (leftover.size() % 2 != 0)
            throw std::invalid_argument("matching completion failed: odd strip remainder");
        for (std::size_t i = 0; i + 1 < leftover.size(); i += 2) {
            const Triangle& a = leftover[i];
            const Triangle& b = leftover[i + 1];
            if (a.up && !b.up && b.p == a.p)
                tiles.push_back({'E', a.p, q});
            else if (!a.up && b.up && b.p == a.p + 1)
                tiles.push_back({'W', b.p, q});
            else
                throw std::invalid_argument("matching completion failed: non-adjacent remainder");
        }
    }
}

}  // namespace detail

inline ParticleSystem st_to_particles(const StaircaseTableau& t) {
    ParticleSystem p;
    p.order = t.order();
    p.rows.resize(t.order() + 1);
    for (int r = 0; r <= t.order(); ++r) {
        auto row = t.row(r);
        p.rows[r].assign(row.begin(), row.end());
    }
    return p;
}

inline StaircaseTableau particles_to_st(const ParticleSystem& p) {
    if ((int)p.rows.size() != p.order + 1)
        throw std::invalid_argument("invalid particle system: malformed shape");
    if (TableauError e = check_rows(p.rows); e != TableauError::none)
        throw std::invalid_argument(std::string("invalid particle system: ") + describe(e));
    return tableau_from_rows(p.rows);
}

inline HalfHexMatching particles_to_matching(const ParticleSystem& p) {
    particles_to_st(p);  // validates
    HalfHexMatching m;
    m.order = p.order;
    m.vertical_rows.assign(p.rows.begin(), p.rows.end() - 1);
    return m;
}

inline ParticleSystem matching_to_particles(const HalfHexMatching& m) {
    if ((int)m.vertical_rows.size() != m.order)
        throw std::invalid_argument("invalid matching: malformed shape");
    ParticleSystem p;
    p.order = m.order;
    p.rows = m.vertical_rows;
    p.rows.emplace_back();
    for (int c = 0; c <= m.order; ++c) p.rows.back().push_back(2 * c + 1);
    particles_to_st(p);  // validates
    return p;
}

inline bool validate_tiling(const LozengeTiling& t) {
    const TrapezoidRegion region(t.order);
    detail::TriangleMarks marks(t.order);
    for (const Lozenge& l : t.tiles) {
        for (const Triangle& tri : {l.up_triangle(), l.down_triangle()}) {
            if (!region.has(tri)) return false;
            if (!marks.mark(tri)) return false;
        }
    }
    return 2 * (long long)t.tiles.size() == region.triangle_count();
}

inline LozengeTiling matching_to_lozenges(const HalfHexMatching& m) {
    matching_to_particles(m);  // validates
    const int n = m.order;
    const TrapezoidRegion region(n);
    detail::TriangleMarks marks(n);
    LozengeTiling out;
    out.order = n;
    for (int r = 0; r < n; ++r)
        for (int g : m.vertical_rows[r]) {
            const Lozenge tile{'N', g - n - 1, n - 1 - r};
            for (const Triangle& tri : {tile.up_triangle(), tile.down_triangle()})
                if (!region.has(tri) || !marks.mark(tri))
                    throw std::invalid_argument("vertical edge outside region or duplicated");
            out.tiles.push_back(tile);
        }
    detail::complete_strips(region, marks, out.tiles);
    std::sort(out.tiles.begin(), out.tiles.end());
    return out;
}

inline HalfHexMatching lozenges_to_matching(const LozengeTiling& t) {
    if (!validate_tiling(t)) throw std::invalid_argument("invalid lozenge tiling");
    HalfHexMatching m;
    m.order = t.order;
    m.vertical_rows.assign(t.order, {});
    for (const Lozenge& l : t.tiles)
        if (l.kind == 'N') m.vertical_rows[t.order - 1 - l.q].push_back(l.p + t.order + 1);
    for (auto& row : m.vertical_rows) std::sort(row.begin(), row.end());
    matching_to_particles(m);  // validates
    return m;
}

// Affine image of the square-lattice point (x,y) of a path diagram,
// returned as doubled (v,w) coordinates: T(x,y) = (-x-y-n)v + (x-1/2)w.
inline std::pair<int, int> path_point_image_doubled(int n, int x, int y) {
    return {2 * (-x - y - n), 2 * x - 1};
}

inline LatticePathFamily lozenges_to_paths(const LozengeTiling& t) {
    if (!validate_tiling(t)) throw std::invalid_argument("invalid lozenge tiling");
    const int n = t.order;
    const TrapezoidRegion region(n);

    // Triangle -> covering tile lookup.
    std::vector<int> up_tile(std::size_t(n + 1) * 2 * n, -1), down_tile(up_tile.size(), -1);
    auto index = [n](int p, int q) { return std::size_t(q + 1) * 2 * n + (p + n); };
    for (std::size_t i = 0; i < t.tiles.size(); ++i) {
        const Triangle u = t.tiles[i].up_triangle(), d = t.tiles[i].down_triangle();
        up_tile[index(u.p, u.q)] = int(i);
        down_tile[index(d.p, d.q)] = int(i);
    }

    LatticePathFamily f;
    f.order = n;
    for (int i = 1; i <= n; ++i) {
        // Walk the dual edges: the state (a,k) is the lattice edge
        // between D(a-1,k) and U(a,k), at doubled height 2k+1.
        int a = 2 * i - n, k = -1;
        std::string s;
        while (region.has_down(a - 1, k)) {
            const Lozenge& tile = t.tiles[down_tile[index(a - 1, k)]];
            if (tile.kind == 'E') {
                s += 'U';
                a -= 1;
            } else if (tile.kind == 'N') {
                s += 'R';
                a -= 1;
                k += 1;
            } else {
                throw std::invalid_argument("path walk hit a west tile");
            }
        }
        if (a != -n || k != i - 1)
            throw std::invalid_argument("path walk ended off its endpoint");
        f.steps.push_back(std::move(s));
    }
    return f;
}

inline bool paths_disjoint(const LatticePathFamily& f) {
    std::set<std::pair<int, int>> seen;
    for (int i = 1; i <= f.order; ++i) {
        int x = 0, y = -2 * i;
        if (!seen.insert({x, y}).second) return false;
        for (char ch : f.steps[i - 1]) {
            if (ch == 'R') ++x; else ++y;
            if (!seen.insert({x, y}).second) return false;
        }
    }
    return true;
}

inline LozengeTiling paths_to_lozenges(const LatticePathFamily& f) {
    const int n = f.order;
    if ((int)f.steps.size() != n) throw std::invalid_argument("wrong number of paths");
    const TrapezoidRegion region(n);
    detail::TriangleMarks marks(n);
    LozengeTiling out;
    out.order = n;
    for (int i = 1; i <= n; ++i) {
        const std::string& s = f.steps[i - 1];
        int rs = 0, us = 0;
        for (char ch : s) {
            if (ch == 'R') ++rs;
            else if (ch == 'U') ++us;
            else throw std::invalid_argument("path step must be R or U");
        }
        if (rs != i || us != i) throw std::invalid_argument("path has wrong step counts");
        int a = 2 * i - n, k = -1;
        for (char ch : s) {
            const Lozenge tile = ch == 'U' ? Lozenge{'E', a - 1, k} : Lozenge{'N', a - 1, k + 1};
            for (const Triangle& tri : {tile.up_triangle(), tile.down_triangle()})
                if (!region.has(tri) || !marks.mark(tri))
                    throw std::invalid_argument("paths overlap or leave the region");
            out.tiles.push_back(tile);
            a -= 1;
            if (ch == 'R') k += 1;
        }
    }
    detail::complete_strips(region, marks, out.tiles);
    std::sort(out.tiles.begin(), out.tiles.end());
    if (!validate_tiling(out)) throw std::invalid_argument("path family does not tile the region");
    return out;
}

}  // namespace halfhex
