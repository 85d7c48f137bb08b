#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <halfhex/tableau.hpp>

namespace halfhex {

// The four companion models of the staircase tableau, all over exact
// integer coordinates.
//
// Triangular-lattice conventions, in the basis v = (1,0),
// w = (1/2, sqrt(3)/2): vertex (p,q) sits at p*v + q*w; the up
// triangle U(p,q) has corners (p,q),(p+1,q),(p,q+1) and the down
// triangle D(p,q) has corners (p+1,q),(p,q+1),(p+1,q+1).
//
// The order-n trapezoid holds, for 0 <= q <= n-1, the up triangles
// p in [-n, n-q-1] and down triangles p in [-n, n-q-2]; below it the
// bottom strip q = -1 carries n notches, the k-th (k = 0..n-1)
// centered at c = 2k-n+1 with triangles D(c-1), U(c), D(c).
//
// Lozenges pair an up triangle with an adjacent down triangle and are
// named by their up triangle:
//   N(p,q) = U(p,q) + D(p,q-1)   (vertical edge, carries a particle)
//   E(p,q) = U(p,q) + D(p,q)
//   W(p,q) = U(p,q) + D(p-1,q)

struct Triangle {
    int p = 0, q = 0;
    bool up = false;
    friend bool operator==(const Triangle&, const Triangle&) = default;
};

struct Lozenge {
    char kind = 'N';  // 'N', 'E' or 'W'
    int p = 0, q = 0;
    friend bool operator==(const Lozenge&, const Lozenge&) = default;
    friend bool operator<(const Lozenge& a, const Lozenge& b) {
        if (a.q != b.q) return a.q < b.q;
        if (a.p != b.p) return a.p < b.p;
        return a.kind < b.kind;
    }

    Triangle up_triangle() const { return {p, q, true}; }
    Triangle down_triangle() const {
        if (kind == 'N') return {p, q - 1, false};
        if (kind == 'E') return {p, q, false};
        return {p - 1, q, false};
    }
};

class TrapezoidRegion {
public:
    explicit TrapezoidRegion(int order) : n_(order) {}

    int order() const { return n_; }

    bool has_up(int p, int q) const {
        if (q >= 0) return q <= n_ - 1 && p >= -n_ && p <= n_ - q - 1;
        if (q == -1) return p >= -n_ + 1 && p <= n_ - 1 && (p + n_) % 2 != 0;
        return false;
    }

    bool has_down(int p, int q) const {
        if (q >= 0) return q <= n_ - 1 && p >= -n_ && p <= n_ - q - 2;
        if (q == -1) return p >= -n_ && p <= n_ - 1;
        return false;
    }

    bool has(const Triangle& t) const {
        return t.up ? has_up(t.p, t.q) : has_down(t.p, t.q);
    }

    long long triangle_count() const {
        long long c = 0;
        for (int q = -1; q <= n_ - 1; ++q)
            for (int p = -n_; p <= n_ - 1; ++p)
                c += has_up(p, q) + has_down(p, q);
        return c;
    }

    // Triangles of one strip, left to right; consecutive entries of
    // the same p (up then down) or p to p+1 (down then up) are
    // edge-adjacent, everything else is not.
    std::vector<Triangle> strip(int q) const {
        std::vector<Triangle> out;
        for (int p = -n_; p <= n_ - 1; ++p) {
            if (has_up(p, q)) out.push_back({p, q, true});
            if (has_down(p, q)) out.push_back({p, q, false});
        }
        return out;
    }

private:
    int n_;
};

struct ParticleSystem {
    int order = 0;
    std::vector<std::vector<int>> rows;  // rows 0..order, row r sorted, r+1 entries
    friend bool operator==(const ParticleSystem&, const ParticleSystem&) = default;
};

struct HalfHexMatching {
    int order = 0;
    // vertical (particle-carrying) edges only; the full matching is
    // the unique completion.  Row r = 0..order-1 lists tableau
    // positions g; the geometric edge is N(g-order-1, order-1-r).
    std::vector<std::vector<int>> vertical_rows;
    friend bool operator==(const HalfHexMatching&, const HalfHexMatching&) = default;
};

struct LozengeTiling {
    int order = 0;
    std::vector<Lozenge> tiles;  // kept sorted for canonical form
    friend bool operator==(const LozengeTiling&, const LozengeTiling&) = default;
};

struct LatticePathFamily {
    int order = 0;
    // steps[i] is the path from (0,-2(i+1)) to (i+1,-(i+1)) over
    // {R,U}; i+1 of each step kind.
    std::vector<std::string> steps;
    friend bool operator==(const LatticePathFamily&, const LatticePathFamily&) = default;
};

}
