#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <halfhex/bijections.hpp>
#include <halfhex/height.hpp>
#include <halfhex/models.hpp>
#include <halfhex/tableau.hpp>

namespace halfhex {

// SVG 1.1 renderers for the five model views and half-diamond domino
// pictures.  Every coordinate is formatted with fixed precision, so a
// given input always renders to the same bytes.

namespace detail {

inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

constexpr double kRoot3Half = 0.86602540378443864676372317075293618;

// Triangular-lattice vertex (p,q) in the plane: p*v + q*w with
// v = (1,0), w = (1/2, sqrt(3)/2).
inline std::pair<double, double> tri_xy(double p, double q) {
    return {p + q / 2.0, q * kRoot3Half};
}

class SvgBuilder {
public:
    // World rectangle [minx,maxx] x [miny,maxy], y pointing up.
    SvgBuilder(double minx, double miny, double maxx, double maxy, double scale)
        : minx_(minx), maxy_(maxy), scale_(scale),
          width_((maxx - minx) * scale + 2 * margin_),
          height_((maxy - miny) * scale + 2 * margin_) {}

    double sx(double x) const { return (x - minx_) * scale_ + margin_; }
    double sy(double y) const { return (maxy_ - y) * scale_ + margin_; }

    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double width) {
        body_ += "<line x1=\"" + fmt(sx(x1)) + "\" y1=\"" + fmt(sy(y1)) + "\" x2=\"" +
                 fmt(sx(x2)) + "\" y2=\"" + fmt(sy(y2)) + "\" stroke=\"" + stroke +
                 "\" stroke-width=\"" + fmt(width * scale_) + "\"/>\n";
    }

    void polygon(const std::vector<std::pair<double, double>>& pts, const std::string& fill,
                 const std::string& stroke, double width) {
        body_ += "<polygon points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) body_ += " ";
            body_ += fmt(sx(pts[i].first)) + "," + fmt(sy(pts[i].second));
        }
        body_ += "\" fill=\"" + fill + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
                 fmt(width * scale_) + "\"/>\n";
    }

    void polyline(const std::vector<std::pair<double, double>>& pts,
                  const std::string& stroke, double width) {
        body_ += "<polyline points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) body_ += " ";
            body_ += fmt(sx(pts[i].first)) + "," + fmt(sy(pts[i].second));
        }
        body_ += "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" +
                 fmt(width * scale_) + "\" stroke-linejoin=\"round\"/>\n";
    }

    void circle(double cx, double cy, double r, const std::string& fill) {
        body_ += "<circle cx=\"" + fmt(sx(cx)) + "\" cy=\"" + fmt(sy(cy)) + "\" r=\"" +
                 fmt(r * scale_) + "\" fill=\"" + fill + "\"/>\n";
    }

    void text(double cx, double cy, const std::string& s, double size) {
        body_ += "<text x=\"" + fmt(sx(cx)) + "\" y=\"" + fmt(sy(cy)) +
                 "\" font-size=\"" + fmt(size * scale_) +
                 "\" font-family=\"monospace\" text-anchor=\"middle\" "
                 "dominant-baseline=\"central\">" + s + "</text>\n";
    }

    std::string str() const {
        return "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
               fmt(width_) + "\" height=\"" + fmt(height_) + "\" viewBox=\"0 0 " +
               fmt(width_) + " " + fmt(height_) + "\">\n" + body_ + "</svg>\n";
    }

private:
    double minx_, maxy_, scale_;
    double margin_ = 10.0;
    double width_, height_;
    std::string body_;
};

inline std::vector<std::pair<double, double>> lozenge_corners(const Lozenge& l) {
    std::vector<std::pair<int, int>> c;
    if (l.kind == 'N')
        c = {{l.p + 1, l.q - 1}, {l.p, l.q}, {l.p, l.q + 1}, {l.p + 1, l.q}};
    else if (l.kind == 'E')
        c = {{l.p, l.q}, {l.p + 1, l.q}, {l.p + 1, l.q + 1}, {l.p, l.q + 1}};
    else
        c = {{l.p, l.q}, {l.p + 1, l.q}, {l.p, l.q + 1}, {l.p - 1, l.q + 1}};
    std::vector<std::pair<double, double>> out;
    for (auto [cp, cq] : c) out.push_back(tri_xy(cp, cq));
    return out;
}

// Outline of the order-n trapezoid with its bottom notches, counter-
// clockwise from the lower-left corner (-n, 0).
inline std::vector<std::pair<double, double>> trapezoid_outline(int n) {
    std::vector<std::pair<double, double>> pts;
    pts.push_back(tri_xy(-n, 0));
    for (int k = 0; k < n; ++k) {
        const int c = 2 * k - n + 1;  // notch centre
        pts.push_back(tri_xy(c - 1, 0));
        pts.push_back(tri_xy(c, -1));
        pts.push_back(tri_xy(c + 1, 0));
    }
    pts.push_back(tri_xy(n, 0));
    pts.push_back(tri_xy(0, n));
    pts.push_back(tri_xy(-n, n));
    return pts;
}

inline SvgBuilder trapezoid_canvas(int n, double scale) {
    return SvgBuilder(-n - 1, -1.5, n + 1, n * kRoot3Half + 1, scale);
}

}  // namespace detail

// The staircase of numbered cells, row r at depth r.
inline std::string render_boxes(const StaircaseTableau& t, double scale = 40.0) {
    const int n = t.order();
    detail::SvgBuilder b(-0.5, -0.5, n + 1.5, n + 1.5, scale);
    for (int r = 0; r <= n; ++r)
        for (int c = 0; c <= r; ++c) {
            b.polygon({{c, n - r}, {c + 1.0, n - r}, {c + 1.0, n - r + 1.0}, {c, n - r + 1.0}},
                      "white", "#333333", 0.03);
            b.text(c + 0.5, n - r + 0.5, std::to_string(t.at(r, c)), 0.4);
        }
    return b.str();
}

// Dots at the particle-carrying vertical lozenges of the trapezoid.
inline std::string render_particles(const StaircaseTableau& t, double scale = 40.0) {
    const int n = t.order();
    detail::SvgBuilder b = detail::trapezoid_canvas(n, scale);
    b.polyline(detail::trapezoid_outline(n), "#999999", 0.04);
    for (int r = 0; r <= n; ++r)
        for (int c = 0; c <= r; ++c) {
            const int p = t.at(r, c) - n - 1, q = n - 1 - r;
            const auto [x, y] = detail::tri_xy(p + 0.5, q);
            b.circle(x, y, 0.18, "#1f3552");
        }
    return b.str();
}

// The dimer picture: one segment per lozenge between the centres of
// its two triangles.
inline std::string render_matching(const StaircaseTableau& t, double scale = 40.0) {
    const int n = t.order();
    const LozengeTiling tiles =
        matching_to_lozenges(particles_to_matching(st_to_particles(t)));
    detail::SvgBuilder b = detail::trapezoid_canvas(n, scale);
    b.polyline(detail::trapezoid_outline(n), "#cccccc", 0.03);
    for (const Lozenge& l : tiles.tiles) {
        const Triangle u = l.up_triangle(), d = l.down_triangle();
        const auto [ux, uy] = detail::tri_xy(u.p + 1 / 3.0, u.q + 1 / 3.0);
        const auto [dx, dy] = detail::tri_xy(d.p + 2 / 3.0, d.q + 2 / 3.0);
        b.line(ux, uy, dx, dy, l.kind == 'N' ? "#1f3552" : "#888888", 0.1);
        b.circle(ux, uy, 0.08, "#333333");
        b.circle(dx, dy, 0.08, "#333333");
    }
    return b.str();
}

inline std::string render_lozenges(const StaircaseTableau& t, double scale = 40.0) {
    const int n = t.order();
    const LozengeTiling tiles =
        matching_to_lozenges(particles_to_matching(st_to_particles(t)));
    detail::SvgBuilder b = detail::trapezoid_canvas(n, scale);
    for (const Lozenge& l : tiles.tiles) {
        const char* fill = l.kind == 'N' ? "#7da7d9" : l.kind == 'E' ? "#f2e8cf" : "#c9bf9d";
        b.polygon(detail::lozenge_corners(l), fill, "#333333", 0.03);
    }
    return b.str();
}

// Non-intersecting paths on the square lattice, path i running from
// (0, -2(i+1)) to (i+1, -(i+1)).
inline std::string render_paths(const StaircaseTableau& t, double scale = 40.0) {
    const int n = t.order();
    const LatticePathFamily f =
        lozenges_to_paths(matching_to_lozenges(particles_to_matching(st_to_particles(t))));
    detail::SvgBuilder b(-0.5, -2.0 * (n + 1) - 0.5, n + 1.5, 0.5, scale);
    for (int i = 1; i <= n; ++i) {
        std::vector<std::pair<double, double>> pts;
        int x = 0, y = -2 * i;
        pts.push_back({x, y});
        for (char ch : f.steps[i - 1]) {
            if (ch == 'R') ++x;
            else ++y;
            pts.push_back({x, y});
        }
        b.polyline(pts, "#1f3552", 0.08);
        b.circle(pts.front().first, pts.front().second, 0.14, "#1f3552");
        b.circle(pts.back().first, pts.back().second, 0.14, "#1f3552");
    }
    return b.str();
}

// A domino tiling over its planar region, dominoes coloured by
// orientation.
inline std::string render_half_diamond(const PlanarRegion& region,
                                       const std::vector<Domino>& tiling,
                                       double scale = 40.0) {
    if (region.squares.empty()) throw std::invalid_argument("empty region");
    int minx = 0, maxx = 0, miny = 0, maxy = 0;
    bool first = true;
    for (const auto& [x, y] : region.squares) {
        if (first || x < minx) minx = x;
        if (first || x > maxx) maxx = x;
        if (first || y < miny) miny = y;
        if (first || y > maxy) maxy = y;
        first = false;
    }
    detail::SvgBuilder b(minx - 0.5, miny - 0.5, maxx + 1.5, maxy + 1.5, scale);
    for (const auto& [x, y] : region.squares)
        b.polygon({{x, y}, {x + 1.0, y}, {x + 1.0, y + 1.0}, {x, y + 1.0}}, "none",
                  "#dddddd", 0.02);
    for (const Domino& d : tiling) {
        const double w = d.horizontal ? 2.0 : 1.0, h = d.horizontal ? 1.0 : 2.0;
        const double inset = 0.06;
        b.polygon({{d.x + inset, d.y + inset},
                   {d.x + w - inset, d.y + inset},
                   {d.x + w - inset, d.y + h - inset},
                   {d.x + inset, d.y + h - inset}},
                  d.horizontal ? "#7da7d9" : "#d9937d", "#333333", 0.03);
    }
    return b.str();
}

// Dispatch by view name; the five model views all derive from the
// canonical state.
inline std::string render_view(const StaircaseTableau& t, const std::string& view,
                               double scale = 40.0) {
    if (view == "boxes") return render_boxes(t, scale);
    if (view == "particles") return render_particles(t, scale);
    if (view == "matching") return render_matching(t, scale);
    if (view == "lozenges") return render_lozenges(t, scale);
    if (view == "paths") return render_paths(t, scale);
    throw std::invalid_argument("unknown view \"" + view + "\"");
}

}
