#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <halfhex/shuffle.hpp>

namespace halfhex {

// Explicit limit height function of the diamond, arctic boundaries,
// the affine chart onto the half-hexagon trapezoid, and empirical
// limit-shape extraction from samples.
//
// Conventions: the limit chart is the unit square, G: [0,1]^2 -> [0,1]
// continuous.  For y <= 1/2, G is x+y left of the arctic circle, x-y
// right of it, and x + Z(x,y) inside; the upper half follows from the
// reflection negation G(x,y) = 1 - G(x,1-y).  Z uses the principal
// arctan branches, with the first term continued through y = 1/2 as
// atan2, making Z continuous on the whole open disk and odd under
// x -> 1-x.

namespace detail {

inline double romik_Z_raw(double u, double v, double s) {
    constexpr double two_over_pi = 2.0 / 3.14159265358979323846264338327950288;
    return two_over_pi *
           (-u * std::atan2(s, v) - 0.5 * std::atan(2.0 * u * v / s) + v * std::atan(u / s));
}

}  // namespace detail

// Defined on the open disk (x-1/2)^2 + (y-1/2)^2 < 1/4.
inline double romik_Z(double x, double y) {
    const double u = x - 0.5;
    const double v = 0.5 - y;
    const double d = 0.25 - u * u - v * v;
    if (!(d > 0.0)) throw std::domain_error("romik_Z: point outside the arctic circle");
    return detail::romik_Z_raw(u, v, std::sqrt(d));
}

// Slope of the limit height function along x, closed form; vanishes
// on the arctic circle, where G meets the frozen branches smoothly.
inline double romik_Z_dx(double x, double y) {
    const double u = x - 0.5;
    const double v = 0.5 - y;
    const double d = 0.25 - u * u - v * v;
    if (!(d > 0.0)) throw std::domain_error("romik_Z_dx: point outside the arctic circle");
    return -(2.0 / 3.14159265358979323846264338327950288) * std::atan2(std::sqrt(d), v);
}

// Branch points of the limit height function at height y.
inline std::pair<double, double> arctic_boundary(double y) {
    if (y < 0.0 || y > 1.0) throw std::domain_error("arctic_boundary: y outside [0,1]");
    const double w = std::sqrt(y * (1.0 - y));
    return {0.5 - w, 0.5 + w};
}

inline double romik_G(double x, double y) {
    if (y > 0.5) return 1.0 - romik_G(x, 1.0 - y);
    const auto [xl, xr] = arctic_boundary(y);
    if (x <= xl) return x + y;
    if (x >= xr) return x - y;
    const double u = x - 0.5;
    const double v = 0.5 - y;
    const double d = 0.25 - u * u - v * v;
    // Rounding right at a breakpoint can push d to zero; the frozen
    // values are the continuous limits.
    if (!(d > 0.0)) return u < 0.0 ? x + y : x - y;
    return x + detail::romik_Z_raw(u, v, std::sqrt(d));
}

// The affine chart fixed by (0,0) -> (-1,0), (1,0) -> (1,0),
// (0,1/2) -> (-1/2, sqrt(3)/2): rectangle coordinates to the
// trapezoid plane.
inline std::pair<double, double> affine_to_trapezoid(double x, double y) {
    constexpr double root3 = 1.7320508075688772935274463415058724;
    return {2.0 * x + y - 1.0, root3 * y};
}

inline std::pair<double, double> affine_from_trapezoid(double xh, double yh) {
    constexpr double root3 = 1.7320508075688772935274463415058724;
    const double y = yh / root3;
    return {(xh + 1.0 - y) / 2.0, y};
}

// Monte Carlo particle frequencies: freq[r][p-1] is the fraction of
// samples whose row r contains an entry at position p, positions
// 1..2n+1.
struct DensityField {
    int order = 0;
    int samples = 0;
    std::vector<std::vector<double>> freq;
};

inline DensityField empirical_density(int n, int samples, std::uint64_t seed) {
    if (n < 1 || samples < 1) throw std::invalid_argument("empirical_density: need n, samples >= 1");
    std::vector<std::vector<int>> counts(n + 1, std::vector<int>(2 * n + 1, 0));
    for (int k = 0; k < samples; ++k) {
        const StaircaseTableau t = sample(n, seed, static_cast<std::uint64_t>(k));
        for (int r = 0; r <= n; ++r)
            for (int c = 0; c <= r; ++c) ++counts[r][t.at(r, c) - 1];
    }
    DensityField d;
    d.order = n;
    d.samples = samples;
    d.freq.resize(n + 1);
    for (int r = 0; r <= n; ++r) {
        d.freq[r].resize(2 * n + 1);
        for (int p = 0; p < 2 * n + 1; ++p)
            d.freq[r][p] = static_cast<double>(counts[r][p]) / samples;
    }
    return d;
}

// Position of tableau entry (r, g) in the unit trapezoid with corners
// (+-1, 0), (+-1/2, sqrt(3)/2).
inline std::pair<double, double> trapezoid_position(int n, int r, int g) {
    constexpr double half_root3 = 0.86602540378443864676372317075293618;
    return {(g - (n + r) / 2.0 - 1.0) / n, (n - 1.0 - r) * half_root3 / n};
}

// Outermost disordered positions of each row: density strictly
// between the frozen plateaus 0 and 1 by more than `threshold`.
// Rows that are entirely frozen emit nothing.
inline std::vector<std::pair<double, double>> frozen_boundary(const DensityField& d,
                                                              double threshold = 0.05) {
    if (!(threshold > 0.0 && threshold < 0.5))
        throw std::invalid_argument("frozen_boundary: threshold must be in (0, 1/2)");
    std::vector<std::pair<double, double>> points;
    for (int r = 0; r <= d.order; ++r) {
        int lo = -1, hi = -1;
        for (int p = 0; p < 2 * d.order + 1; ++p) {
            const double f = d.freq[r][p];
            if (f > threshold && f < 1.0 - threshold) {
                if (lo < 0) lo = p;
                hi = p;
            }
        }
        if (lo < 0) continue;
        points.push_back(trapezoid_position(d.order, r, lo + 1));
        points.push_back(trapezoid_position(d.order, r, hi + 1));
    }
    return points;
}

enum class CurveModel { quadratic, general_conic };

struct CurveFit {
    CurveModel model = CurveModel::quadratic;
    // quadratic: y = c0 + c1 x + c2 x^2.  general_conic: unit-norm
    // (A,B,C,D,E,F) with Ax^2 + Bxy + Cy^2 + Dx + Ey + F = 0.
    std::vector<double> coefficients;
    double sup_residual = 0.0;
    double rms_residual = 0.0;
    // b^2 - 4ac of the conic model; zero for the quadratic model.
    double discriminant = 0.0;
};

namespace detail {

inline std::vector<double> solve3(std::array<std::array<double, 4>, 3> m) {
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        if (std::abs(m[pivot][col]) < 1e-12) throw std::invalid_argument("degenerate point set");
        std::swap(m[col], m[pivot]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = m[r][col] / m[col][col];
            for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return {m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

// Smallest eigenpair of a symmetric matrix by cyclic Jacobi rotations.
template <std::size_t N>
std::array<double, N> smallest_eigenvector(std::array<std::array<double, N>, N> a) {
    std::array<std::array<double, N>, N> v{};
    for (std::size_t i = 0; i < N; ++i) v[i][i] = 1.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0, total = 0.0;
        for (std::size_t p = 0; p < N; ++p)
            for (std::size_t q = 0; q < N; ++q) {
                total += a[p][q] * a[p][q];
                if (q > p) off += a[p][q] * a[p][q];
            }
        if (off <= 1e-28 * total) break;
        for (std::size_t p = 0; p < N; ++p)
            for (std::size_t q = p + 1; q < N; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < N; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < N; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < N; ++k) {
                    const double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < N; ++i)
        if (a[i][i] < a[best][best]) best = i;
    std::array<double, N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = v[i][best];
    return out;
}

}  // namespace detail

inline CurveFit fit_curve(const std::vector<std::pair<double, double>>& points, CurveModel model) {
    if (points.size() < 10) throw std::invalid_argument("fit_curve: need at least 10 points");
    std::set<std::pair<double, double>> distinct(points.begin(), points.end());
    if (distinct.size() < 6) throw std::invalid_argument("degenerate point set");

    CurveFit fit;
    fit.model = model;
    std::vector<double> residuals;
    residuals.reserve(points.size());

    if (model == CurveModel::quadratic) {
        std::array<std::array<double, 4>, 3> m{};
        for (const auto& [x, y] : points) {
            const std::array<double, 3> row = {1.0, x, x * x};
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) m[i][j] += row[i] * row[j];
                m[i][3] += row[i] * y;
            }
        }
        fit.coefficients = detail::solve3(m);
        // Residuals are first-order point-to-curve distances so that both
        // models report comparable geometric lengths: vertical misfit
        // divided by the local arc-length factor of the graph.
        for (const auto& [x, y] : points) {
            const double misfit = y - (fit.coefficients[0] + fit.coefficients[1] * x +
                                       fit.coefficients[2] * x * x);
            const double slope = fit.coefficients[1] + 2.0 * fit.coefficients[2] * x;
            residuals.push_back(std::abs(misfit) / std::sqrt(1.0 + slope * slope));
        }
    } else {
        std::array<std::array<double, 6>, 6> scatter{};
        for (const auto& [x, y] : points) {
            const std::array<double, 6> mono = {x * x, x * y, y * y, x, y, 1.0};
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) scatter[i][j] += mono[i] * mono[j];
        }
        auto coef = detail::smallest_eigenvector<6>(scatter);
        double norm = 0.0;
        for (double c : coef) norm += c * c;
        norm = std::sqrt(norm);
        std::size_t lead = 0;
        for (std::size_t i = 1; i < 6; ++i)
            if (std::abs(coef[i]) > std::abs(coef[lead])) lead = i;
        const double sign = coef[lead] < 0.0 ? -1.0 : 1.0;
        fit.coefficients.assign(coef.begin(), coef.end());
        for (double& c : fit.coefficients) c *= sign / norm;
        const auto& q = fit.coefficients;
        fit.discriminant = q[1] * q[1] - 4.0 * q[0] * q[2];
        // Sampson distance: the algebraic value scaled by the gradient
        // magnitude, the first-order Euclidean distance to the conic.
        for (const auto& [x, y] : points) {
            const double value = q[0] * x * x + q[1] * x * y + q[2] * y * y + q[3] * x +
                                 q[4] * y + q[5];
            const double gx = 2.0 * q[0] * x + q[1] * y + q[3];
            const double gy = q[1] * x + 2.0 * q[2] * y + q[4];
            const double grad = std::sqrt(gx * gx + gy * gy);
            residuals.push_back(std::abs(value) / std::max(grad, 1e-12));
        }
    }

    double sum2 = 0.0;
    for (double r : residuals) {
        fit.sup_residual = std::max(fit.sup_residual, r);
        sum2 += r * r;
    }
    fit.rms_residual = std::sqrt(sum2 / residuals.size());
    return fit;
}

}  // namespace halfhex
