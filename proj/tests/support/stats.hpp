#pragma once

#include <cmath>

// Chi-square critical value via the regularized lower incomplete gamma
// function (series + Lentz continued fraction), solved by bisection.
// Test-only helper; accuracy far beyond what the significance check
// needs.

namespace testsupport {

inline double gamma_p(double a, double x) {
    if (x <= 0) return 0;
    const double lg = std::lgamma(a);
    if (x < a + 1) {
        double sum = 1.0 / a, term = sum, ap = a;
        for (int i = 0; i < 500; ++i) {
            ap += 1;
            term *= x / ap;
            sum += term;
            if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
        }
        return sum * std::exp(-x + a * std::log(x) - lg);
    }
    double b = x + 1 - a, c = 1e300, d = 1 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2;
        d = an * d + b;
        if (std::fabs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::fabs(c) < 1e-300) c = 1e-300;
        d = 1 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1) < 1e-16) break;
    }
    return 1 - std::exp(-x + a * std::log(x) - lg) * h;
}

inline double chi_square_cdf(double x, int df) { return gamma_p(df / 2.0, x / 2.0); }

inline double chi_square_critical(int df, double alpha) {
    double lo = 0, hi = 10.0 * df + 100;
    for (int i = 0; i < 200; ++i) {
        const double mid = (lo + hi) / 2;
        if (chi_square_cdf(mid, df) < 1 - alpha)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

}
