#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace halfhex {

// Dense integer polynomials in one variable q, coefficient of q^d at
// index d.  Just enough arithmetic for the q-enumeration identities;
// coefficients stay far below 2^63 at every enumerable order.

struct Poly {
    std::vector<long long> c;

    static Poly zero() { return {}; }
    static Poly one() { return {{1}}; }
    static Poly monomial(int d, long long coeff = 1) {
        Poly p;
        p.c.assign(d + 1, 0);
        p.c[d] = coeff;
        return p;
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }

    // Lowest nonzero degree; -1 for the zero polynomial.
    int valuation() const {
        for (std::size_t d = 0; d < c.size(); ++d)
            if (c[d] != 0) return static_cast<int>(d);
        return -1;
    }

    long long at(int d) const {
        return (d >= 0 && d < static_cast<int>(c.size())) ? c[d] : 0;
    }

    void add_term(int d, long long coeff) {
        if (static_cast<int>(c.size()) <= d) c.resize(d + 1, 0);
        c[d] += coeff;
    }

    long long eval_int(long long q) const {
        long long v = 0;
        for (std::size_t d = c.size(); d-- > 0;) v = v * q + c[d];
        return v;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), 0);
        for (std::size_t d = 0; d < b.c.size(); ++d) r.c[d] += b.c[d];
        r.trim();
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        Poly r;
        r.c.assign(a.c.size() + b.c.size() - 1, 0);
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] += a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }

    // Exact division by q^d; every term must have degree >= d.
    Poly shifted_down(int d) const {
        Poly r;
        if (c.empty()) return r;
        assert(valuation() >= d);
        r.c.assign(c.begin() + d, c.end());
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        Poly x = a, y = b;
        x.trim();
        y.trim();
        return x.c == y.c;
    }
};

}
