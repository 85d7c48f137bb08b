#pragma once

#include <cassert>
#include <cstdint>
#include <string>

namespace halfhex {

// Exact nonnegative dyadic rationals num/2^k.  Transition
// probabilities are 2^(-#free) and all verifier arithmetic stays
// dyadic, so this tiny type replaces a general rational: num is kept
// odd (or zero with k = 0), and every operation asserts against
// overflow, which is unreachable at enumerable orders.

struct Dyadic {
    std::uint64_t num = 0;
    int k = 0;

    constexpr Dyadic() = default;
    constexpr Dyadic(std::uint64_t n, int exp) : num(n), k(exp) { normalize(); }

    static constexpr Dyadic zero() { return {}; }
    static constexpr Dyadic one() { return {1, 0}; }
    static constexpr Dyadic half_pow(int f) { return {1, f}; }

    constexpr void normalize() {
        if (num == 0) {
            k = 0;
            return;
        }
        while ((num & 1u) == 0 && k > 0) {
            num >>= 1;
            --k;
        }
    }

    constexpr bool is_zero() const { return num == 0; }

    friend constexpr Dyadic operator+(Dyadic a, Dyadic b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const int k = a.k > b.k ? a.k : b.k;
        assert(k - a.k < 63 && k - b.k < 63);
        const std::uint64_t n = (a.num << (k - a.k)) + (b.num << (k - b.k));
        return {n, k};
    }

    friend constexpr Dyadic operator*(Dyadic a, Dyadic b) {
        if (a.is_zero() || b.is_zero()) return zero();
        assert(b.num == 0 || a.num <= UINT64_MAX / b.num);
        return {a.num * b.num, a.k + b.k};
    }

    // Multiply by 2^(-e).
    constexpr Dyadic scaled_down(int e) const {
        if (is_zero()) return zero();
        return {num, k + e};
    }

    friend constexpr bool operator==(Dyadic a, Dyadic b) {
        return a.num == b.num && a.k == b.k;
    }

    double to_double() const {
        double v = static_cast<double>(num);
        for (int i = 0; i < k; ++i) v /= 2;
        return v;
    }

    std::string to_string() const {
        if (num == 0) return "0";
        if (k == 0) return std::to_string(num);
        return std::to_string(num) + "/2^" + std::to_string(k);
    }
};

}
