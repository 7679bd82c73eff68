// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The itelos developers

#pragma once

#include <cstdint>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>

namespace itelos {

/// Exact rational in lowest terms with positive denominator. Set metrics are
/// ratios of small cardinalities, so int64 never overflows here.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Ratio() = default;
    Ratio(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Ratio: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    static Ratio zero() { return {}; }
    static Ratio one() { return Ratio{1, 1}; }

    friend Ratio operator+(const Ratio& a, const Ratio& b) {
        return Ratio{a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend Ratio operator-(const Ratio& a, const Ratio& b) {
        return Ratio{a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend bool operator==(const Ratio& a, const Ratio& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Ratio& a, const Ratio& b) { return !(a == b); }
    friend bool operator<(const Ratio& a, const Ratio& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Ratio& a, const Ratio& b) { return a == b || a < b; }
    friend bool operator>=(const Ratio& a, const Ratio& b) { return b <= a; }
    friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    /// Decimal rendering for reports; the exact num/den stays available.
    std::string str() const {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "%.6f", value());
        return buf;
    }
};

}  // namespace itelos
