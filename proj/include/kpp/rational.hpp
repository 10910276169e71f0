// Copyright 2026 the kpp authors
// License: Apache License 2.0
#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "kpp/errors.hpp"

namespace kpp {

// Exact rational arithmetic for edge guarantees and branch thresholds.
// Everything the solver compares is tiny (numerators bounded by a few
// thousand), so int64 components with int128 intermediates are plenty.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw internal_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num * b.num, a.den * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw internal_error("rational division by zero");
        return Rat(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }

    double to_double() const { return (double)num / (double)den; }
    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// r = (9 - sqrt(11))/7, the smaller root of 7x^2 - 18x + 10 = 0.
// For rational t:  t >= r  <=>  sqrt(11) >= 9 - 7t  <=>  7t >= 9  or
// (9 - 7t)^2 <= 11  <=>  7t^2 - 18t + 10 <= 0.  Equality t == r is
// impossible (r is irrational), so these tests are also strict.
inline bool geq_r(const Rat& t) {
    __int128 p = t.num, q = t.den;  // q > 0
    if (7 * p >= 9 * q) return true;
    // sign of 7p^2 - 18pq + 10q^2
    __int128 poly = 7 * p * p - 18 * p * q + 10 * q * q;
    return poly <= 0;
}

inline bool lt_r(const Rat& t) { return !geq_r(t); }

// An edge-count guarantee of the form c0 + cr * r, compared exactly.
struct Guarantee {
    Rat c0;
    Rat cr;

    static Guarantee exact(Rat v) { return Guarantee{v, Rat(0)}; }

    bool satisfied_by(long long achieved) const {
        Rat a(achieved);
        if (cr.num == 0) return a >= c0;
        Rat t = (a - c0) / cr;
        if (cr.num > 0) return geq_r(t);   // need (a-c0)/cr >= r
        return lt_r(t);                    // need (a-c0)/cr <= r; equality impossible
    }

    double to_double() const {
        return c0.to_double() + cr.to_double() * 0.8119107442349651;
    }
    std::string str() const {
        if (cr.num == 0) return c0.str();
        return c0.str() + " + (" + cr.str() + ")r";
    }
};

}  // namespace kpp
