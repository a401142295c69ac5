#pragma once

#include <algorithm>

#include "satopo/rat.hpp"

namespace satopo {

/// Closed interval [lo, hi] with rational endpoints. Arithmetic is exact
/// (no outward rounding is needed over Q), so every enclosure is rigorous.
struct Interval {
    Rat lo;
    Rat hi;

    Interval() = default;
    Interval(const Rat& v) : lo(v), hi(v) {}  // NOLINT(google-explicit-constructor)
    Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}

    Rat width() const { return hi - lo; }
    Rat mid() const { return midpoint(lo, hi); }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    /// +1 / -1 when the interval lies strictly on one side of 0, else 0.
    int certain_sign() const {
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        return 0;
    }
    Rat mag() const { return std::max(abs_rat(lo), abs_rat(hi)); }
};

inline Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
inline Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }
inline Interval operator*(const Interval& a, const Interval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}
inline Interval operator*(const Rat& s, const Interval& a) {
    return sgn(s) >= 0 ? Interval{s * a.lo, s * a.hi} : Interval{s * a.hi, s * a.lo};
}

inline Interval pow_iv(const Interval& a, unsigned e) {
    if (e == 0) return Interval(Rat(1));
    if (e % 2 == 1) return {pow_rat(a.lo, e), pow_rat(a.hi, e)};
    Rat l = pow_rat(a.lo, e), h = pow_rat(a.hi, e);
    if (a.contains_zero()) return {Rat(0), std::max(l, h)};
    return {std::min(l, h), std::max(l, h)};
}

inline bool disjoint(const Interval& a, const Interval& b) { return a.hi < b.lo || b.hi < a.lo; }

}  // namespace satopo
