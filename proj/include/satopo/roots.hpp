#pragma once

#include <string>
#include <vector>

#include "satopo/interval.hpp"
#include "satopo/upoly.hpp"

namespace satopo {

using IsolInterval = Interval;

/// Sturm chain p, p', -rem(...), ... with positive rescaling.
std::vector<UPoly> sturm_sequence(const UPoly& p);
int sign_variations(const std::vector<UPoly>& seq, const Rat& x);
/// Variations at +inf (dir = 1) or -inf (dir = -1).
int sign_variations_inf(const std::vector<UPoly>& seq, int dir);

/// Number of distinct real roots of p in the open interval (lo, hi).
/// Throws EndpointRoot when p vanishes at an endpoint.
int sturm_count(const UPoly& p, const IsolInterval& iv);
int sturm_count(const std::vector<UPoly>& seq, const IsolInterval& iv);
/// Number of distinct real roots of p.
int real_root_count(const UPoly& p);

/// 1 + max |a_i / a_n|; 0 for nonzero constants.
Rat cauchy_root_bound(const UPoly& p);

/// Disjoint isolating intervals, sorted, one per distinct real root.
/// Exact rational roots found on the way come back as [r, r]. Intervals
/// are refined until their width is at most `max_width` when given.
std::vector<IsolInterval> isolate_roots(const UPoly& p, const Rat& max_width = 0);

/// A real algebraic number: the unique root of a square-free polynomial
/// inside an interval. Open intervals (lo < hi) have the defining
/// polynomial nonzero at both ends with opposite signs.
class AlgNumber {
public:
    AlgNumber() = default;
    AlgNumber(const Rat& r);  // NOLINT(google-explicit-constructor)
    AlgNumber(UPoly defining, IsolInterval iv);

    const UPoly& defining() const { return p_; }
    const IsolInterval& interval() const { return iv_; }
    bool is_rational() const { return iv_.lo == iv_.hi; }
    /// Only meaningful when is_rational().
    const Rat& value() const { return iv_.lo; }

    /// Shrink the interval to width <= w. Collapses onto an exact rational
    /// root when bisection hits it.
    void refine(const Rat& w);
    AlgNumber refined(const Rat& w) const;
    /// Halve the interval once.
    void bisect();

    /// Exact sign of q at this number.
    int sign_of(const UPoly& q) const;
    /// Exact comparison.
    int compare(const AlgNumber& o) const;
    int compare(const Rat& r) const;
    /// A rational strictly between this and a larger number o.
    Rat rational_between(const AlgNumber& o) const;

    double approx() const;
    std::string str() const;

private:
    UPoly p_;
    IsolInterval iv_;
};

bool operator<(const AlgNumber& a, const AlgNumber& b);
bool operator==(const AlgNumber& a, const AlgNumber& b);

/// All distinct real roots of p as algebraic numbers, sorted.
std::vector<AlgNumber> real_roots(const UPoly& p);

/// Sorted, duplicate-free union of the roots of several polynomials.
std::vector<AlgNumber> merge_roots(std::vector<AlgNumber> roots);

/// A rational inside each gap and outside the extremes: for sorted distinct
/// roots r_0 < ... < r_{k-1} returns k + 1 rationals s_0 < r_0 < s_1 < ...
std::vector<Rat> separating_samples(const std::vector<AlgNumber>& sorted);

/// Exact sign of q on the unique root of `p` in `iv` (p square-free).
int sign_at_root(const UPoly& q, const UPoly& p, IsolInterval iv);

}  // namespace satopo
