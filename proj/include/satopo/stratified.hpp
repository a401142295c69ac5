#pragma once

#include <optional>
#include <string>
#include <vector>

#include "satopo/critical.hpp"
#include "satopo/euler.hpp"

namespace satopo {

/// X = {g <= 0} (region: strata {g < 0} and {g = 0}) or X = {g = 0}
/// (curve). The curve {g = 0} must be smooth.
struct PlaneSet {
    enum class Kind { Region, Curve };
    BPoly g;
    Kind kind = Kind::Region;

    /// Checks the smoothness and non-emptiness hypotheses; throws
    /// HypothesisViolation otherwise.
    static PlaneSet region(const BPoly& g);
    static PlaneSet curve(const BPoly& g);

    /// Predicate for X intersected with {h sigma 0}, h being entry 1 of
    /// the sign vector of the family {g, h}.
    SignPredicate with(Flavor fl) const;
    SignPredicate predicate() const;
    bool compact() const;
};

struct StratCriticalPoint {
    enum class Stratum { Interior, Boundary };
    AlgPoint2 point;
    Stratum stratum = Stratum::Interior;
    int lambda_sign = 0;      // sign of <grad f, grad g>; 0 for interior points
    int index = 0;            // ind(f, X, p)
    int index_neg = 0;        // ind(-f, X, p)
    AlgNumber value;          // f(p)
};

/// Critical points of f on the strata of X with their indices. Throws
/// HypothesisViolation for an infinite critical set or lambda(p) = 0, and
/// DegenerateInput for a boundary point where f restricted to the curve is
/// not Morse.
std::vector<StratCriticalPoint> stratified_critical_points(const PlaneSet& X, const BPoly& f);

/// A unit vector with rational coordinates: ((1-t^2), 2t) / (1+t^2).
struct Direction {
    Rat x, y;
    static Direction from_t(const Rat& t);
    /// Nearest rational point on the circle to angle theta (radians).
    static Direction near_angle(double theta);
    /// v*(x, y) = v_x x + v_y y.
    BPoly linear() const;
    Direction opposite() const { return {-x, -y}; }
    double angle() const;
};

/// A direction of the finite superset of Gamma(X), as an angle enclosure
/// in radians inside [-pi, pi].
struct BadDirection {
    double lo = 0, hi = 0;
    std::string kind;   // "asymptotic" or "fold"
    double mid() const { return (lo + hi) / 2; }
};

/// Asymptotic normal directions of {g = 0} (perpendicular to the real
/// directions of the leading form) and normals at inflection points of
/// the curve, where v* restricted to it degenerates; both v and -v.
std::vector<BadDirection> bad_directions(const PlaneSet& X);

/// Exact membership test in the superset returned by bad_directions.
bool is_bad(const PlaneSet& X, const Direction& v);

/// Everything the two families of linear-function identities talk about.
struct LinearMorseSummary {
    std::vector<StratCriticalPoint> points;
    int sum_above = 0;       // sum over v*(p) > alpha of ind(v*)
    int sum_below_neg = 0;   // sum over v*(p) < alpha of ind(-v*)
    int sum_all = 0;         // sum of ind(v*)
    int sum_all_neg = 0;     // sum of ind(-v*)
    int chi_x = 0, chi_lk_x = 0;
    int chi_le = 0, chi_eq = 0, chi_ge = 0;
    int lk_le = 0, lk_eq = 0, lk_ge = 0;

    // the four sublevel identities and the three link identities
    bool ge_minus_eq() const { return chi_ge - chi_eq == sum_above; }
    bool le_minus_eq() const { return chi_le - chi_eq == sum_below_neg; }
    bool fiber() const { return chi_eq == chi_x - sum_above - sum_below_neg; }
    bool difference() const { return chi_ge - chi_le == sum_above - sum_below_neg; }
    bool link_le() const { return lk_le == chi_x - sum_all; }
    bool link_ge() const { return lk_ge == chi_x - sum_all_neg; }
    bool link_eq() const { return lk_eq == 2 * chi_x - chi_lk_x - sum_all - sum_all_neg; }
};

/// Throws DegenerateInput when v is a bad direction.
LinearMorseSummary linear_morse_summary(const PlaneSet& X, const Direction& v, const Rat& alpha);

/// chi(X) and chi of its link at infinity.
int chi_of(const PlaneSet& X);
int link_chi_of(const PlaneSet& X);

/// Per-direction data for the Gauss-Bonnet measure: the index sums for v
/// and -v and chi(Lk(X cap {v* = 0})).
struct DirectionSample {
    Direction v;
    int ind_sum = 0;
    int ind_sum_neg = 0;
    int lk_line = 0;
};
DirectionSample sample_direction(const PlaneSet& X, const Direction& v);

/// The measure averaged over directions, together with the right side
/// chi(X) - chi(Lk X)/2 - (average of chi(Lk(X cap {v* = 0})))/2 computed
/// from the same directions.
struct GaussBonnet {
    Rat value;               // average of sum ind(v*)
    Rat rhs;
    Rat error;               // bound on |value - exact|
    int chi_x = 0, chi_lk_x = 0;
    bool per_direction_ok = true;  // sum ind(v*) + ind(-v*) = 2chi - chi(Lk X) - chi(Lk line)
    bool arcs_consistent = true;   // two samples per arc agree (exact mode)
    std::vector<DirectionSample> samples;
};

/// Exact mode: one integrand value per arc between bad directions, arc
/// weights rounded to multiples of 2^-32 (the error term covers rounding
/// and the width of the angle enclosures).
GaussBonnet gauss_bonnet_exact(const PlaneSet& X);
/// Sampled mode: n axes at angles pi(j + 1/2)/n, each with v and -v.
GaussBonnet gauss_bonnet_sampled(const PlaneSet& X, int n);

}  // namespace satopo
