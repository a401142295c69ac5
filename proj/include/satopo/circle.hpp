#pragma once

#include <functional>
#include <string>
#include <vector>

#include "satopo/bpoly.hpp"
#include "satopo/roots.hpp"

namespace satopo {

/// S_R(a) with rational center and radius, parametrized by
/// s -> (a1 + R(1-s^2)/(1+s^2), a2 + 2Rs/(1+s^2)). s runs counterclockwise
/// from just after the antipode (a1 - R, a2), which is s = infinity.
struct Circle {
    Rat cx, cy, r;
};

struct CirclePoint {
    bool antipode = false;
    AlgNumber s;  // unused for the antipode

    /// Angle in (-pi, pi], for display and numeric oracles only.
    double angle() const;
};

/// (1+s^2)^deg(g) * g on the circle; same sign as g at every finite s.
UPoly circle_numerator(const BPoly& g, const Circle& c);

/// Exact sign of g at a circle point.
int sign_on_circle(const BPoly& g, const Circle& c, const CirclePoint& p);

/// Points of {g = 0} on the circle in counterclockwise order. Throws
/// DegenerateInput when g vanishes identically on it.
std::vector<CirclePoint> curve_circle_intersections(const BPoly& g, const Circle& c);

/// Cells of the circle cut out by a family of curves: the event points in
/// counterclockwise order and the open arcs between them, with the sign of
/// every family member on each cell. arc_signs[i] is the arc following
/// points[i]. With no events there is one arc: the whole circle.
struct CircleCells {
    Circle circle;
    std::vector<CirclePoint> points;
    std::vector<std::vector<int>> point_signs;
    std::vector<std::vector<int>> arc_signs;
    /// A rational parameter inside each arc (the whole circle for arc 0 when
    /// there are no points).
    std::vector<Rat> arc_samples;
};

CircleCells decompose_circle(const std::vector<BPoly>& family, const Circle& c);

using SignPredicate = std::function<bool(const std::vector<int>&)>;

/// Euler characteristic of the part of the circle where the predicate holds.
int circle_chi(const CircleCells& cells, const SignPredicate& in_set);

/// Degree of (P, Q)/|(P, Q)| on the circle.
int winding_number(const BPoly& p, const BPoly& q, const Circle& c);

/// Sorted critical values of f restricted to c, given hc whose zeros on c
/// are the critical points. Empty when hc vanishes on c.
std::vector<AlgNumber> circle_critical_values(const BPoly& f, const BPoly& hc, const Circle& c);

/// Winding number of the gradient on a circle enclosing all its zeros.
int degree_at_infinity(const BPoly& f);

}  // namespace satopo
