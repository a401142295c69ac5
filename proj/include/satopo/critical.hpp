#pragma once

#include <optional>
#include <vector>

#include "satopo/circle.hpp"
#include "satopo/solve2.hpp"

namespace satopo {

struct CriticalPoint {
    AlgPoint2 point;
    int local_degree = 0;
    AlgNumber value;
    int ind_f = 0;
    int ind_neg_f = 0;
    /// Circle around the point containing no other zero of the gradient.
    Circle isolating_circle;
};

/// f_x = common * px and f_y = common * py, common being the gcd of the
/// partials. Throws HypothesisViolation when the real zeros of `common`
/// form a curve, i.e. the critical set is infinite.
struct GradientSplit {
    BPoly common, px, py;
};
GradientSplit split_gradient(const BPoly& f);

/// B with |x| + |y| < B at every critical point.
Rat critical_bound(const BPoly& f);

/// Every real zero of the gradient with its local degree and critical
/// value. Throws HypothesisViolation for an infinite critical set.
std::vector<CriticalPoint> find_critical_points(const BPoly& f);

/// Winding number of (P, Q) around pts[i]: boxes are refined until a
/// rational circle around pts[i] leaves every other point outside.
int local_degree(const BPoly& p, const BPoly& q, std::vector<AlgPoint2>& pts, size_t i, Circle* used = nullptr);

/// Sorted distinct critical values.
std::vector<AlgNumber> critical_values(const std::vector<CriticalPoint>& pts);
std::vector<AlgNumber> critical_values(const BPoly& f);

int index(const BPoly& f, const CriticalPoint& p);

/// Local level-set data at a critical point measured on a small circle C
/// around it, at rational levels just below and just above the value.
struct LocalFiber {
    Circle circle;
    Rat below, above;           // rational levels v - delta, v + delta
    int points_below = 0;       // #{f = below} on C
    int points_above = 0;       // #{f = above} on C
    int chi_le = 0;             // chi({f <= v} on C)
    int chi_ge = 0;             // chi({f >= v} on C)
    int chi_eq = 0;             // #{f = v} on C
};

/// Arc-count data around a critical point, independent of the winding
/// number. Shrinks the circle until the level through the point is
/// transverse to it.
LocalFiber local_fiber(const BPoly& f, CriticalPoint& p, std::vector<CriticalPoint>& all);

}  // namespace satopo
