#pragma once

#include <vector>

#include "satopo/algctx.hpp"
#include "satopo/bpoly.hpp"

namespace satopo {

/// A real point (e, eta) of the plane with algebraic coordinates: e is held
/// by an AlgCtx and eta is the unique root of a square-free fiber
/// polynomial over Q(e) inside a rational y-interval.
class AlgPoint2 {
public:
    AlgPoint2(AlgCtx ctx, AlgCtx::YPoly fiber, Interval y);

    Interval xbox() const { return ctx_.number().interval(); }
    Interval ybox() const { return y_; }
    const AlgNumber& x() const { return ctx_.number(); }
    bool x_rational() const { return ctx_.number().is_rational(); }
    bool y_rational() const { return y_.lo == y_.hi; }

    /// Shrink both boxes to width <= w.
    void refine(const Rat& w);
    /// Halve the wider side of the box once.
    void bisect();
    /// Exact sign of q at the point.
    int sign_of(const BPoly& q);
    /// Enclosure of q over the current box.
    Interval enclose(const BPoly& q) const { return q.eval(xbox(), ybox()); }
    /// q(point) as an algebraic number.
    AlgNumber value_of(const BPoly& q);

    double approx_x() const;
    double approx_y() const;

    AlgCtx& ctx() { return ctx_; }
    const AlgCtx::YPoly& fiber() const { return fib_; }

private:
    AlgCtx ctx_;
    AlgCtx::YPoly fib_;
    Interval y_;
};

/// All real common zeros of p and q, sorted by x then y. Throws
/// HypothesisViolation when the common zero set is not finite.
std::vector<AlgPoint2> solve_system(const BPoly& p, const BPoly& q);

/// Real zeros of p on the vertical line x = e, as points.
std::vector<AlgPoint2> fiber_points(const AlgNumber& e, const BPoly& p);

/// Squared distance enclosure between a box and a rational point.
Interval dist2(const Interval& bx, const Interval& by, const Rat& cx, const Rat& cy);

}  // namespace satopo
