#include "satopo/solve2.hpp"

#include <algorithm>

#include "satopo/resultant.hpp"

namespace satopo {

AlgPoint2::AlgPoint2(AlgCtx ctx, AlgCtx::YPoly fiber, Interval y) : ctx_(std::move(ctx)), fib_(std::move(fiber)), y_(std::move(y)) {}

void AlgPoint2::refine(const Rat& w) {
    ctx_.refine(w);
    ctx_.refine_root(fib_, y_, w);
}

void AlgPoint2::bisect() {
    bool x_open = !x_rational();
    bool y_open = !y_rational();
    if (x_open && (!y_open || xbox().width() >= y_.width())) ctx_.bisect();
    else if (y_open) ctx_.refine_root(fib_, y_, y_.width() / 2);
}

int AlgPoint2::sign_of(const BPoly& q) {
    if (x_rational() && y_rational()) return sgn(q.eval(x().value(), y_.lo));
    if (y_rational()) {
        UPoly u = q.specialize(Var::Y, y_.lo);
        u.set_var('x');
        return ctx_.sign(u);
    }
    AlgCtx::YPoly qf = ctx_.fiber(q);
    if (ctx_.root_annuls(fib_, y_, qf)) return 0;
    while (true) {
        int s = enclose(q).certain_sign();
        if (s != 0) return s;
        if (x_rational() && y_rational()) return sgn(q.eval(x().value(), y_.lo));
        bisect();
    }
}

AlgNumber AlgPoint2::value_of(const BPoly& q) {
    if (x_rational() && y_rational()) return AlgNumber(q.eval(x().value(), y_.lo));
    UPoly v;
    if (y_rational()) {
        // q(x, r) - t eliminated against the modulus.
        BPoly n = BPoly::from_upoly(q.specialize(Var::Y, y_.lo), Var::X) - BPoly::y();
        v = resultant(BPoly::from_upoly(ctx_.modulus(), Var::X), n, Var::X);
    } else {
        BPoly g = AlgCtx::to_bpoly(fib_);
        BPoly n = resultant_level(g, q, Var::Y);
        v = resultant(BPoly::from_upoly(ctx_.modulus(), Var::X), n, Var::X);
    }
    if (v.is_zero()) throw Error("value_of: eliminant vanished");
    v.set_var('x');
    auto roots = real_roots(v);
    while (true) {
        Interval box = enclose(q);
        std::vector<size_t> hit;
        for (size_t i = 0; i < roots.size(); ++i)
            if (!disjoint(roots[i].interval(), box)) hit.push_back(i);
        if (hit.empty()) throw Error("value_of: lost the value");
        if (hit.size() == 1) return roots[hit[0]];
        for (size_t i : hit) roots[i].bisect();
        bisect();
    }
}

double AlgPoint2::approx_x() const { return x().approx(); }

double AlgPoint2::approx_y() const {
    AlgPoint2 c = *this;
    c.ctx_.refine_root(c.fib_, c.y_, Rat(1, 1L << 30));
    return to_double(c.y_.mid());
}

Interval dist2(const Interval& bx, const Interval& by, const Rat& cx, const Rat& cy) {
    Interval dx = bx - Interval(cx), dy = by - Interval(cy);
    return pow_iv(dx, 2) + pow_iv(dy, 2);
}

std::vector<AlgPoint2> fiber_points(const AlgNumber& e, const BPoly& p) {
    AlgCtx ctx(e);
    AlgCtx::YPoly f = ctx.fiber(p);
    if (f.empty()) throw HypothesisViolation("curve contains a vertical line");
    AlgCtx::YPoly s = ctx.squarefree(f);
    std::vector<AlgPoint2> out;
    for (const auto& iv : ctx.isolate(s)) out.emplace_back(ctx, s, iv);
    return out;
}

std::vector<AlgPoint2> solve_system(const BPoly& p, const BPoly& q) {
    if (p.is_zero() && q.is_zero()) throw HypothesisViolation("solve_system: both equations vanish");
    if ((!p.is_zero() && p.is_constant()) || (!q.is_zero() && q.is_constant())) return {};
    if (p.is_zero() || q.is_zero()) throw HypothesisViolation("solve_system: zero set is a curve");
    std::vector<AlgPoint2> out;
    UPoly r;
    if (p.degree(Var::Y) == 0 && q.degree(Var::Y) == 0) {
        r = gcd(p.specialize(Var::Y, 0), q.specialize(Var::Y, 0));
        if (r.degree() <= 0) return out;
        throw HypothesisViolation("solve_system: common vertical lines");
    }
    r = resultant(p, q, Var::Y);
    if (r.is_zero()) throw HypothesisViolation("solve_system: equations share a common factor");
    r.set_var('x');
    for (const auto& e : real_roots(r)) {
        AlgCtx ctx(e);
        AlgCtx::YPoly pf = ctx.fiber(p), qf = ctx.fiber(q);
        AlgCtx::YPoly g = ctx.gcd(pf, qf);
        if (g.empty()) throw HypothesisViolation("solve_system: common zero set contains a vertical line");
        if (ctx.degree(g) <= 0) continue;
        g = ctx.squarefree(g);
        for (const auto& iv : ctx.isolate(g)) out.emplace_back(ctx, g, iv);
    }
    return out;
}

}  // namespace satopo
