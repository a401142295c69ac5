#include "satopo/circle.hpp"

#include <cmath>

#include "satopo/resultant.hpp"

namespace satopo {

double CirclePoint::angle() const {
    if (antipode) return M_PI;
    return 2.0 * std::atan(s.approx());
}

UPoly circle_numerator(const BPoly& g, const Circle& c) {
    const int d = g.total_degree();
    if (d < 0) return UPoly({}, 's');
    UPoly X({c.cx + c.r, Rat(0), c.cx - c.r}, 's');
    UPoly Y({c.cy, 2 * c.r, c.cy}, 's');
    UPoly W({1, 0, 1}, 's');
    std::vector<UPoly> xp{UPoly(1)}, yp{UPoly(1)}, wp{UPoly(1)};
    for (int k = 1; k <= d; ++k) {
        xp.push_back(xp.back() * X);
        yp.push_back(yp.back() * Y);
        wp.push_back(wp.back() * W);
    }
    UPoly out({}, 's');
    for (const auto& [e, coef] : g.terms()) {
        UPoly t = xp[static_cast<size_t>(e.first)] * yp[static_cast<size_t>(e.second)];
        t *= wp[static_cast<size_t>(d - e.first - e.second)];
        out += coef * t;
    }
    out.set_var('s');
    return out;
}

int sign_on_circle(const BPoly& g, const Circle& c, const CirclePoint& p) {
    if (p.antipode) return sgn(g.eval(c.cx - c.r, c.cy));
    UPoly n = circle_numerator(g, c);
    n.set_var('x');
    return p.s.sign_of(n);
}

std::vector<CirclePoint> curve_circle_intersections(const BPoly& g, const Circle& c) {
    UPoly n = circle_numerator(g, c);
    if (n.is_zero()) throw DegenerateInput("curve vanishes identically on the circle");
    n.set_var('x');
    std::vector<CirclePoint> out;
    for (auto& r : real_roots(n)) out.push_back(CirclePoint{false, std::move(r)});
    if (sgn(g.eval(c.cx - c.r, c.cy)) == 0) out.push_back(CirclePoint{true, AlgNumber()});
    return out;
}

CircleCells decompose_circle(const std::vector<BPoly>& family, const Circle& c) {
    CircleCells cells;
    cells.circle = c;
    std::vector<UPoly> nums;
    std::vector<AlgNumber> roots;
    bool antipode = false;
    for (const auto& g : family) {
        UPoly n = circle_numerator(g, c);
        if (n.is_zero()) throw DegenerateInput("curve vanishes identically on the circle");
        n.set_var('x');
        for (auto& r : real_roots(n)) roots.push_back(std::move(r));
        if (sgn(g.eval(c.cx - c.r, c.cy)) == 0) antipode = true;
        nums.push_back(std::move(n));
    }
    roots = merge_roots(std::move(roots));
    std::vector<Rat> samples = separating_samples(roots);
    for (auto& r : roots) cells.points.push_back(CirclePoint{false, r});
    if (antipode) cells.points.push_back(CirclePoint{true, AlgNumber()});
    for (const auto& p : cells.points) {
        std::vector<int> sv;
        for (size_t k = 0; k < family.size(); ++k)
            sv.push_back(p.antipode ? sgn(family[k].eval(c.cx - c.r, c.cy)) : p.s.sign_of(nums[k]));
        cells.point_signs.push_back(std::move(sv));
    }
    auto arc_at = [&](const Rat& s) {
        std::vector<int> sv;
        for (const auto& n : nums) sv.push_back(n.sign_at(s));
        cells.arc_signs.push_back(std::move(sv));
        cells.arc_samples.push_back(s);
    };
    const size_t k = roots.size();
    if (cells.points.empty()) {
        arc_at(0);
        return cells;
    }
    // Arcs after each finite root, then the arc after the antipode.
    for (size_t i = 0; i < k; ++i) arc_at(samples[i + 1]);
    if (antipode) arc_at(samples[0]);
    return cells;
}

int circle_chi(const CircleCells& cells, const SignPredicate& in_set) {
    if (cells.points.empty()) return 0;
    int chi = 0;
    for (const auto& s : cells.point_signs)
        if (in_set(s)) ++chi;
    for (const auto& s : cells.arc_signs)
        if (in_set(s)) --chi;
    return chi;
}

int winding_number(const BPoly& p, const BPoly& q, const Circle& c) {
    CircleCells cells = decompose_circle({p, q}, c);
    const size_t n = cells.points.size();
    int twice = 0;
    for (size_t i = 0; i < n; ++i) {
        if (cells.point_signs[i][0] != 0) continue;
        int sq = cells.point_signs[i][1];
        if (sq == 0) throw HypothesisViolation("winding_number: common zero on the circle");
        int before = cells.arc_signs[(i + n - 1) % n][0];
        int after = cells.arc_signs[i][0];
        if (before == after) continue;
        twice += -after * sq;
    }
    if (twice % 2 != 0) throw Error("winding_number: odd crossing sum");
    return twice / 2;
}

std::vector<AlgNumber> circle_critical_values(const BPoly& f, const BPoly& hc, const Circle& c) {
    UPoly nh = circle_numerator(hc, c);
    if (nh.is_zero()) return {};
    const int d = f.total_degree();
    UPoly wd(1);
    for (int k = 0; k < d; ++k) wd *= UPoly({1, 0, 1});
    BPoly a = BPoly::from_upoly(nh, Var::X);
    BPoly b = BPoly::from_upoly(circle_numerator(f, c), Var::X) - BPoly::y() * BPoly::from_upoly(wd, Var::X);
    UPoly t = resultant(a, b, Var::X);
    if (t.is_zero()) throw DegenerateInput("circle_critical_values: eliminant vanishes");
    t.set_var('x');
    std::vector<AlgNumber> cv;
    if (t.degree() > 0) cv = real_roots(t);
    if (sgn(hc.eval(c.cx - c.r, c.cy)) == 0) cv.emplace_back(f.eval(c.cx - c.r, c.cy));
    return merge_roots(std::move(cv));
}

int degree_at_infinity(const BPoly& f) {
    BPoly fx = f.diff(Var::X), fy = f.diff(Var::Y);
    if (fx.is_zero() && fy.is_zero()) throw HypothesisViolation("constant function: every point is critical");
    if ((!fx.is_zero() && fx.is_constant()) || (!fy.is_zero() && fy.is_constant())) return 0;
    if (fx.is_zero() || fy.is_zero()) {
        // f depends on one variable only; the other partial is univariate.
        const BPoly& g = fx.is_zero() ? fy : fx;
        UPoly u = fx.is_zero() ? g.specialize(Var::X, 0) : g.specialize(Var::Y, 0);
        if (real_root_count(u) > 0) throw HypothesisViolation("infinite critical set");
        return 0;
    }
    Rat bx = 0, by = 0;
    {
        UPoly rx = resultant(fx, fy, Var::Y), ry = resultant(fx, fy, Var::X);
        if (rx.is_zero() || ry.is_zero()) throw HypothesisViolation("infinite critical set");
        bx = cauchy_root_bound(rx);
        by = cauchy_root_bound(ry);
    }
    Circle c{0, 0, bx + by + 1};
    return winding_number(fx, fy, c);
}

}  // namespace satopo
