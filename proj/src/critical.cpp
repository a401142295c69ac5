#include "satopo/critical.hpp"

#include "satopo/euler.hpp"
#include "satopo/resultant.hpp"

namespace satopo {

namespace {

// Rational circle around pts[i] leaving every other point strictly outside.
Circle separate(std::vector<AlgPoint2>& pts, size_t i, const Rat& max_width) {
    Rat w = max_width;
    while (true) {
        for (auto& p : pts) p.refine(w);
        Interval bx = pts[i].xbox(), by = pts[i].ybox();
        Rat cx = bx.mid(), cy = by.mid();
        Rat r = bx.width() + by.width();
        if (sgn(r) == 0) r = w;
        bool ok = true;
        for (size_t j = 0; j < pts.size() && ok; ++j) {
            if (j == i) continue;
            if (dist2(pts[j].xbox(), pts[j].ybox(), cx, cy).lo <= r * r) ok = false;
        }
        if (ok) return Circle{cx, cy, r};
        w /= 4;
    }
}

}  // namespace

int local_degree(const BPoly& p, const BPoly& q, std::vector<AlgPoint2>& pts, size_t i, Circle* used) {
    Circle c = separate(pts, i, Rat(1));
    if (used) *used = c;
    return winding_number(p, q, c);
}

GradientSplit split_gradient(const BPoly& f) {
    BPoly fx = f.diff(Var::X), fy = f.diff(Var::Y);
    if (fx.is_zero() && fy.is_zero()) throw HypothesisViolation("constant function: every point is critical");
    BPoly g = gcd(fx, fy);
    if (g.is_constant()) return {BPoly(1), fx, fy};
    g = squarefree(g);
    SweepStats st = sweep({g}, [](const std::vector<int>& s) { return s[0] == 0; });
    if (st.arcs > 0 || st.segments > 0) throw HypothesisViolation("infinite critical set: the gradient vanishes on a curve");
    return {g, fx.is_zero() ? fx : exact_div(fx, g), fy.is_zero() ? fy : exact_div(fy, g)};
}

namespace {

// A directional derivative of the square-free g sharing no factor with g.
// Real points of g are singular when isolated, so they all annul it.
BPoly transverse_derivative(const BPoly& g) {
    const BPoly gx = g.diff(Var::X), gy = g.diff(Var::Y);
    for (int k = 0; k < 8; ++k) {
        BPoly d = gx + make_rat(k, k + 2) * gy;
        if (d.is_zero()) continue;
        if (d.is_constant()) return d;
        if (!resultant(g, d, Var::Y).is_zero() && !resultant(g, d, Var::X).is_zero()) return d;
    }
    throw Error("transverse_derivative: no admissible direction");
}

// Real points of a curve known to have only isolated real points.
std::vector<AlgPoint2> isolated_points(const BPoly& g) {
    if (g.is_constant()) return {};
    return solve_system(g, transverse_derivative(g));
}

Rat pair_bound(const BPoly& p, const BPoly& q) {
    if (p.is_constant() || q.is_constant()) return 0;
    return cauchy_root_bound(resultant(p, q, Var::Y)) + cauchy_root_bound(resultant(p, q, Var::X));
}

}  // namespace

Rat critical_bound(const BPoly& f) {
    GradientSplit gs = split_gradient(f);
    Rat b = pair_bound(gs.px, gs.py);
    const BPoly& g = gs.common;
    if (!g.is_constant()) {
        Rat c = pair_bound(g, transverse_derivative(g));
        if (c > b) b = c;
    }
    return b + 1;
}

std::vector<CriticalPoint> find_critical_points(const BPoly& f) {
    GradientSplit gs = split_gradient(f);
    std::vector<AlgPoint2> pts = solve_system(gs.px, gs.py);
    for (auto& p : isolated_points(gs.common)) {
        // already found when it also annuls the reduced partials
        bool dup = !gs.px.is_constant() && !gs.py.is_constant() && p.sign_of(gs.px) == 0 && p.sign_of(gs.py) == 0;
        if (!dup) pts.push_back(p);
    }
    const BPoly fx = f.diff(Var::X), fy = f.diff(Var::Y);
    std::vector<CriticalPoint> out;
    for (size_t i = 0; i < pts.size(); ++i) {
        Circle c;
        int d = local_degree(fx, fy, pts, i, &c);
        AlgNumber v = pts[i].value_of(f);
        out.push_back(CriticalPoint{pts[i], d, v, d, d, c});
    }
    return out;
}

std::vector<AlgNumber> critical_values(const std::vector<CriticalPoint>& pts) {
    std::vector<AlgNumber> v;
    for (const auto& p : pts) v.push_back(p.value);
    return merge_roots(std::move(v));
}

std::vector<AlgNumber> critical_values(const BPoly& f) { return critical_values(find_critical_points(f)); }

int index(const BPoly&, const CriticalPoint& p) { return p.local_degree; }

LocalFiber local_fiber(const BPoly& f, CriticalPoint& p, std::vector<CriticalPoint>& all) {
    std::vector<AlgPoint2> pts;
    size_t me = 0;
    for (size_t i = 0; i < all.size(); ++i) {
        if (&all[i] == &p) me = i;
        pts.push_back(all[i].point);
    }
    const BPoly fx = f.diff(Var::X), fy = f.diff(Var::Y);
    Rat w = Rat(1, 4);
    for (int attempt = 0; attempt < 12; ++attempt, w /= 4) {
        Circle c0 = separate(pts, me, w);
        // Off-center so that f is not radial about the center.
        Circle c{c0.cx + c0.r / 10, c0.cy + c0.r / 13, c0.r * Rat(7, 10)};
        BPoly hc = (BPoly::x() - BPoly(c.cx)) * fy - (BPoly::y() - BPoly(c.cy)) * fx;
        if (circle_numerator(hc, c).is_zero()) continue;
        std::vector<AlgNumber> cv;
        try {
            cv = circle_critical_values(f, hc, c);
        } catch (const DegenerateInput&) {
            continue;
        }
        const AlgNumber& v = p.value;
        bool hit = false;
        const AlgNumber* lower = nullptr;
        const AlgNumber* upper = nullptr;
        for (const auto& r : cv) {
            int cmpv = r.compare(v);
            if (cmpv == 0) hit = true;
            else if (cmpv < 0) lower = &r;
            else if (!upper) upper = &r;
        }
        if (hit) continue;
        LocalFiber lf;
        lf.circle = c;
        lf.below = lower ? lower->rational_between(v) : Rat(v.interval().lo - 1);
        lf.above = upper ? v.rational_between(*upper) : Rat(v.interval().hi + 1);
        lf.points_below = static_cast<int>(curve_circle_intersections(f - BPoly(lf.below), c).size());
        lf.points_above = static_cast<int>(curve_circle_intersections(f - BPoly(lf.above), c).size());
        // No critical value of f on C lies between `below` and v, so the
        // sublevel, superlevel and level pieces at v match those at `below`.
        CircleCells cells = decompose_circle({f - BPoly(lf.below)}, c);
        lf.chi_le = circle_chi(cells, [](const std::vector<int>& s) { return s[0] <= 0; });
        lf.chi_ge = circle_chi(cells, [](const std::vector<int>& s) { return s[0] >= 0; });
        lf.chi_eq = circle_chi(cells, [](const std::vector<int>& s) { return s[0] == 0; });
        return lf;
    }
    throw Error("local_fiber: could not find a transverse circle");
}

}  // namespace satopo
