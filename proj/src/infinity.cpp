#include "satopo/infinity.hpp"

#include "satopo/algctx.hpp"
#include "satopo/critical.hpp"
#include "satopo/resultant.hpp"

namespace satopo {

namespace {

BPoly polar(const BPoly& g, const Point& a) {
    return (BPoly::x() - BPoly(a.first)) * g.diff(Var::Y) - (BPoly::y() - BPoly(a.second)) * g.diff(Var::X);
}

// Polar curve and radial derivative of f with the common factor of the
// partials removed; that factor only has isolated real points.
struct Reduced {
    BPoly h, radial;
};

Reduced reduced(const BPoly& f, const Point& a) {
    GradientSplit gs = split_gradient(f);
    const BPoly dx = BPoly::x() - BPoly(a.first), dy = BPoly::y() - BPoly(a.second);
    return {dx * gs.py - dy * gs.px, dx * gs.px + dy * gs.py};
}

Circle circle_at(const Point& a, const Rat& r) { return Circle{a.first, a.second, r}; }

// Largest |x| + |y| over the common zeros of p and q; false when they
// share a component.
bool pair_bound(const BPoly& p, const BPoly& q, Rat& bound) {
    if (p.is_constant() || q.is_constant()) return !(p.is_zero() || q.is_zero());
    UPoly rx = resultant(p, q, Var::Y), ry = resultant(p, q, Var::X);
    if (rx.is_zero() || ry.is_zero()) return false;
    Rat b = cauchy_root_bound(rx) + cauchy_root_bound(ry);
    if (b > bound) bound = b;
    return true;
}

// Cauchy bound for the roots of E(., alpha), E stored with t in the y slot.
Rat level_bound(const BPoly& e, const AlgNumber& alpha) {
    AlgCtx ctx(alpha);
    std::vector<UPoly> cs = e.coeffs_in(Var::X);
    for (auto& c : cs) c.set_var('x');
    int top = static_cast<int>(cs.size()) - 1;
    while (top >= 0 && ctx.is_zero(cs[static_cast<size_t>(top)])) --top;
    if (top < 0) throw DegenerateInput("level curve shares a component with the polar curve");
    if (top == 0) return 0;
    Interval lc = ctx.enclose(cs[static_cast<size_t>(top)]);
    while (lc.contains_zero()) {
        ctx.refine(ctx.number().interval().width() / 2);
        lc = ctx.enclose(cs[static_cast<size_t>(top)]);
    }
    Rat low = std::min(abs_rat(lc.lo), abs_rat(lc.hi));
    Rat m = 0;
    for (int i = 0; i < top; ++i) {
        Rat v = ctx.enclose(cs[static_cast<size_t>(i)]).mag();
        if (v > m) m = v;
    }
    return 1 + m / low;
}

}  // namespace

GammaCurve gamma_polynomial(const BPoly& f, const Point& a) {
    BPoly h = polar(f, a);
    if (h.is_zero()) throw DegenerateInput("polar curve vanishes identically; choose another base point");
    return GammaCurve{h, a};
}

std::optional<Rat> try_certified_radius(const BPoly& f, const Point& a, const std::vector<BPoly>& extra) {
    Reduced r = reduced(f, a);
    const BPoly& h = r.h;
    if (h.is_zero()) return std::nullopt;
    Rat bound = critical_bound(f);
    BPoly hs = squarefree(h);
    if (!hs.is_constant()) {
        BPoly hg = polar(hs, a);
        if (hg.is_zero() || !pair_bound(hs, hg, bound)) return std::nullopt;
        if (!pair_bound(hs, r.radial, bound)) return std::nullopt;
    }
    for (const auto& e : extra) {
        if (e.is_constant()) continue;
        BPoly es = squarefree(e);
        BPoly he = polar(es, a);
        if (he.is_zero() || !pair_bound(es, he, bound)) return std::nullopt;
        if (!hs.is_constant() && !pair_bound(es, hs, bound)) return std::nullopt;
    }
    return bound + abs_rat(a.first) + abs_rat(a.second) + 1;
}

Rat certified_radius(const BPoly& f, const Point& a, const std::vector<BPoly>& extra) {
    auto r = try_certified_radius(f, a, extra);
    if (!r) throw DegenerateInput("base point is not generic: an eliminant vanishes identically");
    return *r;
}

Point generic_basepoint(const BPoly& f, unsigned seed) {
    if (f.is_constant()) throw HypothesisViolation("constant function");
    for (unsigned k = 0; k < 20; ++k) {
        Point a = seeded_point(seed, k);
        if (try_certified_radius(f, a)) return a;
    }
    throw HypothesisViolation("no generic base point in 20 draws");
}

std::vector<CircleCritPoint> circle_morse_data(const BPoly& f, const Point& a, const Rat& R) {
    const Circle c = circle_at(a, R);
    gamma_polynomial(f, a);
    const Reduced red = reduced(f, a);
    CircleCells cells = decompose_circle({red.h}, c);
    const size_t n = cells.points.size();
    std::vector<CircleCritPoint> out;
    if (n == 0) return out;
    // Derivative of f along the circle in the s parameter, up to a
    // positive factor: F'(s) (1 + s^2) - 2 D s F(s).
    const int d = f.total_degree();
    UPoly F = circle_numerator(f, c);
    UPoly dv = F.derivative() * UPoly({1, 0, 1}, 's') - UPoly({0, 2 * d}, 's') * F;
    const BPoly& rad = red.radial;
    for (size_t i = 0; i < n; ++i) {
        CircleCritPoint cp;
        cp.point = cells.points[i];
        cp.mu_sign = sign_on_circle(rad, c, cp.point);
        if (cp.mu_sign == 0) throw Error("circle_morse_data: radius not certified (radial derivative vanishes)");
        int before = sgn(dv.eval(cells.arc_samples[(i + n - 1) % n]));
        int after = sgn(dv.eval(cells.arc_samples[i]));
        if (before == 0 || after == 0) throw Error("circle_morse_data: sample hits a critical point");
        cp.circle_index = (after - before) / 2;
        out.push_back(cp);
    }
    return out;
}

LambdaMuNu lambda_mu_nu(const BPoly& f, const Point& a, const Rat& alpha) {
    const BPoly g = f - BPoly(alpha);
    Rat R = certified_radius(f, a, {g});
    std::vector<LambdaMuNu> hist;
    for (int k = 0; k <= 10; ++k, R *= 2) {
        LambdaMuNu v;
        v.radius = R;
        const Circle c = circle_at(a, R);
        for (const auto& cp : circle_morse_data(f, a, R)) {
            int s = sign_on_circle(g, c, cp.point);
            if (s == 0) throw Error("lambda_mu_nu: level meets a polar point on the circle");
            if (s > 0 && cp.mu_sign < 0) v.lambda += cp.circle_index;
            if (s < 0 && cp.mu_sign > 0) v.mu += cp.circle_index;
            if (s < 0 && cp.mu_sign < 0) v.nu += cp.circle_index;
        }
        hist.push_back(v);
        const size_t m = hist.size();
        if (m >= 3 && hist[m - 1] == hist[m - 2] && hist[m - 2] == hist[m - 3]) return hist[m - 3];
        if (k >= 8) break;
    }
    throw Error("lambda_mu_nu: sums did not stabilize within 8 doublings");
}

LambdaMuNu lambda_mu_nu(const BPoly& f, const Rat& alpha, unsigned seed) {
    return lambda_mu_nu(f, generic_basepoint(f, seed), alpha);
}

int link_chi(const BPoly& f, const Rat& alpha, Flavor fl, unsigned seed) {
    return link_chi(std::vector<BPoly>{f - BPoly(alpha)}, flavor_predicate(fl), seed);
}

int link_chi(const BPoly& f, const AlgNumber& alpha, Flavor fl, unsigned seed) {
    if (alpha.is_rational()) return link_chi(f, alpha.value(), fl, seed);
    const Point a = generic_basepoint(f, seed);
    // Off Lambda_f the link does not change, so a rational level in the
    // same gap of Lambda_f gives the same answer.
    {
        const AlgNumber* below = nullptr;
        bool member = false;
        const auto lam = lambda_set(f, a);
        for (const auto& l : lam) {
            int cmp = l.compare(alpha);
            if (cmp == 0) member = true;
            if (cmp < 0) below = &l;
        }
        if (!member) {
            Rat t = below ? below->rational_between(alpha) : Rat(alpha.interval().lo - 1);
            return link_chi(f, t, fl, seed);
        }
    }
    const BPoly h = reduced(f, a).h;
    // Polar points on the level alpha stay inside the circle.
    Rat R = certified_radius(f, a);
    Rat b = level_bound(resultant_level(h, f, Var::Y), alpha) + level_bound(resultant_level(h, f, Var::X), alpha);
    b += abs_rat(a.first) + abs_rat(a.second) + 1;
    if (b > R) R = b;
    const Circle c = circle_at(a, R);
    // No critical value of f on the circle lies between t and alpha.
    std::vector<AlgNumber> cv = circle_critical_values(f, h, c);
    const AlgNumber* lower = nullptr;
    for (const auto& v : cv) {
        int cmp = v.compare(alpha);
        if (cmp == 0) throw Error("link_chi: level is critical on the certified circle");
        if (cmp < 0) lower = &v;
    }
    Rat t = lower ? lower->rational_between(alpha) : Rat(alpha.interval().lo - 1);
    return circle_chi(decompose_circle({f - BPoly(t)}, c), flavor_predicate(fl));
}

std::vector<AlgNumber> lambda_set(const BPoly& f, const Point& a) {
    gamma_polynomial(f, a);
    const BPoly h = reduced(f, a).h;
    BPoly e1 = resultant_level(h, f, Var::Y), e2 = resultant_level(h, f, Var::X);
    if (e1.is_zero() || e2.is_zero()) throw DegenerateInput("lambda_set: eliminant vanishes identically");
    // A branch escaping to infinity with f -> t forces a leading
    // coefficient to vanish at t.
    std::vector<AlgNumber> cand;
    for (const BPoly* e : {&e1, &e2}) {
        UPoly lc = e->coeffs_in(Var::X).back();
        lc.set_var('x');
        if (lc.degree() > 0)
            for (auto& r : real_roots(lc)) cand.push_back(r);
    }
    cand = merge_roots(std::move(cand));
    if (cand.empty()) return cand;
    // Beyond the radius certified for the separating levels, each escaping
    // branch of the polar curve keeps f between two consecutive samples;
    // a candidate is genuine iff some branch crosses the circle there.
    std::vector<Rat> s = separating_samples(cand);
    std::vector<BPoly> levels;
    for (const Rat& v : s) levels.push_back(f - BPoly(v));
    const Circle c = circle_at(a, certified_radius(f, a, levels));
    CircleCells cells = decompose_circle({h}, c);
    std::vector<AlgNumber> out;
    for (size_t i = 0; i < cand.size(); ++i) {
        for (const auto& p : cells.points) {
            if (sign_on_circle(levels[i], c, p) > 0 && sign_on_circle(levels[i + 1], c, p) < 0) {
                out.push_back(cand[i]);
                break;
            }
        }
    }
    return out;
}

std::vector<AlgNumber> lambda_set(const BPoly& f, unsigned seed) { return lambda_set(f, generic_basepoint(f, seed)); }

JumpSets jump_sets(const BPoly& f, const std::vector<AlgNumber>& lambda, unsigned seed) {
    JumpSets js;
    if (lambda.empty()) return js;
    std::vector<Rat> s = separating_samples(lambda);
    for (Flavor fl : {Flavor::LE, Flavor::EQ, Flavor::GE}) {
        std::vector<int> at_s;
        for (const Rat& v : s) at_s.push_back(link_chi(f, v, fl, seed));
        auto& dst = fl == Flavor::LE ? js.le : fl == Flavor::EQ ? js.eq : js.ge;
        for (size_t i = 0; i < lambda.size(); ++i) {
            int here = link_chi(f, lambda[i], fl, seed);
            if (here != at_s[i] || here != at_s[i + 1]) dst.push_back(lambda[i]);
        }
    }
    return js;
}

int half_branches(const BPoly& g, unsigned seed) {
    if (g.is_constant()) return 0;
    Circle c = link_circle({g}, seed);
    int n = static_cast<int>(decompose_circle({g}, c).points.size());
    if (n % 2 != 0) throw Error("half_branches: odd count, radius not certified");
    return n;
}

int r_infinity(const BPoly& g, unsigned seed) { return half_branches(g, seed) / 2; }

}  // namespace satopo
