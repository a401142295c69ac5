#include "satopo/stratified.hpp"

#include <algorithm>
#include <cmath>

#include "satopo/resultant.hpp"

namespace satopo {

namespace {

int sign_at(AlgPoint2& p, const BPoly& q) {
    if (q.is_constant()) return sgn(q.constant_term());
    return p.sign_of(q);
}

// Certifies that grad g has no zero on {g = 0}, intersecting the curve
// with a directional derivative that shares no component with it.
void check_smooth(const BPoly& g) {
    const BPoly gx = g.diff(Var::X), gy = g.diff(Var::Y);
    for (int k = 0; k < 10; ++k) {
        BPoly d = gx + make_rat(k, k + 2) * gy;
        if (d.is_zero()) continue;
        if (d.is_constant()) return;
        std::vector<AlgPoint2> pts;
        try {
            pts = solve_system(g, d);
        } catch (const HypothesisViolation&) {
            continue;
        }
        for (auto& p : pts)
            if (sign_at(p, gx) == 0 && sign_at(p, gy) == 0) throw HypothesisViolation("the curve g = 0 has a singular point");
        return;
    }
    throw HypothesisViolation("could not certify that g = 0 is smooth");
}

bool flavor_holds(Flavor fl, int s) {
    switch (fl) {
        case Flavor::LE: return s <= 0;
        case Flavor::EQ: return s == 0;
        case Flavor::GE: return s >= 0;
    }
    return false;
}

// v^T H v for v = (-gy, gx), H the Hessian of f.
BPoly tangent_hessian(const BPoly& f, const BPoly& gx, const BPoly& gy) {
    BPoly fxx = f.diff(Var::X).diff(Var::X), fxy = f.diff(Var::X).diff(Var::Y), fyy = f.diff(Var::Y).diff(Var::Y);
    return fxx * gy * gy - Rat(2) * fxy * gx * gy + fyy * gx * gx;
}

// Points of {g = 0} with zero curvature, leaving out line components
// (on which every point is flat).
std::vector<AlgPoint2> inflection_points(const BPoly& g) {
    const BPoly gx = g.diff(Var::X), gy = g.diff(Var::Y);
    BPoly k = tangent_hessian(g, gx, gy);
    if (k.is_zero()) return {};
    BPoly rest = g;
    BPoly common = gcd(g, k);
    if (!common.is_constant()) rest = exact_div(g, common);
    if (rest.is_constant() || k.is_constant()) return {};
    return solve_system(rest, k);
}

const double kPi = std::acos(-1.0);

double wrap(double t) {
    while (t > kPi) t -= 2 * kPi;
    while (t <= -kPi) t += 2 * kPi;
    return t;
}

void add_pair(std::vector<BadDirection>& out, double theta, double pad, const char* kind) {
    for (double t : {theta, theta + kPi}) {
        double w = wrap(t);
        out.push_back({w - pad, w + pad, kind});
    }
}

}  // namespace

PlaneSet PlaneSet::region(const BPoly& g) {
    if (g.is_constant()) throw HypothesisViolation("region: g is constant");
    check_smooth(g);
    if (sweep({g}, [](const std::vector<int>& s) { return s[0] < 0; }).bands == 0)
        throw HypothesisViolation("region: {g < 0} is empty");
    return {g, Kind::Region};
}

PlaneSet PlaneSet::curve(const BPoly& g) {
    if (g.is_constant()) throw HypothesisViolation("curve: g is constant");
    check_smooth(g);
    SweepStats st = sweep({g}, [](const std::vector<int>& s) { return s[0] == 0; });
    if (st.arcs + st.segments == 0) throw HypothesisViolation("curve: {g = 0} has no real points");
    return {g, Kind::Curve};
}

SignPredicate PlaneSet::predicate() const {
    if (kind == Kind::Region) return [](const std::vector<int>& s) { return s[0] <= 0; };
    return [](const std::vector<int>& s) { return s[0] == 0; };
}

SignPredicate PlaneSet::with(Flavor fl) const {
    bool region = kind == Kind::Region;
    return [region, fl](const std::vector<int>& s) { return (region ? s[0] <= 0 : s[0] == 0) && flavor_holds(fl, s[1]); };
}

bool PlaneSet::compact() const {
    Circle c = link_circle({g});
    CircleCells cells = decompose_circle({g}, c);
    return circle_chi(cells, predicate()) == 0 &&
           std::none_of(cells.arc_signs.begin(), cells.arc_signs.end(), predicate()) &&
           std::none_of(cells.point_signs.begin(), cells.point_signs.end(), predicate());
}

std::vector<StratCriticalPoint> stratified_critical_points(const PlaneSet& X, const BPoly& f) {
    const BPoly& g = X.g;
    const BPoly fx = f.diff(Var::X), fy = f.diff(Var::Y);
    const BPoly gx = g.diff(Var::X), gy = g.diff(Var::Y);
    if (fx.is_zero() && fy.is_zero()) throw HypothesisViolation("constant function: every point is critical");
    std::vector<StratCriticalPoint> out;

    bool gradient_free = (fx.is_constant() && !fx.is_zero()) || (fy.is_constant() && !fy.is_zero());
    if (X.kind == PlaneSet::Kind::Region && !gradient_free) {
        for (auto& cp : find_critical_points(f)) {
            int s = cp.point.sign_of(g);
            if (s > 0) continue;
            if (s == 0) throw HypothesisViolation("critical point of f on the boundary: lambda(p) = 0");
            StratCriticalPoint p{cp.point, StratCriticalPoint::Stratum::Interior, 0, cp.local_degree, cp.local_degree, cp.value};
            out.push_back(std::move(p));
        }
    }

    BPoly jac = fx * gy - fy * gx;
    if (jac.is_zero()) throw HypothesisViolation("f is constant along the curve g = 0");
    if (jac.is_constant()) return out;
    const BPoly lam = fx * gx + fy * gy;
    // |grad g|^2 times the second derivative of f along the curve
    const BPoly second = (gx * gx + gy * gy) * tangent_hessian(f, gx, gy) - lam * tangent_hessian(g, gx, gy);
    for (auto& pt : solve_system(jac, g)) {
        int ls = sign_at(pt, lam);
        if (ls == 0) throw HypothesisViolation("lambda(p) = 0 at a boundary critical point");
        int q = sign_at(pt, second);
        if (q == 0) throw DegenerateInput("f restricted to g = 0 has a degenerate critical point");
        int on_curve = q > 0 ? 1 : -1;  // minimum or maximum along the curve
        StratCriticalPoint p{pt, StratCriticalPoint::Stratum::Boundary, ls, 0, 0, pt.value_of(f)};
        if (X.kind == PlaneSet::Kind::Region) {
            p.index = ls > 0 ? 0 : on_curve;
            p.index_neg = ls < 0 ? 0 : -on_curve;
        } else {
            p.index = on_curve;
            p.index_neg = -on_curve;
        }
        out.push_back(std::move(p));
    }
    return out;
}

Direction Direction::from_t(const Rat& t) {
    Rat d = 1 + t * t;
    return {(1 - t * t) / d, 2 * t / d};
}

Direction Direction::near_angle(double theta) {
    theta = wrap(theta);
    if (std::fabs(theta) > kPi - 1e-12) return {Rat(-1), Rat(0)};
    const double scale = 16777216.0;  // 2^24
    Rat t(static_cast<long>(std::llround(std::tan(theta / 2) * scale)), static_cast<long>(scale));
    t.canonicalize();
    return from_t(t);
}

BPoly Direction::linear() const { return x * BPoly::x() + y * BPoly::y(); }

double Direction::angle() const { return std::atan2(y.get_d(), x.get_d()); }

std::vector<BadDirection> bad_directions(const PlaneSet& X) {
    std::vector<BadDirection> out;
    const BPoly& g = X.g;
    // v is perpendicular to an asymptotic direction w when w is parallel
    // to (-v_y, v_x) = (-2t, 1 - t^2) up to scale.
    BPoly lead = g.leading_form();
    const BPoly wx = Rat(-2) * BPoly::x(), wy = BPoly(1) - BPoly::x() * BPoly::x();
    UPoly pt = lead.compose(wx, wy).specialize(Var::Y, 0);
    const double pad = 1e-12;
    for (auto t : real_roots(pt)) {
        t.refine(Rat(1, 1 << 30) * Rat(1, 1 << 20));
        double th = 2 * std::atan(t.approx());
        out.push_back({wrap(th) - pad, wrap(th) + pad, "asymptotic"});
    }
    if (pt.degree() < 2 * lead.total_degree()) out.push_back({kPi - pad, kPi, "asymptotic"});

    const BPoly gx = g.diff(Var::X), gy = g.diff(Var::Y);
    for (auto& p : inflection_points(g)) {
        p.refine(Rat(1, 1 << 30) * Rat(1, 1 << 20));
        Interval nx = p.enclose(gx), ny = p.enclose(gy);
        double ax = nx.mid().get_d(), ay = ny.mid().get_d();
        double w = Rat(nx.width() + ny.width()).get_d();
        double norm = std::hypot(ax, ay);
        add_pair(out, std::atan2(ay, ax), 1e-9 + 2 * w / norm, "fold");
    }
    std::sort(out.begin(), out.end(), [](const BadDirection& a, const BadDirection& b) { return a.lo < b.lo; });
    return out;
}

bool is_bad(const PlaneSet& X, const Direction& v) {
    const BPoly& g = X.g;
    if (sgn(g.leading_form().eval(-v.y, v.x)) == 0) return true;
    const BPoly cross = v.y * g.diff(Var::X) - v.x * g.diff(Var::Y);
    for (auto& p : inflection_points(g))
        if (sign_at(p, cross) == 0) return true;
    return false;
}

int chi_of(const PlaneSet& X) { return chi({X.g}, X.predicate()); }

int link_chi_of(const PlaneSet& X) { return link_chi({X.g}, X.predicate()); }

LinearMorseSummary linear_morse_summary(const PlaneSet& X, const Direction& v, const Rat& alpha) {
    if (is_bad(X, v)) throw DegenerateInput("direction lies in the bad set of X");
    LinearMorseSummary s;
    const BPoly vs = v.linear();
    s.points = stratified_critical_points(X, vs);
    for (const auto& p : s.points) {
        int c = p.value.compare(alpha);
        if (c > 0) s.sum_above += p.index;
        if (c < 0) s.sum_below_neg += p.index_neg;
        s.sum_all += p.index;
        s.sum_all_neg += p.index_neg;
    }
    s.chi_x = chi_of(X);
    s.chi_lk_x = link_chi_of(X);
    const std::vector<BPoly> fam{X.g, vs - BPoly(alpha)};
    s.chi_le = chi(fam, X.with(Flavor::LE));
    s.chi_eq = chi(fam, X.with(Flavor::EQ));
    s.chi_ge = chi(fam, X.with(Flavor::GE));
    s.lk_le = link_chi(fam, X.with(Flavor::LE));
    s.lk_eq = link_chi(fam, X.with(Flavor::EQ));
    s.lk_ge = link_chi(fam, X.with(Flavor::GE));
    return s;
}

DirectionSample sample_direction(const PlaneSet& X, const Direction& v) {
    DirectionSample d{v};
    for (const auto& p : stratified_critical_points(X, v.linear())) {
        d.ind_sum += p.index;
        d.ind_sum_neg += p.index_neg;
    }
    d.lk_line = link_chi({X.g, v.linear()}, X.with(Flavor::EQ));
    return d;
}

namespace {

// Axis angle in [0, pi) of a direction angle.
double axis(double theta) {
    double a = std::fmod(theta, kPi);
    if (a < 0) a += kPi;
    return a;
}

Direction generic_near(const PlaneSet& X, double phi, double step) {
    for (int k = 0; k < 16; ++k) {
        Direction v = Direction::near_angle(phi + (k % 2 ? 1 : -1) * ((k + 1) / 2) * step);
        if (!is_bad(X, v)) return v;
    }
    throw DegenerateInput("no generic direction near the requested angle");
}

void accumulate(GaussBonnet& gb, const DirectionSample& d, const Rat& w) {
    gb.value += w * make_rat(d.ind_sum + d.ind_sum_neg, 2);
    gb.rhs -= w * make_rat(d.lk_line, 2);
    if (d.ind_sum + d.ind_sum_neg != 2 * gb.chi_x - gb.chi_lk_x - d.lk_line) gb.per_direction_ok = false;
    gb.samples.push_back(d);
}

Rat round_weight(double w) {
    Rat r(static_cast<long>(std::llround(w * 4294967296.0)), 4294967296L);
    r.canonicalize();
    return r;
}

}  // namespace

GaussBonnet gauss_bonnet_exact(const PlaneSet& X) {
    GaussBonnet gb;
    gb.chi_x = chi_of(X);
    gb.chi_lk_x = link_chi_of(X);
    gb.rhs = Rat(gb.chi_x) - make_rat(gb.chi_lk_x, 2);

    // Clusters of bad axes on [0, pi), merged when the enclosures overlap.
    std::vector<std::pair<double, double>> iv;
    for (const auto& b : bad_directions(X)) {
        double m = axis(b.mid()), h = (b.hi - b.lo) / 2;
        if (m > kPi - 1e-9) m -= kPi;
        iv.push_back({m - h, m + h});
    }
    std::sort(iv.begin(), iv.end());
    std::vector<std::pair<double, double>> cl;
    for (const auto& p : iv) {
        if (!cl.empty() && p.first <= cl.back().second) cl.back().second = std::max(cl.back().second, p.second);
        else cl.push_back(p);
    }
    if (cl.size() > 1 && cl.back().second - kPi >= cl.front().first) {
        cl.front().first = cl.back().first - kPi;
        cl.pop_back();
    }

    int max_abs = 0;
    Rat total = 0;
    auto arc = [&](double lo, double hi, const Rat& w) {
        DirectionSample a = sample_direction(X, generic_near(X, lo + (hi - lo) / 3, (hi - lo) / 100));
        DirectionSample b = sample_direction(X, generic_near(X, lo + 2 * (hi - lo) / 3, (hi - lo) / 100));
        if (a.ind_sum + a.ind_sum_neg != b.ind_sum + b.ind_sum_neg || a.lk_line != b.lk_line) gb.arcs_consistent = false;
        max_abs = std::max({max_abs, std::abs(a.ind_sum + a.ind_sum_neg), std::abs(a.lk_line)});
        accumulate(gb, a, w);
        total += w;
    };
    if (cl.empty()) {
        arc(0.1, 0.1 + kPi, Rat(1));
        gb.error = 0;
        return gb;
    }
    double width = 0;
    for (size_t i = 0; i < cl.size(); ++i) {
        double lo = cl[i].second;
        double hi = i + 1 < cl.size() ? cl[i + 1].first : cl[0].first + kPi;
        double mlo = (cl[i].first + cl[i].second) / 2;
        double mhi = i + 1 < cl.size() ? (cl[i + 1].first + cl[i + 1].second) / 2 : (cl[0].first + cl[0].second) / 2 + kPi;
        width += cl[i].second - cl[i].first;
        // the last arc takes whatever is left so the weights sum to 1
        Rat w = i + 1 < cl.size() ? round_weight((mhi - mlo) / kPi) : Rat(1) - total;
        arc(lo, hi, w);
    }
    gb.error = Rat(max_abs) * (round_weight(width / kPi) + make_rat(static_cast<long>(cl.size()), 4294967296L));
    return gb;
}

GaussBonnet gauss_bonnet_sampled(const PlaneSet& X, int n) {
    if (n <= 0) throw Error("gauss_bonnet: sample count must be positive");
    GaussBonnet gb;
    gb.chi_x = chi_of(X);
    gb.chi_lk_x = link_chi_of(X);
    gb.rhs = Rat(gb.chi_x) - make_rat(gb.chi_lk_x, 2);
    int max_abs = 0;
    for (int j = 0; j < n; ++j) {
        double phi = kPi * (j + 0.5) / n;
        DirectionSample d = sample_direction(X, generic_near(X, phi, kPi / n / 64));
        max_abs = std::max({max_abs, std::abs(d.ind_sum + d.ind_sum_neg), std::abs(d.lk_line)});
        accumulate(gb, d, make_rat(1, n));
    }
    // each bad axis can misplace at most one sample
    std::vector<double> axes;
    for (const auto& b : bad_directions(X)) axes.push_back(axis(b.mid()));
    std::sort(axes.begin(), axes.end());
    long distinct = std::unique(axes.begin(), axes.end(), [](double a, double b) { return std::fabs(a - b) < 1e-9; }) - axes.begin();
    gb.error = make_rat(distinct * max_abs, n);
    return gb;
}

}  // namespace satopo
