#include "satopo/euler.hpp"

#include <random>

#include "satopo/algctx.hpp"
#include "satopo/resultant.hpp"
#include "satopo/solve2.hpp"

namespace satopo {

Flavor parse_flavor(const std::string& s) {
    if (s == "le") return Flavor::LE;
    if (s == "eq") return Flavor::EQ;
    if (s == "ge") return Flavor::GE;
    throw Error("unknown flavor '" + s + "' (expected le, eq or ge)");
}

const char* flavor_name(Flavor f) {
    switch (f) {
        case Flavor::LE: return "le";
        case Flavor::EQ: return "eq";
        default: return "ge";
    }
}

SignPredicate flavor_predicate(Flavor f) {
    switch (f) {
        case Flavor::LE: return [](const std::vector<int>& s) { return s[0] <= 0; };
        case Flavor::EQ: return [](const std::vector<int>& s) { return s[0] == 0; };
        default: return [](const std::vector<int>& s) { return s[0] >= 0; };
    }
}

std::pair<Rat, Rat> seeded_point(unsigned seed, unsigned k) {
    std::mt19937 rng(seed * 7919u + k);
    std::uniform_int_distribution<int> num(-9, 9), den(5, 17);
    return {make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng))};
}

namespace {

// A member split as c(x) * prim(x, y) with prim primitive in y.
struct Member {
    UPoly content;
    BPoly prim;
    bool has_y() const { return prim.degree(Var::Y) >= 1; }
};

Member split(const BPoly& f) {
    if (f.is_zero()) throw DegenerateInput("sweep: zero polynomial in the family");
    if (f.degree(Var::Y) < 1) {
        UPoly c = f.specialize(Var::Y, 0);
        c.set_var('x');
        return {c, BPoly(1)};
    }
    UPoly c = content_y(f);
    BPoly p = divide_x_factor(f, c);
    // keep the sign: f = c * p with c monic, so p carries the leading sign
    return {c, p};
}

UPoly first_nonzero_psc(const BPoly& p, const BPoly& q) {
    for (auto& u : principal_subresultants(p, q, Var::Y))
        if (!u.is_zero()) return u;
    return UPoly(1);
}

void add_roots(std::vector<AlgNumber>& out, UPoly u) {
    u.set_var('x');
    if (u.is_zero() || u.degree() < 1) return;
    for (auto& r : real_roots(u)) out.push_back(r);
}

std::vector<AlgNumber> events_of(const std::vector<Member>& ms) {
    std::vector<AlgNumber> ev;
    for (size_t i = 0; i < ms.size(); ++i) {
        add_roots(ev, ms[i].content);
        if (!ms[i].has_y()) continue;
        const BPoly& p = ms[i].prim;
        add_roots(ev, p.coeffs_in(Var::Y).back());
        add_roots(ev, first_nonzero_psc(p, p.diff(Var::Y)));
        for (size_t j = i + 1; j < ms.size(); ++j)
            if (ms[j].has_y()) add_roots(ev, first_nonzero_psc(p, ms[j].prim));
    }
    return merge_roots(std::move(ev));
}

// Points and open intervals of a line with rational coordinate; the
// callback reports the cell dimension (0 or 1) and its sign vector.
template <class Emit>
void rational_fiber(const std::vector<Member>& ms, const Rat& x, Emit emit) {
    std::vector<int> cs;
    std::vector<UPoly> us;
    UPoly prod(1);
    for (const auto& m : ms) {
        cs.push_back(sgn(m.content.eval(x)));
        UPoly u = m.prim.specialize(Var::X, x);
        us.push_back(u);
        if (u.degree() >= 1) prod *= u;
    }
    std::vector<AlgNumber> roots = prod.degree() >= 1 ? real_roots(squarefree(prod)) : std::vector<AlgNumber>{};
    for (const auto& r : roots) {
        std::vector<int> s;
        for (size_t i = 0; i < ms.size(); ++i) s.push_back(cs[i] * r.sign_of(us[i]));
        emit(0, s);
    }
    for (const Rat& y : separating_samples(roots)) {
        std::vector<int> s;
        for (size_t i = 0; i < ms.size(); ++i) s.push_back(cs[i] * sgn(us[i].eval(y)));
        emit(1, s);
    }
}

// A rational strictly between two consecutive isolated roots.
Rat gap_point(AlgCtx& ctx, const AlgCtx::YPoly& g, Interval& a, Interval& b) {
    while (true) {
        if (a.hi < b.lo) return midpoint(a.hi, b.lo);
        bool a_exact = a.lo == a.hi, b_exact = b.lo == b.hi;
        if (!a_exact && !b_exact) return a.hi;  // shared endpoint is not a root
        if (!a_exact) ctx.refine_root(g, a, a.width() / 2);
        if (!b_exact) ctx.refine_root(g, b, b.width() / 2);
    }
}

template <class Emit>
void algebraic_fiber(const std::vector<Member>& ms, const AlgNumber& e, Emit emit) {
    AlgCtx ctx(e);
    std::vector<int> cs;
    std::vector<AlgCtx::YPoly> fibs;
    AlgCtx::YPoly prod{UPoly(1)};
    for (const auto& m : ms) {
        cs.push_back(ctx.sign(m.content));
        AlgCtx::YPoly f = ctx.fiber(m.prim);
        if (ctx.degree(f) >= 1) prod = ctx.mul(prod, f);
        fibs.push_back(std::move(f));
    }
    AlgCtx::YPoly g;
    std::vector<Interval> ivs;
    if (ctx.degree(prod) >= 1) {
        g = ctx.squarefree(prod);
        ivs = ctx.isolate(g);
    }
    for (const auto& iv : ivs) {
        std::vector<int> s;
        for (size_t i = 0; i < ms.size(); ++i) {
            if (cs[i] == 0) {
                s.push_back(0);
            } else if (ctx.degree(fibs[i]) < 1) {
                s.push_back(cs[i] * ctx.sign(fibs[i][0]));
            } else {
                AlgPoint2 pt(ctx, g, iv);
                s.push_back(cs[i] * pt.sign_of(ms[i].prim));
            }
        }
        emit(0, s);
    }
    std::vector<Rat> ys;
    if (ivs.empty()) {
        ys.push_back(0);
    } else {
        ys.push_back(ivs.front().lo - 1);
        for (size_t k = 0; k + 1 < ivs.size(); ++k) ys.push_back(gap_point(ctx, g, ivs[k], ivs[k + 1]));
        ys.push_back(ivs.back().hi + 1);
    }
    for (const Rat& y : ys) {
        std::vector<int> s;
        for (size_t i = 0; i < ms.size(); ++i) s.push_back(cs[i] == 0 ? 0 : cs[i] * ctx.sign_at(fibs[i], y));
        emit(1, s);
    }
}

}  // namespace

std::vector<SweepStats> sweep(const std::vector<BPoly>& family, const std::vector<SignPredicate>& sets) {
    std::vector<Member> ms;
    for (const auto& f : family) ms.push_back(split(f));
    std::vector<AlgNumber> ev = events_of(ms);
    std::vector<SweepStats> st(sets.size());
    for (auto& t : st) t.events = static_cast<int>(ev.size());
    for (const Rat& x : separating_samples(ev))
        rational_fiber(ms, x, [&](int dim, const std::vector<int>& s) {
            for (size_t k = 0; k < sets.size(); ++k)
                if (sets[k](s)) (dim == 0 ? st[k].arcs : st[k].bands) += 1;
        });
    auto on_line = [&](int dim, const std::vector<int>& s) {
        for (size_t k = 0; k < sets.size(); ++k)
            if (sets[k](s)) (dim == 0 ? st[k].points : st[k].segments) += 1;
    };
    for (const auto& e : ev) {
        if (e.is_rational()) rational_fiber(ms, e.value(), on_line);
        else algebraic_fiber(ms, e, on_line);
    }
    return st;
}

SweepStats sweep(const std::vector<BPoly>& family, const SignPredicate& in_set) { return sweep(family, std::vector{in_set}).front(); }

int chi_c(const std::vector<BPoly>& family, const SignPredicate& in_set, bool transpose) {
    if (!transpose) return sweep(family, in_set).chi_c();
    std::vector<BPoly> sw;
    for (const auto& f : family) sw.push_back(f.swap_vars());
    return sweep(sw, in_set).chi_c();
}

Circle link_circle(const std::vector<BPoly>& family, unsigned seed) {
    std::vector<BPoly> gs;
    for (const auto& f : family)
        if (!f.is_constant()) gs.push_back(squarefree(f));
    for (size_t i = 0; i < gs.size(); ++i)
        for (size_t j = i + 1; j < gs.size(); ++j)
            if (resultant(gs[i], gs[j], Var::Y).is_zero())
                throw DegenerateInput("family members share a curve component");
    for (unsigned k = 0; k < 20; ++k) {
        auto [a1, a2] = seeded_point(seed, k);
        Rat bound = 0;
        bool ok = true;
        auto take = [&](const BPoly& p, const BPoly& q) {
            UPoly rx = resultant(p, q, Var::Y), ry = resultant(p, q, Var::X);
            if (rx.is_zero() || ry.is_zero()) return false;
            Rat b = cauchy_root_bound(rx) + cauchy_root_bound(ry);
            if (b > bound) bound = b;
            return true;
        };
        for (size_t i = 0; i < gs.size() && ok; ++i) {
            const BPoly& g = gs[i];
            BPoly h = (BPoly::x() - BPoly(a1)) * g.diff(Var::Y) - (BPoly::y() - BPoly(a2)) * g.diff(Var::X);
            if (h.is_zero() || !take(g, h)) ok = false;
            for (size_t j = i + 1; j < gs.size() && ok; ++j) ok = take(g, gs[j]);
        }
        if (!ok) continue;
        return Circle{a1, a2, bound + abs_rat(a1) + abs_rat(a2) + 1};
    }
    throw HypothesisViolation("link_circle: no generic centre found");
}

int link_chi(const std::vector<BPoly>& family, const SignPredicate& in_set, unsigned seed) {
    Circle c = link_circle(family, seed);
    return circle_chi(decompose_circle(family, c), in_set);
}

int chi(const std::vector<BPoly>& family, const SignPredicate& in_set) {
    return chi_c(family, in_set) + link_chi(family, in_set);
}

int chi_c(const BPoly& f, const Rat& alpha, Flavor fl) { return chi_c({f - BPoly(alpha)}, flavor_predicate(fl)); }

int chi(const BPoly& f, const Rat& alpha, Flavor fl) { return chi({f - BPoly(alpha)}, flavor_predicate(fl)); }

}  // namespace satopo
