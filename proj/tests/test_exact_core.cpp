#include <random>

#include "doctest.h"
#include "satopo/bpoly.hpp"
#include "satopo/resultant.hpp"
#include "satopo/roots.hpp"

using namespace satopo;

namespace {

// Hand-expanded 2x2 / 3x3 determinants, independent of the library.
Rat det2(Rat a, Rat b, Rat c, Rat d) { return a * d - b * c; }

UPoly poly_from_roots(const std::vector<long>& roots) {
    UPoly p(1);
    for (long r : roots) p *= UPoly::linear_root(Rat(r));
    return p;
}

UPoly random_upoly(std::mt19937& rng, int deg) {
    std::uniform_int_distribution<int> d(-5, 5);
    std::vector<Rat> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(d(rng));
    if (sgn(c.back()) == 0) c.back() = 1;
    return UPoly(c);
}

BPoly random_bpoly(std::mt19937& rng, int deg) {
    std::uniform_int_distribution<int> d(-3, 3);
    BPoly p;
    for (int i = 0; i <= deg; ++i)
        for (int j = 0; i + j <= deg; ++j) p += BPoly::monomial(i, j, d(rng));
    if (p.is_zero()) p = BPoly::x();
    return p;
}

}  // namespace

TEST_CASE("rationals stay canonical") {
    Rat a = make_rat(6, 4);
    CHECK(a.get_num() == 3);
    CHECK(a.get_den() == 2);
    Rat b = make_rat(3, -9);
    CHECK(b.get_num() == -1);
    CHECK(b.get_den() == 3);
    CHECK(to_string(a + b) == "7/6");
    CHECK(parse_rat("-10/4") == make_rat(-5, 2));
}

TEST_CASE("parser") {
    BPoly p = parse_poly("x^2*y - 3*x + 1/2");
    CHECK(p.eval(2, 3) == Rat(12 - 6) + make_rat(1, 2));
    CHECK(parse_poly("-(x+y)^2") == -(BPoly::x() * BPoly::x() + Rat(2) * BPoly::x() * BPoly::y() + BPoly::y() * BPoly::y()));
    CHECK(parse_poly("x*(x*y - 1)").str() == "x^2*y - x");
    CHECK_THROWS_AS(parse_poly("2x"), Error);
    CHECK_THROWS_AS(parse_poly("x^-1"), Error);
    CHECK_THROWS_AS(parse_poly("x + z"), Error);
    CHECK_THROWS_AS(parse_poly("1/0"), Error);
    CHECK(parse_poly("3/6*x") == BPoly::monomial(1, 0, make_rat(1, 2)));
}

TEST_CASE("bivariate basics") {
    BPoly f = parse_poly("x^3 - 3*x*y^2");
    CHECK(f.total_degree() == 3);
    CHECK(f.diff(Var::X) == parse_poly("3*x^2 - 3*y^2"));
    CHECK(f.diff(Var::Y) == parse_poly("-6*x*y"));
    CHECK(f.swap_vars() == parse_poly("y^3 - 3*y*x^2"));
    CHECK(f.translate(1, 0).eval(0, 0) == f.eval(1, 0));
    CHECK(parse_poly("x^2 + x + y").leading_form() == parse_poly("x^2"));
    Interval v = f.eval(Interval(make_rat(1, 2), Rat(1)), Interval(Rat(0), make_rat(1, 4)));
    for (Rat xs : {make_rat(1, 2), make_rat(3, 4), Rat(1)})
        for (Rat ys : {Rat(0), make_rat(1, 8), make_rat(1, 4)}) CHECK(v.contains(f.eval(xs, ys)));
}

TEST_CASE("resultant examples") {
    // Res_x(x - 1, x + 1): det [[1, -1], [1, 1]]
    UPoly r = resultant(parse_poly("x - 1"), parse_poly("x + 1"), Var::X);
    CHECK(r.degree() == 0);
    CHECK(r.coeff(0) == det2(1, -1, 1, 1));
    CHECK(r.coeff(0) == 2);
    CHECK(resultant(parse_poly("x^3*y - 2*x + 7"), BPoly(1), Var::X) == UPoly(std::vector<Rat>{1}, 'y'));
    UPoly r2 = resultant(parse_poly("y^2 - x"), parse_poly("y"), Var::Y);
    CHECK(r2 == UPoly({0, -1}));
    // equals +-p(y = 0)
    CHECK(abs_rat(r2.eval(5)) == abs_rat(parse_poly("y^2 - x").eval(5, 0)));
    CHECK_THROWS_AS(resultant(BPoly(), BPoly(), Var::Y), DegenerateInput);
}

TEST_CASE("resultant specialization against direct gcd") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        BPoly p = random_bpoly(rng, 3), q = random_bpoly(rng, 3);
        if (p.degree(Var::X) < 1 || q.degree(Var::X) < 1) continue;
        UPoly r = resultant(p, q, Var::X);
        for (int v = -3; v <= 3; ++v) {
            UPoly pv = p.specialize(Var::Y, v), qv = q.specialize(Var::Y, v);
            // Formal leading coefficients both vanishing also zeroes the resultant.
            bool lc_drop = pv.degree() < p.degree(Var::X) && qv.degree() < q.degree(Var::X);
            bool common = gcd(pv, qv).degree() >= 1;
            if (!lc_drop) CHECK((sgn(r.eval(v)) == 0) == common);
        }
    }
}

TEST_CASE("resultant with a level parameter") {
    BPoly h = parse_poly("y^2 - x"), f = parse_poly("x + y");
    BPoly e = resultant_level(h, f, Var::Y);
    for (int t = -3; t <= 3; ++t) {
        UPoly direct = resultant(h, f - BPoly(t), Var::Y);
        for (int x = -2; x <= 2; ++x) CHECK(e.eval(x, t) == direct.eval(x));
    }
}

TEST_CASE("principal subresultants detect the gcd degree") {
    // (y - x)^2 (y + 1) and its y-derivative share (y - x) generically.
    BPoly p = parse_poly("(y - x)^2*(y + 1)");
    auto psc = principal_subresultants(p, p.diff(Var::Y), Var::Y);
    REQUIRE(psc.size() >= 2);
    CHECK(psc[0].is_zero());
    CHECK(!psc[1].is_zero());
}

TEST_CASE("sturm_count examples") {
    CHECK(sturm_count(UPoly({-2, 0, 1}), Interval(Rat(0), Rat(2))) == 1);
    CHECK(sturm_count(UPoly({1, 0, 1}), Interval(Rat(-10), Rat(10))) == 0);
    CHECK(sturm_count(poly_from_roots({1, 2, 3}), Interval(Rat(0), Rat(4))) == 3);
    try {
        sturm_count(UPoly({-1, 1}), Interval(Rat(1), Rat(3)));
        FAIL("expected EndpointRoot");
    } catch (const EndpointRoot& e) {
        CHECK(e.at_lo());
    }
}

TEST_CASE("isolate_roots examples") {
    auto r = isolate_roots(UPoly({-2, 0, 1}));
    REQUIRE(r.size() == 2);
    UPoly p({-2, 0, 1});
    for (const auto& iv : r) CHECK(p.sign_at(iv.lo) * p.sign_at(iv.hi) < 0);
    CHECK(r[0].hi <= 0);
    CHECK(r[1].lo >= 0);
    auto narrow = isolate_roots(p, Rat(1, 2));
    CHECK(narrow[0].lo >= -2);
    CHECK(narrow[0].hi <= -1);
    CHECK(narrow[1].lo >= 1);
    CHECK(narrow[1].hi <= 2);
    CHECK(isolate_roots(UPoly({1, 0, 1})).empty());
    auto c = isolate_roots(UPoly::monomial(3));
    REQUIRE(c.size() == 1);
    CHECK(c[0].contains(0));
    auto q = isolate_roots(poly_from_roots({0, 0, 5, -7, 5}));
    CHECK(q.size() == 3);
}

TEST_CASE("refine examples") {
    AlgNumber s(UPoly({-2, 0, 1}), Interval(Rat(1), Rat(2)));
    AlgNumber t = s.refined(Rat(1, 8));
    CHECK(t.interval().width() <= Rat(1, 8));
    CHECK(t.interval().lo * t.interval().lo < 2);
    CHECK(t.interval().hi * t.interval().hi > 2);
    AlgNumber three(UPoly({-3, 1}), Interval(Rat(2), Rat(4)));
    CHECK(three.refined(Rat(1, 8)).is_rational());
    CHECK(three.value() == 3);
    AlgNumber u = s.refined(Rat(2));
    CHECK(u.interval().lo == 1);
    CHECK(u.interval().hi == 2);
}

TEST_CASE("cauchy_root_bound examples") {
    CHECK(cauchy_root_bound(UPoly({-4, 0, 1})) == 5);
    CHECK(cauchy_root_bound(UPoly(7)) == 0);
    CHECK(cauchy_root_bound(UPoly({0, -1, 0, 1})) == 2);
}

TEST_CASE("algebraic numbers compare exactly") {
    AlgNumber s2(UPoly({-2, 0, 1}), Interval(Rat(1), Rat(2)));
    AlgNumber s8(UPoly({-8, 0, 1}), Interval(Rat(2), Rat(3)));
    CHECK(s2 < s8);
    AlgNumber two_s2(UPoly({-8, 0, 1}), Interval(Rat(2), Rat(3)));
    CHECK(s8 == two_s2);
    CHECK(s2.sign_of(UPoly({0, 0, 1}) - UPoly(2)) == 0);
    CHECK(s2.sign_of(UPoly({-1, 1})) > 0);
    Rat m = s2.rational_between(s8);
    CHECK(s2.compare(m) < 0);
    CHECK(s8.compare(m) > 0);
    auto merged = merge_roots({s8, s2, two_s2, AlgNumber(Rat(1))});
    CHECK(merged.size() == 3);
}

TEST_CASE("property: root count matches Sturm count on the Cauchy box") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        UPoly p = random_upoly(rng, 1 + trial % 8);
        Rat b = cauchy_root_bound(p);
        auto roots = isolate_roots(p);
        CHECK(static_cast<int>(roots.size()) == sturm_count(p, Interval(-b - 1, b + 1)));
        for (const auto& iv : roots) {
            if (iv.lo == iv.hi) {
                CHECK(p.sign_at(iv.lo) == 0);
                continue;
            }
            AlgNumber a(squarefree(p), iv);
            UPoly d = a.defining();
            int slo = d.sign_at(iv.lo), shi = d.sign_at(iv.hi);
            a.refine(Rat(1, 1000));
            if (!a.is_rational()) {
                CHECK(d.sign_at(a.interval().lo) == slo);
                CHECK(d.sign_at(a.interval().hi) == shi);
            }
        }
    }
}
