#include "doctest.h"
#include "satopo/critical.hpp"
#include "satopo/infinity.hpp"

using namespace satopo;

namespace {

bool same_set(const std::vector<AlgNumber>& a, const std::vector<AlgNumber>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].compare(b[i]) != 0) return false;
    return true;
}

int sum_deg_above(const std::vector<CriticalPoint>& pts, const Rat& alpha, int side) {
    int s = 0;
    for (const auto& p : pts)
        if (p.value.compare(alpha) == side) s += p.local_degree;
    return s;
}

}  // namespace

TEST_CASE("polar curve examples") {
    CHECK(gamma_polynomial(parse_poly("x^2 + y^2"), {1, 0}).h == parse_poly("-2*y"));
    CHECK(gamma_polynomial(parse_poly("x"), {0, 0}).h == parse_poly("-y"));
    CHECK_THROWS_AS(gamma_polynomial(parse_poly("7"), {0, 0}), DegenerateInput);
}

TEST_CASE("generic base point avoids a planted centre of symmetry") {
    BPoly f = parse_poly("((x - 3)^2 + (y - 7)^2)^2");
    CHECK_THROWS_AS(gamma_polynomial(f, {3, 7}), DegenerateInput);
    Point a = generic_basepoint(f, 0);
    CHECK(!(a.first == 3 && a.second == 7));
    CHECK(!gamma_polynomial(f, a).h.is_zero());
    CHECK(generic_basepoint(f, 4) == generic_basepoint(f, 4));
}

TEST_CASE("certified radius examples") {
    CHECK(certified_radius(parse_poly("x^2 + y^2"), {1, 0}) >= 2);
    CHECK(certified_radius(parse_poly("x"), {0, 0}) > 0);
    BPoly f = parse_poly("x^3 - 3*x + y^2");
    CHECK(certified_radius(f, generic_basepoint(f)) > 1);
}

TEST_CASE("circle Morse data for f = x") {
    auto pts = circle_morse_data(parse_poly("x"), {0, 0}, 1);
    REQUIRE(pts.size() == 2);
    // s = 0 is (1, 0); the antipode is (-1, 0)
    CHECK(!pts[0].point.antipode);
    CHECK(pts[0].mu_sign == 1);
    CHECK(pts[0].circle_index == -1);
    CHECK(pts[1].point.antipode);
    CHECK(pts[1].mu_sign == -1);
    CHECK(pts[1].circle_index == 1);
    auto q = circle_morse_data(parse_poly("x^2 + y^2"), {1, 0}, 10);
    REQUIRE(q.size() == 2);
    for (const auto& p : q) CHECK(p.mu_sign == 1);  // f grows outward at both
    CHECK(circle_morse_data(parse_poly("y"), {0, 0}, 1).size() == 2);
}

TEST_CASE("lambda, mu, nu") {
    for (int alpha : {-1, 1, 5}) {
        LambdaMuNu v = lambda_mu_nu(parse_poly("x^2 + y^2"), Rat(alpha));
        CHECK(v.lambda == 0);
        CHECK(v.mu == 0);
    }
    LambdaMuNu w = lambda_mu_nu(parse_poly("x"), Rat(0));
    CHECK(w.lambda == 0);
    CHECK(w.mu == 0);
    CHECK(w.nu == 1);
}

TEST_CASE("links at infinity") {
    BPoly x = parse_poly("x");
    CHECK(link_chi(x, Rat(0), Flavor::EQ) == 2);
    CHECK(link_chi(x, Rat(0), Flavor::LE) == 1);
    CHECK(link_chi(x, Rat(0), Flavor::GE) == 1);
    BPoly d = parse_poly("x^2 + y^2");
    for (Flavor fl : {Flavor::EQ, Flavor::LE, Flavor::GE}) CHECK(link_chi(d, Rat(1), fl) == 0);
    CHECK(link_chi(parse_poly("x*y"), Rat(0), Flavor::EQ) == 4);
    BPoly b = parse_poly("x*(x*y - 1)");
    CHECK(link_chi(b, Rat(0), Flavor::EQ) == 6);
    CHECK(link_chi(b, Rat(1), Flavor::EQ) == 4);
}

TEST_CASE("algebraic levels agree with nearby rational levels") {
    BPoly f = parse_poly("x^3 - 3*x + y^2");
    AlgNumber r2(UPoly({-2, 0, 1}), Interval{1, 2});
    for (Flavor fl : {Flavor::EQ, Flavor::LE, Flavor::GE})
        CHECK(link_chi(f, r2, fl) == link_chi(f, make_rat(7, 5), fl));
    BPoly g = parse_poly("x*(x*y - 1) + y");
    for (Flavor fl : {Flavor::EQ, Flavor::LE, Flavor::GE})
        CHECK(link_chi(g, r2, fl) == link_chi(g, make_rat(3, 2), fl));
}

TEST_CASE("lambda_set and jump sets") {
    CHECK(lambda_set(parse_poly("x^2 + y^2")).empty());
    CHECK(lambda_set(parse_poly("x")).empty());
    BPoly b = parse_poly("x*(x*y - 1)");
    auto L = lambda_set(b);
    REQUIRE(L.size() == 1);
    CHECK(L[0].compare(Rat(0)) == 0);
    JumpSets js = jump_sets(b, L);
    REQUIRE(js.eq.size() == 1);
    CHECK(js.eq[0].compare(Rat(0)) == 0);
    JumpSets none = jump_sets(parse_poly("x^2 + y^2"), {});
    CHECK((none.le.empty() && none.eq.empty() && none.ge.empty()));
}

TEST_CASE("half branches") {
    CHECK(half_branches(parse_poly("x")) == 2);
    CHECK(r_infinity(parse_poly("x")) == 1);
    CHECK(half_branches(parse_poly("x*(x*y - 1)")) == 6);
    CHECK(r_infinity(parse_poly("x*(x*y - 1)")) == 3);
    CHECK(half_branches(parse_poly("x^2 + y^2 - 1")) == 0);
}

TEST_CASE("property: link relations, base point independence, jump containment") {
    const std::vector<const char*> polys{"x*(x*y - 1)", "x^2*y^2 + x*y - x", "y^2 - x^3 + x", "x^3 - 3*x + y^2",
                                         "x^2 - y^2 + x", "x*y^2 - y + x^2"};
    for (const char* s : polys) {
        BPoly f = parse_poly(s);
        auto L0 = lambda_set(f, 0);
        CHECK(same_set(L0, lambda_set(f, 1)));
        CHECK(same_set(L0, lambda_set(f, 2)));
        JumpSets js = jump_sets(f, L0);
        for (const auto* set : {&js.le, &js.eq, &js.ge})
            for (const auto& v : *set) {
                bool in = false;
                for (const auto& l : L0) in = in || l.compare(v) == 0;
                CHECK(in);
            }
        for (int alpha : {-2, 1, 3}) {
            Rat a(alpha);
            int le = link_chi(f, a, Flavor::LE), eq = link_chi(f, a, Flavor::EQ), ge = link_chi(f, a, Flavor::GE);
            CHECK(eq == le + ge);
            CHECK(eq == 2 * r_infinity(f - BPoly(a)));
            LambdaMuNu v0 = lambda_mu_nu(f, a, 0), v1 = lambda_mu_nu(f, a, 1);
            CHECK(v0 == v1);
        }
    }
}

TEST_CASE("sublevel and level sets against the sweep") {
    // chi(f >= a) - chi(f = a) = sum over f(p) > a of deg + lambda(f, a)
    // chi(f <= a) - chi(f = a) = sum over f(p) < a of deg + lambda(-f, -a)
    const std::vector<const char*> polys{"x*(x*y - 1)", "x^3 - 3*x + y^2", "x^2*y^2 + x*y - x", "x^2 - y^2 + x"};
    for (const char* s : polys) {
        BPoly f = parse_poly(s);
        auto pts = find_critical_points(f);
        for (int alpha : {-3, 1, 2}) {
            Rat a(alpha);
            int eq = chi(f, a, Flavor::EQ);
            CHECK(chi(f, a, Flavor::GE) - eq == sum_deg_above(pts, a, 1) + lambda_mu_nu(f, a).lambda);
            CHECK(chi(f, a, Flavor::LE) - eq == sum_deg_above(pts, a, -1) + lambda_mu_nu(Rat(-1) * f, -a).lambda);
        }
    }
}
