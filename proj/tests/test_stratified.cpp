#include <cmath>
#include <functional>

#include "doctest.h"
#include "satopo/stratified.hpp"

using namespace satopo;

namespace {

const double kPi = std::acos(-1.0);

PlaneSet disk() { return PlaneSet::region(parse_poly("x^2 + y^2 - 1")); }
PlaneSet circle() { return PlaneSet::curve(parse_poly("x^2 + y^2 - 1")); }
PlaneSet half_plane() { return PlaneSet::region(parse_poly("y")); }
PlaneSet below_parabola() { return PlaneSet::region(parse_poly("y - x^2")); }

// Numeric oracle for regions {y <= p(x)}: boundary critical points of v*
// are sign changes of v_x + v_y p'(x); they count only when v_y < 0
// (lambda = v_y (1 + p'^2)), as +1 at a minimum of v* along the graph and
// -1 at a maximum.
int graph_index_sum(const std::function<double(double)>& dp, double vx, double vy) {
    if (vy > 0) return 0;
    int sum = 0;
    const double lo = -50, hi = 50, h = 1e-3;
    double prev = vx + vy * dp(lo);
    for (double x = lo + h; x <= hi; x += h) {
        double cur = vx + vy * dp(x);
        if (prev < 0 && cur > 0) sum += 1;
        if (prev > 0 && cur < 0) sum -= 1;
        prev = cur;
    }
    return sum;
}

}  // namespace

TEST_CASE("plane sets check their hypotheses") {
    CHECK_NOTHROW(disk());
    CHECK_NOTHROW(circle());
    CHECK_THROWS_AS(PlaneSet::region(parse_poly("x^2 - y^2")), HypothesisViolation);
    CHECK_THROWS_AS(PlaneSet::region(parse_poly("x^2 + y^2 + 1")), HypothesisViolation);
    CHECK_THROWS_AS(PlaneSet::curve(parse_poly("y^2 - x^3")), HypothesisViolation);
    CHECK_THROWS_AS(PlaneSet::curve(parse_poly("(x^2 + y^2 - 1)^2")), HypothesisViolation);
    CHECK(disk().compact());
    CHECK(circle().compact());
    CHECK_FALSE(half_plane().compact());
    CHECK_FALSE(PlaneSet::region(parse_poly("1 - x^2 - y^2")).compact());
}

TEST_CASE("stratified critical points on the disk and circle") {
    auto pts = stratified_critical_points(disk(), parse_poly("x"));
    REQUIRE(pts.size() == 2);
    for (auto& p : pts) {
        CHECK(p.stratum == StratCriticalPoint::Stratum::Boundary);
        CHECK(std::fabs(p.point.approx_y()) < 1e-12);
        if (p.point.approx_x() > 0) {
            CHECK(p.lambda_sign == 1);
            CHECK(p.index == 0);
            CHECK(p.index_neg == 1);
        } else {
            CHECK(p.lambda_sign == -1);
            CHECK(p.index == 1);
            CHECK(p.index_neg == 0);
        }
    }
    CHECK_THROWS_AS(stratified_critical_points(disk(), parse_poly("x^2 + y^2")), HypothesisViolation);
    auto c = stratified_critical_points(circle(), parse_poly("y"));
    REQUIRE(c.size() == 2);
    for (auto& p : c) CHECK(p.index == (p.point.approx_y() > 0 ? -1 : 1));
    // interior critical point of a quadratic inside the disk
    auto q = stratified_critical_points(disk(), parse_poly("x^2 - y^2 + 1/3*x"));
    int interior = 0;
    for (auto& p : q)
        if (p.stratum == StratCriticalPoint::Stratum::Interior) {
            ++interior;
            CHECK(p.index == -1);
        }
    CHECK(interior == 1);
}

TEST_CASE("bad directions") {
    CHECK(bad_directions(disk()).empty());
    auto h = bad_directions(half_plane());
    REQUIRE(h.size() == 2);
    for (const auto& b : h) CHECK(std::fabs(std::fabs(b.mid()) - kPi / 2) < 1e-9);
    auto p = bad_directions(PlaneSet::curve(parse_poly("y - x^2")));
    REQUIRE(p.size() >= 2);
    for (const auto& b : p) CHECK((std::fabs(b.mid()) < 1e-9 || std::fabs(std::fabs(b.mid()) - kPi) < 1e-9));
    CHECK(is_bad(half_plane(), Direction{0, 1}));
    CHECK(is_bad(half_plane(), Direction{0, -1}));
    CHECK_FALSE(is_bad(half_plane(), Direction::from_t(Rat(1, 3))));
    // y = x^3 - x has an inflection at the origin with normal (1, 1)
    PlaneSet cubic = PlaneSet::region(parse_poly("y - x^3 + x"));
    bool fold = false;
    for (const auto& b : bad_directions(cubic))
        if (b.kind == "fold" && std::fabs(b.mid() - kPi / 4) < 1e-6) fold = true;
    CHECK(fold);
    CHECK(is_bad(cubic, Direction{Rat(3, 5), Rat(4, 5)}) == false);
    CHECK_THROWS_AS(linear_morse_summary(half_plane(), Direction{0, 1}, 0), DegenerateInput);
}

TEST_CASE("linear Morse summary examples") {
    auto d = linear_morse_summary(disk(), Direction{1, 0}, 0);
    CHECK(d.sum_above == 0);
    CHECK(d.chi_ge - d.chi_eq == 0);
    auto h = linear_morse_summary(half_plane(), Direction::from_t(Rat(1, 3)), 0);
    CHECK(h.points.empty());
    CHECK(h.lk_le == 1);
    CHECK(h.chi_x == 1);
    auto c = linear_morse_summary(circle(), Direction{0, 1}, 0);
    CHECK(c.sum_above == -1);
    CHECK(c.chi_ge == 1);
    CHECK(c.chi_eq == 2);
}

TEST_CASE("both linear identities hold exactly on the suite") {
    const std::vector<Rat> ts{Rat(1, 3), Rat(-2, 7), Rat(5, 2), Rat(-9, 4), Rat(1, 11)};
    const std::vector<Rat> alphas{Rat(-3, 2), Rat(0), Rat(1, 3), Rat(7, 5)};
    for (const PlaneSet& X : {disk(), circle(), half_plane(), below_parabola(), PlaneSet::region(parse_poly("y - x^3 + x"))}) {
        for (const auto& t : ts) {
            Direction v = Direction::from_t(t);
            REQUIRE_FALSE(is_bad(X, v));
            for (const auto& a : alphas) {
                auto s = linear_morse_summary(X, v, a);
                CAPTURE(X.g.str());
                CAPTURE(t.get_str());
                CAPTURE(a.get_str());
                CHECK(s.ge_minus_eq());
                CHECK(s.le_minus_eq());
                CHECK(s.fiber());
                CHECK(s.difference());
                CHECK(s.link_le());
                CHECK(s.link_ge());
                CHECK(s.link_eq());
            }
        }
    }
}

TEST_CASE("index sums match a numeric oracle on graph regions") {
    PlaneSet cubic = PlaneSet::region(parse_poly("y - x^3 + x"));
    for (const auto& t : {Rat(1, 3), Rat(-2, 7), Rat(5, 2), Rat(-9, 4), Rat(3, 1), Rat(-1, 5)}) {
        Direction v = Direction::from_t(t);
        auto d = sample_direction(cubic, v);
        auto dp = [](double x) { return 3 * x * x - 1; };
        CHECK(d.ind_sum == graph_index_sum(dp, v.x.get_d(), v.y.get_d()));
        CHECK(d.ind_sum_neg == graph_index_sum(dp, -v.x.get_d(), -v.y.get_d()));
        auto ds = sample_direction(below_parabola(), v);
        CHECK(ds.ind_sum == graph_index_sum([](double x) { return 2 * x; }, v.x.get_d(), v.y.get_d()));
    }
}

TEST_CASE("Gauss-Bonnet measure") {
    struct Case {
        PlaneSet X;
        Rat expected;
    };
    std::vector<Case> cases{{disk(), 1}, {circle(), 0}, {half_plane(), 0}, {below_parabola(), Rat(-1, 2)}};
    for (auto& c : cases) {
        CAPTURE(c.X.g.str());
        GaussBonnet e = gauss_bonnet_exact(c.X);
        CHECK(e.per_direction_ok);
        CHECK(e.arcs_consistent);
        CHECK(abs(e.value - c.expected) <= e.error);
        CHECK(e.value == e.rhs);
        GaussBonnet s = gauss_bonnet_sampled(c.X, 64);
        CHECK(s.per_direction_ok);
        CHECK(abs(s.value - c.expected) <= Rat(1, 100));
        CHECK(abs(s.value - s.rhs) <= Rat(1, 100));
        if (c.X.compact()) CHECK(e.value == chi_of(c.X));
    }
}

TEST_CASE("compact sets: the index sums of f and -f give twice chi") {
    PlaneSet X = disk();
    PlaneSet E = PlaneSet::region(parse_poly("1/4*x^2 + y^2 - 1"));
    for (const char* f : {"x*y + 1/5*x", "x^2 - y^2 + 1/3*x", "x^3 - y", "x + 2*y"}) {
        for (const PlaneSet& S : {X, E, circle()}) {
            int sum = 0;
            for (const auto& p : stratified_critical_points(S, parse_poly(f))) sum += p.index + p.index_neg;
            CAPTURE(f);
            CHECK(sum == 2 * chi_of(S));
        }
    }
}

TEST_CASE("index sums are constant between bad directions") {
    PlaneSet cubic = PlaneSet::region(parse_poly("y - x^3 + x"));
    GaussBonnet e = gauss_bonnet_exact(cubic);
    CHECK(e.arcs_consistent);
    CHECK(e.per_direction_ok);
    GaussBonnet s = gauss_bonnet_sampled(cubic, 64);
    CHECK(abs(s.value - e.value) <= s.error + e.error);
}
