#include "doctest.h"
#include "satopo/critical.hpp"
#include "satopo/infinity.hpp"
#include "satopo/profile.hpp"

using namespace satopo;

namespace {

// Oracle for an irrational level gamma with minimal polynomial m: the
// sweep runs on m(f) together with rational levels a < gamma < b that
// isolate gamma among the roots of m.
int chi_c_by_composition(const BPoly& f, const AlgNumber& gamma, Flavor fl) {
    const UPoly& m = gamma.defining();
    BPoly mf;
    BPoly pw(1);
    for (int k = 0; k <= m.degree(); ++k, pw = pw * f) mf += m.coeff(k) * pw;
    AlgNumber g = gamma;
    std::vector<AlgNumber> others;
    for (auto& r : real_roots(m))
        if (r.compare(g) != 0) others.push_back(r);
    Rat a = g.interval().lo, b = g.interval().hi;
    for (auto& r : others) {
        if (r.compare(g) < 0 && r.compare(a) >= 0) a = r.rational_between(g);
        if (r.compare(g) > 0 && r.compare(b) <= 0) b = g.rational_between(r);
    }
    const int sb = sgn(m.eval(b));
    std::vector<BPoly> fam{mf, f - BPoly(a), f - BPoly(b)};
    SignPredicate pred;
    switch (fl) {
        case Flavor::EQ:
            pred = [](const std::vector<int>& s) { return s[0] == 0 && s[1] > 0 && s[2] < 0; };
            break;
        case Flavor::LE:
            pred = [sb](const std::vector<int>& s) { return s[1] <= 0 || (s[2] < 0 && s[0] * sb <= 0); };
            break;
        default:
            pred = [sb](const std::vector<int>& s) { return s[2] >= 0 || (s[1] > 0 && s[0] * sb >= 0); };
    }
    return chi_c(fam, pred);
}

}  // namespace

TEST_CASE("fiber profile examples") {
    FiberProfile a = fiber_profile(parse_poly("x^2 + y^2"));
    REQUIRE(a.breakpoints.size() == 1);
    CHECK(a.breakpoints[0].compare(Rat(0)) == 0);
    CHECK(a.on_intervals == std::vector<int>{0, 0});
    CHECK(a.at_breakpoints == std::vector<int>{1});
    CHECK(a.constant_between);
    FiberProfile b = fiber_profile(parse_poly("x*(x*y - 1)"));
    REQUIRE(b.breakpoints.size() == 1);
    CHECK(b.breakpoints[0].compare(Rat(0)) == 0);
    CHECK(b.on_intervals == std::vector<int>{2, 2});
    CHECK(b.at_breakpoints == std::vector<int>{3});
    FiberProfile c = fiber_profile(parse_poly("x"));
    CHECK(c.breakpoints.empty());
    CHECK(c.on_intervals == std::vector<int>{1});
}

TEST_CASE("irrational breakpoints: fibration identities against composition") {
    for (const char* s : {"x^3 - 2*x + y^2", "x^3 - 2*x + y^2 - x*y"}) {
        BPoly f = parse_poly(s);
        auto bps = fibration_breakpoints(f);
        int irrational = 0;
        for (const auto& g : bps) {
            if (g.is_rational()) continue;
            ++irrational;
            for (Flavor fl : {Flavor::EQ, Flavor::LE, Flavor::GE})
                CHECK(chi_c_at(f, g, fl, bps) == chi_c_by_composition(f, g, fl));
        }
        CHECK(irrational >= 2);
    }
}

TEST_CASE("profile plateaus are constant") {
    for (const char* s : {"x^3 - 3*x + y^2", "x^2*y^2 + x*y - x", "x^2 - y^2 + x"})
        for (Flavor fl : {Flavor::EQ, Flavor::LE, Flavor::GE}) CHECK(fiber_profile(parse_poly(s), fl).constant_between);
}
