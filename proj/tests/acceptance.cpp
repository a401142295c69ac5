// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "satopo/critical.hpp"
#include "satopo/infinity.hpp"
#include "satopo/profile.hpp"
#include "satopo/verify.hpp"

using namespace satopo;
using I = IdentityId;

namespace {

const unsigned kSeed = 2024;

struct Outcome {
    bool ok = true;
    std::ostringstream note;
    int checks = 0;

    void expect(bool c, const std::string& what) {
        ++checks;
        if (!c && ok) note << "first failure: " << what;
        ok = ok && c;
    }
};

VerifyInput poly_input(const BPoly& f, std::optional<Rat> alpha = std::nullopt) {
    VerifyInput in;
    in.poly = f;
    in.text = f.str();
    in.alpha = alpha;
    in.seed = kSeed % 7;
    return in;
}

VerifyInput set_input(const char* g, VerifyInput::Kind k) {
    VerifyInput in;
    in.kind = k;
    in.text = g;
    in.poly = parse_poly(g);
    return in;
}

std::string show(const IdentityReport& r) {
    std::string s = identity_name(r.id) + " on " + r.input;
    if (r.skipped()) return s + " skipped: " + *r.skipped_reason;
    if (const Equation* h = r.head()) s += " (" + h->name + ": " + h->lhs.get_str() + " vs " + h->rhs.get_str() + ")";
    return s;
}

bool contains(const std::vector<AlgNumber>& set, const AlgNumber& v) {
    for (const auto& x : set)
        if (x.compare(v) == 0) return true;
    return false;
}

const std::vector<BPoly>& corpus() {
    static const std::vector<BPoly> c = random_corpus(kSeed, 20, 4);
    return c;
}

Outcome local_fibers() {
    Outcome o;
    const std::vector<std::pair<const char*, int>> germs{{"x^2 + y^2", 1}, {"x^2 - y^2", -1}, {"x^3 - 3*x*y^2", -2}, {"-x^2 - y^2", 1}};
    for (auto [s, deg] : germs) {
        BPoly f = parse_poly(s);
        auto cps = find_critical_points(f);
        o.expect(cps.size() == 1 && cps[0].local_degree == deg, std::string("local degree of ") + s);
        for (I id : {I::KH_LOC_FIBER, I::KH_LOC_LE, I::KH_LOC_GE}) {
            auto r = verify(id, poly_input(f));
            o.expect(r.pass(), show(r));
        }
    }
    return o;
}

Outcome branches_at_infinity() {
    Outcome o;
    BPoly f = parse_poly("x*(x*y - 1)");
    auto lam = lambda_set(f);
    o.expect(lam.size() == 1 && lam[0].compare(Rat(0)) == 0, "Lambda_f = {0}");
    o.expect(half_branches(f) == 6, "6 half-branches at 0");
    o.expect(half_branches(f - BPoly(Rat(1))) == 4, "4 half-branches at a generic level");
    o.expect(degree_at_infinity(f) == 0, "deg_inf = 0");
    auto r = verify(I::SEKALSKI, poly_input(f));
    o.expect(r.pass() && r.head()->lhs == 0 && r.head()->rhs == 0, show(r));
    o.expect(r.witnesses["r_inf_at_lambda"] == nlohmann::ordered_json::array({3}), "r(f) = 3");
    return o;
}

Outcome degree_additivity() {
    Outcome o;
    for (const BPoly& f : corpus()) {
        int sum = 0;
        for (const auto& p : find_critical_points(f)) sum += p.local_degree;
        o.expect(sum == degree_at_infinity(f), "additivity for " + f.str());
    }
    o.note << (o.ok ? "" : "; ") << corpus().size() << " polynomials";
    return o;
}

Outcome whole_line() {
    Outcome o;
    std::vector<BPoly> polys = corpus();
    polys.push_back(parse_poly("x*(x*y - 1)"));
    polys.push_back(parse_poly("x^2*y - x"));
    // T4.5 together with the other closed-loop identities
    const std::vector<I> ids{I::T4_5_ALL, I::T3_20, I::T3_21_LE, I::T3_21_GE, I::C3_22, I::T4_4};
    for (const BPoly& f : polys)
        for (const auto& r : verify_many(ids, poly_input(f))) o.expect(r.pass(), show(r));
    auto s = verify(I::T4_5_ALL, poly_input(parse_poly("x^2*y")));
    o.expect(s.skipped() && !s.pass(), "x^2*y must be skipped with a reason");
    if (o.ok) o.note << "x^2*y skipped: " << *s.skipped_reason;
    return o;
}

Outcome links_partition() {
    Outcome o;
    BPoly f = parse_poly("x*(x*y - 1)");
    for (I id : {I::T3_16, I::T3_17, I::C3_18}) {
        auto r = verify(id, poly_input(f));
        o.expect(r.pass(), show(r));
        // C3.18 reads 2chi(R^2) - chi(Lk R^2) = 2
        const int lhs = id == I::C3_18 ? 2 : 1;
        o.expect(r.head() && r.head()->lhs == lhs, identity_name(id) + " lhs from chi(R^2) = 1");
    }
    return o;
}

Outcome circle_morse() {
    Outcome o;
    int reports = 0;
    for (const BPoly& f : corpus())
        for (const Rat& a : default_alphas(f, kSeed % 7))
            for (const auto& r : verify_many({I::P3_6_GE, I::P3_6_LE, I::C3_7_FIBER, I::C3_7_DIFF, I::P3_8_LE, I::P3_8_GE, I::C3_9},
                                             poly_input(f, a))) {
                ++reports;
                o.expect(r.pass(), show(r));
            }
    o.note << (o.ok ? "" : "; ") << reports << " reports";
    return o;
}

Outcome stratified() {
    Outcome o;
    using K = VerifyInput::Kind;
    const std::vector<VerifyInput> sets{set_input("x^2 + y^2 - 1", K::Region), set_input("y - x^2", K::Region),
                                        set_input("y", K::Region), set_input("x^2 + y^2 - 1", K::Curve)};
    for (const auto& in : sets)
        for (I id : {I::P5_4_ALL, I::P5_5_ALL}) {
            auto r = verify(id, in);
            o.expect(r.pass(), show(r));
            o.expect(r.witnesses.contains("directions") && r.witnesses["directions"].get<int>() == 5, show(r) + ": five directions");
        }
    auto disk = verify(I::T5_6, sets[0]);
    o.expect(disk.pass() && disk.head()->lhs == 1, show(disk));
    auto circ = verify(I::T5_6, sets[3]);
    o.expect(circ.pass() && circ.head()->lhs == 0, show(circ));
    const std::vector<std::pair<const VerifyInput*, Rat>> open{{&sets[1], make_rat(-1, 2)}, {&sets[2], Rat(0)}};
    for (auto [in, expected] : open) {
        VerifyInput s = *in;
        s.samples = 64;
        s.tol = make_rat(1, 100);
        auto r = verify(I::T5_8, s);
        o.expect(r.pass(), show(r));
        VerifyInput e = *in;
        e.exact_mode = true;
        auto re = verify(I::T5_8, e);
        o.expect(re.pass(), show(re));
        GaussBonnet g = gauss_bonnet_exact(in->kind == K::Region ? PlaneSet::region(in->poly) : PlaneSet::curve(in->poly));
        o.expect(abs(g.value - expected) <= g.error, "exact Gauss-Bonnet of " + in->text + " is " + expected.get_str());
    }
    return o;
}

Outcome properties() {
    Outcome o;
    std::vector<BPoly> polys{parse_poly("x*(x*y - 1)"), parse_poly("x^2*y^2 + x*y - x"), parse_poly("x^2*y - x"),
                             parse_poly("x^3 - 3*x + y^2"), parse_poly("x^4 + y^4 - x*y"), parse_poly("x^2 + y^2")};
    for (size_t i = 0; i < 6 && i < corpus().size(); ++i) polys.push_back(corpus()[i]);
    int proper = 0;
    for (const BPoly& f : polys) {
        const std::string name = f.str();
        auto lam = lambda_set(f);
        JumpSets js = jump_sets(f, lam);
        for (const auto* set : {&js.le, &js.eq, &js.ge})
            for (const auto& v : *set) o.expect(contains(lam, v), "jump inside Lambda_f for " + name);
        for (const auto& v : js.eq) o.expect(contains(js.le, v) || contains(js.ge, v), "Lambda= in Lambda<= u Lambda>= for " + name);
        for (const auto& v : js.le) o.expect(contains(js.eq, v) || contains(js.ge, v), "Lambda<= in Lambda= u Lambda>= for " + name);
        for (const auto& v : js.ge) o.expect(contains(js.le, v) || contains(js.eq, v), "Lambda>= in Lambda<= u Lambda= for " + name);

        const Point a = generic_basepoint(f);
        const Rat R = certified_radius(f, a);
        BPoly fx = f.diff(Var::X), fy = f.diff(Var::Y);
        const int deg = degree_at_infinity(f);
        for (const Rat& r : std::vector<Rat>{R, Rat(2 * R), Rat(4 * R)}) o.expect(winding_number(fx, fy, Circle{a.first, a.second, r}) == deg, "radius doubling for " + name);

        for (const Rat& al : default_alphas(f)) {
            const BPoly g = f - BPoly(al);
            const Rat Rg = certified_radius(f, a, {g});
            o.expect(curve_circle_intersections(g, Circle{a.first, a.second, Rg}).size() % 2 == 0, "even parity for " + name);
            o.expect(chi_c(f, al, Flavor::LE) + chi_c(f, al, Flavor::GE) - chi_c(f, al, Flavor::EQ) == 1,
                     "chi_c additivity for " + name + " at " + al.get_str());
            o.expect(link_chi(f, al, Flavor::EQ) == 2 * r_infinity(g), "link = 2 r_inf for " + name);
            if (lam.empty() && r_infinity(g) == 0) {
                ++proper;
                for (const BPoly& h : {f, BPoly(Rat(0)) - f}) {
                    LambdaMuNu v = lambda_mu_nu(h, h == f ? al : -al);
                    o.expect(v.lambda == 0 && v.mu == 0, "lambda = mu = 0 for proper " + name);
                }
            }
        }
        for (Flavor fl : {Flavor::EQ, Flavor::LE, Flavor::GE})
            o.expect(fiber_profile(f, fl).constant_between, "plateau constancy for " + name);
    }
    o.expect(proper > 0, "at least one proper member");
    o.note << (o.ok ? "" : "; ") << polys.size() << " polynomials, " << proper << " proper levels";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"local fibers at isolated critical points", local_fibers},
        {"branches at infinity on x(xy - 1)", branches_at_infinity},
        {"degree at infinity is the sum of local degrees", degree_additivity},
        {"fibration identities over the whole line", whole_line},
        {"plane from links at infinity", links_partition},
        {"circle Morse data at three levels", circle_morse},
        {"stratified sets and Gauss-Bonnet", stratified},
        {"property suite", properties},
    };
    int failed = 0, n = 0;
    for (const auto& [name, run] : criteria) {
        ++n;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note << "exception: " << e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "criterion " << n << ": " << (o.ok ? "PASS" : "FAIL") << "  " << name << "  [" << o.checks << " checks, "
                  << secs << " s] " << o.note.str() << std::endl;
        if (!o.ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
