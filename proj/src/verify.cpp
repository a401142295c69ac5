#include "satopo/verify.hpp"

#include <exception>
#include <functional>
#include <istream>
#include <map>
#include <random>
#include <sstream>

#include "satopo/infinity.hpp"
#include "satopo/profile.hpp"

namespace satopo {

using json = nlohmann::ordered_json;

namespace {

struct Entry {
    IdentityId id;
    const char* name;
    bool function;
    bool alpha;
};

const std::vector<Entry>& catalog() {
    using I = IdentityId;
    static const std::vector<Entry> c{
        {I::KH_LOC_FIBER, "KH-LOC-FIBER", true, false}, {I::KH_LOC_LE, "KH-LOC-LE", true, false},
        {I::KH_LOC_GE, "KH-LOC-GE", true, false},       {I::SEKALSKI, "SEKALSKI", true, false},
        {I::T3_1_GE, "T3.1-GE", true, true},            {I::T3_1_LE, "T3.1-LE", true, true},
        {I::C3_2_FIBER, "C3.2-FIBER", true, true},      {I::C3_2_DIFF, "C3.2-DIFF", true, true},
        {I::C3_3, "C3.3", true, true},                  {I::C3_4, "C3.4", true, false},
        {I::P3_6_GE, "P3.6-GE", true, true},            {I::P3_6_LE, "P3.6-LE", true, true},
        {I::C3_7_FIBER, "C3.7-FIBER", true, true},      {I::C3_7_DIFF, "C3.7-DIFF", true, true},
        {I::P3_8_LE, "P3.8-LE", true, true},            {I::P3_8_GE, "P3.8-GE", true, true},
        {I::C3_9, "C3.9", true, true},                  {I::T3_16, "T3.16", true, false},
        {I::T3_17, "T3.17", true, false},               {I::C3_18, "C3.18", true, false},
        {I::P3_19, "P3.19", true, false},               {I::T3_20, "T3.20", true, false},
        {I::T3_21_LE, "T3.21-LE", true, false},         {I::T3_21_GE, "T3.21-GE", true, false},
        {I::C3_22, "C3.22", true, false},               {I::P4_1_GE, "P4.1-GE", true, true},
        {I::P4_1_LE, "P4.1-LE", true, true},            {I::C4_2_FIBER, "C4.2-FIBER", true, true},
        {I::C4_2_DIFF, "C4.2-DIFF", true, true},        {I::P4_3_LINKS, "P4.3-LINKS", true, true},
        {I::T4_4, "T4.4", true, false},                 {I::T4_5_ALL, "T4.5-ALL", true, false},
        {I::P5_4_ALL, "P5.4-ALL", false, true},         {I::P5_5_ALL, "P5.5-ALL", false, true},
        {I::T5_6, "T5.6", false, false},                {I::T5_8, "T5.8", false, false},
    };
    return c;
}

const Entry& entry(IdentityId id) {
    for (const auto& e : catalog())
        if (e.id == id) return e;
    throw Error("unknown identity");
}

// Computes once, remembering either the value or the exception.
template <class T>
class Lazy {
public:
    template <class F>
    T& get(F&& make) {
        if (!done_) {
            done_ = true;
            try {
                v_.emplace(make());
            } catch (...) {
                err_ = std::current_exception();
            }
        }
        if (err_) std::rethrow_exception(err_);
        return *v_;
    }

private:
    bool done_ = false;
    std::optional<T> v_;
    std::exception_ptr err_;
};

const char* fl_key(Flavor fl) { return flavor_name(fl); }

// Everything the function identities need about one polynomial. The left
// sides only use sweeps (chi, chi_c, links); right sides use critical
// points, winding numbers and circle Morse data.
class PolyData {
public:
    PolyData(BPoly f, unsigned seed) : f_(std::move(f)), seed_(seed) {}

    const BPoly& f() const { return f_; }
    unsigned seed() const { return seed_; }

    std::vector<CriticalPoint>& crit() {
        return crit_.get([&] {
            if (f_.is_constant()) throw HypothesisViolation("constant function: every point is critical");
            return find_critical_points(f_);
        });
    }
    int deg_inf() {
        return deg_inf_.get([&] { return degree_at_infinity(f_); });
    }
    std::vector<AlgNumber>& lambda() {
        return lambda_.get([&] { return lambda_set(f_, seed_); });
    }
    JumpSets& jumps() {
        return jumps_.get([&] { return jump_sets(f_, lambda(), seed_); });
    }
    // critical values together with Lambda_f: f is a fibration off these
    std::vector<AlgNumber>& fibration() {
        return fib_.get([&] {
            std::vector<AlgNumber> all = critical_values(crit());
            for (const auto& l : lambda()) all.push_back(l);
            return merge_roots(std::move(all));
        });
    }
    // critical values together with the jumps of the <= and >= links
    std::vector<AlgNumber>& btilde() {
        return bt_.get([&] {
            std::vector<AlgNumber> all = critical_values(crit());
            for (const auto& l : jumps().le) all.push_back(l);
            for (const auto& l : jumps().ge) all.push_back(l);
            return merge_roots(std::move(all));
        });
    }

    // sums of indices (ind(-f, p) equals ind(f, p) in the plane)
    int sum_ind(const std::function<bool(int)>& keep_cmp, const Rat& a) {
        int s = 0;
        for (auto& p : crit())
            if (keep_cmp(p.value.compare(a))) s += p.local_degree;
        return s;
    }
    int sum_ind() {
        int s = 0;
        for (auto& p : crit()) s += p.local_degree;
        return s;
    }

    LambdaMuNu lmn(const Rat& a) {
        auto it = lmn_.find(a.get_str());
        if (it != lmn_.end()) return it->second;
        return lmn_[a.get_str()] = lambda_mu_nu(f_, a, seed_);
    }
    LambdaMuNu lmn_neg(const Rat& a) {
        auto it = lmn_neg_.find(a.get_str());
        if (it != lmn_neg_.end()) return it->second;
        return lmn_neg_[a.get_str()] = lambda_mu_nu(-f_, Rat(-a), seed_);
    }

    // chi and link at rational or algebraic levels
    int chi_at_level(const AlgNumber& g, Flavor fl) {
        std::string key = g.str() + fl_key(fl);
        auto it = chi_.find(key);
        if (it != chi_.end()) return it->second;
        if (g.is_rational()) return chi_[key] = chi(f_, g.value(), fl);
        LevelChi c = chi_c_levels(f_, g, fibration());
        for (Flavor k : {Flavor::LE, Flavor::EQ, Flavor::GE})
            chi_[g.str() + fl_key(k)] = c.of(k) + link_at_level(g, k);
        return chi_[key];
    }
    int link_at_level(const AlgNumber& g, Flavor fl) {
        std::string key = g.str() + fl_key(fl);
        auto it = lk_.find(key);
        if (it != lk_.end()) return it->second;
        int v = g.is_rational() ? link_chi(f_, g.value(), fl, seed_) : link_chi(f_, g, fl, seed_);
        return lk_[key] = v;
    }

    // chi(R^2) and chi of its link, from the sweep rather than by fiat
    int chi_plane() {
        return chi_x_.get([] { return chi({BPoly::x()}, [](const std::vector<int>&) { return true; }); });
    }
    int link_plane() {
        return lk_x_.get([] { return link_chi({BPoly::x()}, [](const std::vector<int>&) { return true; }); });
    }

    json crit_witness() {
        json a = json::array();
        for (auto& p : crit())
            a.push_back({{"x", p.point.approx_x()}, {"y", p.point.approx_y()}, {"local_degree", p.local_degree}, {"value", p.value.str()}});
        return a;
    }

private:
    BPoly f_;
    unsigned seed_;
    Lazy<std::vector<CriticalPoint>> crit_;
    Lazy<int> deg_inf_;
    Lazy<std::vector<AlgNumber>> lambda_;
    Lazy<JumpSets> jumps_;
    Lazy<std::vector<AlgNumber>> fib_, bt_;
    Lazy<int> chi_x_, lk_x_;
    std::map<std::string, LambdaMuNu> lmn_, lmn_neg_;
    std::map<std::string, int> chi_, lk_;
};

json alg_list(const std::vector<AlgNumber>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

json lmn_json(const LambdaMuNu& l) { return {{"lambda", l.lambda}, {"mu", l.mu}, {"nu", l.nu}, {"radius", l.radius.get_str()}}; }

void eq(IdentityReport& r, std::string name, long lhs, long rhs) { r.equations.push_back({std::move(name), Rat(lhs), Rat(rhs)}); }

// Sum over open gaps of q(sample) minus sum over points of q(point).
int alternating(const std::vector<AlgNumber>& pts, const std::function<int(const AlgNumber&)>& q) {
    int acc = 0;
    for (const Rat& s : separating_samples(pts)) acc += q(AlgNumber(s));
    for (const auto& p : pts) acc -= q(p);
    return acc;
}

void require_proper(PolyData& d, const Rat& a, IdentityReport& r) {
    if (!d.lambda().empty()) throw HypothesisViolation("f is not proper: Lambda_f = " + alg_list(d.lambda()).dump());
    // With Lambda_f empty all fibers look alike at infinity; f is proper
    // exactly when they are bounded.
    int branches = r_infinity(d.f() - BPoly(a), d.seed());
    r.witnesses["r_inf_of_fiber"] = branches;
    if (branches != 0) throw HypothesisViolation("f is not proper: the fiber at alpha has " + std::to_string(branches) + " branches at infinity");
    LambdaMuNu l = d.lmn(a), n = d.lmn_neg(a);
    r.witnesses["lambda_mu_nu"] = lmn_json(l);
    r.witnesses["lambda_mu_nu_neg"] = lmn_json(n);
    if (l.lambda || l.mu || n.lambda || n.mu) throw HypothesisViolation("f is not proper: nonzero circle index sums at infinity");
}

auto gt = [](int c) { return c > 0; };
auto lt = [](int c) { return c < 0; };
auto le = [](int c) { return c <= 0; };

void run_function(IdentityId id, PolyData& d, const Rat& a, IdentityReport& r) {
    using I = IdentityId;
    const BPoly& f = d.f();
    auto& w = r.witnesses;
    w["critical_points"] = d.crit_witness();
    auto chi_lvl = [&](Flavor fl) { return d.chi_at_level(AlgNumber(a), fl); };
    auto lk_lvl = [&](Flavor fl) { return d.link_at_level(AlgNumber(a), fl); };
    if (entry(id).alpha) w["alpha"] = a.get_str();

    switch (id) {
        case I::KH_LOC_FIBER:
        case I::KH_LOC_LE:
        case I::KH_LOC_GE: {
            auto& cps = d.crit();
            if (cps.empty()) throw HypothesisViolation("f has no critical point");
            json lfs = json::array();
            for (size_t i = 0; i < cps.size(); ++i) {
                LocalFiber lf = local_fiber(f, cps[i], cps);
                const int deg = cps[i].local_degree;
                const std::string p = "p" + std::to_string(i) + " ";
                lfs.push_back({{"points_below", lf.points_below}, {"points_above", lf.points_above}, {"chi_le", lf.chi_le},
                               {"chi_ge", lf.chi_ge}, {"chi_eq", lf.chi_eq}, {"radius", lf.circle.r.get_str()}});
                if (id == I::KH_LOC_FIBER) {
                    // the local fiber is a union of arcs ending on the small circle
                    eq(r, p + "fiber below", lf.points_below / 2, 1 - deg);
                    eq(r, p + "fiber above", lf.points_above / 2, 1 - deg);
                    eq(r, p + "link of the level", lf.chi_eq, 2 - 2 * deg);
                } else if (id == I::KH_LOC_LE) {
                    eq(r, p + "link of the sublevel", lf.chi_le, 1 - deg);
                } else {
                    eq(r, p + "link of the superlevel", lf.chi_ge, 1 - deg);
                }
            }
            w["local_fibers"] = lfs;
            break;
        }
        case I::SEKALSKI: {
            auto& lam = d.lambda();
            auto r_inf = [&](const AlgNumber& g) {
                if (g.is_rational()) return r_infinity(f - BPoly(g.value()), d.seed());
                return link_chi(f, g, Flavor::EQ, d.seed()) / 2;
            };
            int at = 0, gaps = 0;
            json ra = json::array(), rg = json::array();
            for (const auto& l : lam) {
                int v = r_inf(l);
                at += v;
                ra.push_back(v);
            }
            for (const Rat& s : separating_samples(lam)) {
                int v = r_inf(AlgNumber(s));
                gaps += v;
                rg.push_back({{"level", s.get_str()}, {"r_inf", v}});
            }
            w["lambda_set"] = alg_list(lam);
            w["r_inf_at_lambda"] = ra;
            w["r_inf_in_gaps"] = rg;
            w["deg_inf"] = d.deg_inf();
            eq(r, "deg_inf = 1 + sum r(f - l_i) - sum r(f - l_i+)", d.deg_inf(), 1 + at - gaps);
            break;
        }
        case I::T3_1_GE:
            require_proper(d, a, r);
            eq(r, "chi(f>=a) - chi(f=a) = sum_{f(p)>a} ind(f)", chi_lvl(Flavor::GE) - chi_lvl(Flavor::EQ), d.sum_ind(gt, a));
            break;
        case I::T3_1_LE:
            require_proper(d, a, r);
            eq(r, "chi(f<=a) - chi(Lk(f<=a)) = sum_{f(p)<=a} ind(f)", chi_lvl(Flavor::LE) - lk_lvl(Flavor::LE), d.sum_ind(le, a));
            break;
        case I::C3_2_FIBER:
            require_proper(d, a, r);
            eq(r, "chi(f=a) = chi(X) - sum_{>a} ind(f) - sum_{<a} ind(-f)", chi_lvl(Flavor::EQ),
               d.chi_plane() - d.sum_ind(gt, a) - d.sum_ind(lt, a));
            break;
        case I::C3_2_DIFF:
            require_proper(d, a, r);
            eq(r, "chi(f>=a) - chi(f<=a) = sum_{>a} ind(f) - sum_{<a} ind(-f)", chi_lvl(Flavor::GE) - chi_lvl(Flavor::LE),
               d.sum_ind(gt, a) - d.sum_ind(lt, a));
            break;
        case I::C3_3:
            require_proper(d, a, r);
            eq(r, "chi(Lk(f<=a)) = chi(X) - sum ind(f)", lk_lvl(Flavor::LE), d.chi_plane() - d.sum_ind());
            break;
        case I::C3_4:
            require_proper(d, Rat(0), r);
            eq(r, "2 chi(X) - chi(Lk X) = sum ind(f) + sum ind(-f)", 2 * d.chi_plane() - d.link_plane(), 2 * d.sum_ind());
            break;
        case I::P3_6_GE: {
            LambdaMuNu l = d.lmn(a);
            w["lambda_mu_nu"] = lmn_json(l);
            eq(r, "chi(f>=a) - chi(f=a) = sum_{>a} ind(f) + lambda(f,a)", chi_lvl(Flavor::GE) - chi_lvl(Flavor::EQ),
               d.sum_ind(gt, a) + l.lambda);
            break;
        }
        case I::P3_6_LE: {
            LambdaMuNu n = d.lmn_neg(a);
            w["lambda_mu_nu_neg"] = lmn_json(n);
            eq(r, "chi(f<=a) - chi(f=a) = sum_{<a} ind(-f) + lambda(-f,-a)", chi_lvl(Flavor::LE) - chi_lvl(Flavor::EQ),
               d.sum_ind(lt, a) + n.lambda);
            break;
        }
        case I::C3_7_FIBER:
        case I::C3_7_DIFF: {
            LambdaMuNu l = d.lmn(a), n = d.lmn_neg(a);
            w["lambda_mu_nu"] = lmn_json(l);
            w["lambda_mu_nu_neg"] = lmn_json(n);
            if (id == I::C3_7_FIBER)
                eq(r, "chi(f=a) = chi(X) - sum_{>a} ind(f) - sum_{<a} ind(-f) - lambda(f,a) - lambda(-f,-a)", chi_lvl(Flavor::EQ),
                   d.chi_plane() - d.sum_ind(gt, a) - d.sum_ind(lt, a) - l.lambda - n.lambda);
            else
                eq(r, "chi(f>=a) - chi(f<=a) = sum_{>a} ind(f) + lambda(f,a) - sum_{<a} ind(-f) - lambda(-f,-a)",
                   chi_lvl(Flavor::GE) - chi_lvl(Flavor::LE), d.sum_ind(gt, a) + l.lambda - d.sum_ind(lt, a) - n.lambda);
            break;
        }
        case I::P3_8_LE: {
            LambdaMuNu l = d.lmn(a);
            w["lambda_mu_nu"] = lmn_json(l);
            eq(r, "chi(Lk(f<=a)) = chi(X) - sum ind(f) - lambda(f,a) + mu(f,a)", lk_lvl(Flavor::LE),
               d.chi_plane() - d.sum_ind() - l.lambda + l.mu);
            break;
        }
        case I::P3_8_GE: {
            LambdaMuNu n = d.lmn_neg(a);
            w["lambda_mu_nu_neg"] = lmn_json(n);
            eq(r, "chi(Lk(f>=a)) = chi(X) - sum ind(-f) - lambda(-f,-a) + mu(-f,-a)", lk_lvl(Flavor::GE),
               d.chi_plane() - d.sum_ind() - n.lambda + n.mu);
            break;
        }
        case I::C3_9: {
            LambdaMuNu l = d.lmn(a), n = d.lmn_neg(a);
            w["lambda_mu_nu"] = lmn_json(l);
            w["lambda_mu_nu_neg"] = lmn_json(n);
            eq(r, "chi(Lk(f=a)) = 2chi(X) - chi(Lk X) - sum ind(f) - sum ind(-f) - lambda(f) + mu(f) - lambda(-f) + mu(-f)",
               lk_lvl(Flavor::EQ), 2 * d.chi_plane() - d.link_plane() - 2 * d.sum_ind() - l.lambda + l.mu - n.lambda + n.mu);
            break;
        }
        case I::T3_16:
        case I::T3_17:
        case I::C3_18: {
            JumpSets& j = d.jumps();
            w["lambda_set"] = alg_list(d.lambda());
            if (id == I::T3_16) {
                w["jumps"] = alg_list(j.le);
                int alt = alternating(j.le, [&](const AlgNumber& g) { return d.link_at_level(g, Flavor::LE); });
                eq(r, "chi(X) = sum ind(f) + sum Lk(f<=b+) - sum Lk(f<=b)", d.chi_plane(), d.sum_ind() + alt);
            } else if (id == I::T3_17) {
                w["jumps"] = alg_list(j.ge);
                int alt = alternating(j.ge, [&](const AlgNumber& g) { return d.link_at_level(g, Flavor::GE); });
                eq(r, "chi(X) = sum ind(-f) + sum Lk(f>=c+) - sum Lk(f>=c)", d.chi_plane(), d.sum_ind() + alt);
            } else {
                w["jumps"] = alg_list(j.eq);
                int alt = alternating(j.eq, [&](const AlgNumber& g) { return d.link_at_level(g, Flavor::EQ); });
                eq(r, "2chi(X) - chi(Lk X) = sum ind(f) + sum ind(-f) + sum Lk(f=d+) - sum Lk(f=d)",
                   2 * d.chi_plane() - d.link_plane(), 2 * d.sum_ind() + alt);
            }
            break;
        }
        case I::P3_19: {
            auto& bt = d.btilde();
            w["breakpoints"] = alg_list(bt);
            std::vector<Rat> samples = separating_samples(bt);
            for (Flavor fl : {Flavor::LE, Flavor::EQ, Flavor::GE}) {
                for (size_t i = 0; i < samples.size(); ++i) {
                    const AlgNumber* lo = i > 0 ? &bt[i - 1] : nullptr;
                    const AlgNumber* hi = i < bt.size() ? &bt[i] : nullptr;
                    int at = chi(f, samples[i], fl);
                    for (const Rat& p : probes(lo, hi, samples[i]))
                        eq(r, std::string("chi(f ") + flavor_name(fl) + " " + p.get_str() + ") = chi(f " + flavor_name(fl) + " " +
                                  samples[i].get_str() + ")",
                           chi(f, p, fl), at);
                }
            }
            break;
        }
        case I::T3_20:
        case I::T3_21_LE:
        case I::T3_21_GE:
        case I::C3_22:
        case I::T4_5_ALL: {
            auto& bt = d.btilde();
            w["breakpoints"] = alg_list(bt);
            auto alt = [&](Flavor fl) { return alternating(bt, [&](const AlgNumber& g) { return d.chi_at_level(g, fl); }); };
            auto alt_diff = [&] {
                return alternating(bt, [&](const AlgNumber& g) { return d.chi_at_level(g, Flavor::GE) - d.chi_at_level(g, Flavor::LE); });
            };
            const int s = d.sum_ind();
            if (id == I::T3_20) {
                eq(r, "chi(X) = sum ind(f) + sum ind(-f) + sum chi(f=g+) - sum chi(f=g)", d.chi_plane(), 2 * s + alt(Flavor::EQ));
            } else if (id == I::T3_21_LE) {
                eq(r, "chi(X) = sum ind(f) + sum chi(f<=g+) - sum chi(f<=g)", d.chi_plane(), s + alt(Flavor::LE));
            } else if (id == I::T3_21_GE) {
                eq(r, "chi(X) = sum ind(-f) + sum chi(f>=g+) - sum chi(f>=g)", d.chi_plane(), s + alt(Flavor::GE));
            } else if (id == I::C3_22) {
                eq(r, "sum [chi(f>=g+) - chi(f<=g+)] - sum [chi(f>=g) - chi(f<=g)] = sum ind(f) - ind(-f)", alt_diff(), s - s);
            } else {
                const int di = d.deg_inf();
                w["deg_inf"] = di;
                eq(r, "1 = 2 deg_inf + sum chi(f=g+) - sum chi(f=g)", 1, 2 * di + alt(Flavor::EQ));
                eq(r, "1 = deg_inf + sum chi(f<=g+) - sum chi(f<=g)", 1, di + alt(Flavor::LE));
                eq(r, "1 = deg_inf + sum chi(f>=g+) - sum chi(f>=g)", 1, di + alt(Flavor::GE));
                eq(r, "sum [chi(f>=g+) - chi(f<=g+)] = sum [chi(f>=g) - chi(f<=g)]", alt_diff(), 0);
            }
            break;
        }
        case I::P4_1_GE:
        case I::P4_1_LE:
        case I::C4_2_FIBER:
        case I::C4_2_DIFF:
        case I::P4_3_LINKS: {
            LambdaMuNu l = d.lmn(a);
            w["lambda_mu_nu"] = lmn_json(l);
            auto ne = [](int c) { return c != 0; };
            if (id == I::P4_1_GE) {
                eq(r, "chi(f>=a) - chi(f=a) = sum_{>a} deg + lambda", chi_lvl(Flavor::GE) - chi_lvl(Flavor::EQ), d.sum_ind(gt, a) + l.lambda);
            } else if (id == I::P4_1_LE) {
                eq(r, "chi(f<=a) - chi(f=a) = sum_{<a} deg - mu", chi_lvl(Flavor::LE) - chi_lvl(Flavor::EQ), d.sum_ind(lt, a) - l.mu);
            } else if (id == I::C4_2_FIBER) {
                eq(r, "chi(f=a) = 1 - sum_{f(p)!=a} deg - lambda + mu", chi_lvl(Flavor::EQ), 1 - d.sum_ind(ne, a) - l.lambda + l.mu);
            } else if (id == I::C4_2_DIFF) {
                eq(r, "chi(f>=a) - chi(f<=a) = sum_{>a} deg - sum_{<a} deg + lambda + mu", chi_lvl(Flavor::GE) - chi_lvl(Flavor::LE),
                   d.sum_ind(gt, a) - d.sum_ind(lt, a) + l.lambda + l.mu);
            } else {
                const int di = d.deg_inf();
                w["deg_inf"] = di;
                eq(r, "chi(Lk(f<=a)) = 1 - deg_inf - lambda + mu", lk_lvl(Flavor::LE), 1 - di - l.lambda + l.mu);
                eq(r, "chi(Lk(f>=a)) = 1 - deg_inf - lambda + mu", lk_lvl(Flavor::GE), 1 - di - l.lambda + l.mu);
                eq(r, "chi(Lk(f=a)) = 2 - 2 deg_inf - 2 lambda + 2 mu", lk_lvl(Flavor::EQ), 2 - 2 * di - 2 * l.lambda + 2 * l.mu);
            }
            break;
        }
        case I::T4_4: {
            JumpSets& j = d.jumps();
            const int di = d.deg_inf();
            w["deg_inf"] = di;
            w["jumps_le"] = alg_list(j.le);
            w["jumps_ge"] = alg_list(j.ge);
            w["jumps_eq"] = alg_list(j.eq);
            auto alt = [&](const std::vector<AlgNumber>& pts, Flavor fl) {
                return alternating(pts, [&](const AlgNumber& g) { return d.link_at_level(g, fl); });
            };
            eq(r, "1 = deg_inf + sum Lk(f<=b+) - sum Lk(f<=b)", 1, di + alt(j.le, Flavor::LE));
            eq(r, "1 = deg_inf + sum Lk(f>=c+) - sum Lk(f>=c)", 1, di + alt(j.ge, Flavor::GE));
            eq(r, "2 = 2 deg_inf + sum Lk(f=d+) - sum Lk(f=d)", 2, 2 * di + alt(j.eq, Flavor::EQ));
            break;
        }
        default:
            throw Error("not a function identity");
    }
}

// Five generic directions for X, from a fixed list of half-angle tangents.
std::vector<Direction> default_directions(const PlaneSet& X) {
    std::vector<Direction> out;
    for (const Rat& t : {Rat(1, 3), Rat(-2, 7), Rat(5, 2), Rat(-9, 4), Rat(1, 11), Rat(4, 9), Rat(-7, 3), Rat(13, 5)}) {
        Direction v = Direction::from_t(t);
        if (!is_bad(X, v)) out.push_back(v);
        if (out.size() == 5) break;
    }
    return out;
}

std::string dir_str(const Direction& v) { return "(" + v.x.get_str() + "," + v.y.get_str() + ")"; }

void run_set(IdentityId id, const VerifyInput& in, const PlaneSet& X, IdentityReport& r) {
    using I = IdentityId;
    auto& w = r.witnesses;
    switch (id) {
        case I::P5_4_ALL:
        case I::P5_5_ALL: {
            std::vector<Direction> dirs = in.v ? std::vector<Direction>{*in.v} : default_directions(X);
            std::vector<Rat> alphas = in.alpha ? std::vector<Rat>{*in.alpha} : std::vector<Rat>{Rat(-1, 2), Rat(0), Rat(3, 4)};
            json runs = json::array();
            for (const auto& v : dirs) {
                for (const auto& a : alphas) {
                    LinearMorseSummary s = linear_morse_summary(X, v, a);
                    const std::string tag = "v=" + dir_str(v) + " a=" + a.get_str() + ": ";
                    runs.push_back({{"v", dir_str(v)}, {"alpha", a.get_str()}, {"critical_points", s.points.size()},
                                    {"sum_above", s.sum_above}, {"sum_below_neg", s.sum_below_neg}, {"sum_all", s.sum_all},
                                    {"sum_all_neg", s.sum_all_neg}, {"chi_le", s.chi_le}, {"chi_eq", s.chi_eq}, {"chi_ge", s.chi_ge},
                                    {"lk_le", s.lk_le}, {"lk_eq", s.lk_eq}, {"lk_ge", s.lk_ge}});
                    w["chi_x"] = s.chi_x;
                    w["chi_lk_x"] = s.chi_lk_x;
                    if (id == I::P5_4_ALL) {
                        eq(r, tag + "chi(X,v*>=a) - chi(X,v*=a) = sum_{>a} ind(v*)", s.chi_ge - s.chi_eq, s.sum_above);
                        eq(r, tag + "chi(X,v*<=a) - chi(X,v*=a) = sum_{<a} ind(-v*)", s.chi_le - s.chi_eq, s.sum_below_neg);
                        eq(r, tag + "chi(X,v*=a) = chi(X) - sum_{>a} ind(v*) - sum_{<a} ind(-v*)", s.chi_eq,
                           s.chi_x - s.sum_above - s.sum_below_neg);
                        eq(r, tag + "chi(X,v*>=a) - chi(X,v*<=a) = sum_{>a} ind(v*) - sum_{<a} ind(-v*)", s.chi_ge - s.chi_le,
                           s.sum_above - s.sum_below_neg);
                    } else {
                        eq(r, tag + "chi(Lk(X,v*<=a)) = chi(X) - sum ind(v*)", s.lk_le, s.chi_x - s.sum_all);
                        eq(r, tag + "chi(Lk(X,v*>=a)) = chi(X) - sum ind(-v*)", s.lk_ge, s.chi_x - s.sum_all_neg);
                        eq(r, tag + "chi(Lk(X,v*=a)) = 2chi(X) - chi(Lk X) - sum ind(v*) - sum ind(-v*)", s.lk_eq,
                           2 * s.chi_x - s.chi_lk_x - s.sum_all - s.sum_all_neg);
                    }
                }
            }
            w["directions"] = dirs.size();
            w["runs"] = runs;
            break;
        }
        case I::T5_6:
        case I::T5_8: {
            if (id == I::T5_6 && !X.compact()) throw HypothesisViolation("X is not compact");
            bool exact = id == I::T5_6 || in.exact_mode;
            GaussBonnet gb = exact ? gauss_bonnet_exact(X) : gauss_bonnet_sampled(X, in.samples);
            w["mode"] = exact ? "exact" : "sampled";
            w["error_bound"] = gb.error.get_str();
            w["chi_x"] = gb.chi_x;
            w["chi_lk_x"] = gb.chi_lk_x;
            w["directions"] = gb.samples.size();
            w["arcs_consistent"] = gb.arcs_consistent;
            int ok = 0;
            for (const auto& s : gb.samples)
                if (s.ind_sum + s.ind_sum_neg == 2 * gb.chi_x - gb.chi_lk_x - s.lk_line) ++ok;
            if (id == I::T5_6) {
                r.equations.push_back({"Lambda0(X,X) = chi(X)", gb.value, Rat(chi_of(X)), gb.error});
            } else {
                w["value"] = gb.value.get_str();
                r.equations.push_back({"Lambda0 = chi(X) - chi(Lk X)/2 - average chi(Lk(X,v*=0))/2", gb.value, gb.rhs,
                                       exact ? gb.error : in.tol});
            }
            eq(r, "directions satisfying the per-direction link identity", ok, static_cast<long>(gb.samples.size()));
            if (exact) eq(r, "arcs with two agreeing samples", gb.arcs_consistent ? 1 : 0, 1);
            break;
        }
        default:
            throw Error("not a plane-set identity");
    }
}

IdentityReport make_report(IdentityId id, const VerifyInput& in, const std::function<void(IdentityReport&)>& body) {
    IdentityReport r;
    r.id = id;
    r.input = in.describe();
    try {
        body(r);
    } catch (const HypothesisViolation& e) {
        r.equations.clear();
        r.skipped_reason = std::string("hypothesis: ") + e.what();
    } catch (const DegenerateInput& e) {
        r.equations.clear();
        r.skipped_reason = std::string("degenerate input: ") + e.what();
    } catch (const Error& e) {
        // an internal failure is a failed report, never a skip
        r.equations.clear();
        r.witnesses["error"] = e.what();
    }
    return r;
}

IdentityReport input_failure(IdentityId id, const VerifyInput& in, const std::string& why) {
    IdentityReport r;
    r.id = id;
    r.input = in.describe();
    r.skipped_reason = why;
    r.degenerate = true;
    return r;
}

std::optional<PlaneSet> plane_set(const VerifyInput& in, std::string& why) {
    try {
        return in.kind == VerifyInput::Kind::Region ? PlaneSet::region(in.poly) : PlaneSet::curve(in.poly);
    } catch (const Error& e) {
        why = std::string("hypothesis: ") + e.what();
        return std::nullopt;
    }
}

// Input-level check for a function: finite critical set.
std::optional<std::string> function_failure(PolyData& d) {
    try {
        d.crit();
        return std::nullopt;
    } catch (const Error& e) {
        return std::string("hypothesis: ") + e.what();
    }
}

}  // namespace

const std::vector<IdentityId>& all_identities() {
    static const std::vector<IdentityId> ids = [] {
        std::vector<IdentityId> v;
        for (const auto& e : catalog()) v.push_back(e.id);
        return v;
    }();
    return ids;
}

std::string identity_name(IdentityId id) { return entry(id).name; }

IdentityId parse_identity(const std::string& name) {
    for (const auto& e : catalog())
        if (name == e.name) return e.id;
    throw Error("unknown identity: " + name);
}

bool is_function_identity(IdentityId id) { return entry(id).function; }
bool uses_alpha(IdentityId id) { return entry(id).alpha; }

bool IdentityReport::pass() const {
    if (skipped() || equations.empty()) return false;
    for (const auto& e : equations)
        if (!e.holds()) return false;
    return true;
}

const Equation* IdentityReport::head() const {
    for (const auto& e : equations)
        if (!e.holds()) return &e;
    return equations.empty() ? nullptr : &equations.front();
}

json IdentityReport::to_json() const {
    json j;
    j["identity"] = identity_name(id);
    j["input"] = input;
    const Equation* h = head();
    j["lhs"] = h ? json(h->lhs.get_str()) : json(nullptr);
    j["rhs"] = h ? json(h->rhs.get_str()) : json(nullptr);
    j["pass"] = pass();
    json w = witnesses;
    json eqs = json::array();
    for (const auto& e : equations) {
        json q{{"name", e.name}, {"lhs", e.lhs.get_str()}, {"rhs", e.rhs.get_str()}, {"holds", e.holds()}};
        if (sgn(e.tol) != 0) q["tol"] = e.tol.get_str();
        eqs.push_back(q);
    }
    w["equations"] = eqs;
    j["witnesses"] = w;
    j["skipped_reason"] = skipped_reason ? json(*skipped_reason) : json(nullptr);
    return j;
}

std::string VerifyInput::describe() const {
    std::string s = kind == Kind::Poly ? "poly: " : kind == Kind::Region ? "region: " : "curve: ";
    s += text.empty() ? poly.str() : text;
    if (alpha) s += " alpha=" + alpha->get_str();
    if (v) s += " v=" + v->x.get_str() + "," + v->y.get_str();
    if (seed) s += " seed=" + std::to_string(seed);
    return s;
}

std::vector<Rat> default_alphas(const BPoly& f, unsigned seed) {
    std::vector<AlgNumber> b = fibration_breakpoints(f, seed);
    if (b.empty()) return {Rat(-1), Rat(0), Rat(1)};
    std::vector<Rat> s = separating_samples(b);
    Rat mid;
    if (b.size() >= 2) mid = s[b.size() / 2];
    else if (b[0].is_rational()) mid = b[0].value();  // the breakpoint itself
    else mid = b[0].interval().mid();
    return {s.front(), mid, s.back()};
}

std::vector<IdentityReport> verify_many(const std::vector<IdentityId>& ids, const VerifyInput& in) {
    std::vector<IdentityReport> out;
    if (in.kind == VerifyInput::Kind::Poly) {
        PolyData d(in.poly, in.seed);
        std::optional<std::string> why;
        bool checked = false;
        for (IdentityId id : ids) {
            if (!is_function_identity(id)) {
                out.push_back(input_failure(id, in, "identity needs a region or curve input"));
                continue;
            }
            if (!checked) why = function_failure(d), checked = true;
            if (why) {
                out.push_back(input_failure(id, in, *why));
                continue;
            }
            Rat a = in.alpha.value_or(Rat(0));
            out.push_back(make_report(id, in, [&](IdentityReport& r) { run_function(id, d, a, r); }));
        }
        return out;
    }
    std::string why;
    std::optional<PlaneSet> X;
    bool built = false;
    for (IdentityId id : ids) {
        if (is_function_identity(id)) {
            out.push_back(input_failure(id, in, "identity needs a polynomial input"));
            continue;
        }
        if (!built) X = plane_set(in, why), built = true;
        if (!X) {
            out.push_back(input_failure(id, in, why));
            continue;
        }
        out.push_back(make_report(id, in, [&](IdentityReport& r) { run_set(id, in, *X, r); }));
    }
    return out;
}

IdentityReport verify(IdentityId id, const VerifyInput& in) { return verify_many({id}, in).front(); }

std::vector<IdentityReport> verify_all(const VerifyInput& in) {
    std::vector<IdentityReport> out;
    if (in.kind == VerifyInput::Kind::Poly) {
        PolyData d(in.poly, in.seed);
        std::optional<std::string> why = function_failure(d);
        std::vector<Rat> alphas;
        if (!why) {
            if (in.alpha) alphas = {*in.alpha};
            else {
                try {
                    alphas = default_alphas(in.poly, in.seed);
                } catch (const Error& e) {
                    why = std::string("degenerate input: ") + e.what();
                }
            }
        }
        for (IdentityId id : all_identities()) {
            if (!is_function_identity(id)) continue;
            if (why) {
                out.push_back(input_failure(id, in, *why));
                continue;
            }
            if (!uses_alpha(id)) {
                out.push_back(make_report(id, in, [&](IdentityReport& r) { run_function(id, d, Rat(0), r); }));
                continue;
            }
            for (const Rat& a : alphas) {
                VerifyInput at = in;
                at.alpha = a;
                out.push_back(make_report(id, at, [&](IdentityReport& r) { run_function(id, d, a, r); }));
            }
        }
        return out;
    }
    std::string why;
    auto X = plane_set(in, why);
    for (IdentityId id : all_identities()) {
        if (is_function_identity(id)) continue;
        if (!X) {
            out.push_back(input_failure(id, in, why));
            continue;
        }
        if (id == IdentityId::T5_6 && !X->compact()) {
            IdentityReport r;
            r.id = id;
            r.input = in.describe();
            r.skipped_reason = "hypothesis: X is not compact";
            out.push_back(r);
            continue;
        }
        out.push_back(make_report(id, in, [&](IdentityReport& r) { run_set(id, in, *X, r); }));
    }
    return out;
}

Direction parse_direction(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw Error("direction expects a/b,c/d");
    Direction d{parse_rat(text.substr(0, comma)), parse_rat(text.substr(comma + 1))};
    if (d.x * d.x + d.y * d.y != 1) throw Error("direction must be a unit vector");
    return d;
}

VerifyInput parse_input_line(const std::string& line) {
    auto colon = line.find(':');
    if (colon == std::string::npos) throw Error("expected 'poly:', 'region:' or 'curve:'");
    std::string kind = line.substr(0, colon);
    kind.erase(0, kind.find_first_not_of(" \t"));
    kind.erase(kind.find_last_not_of(" \t") + 1);
    VerifyInput in;
    if (kind == "poly") in.kind = VerifyInput::Kind::Poly;
    else if (kind == "region") in.kind = VerifyInput::Kind::Region;
    else if (kind == "curve") in.kind = VerifyInput::Kind::Curve;
    else throw Error("unknown input kind '" + kind + "'");

    std::string rest = line.substr(colon + 1);
    for (char& c : rest)
        if (c == ';') c = ' ';
    std::istringstream ss(rest);
    std::string tok, expr;
    while (ss >> tok) {
        auto eqp = tok.find('=');
        if (eqp == std::string::npos) {
            expr += (expr.empty() ? "" : " ") + tok;
            continue;
        }
        std::string key = tok.substr(0, eqp), val = tok.substr(eqp + 1);
        if (key == "alpha") in.alpha = parse_rat(val);
        else if (key == "seed") in.seed = static_cast<unsigned>(std::stoul(val));
        else if (key == "v") in.v = parse_direction(val);
        else throw Error("unknown option '" + key + "'");
    }
    if (expr.empty()) throw Error("missing polynomial");
    in.text = expr;
    in.poly = parse_poly(expr);
    return in;
}

std::vector<VerifyInput> parse_corpus(std::istream& is) {
    std::vector<VerifyInput> out;
    std::string line;
    int no = 0;
    while (std::getline(is, line)) {
        ++no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(parse_input_line(line));
        } catch (const std::exception& e) {
            throw Error("corpus line " + std::to_string(no) + ": " + e.what());
        }
    }
    return out;
}

json CorpusResult::summary() const {
    return {{"reports", reports.size()}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}, {"degenerate", degenerate}};
}

CorpusResult run_corpus(const std::vector<VerifyInput>& inputs) {
    CorpusResult res;
    for (const auto& in : inputs) {
        for (auto& r : verify_all(in)) {
            if (r.degenerate) ++res.degenerate;
            if (r.skipped()) ++res.skipped;
            else if (r.pass()) ++res.passed;
            else ++res.failed;
            res.reports.push_back(std::move(r));
        }
    }
    return res;
}

std::vector<BPoly> random_corpus(unsigned seed, int count, int max_degree) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3), terms(3, 5), deg(0, max_degree);
    std::vector<BPoly> out;
    for (int attempt = 0; attempt < 200 * count && static_cast<int>(out.size()) < count; ++attempt) {
        BPoly f;
        int k = terms(rng);
        for (int t = 0; t < k; ++t) {
            int i = deg(rng), j = deg(rng);
            if (i + j > max_degree || i + j == 0) continue;
            int c = coef(rng);
            if (c != 0) f += BPoly::monomial(i, j, c);
        }
        if (f.total_degree() < 2) continue;
        try {
            find_critical_points(f);
            degree_at_infinity(f);
            fibration_breakpoints(f);
        } catch (const Error&) {
            continue;
        }
        out.push_back(f);
    }
    return out;
}

}  // namespace satopo
