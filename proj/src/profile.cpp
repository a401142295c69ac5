#include "satopo/profile.hpp"

#include "satopo/critical.hpp"
#include "satopo/infinity.hpp"

namespace satopo {

std::vector<AlgNumber> fibration_breakpoints(const BPoly& f, unsigned seed) {
    std::vector<AlgNumber> v = critical_values(f);
    for (auto& l : lambda_set(f, seed)) v.push_back(l);
    return merge_roots(std::move(v));
}

namespace {

struct Gap {
    Rat a, b;
};

// Rationals a < gamma < b with no breakpoint other than gamma in [a, b].
Gap gap_around(const AlgNumber& gamma, const std::vector<AlgNumber>& bps) {
    const AlgNumber* lo = nullptr;
    const AlgNumber* hi = nullptr;
    for (const auto& v : bps) {
        int c = v.compare(gamma);
        if (c < 0) lo = &v;
        if (c > 0 && !hi) hi = &v;
    }
    Rat a = lo ? lo->rational_between(gamma) : Rat(gamma.interval().lo - 1);
    Rat b = hi ? gamma.rational_between(*hi) : Rat(gamma.interval().hi + 1);
    return {a, b};
}

}  // namespace

LevelChi chi_c_levels(const BPoly& f, const AlgNumber& gamma, const std::vector<AlgNumber>& bps) {
    if (gamma.is_rational())
        return {chi_c(f, gamma.value(), Flavor::LE), chi_c(f, gamma.value(), Flavor::EQ), chi_c(f, gamma.value(), Flavor::GE)};
    Gap g = gap_around(gamma, bps);
    // f fibres trivially over [a, gamma) and (gamma, b], so the open slabs
    // contribute -chi_c of the fibre at a and at b.
    auto at_a = sweep({f - BPoly(g.a)}, {flavor_predicate(Flavor::LE), flavor_predicate(Flavor::EQ)});
    auto at_b = sweep({f - BPoly(g.b)}, {flavor_predicate(Flavor::GE), flavor_predicate(Flavor::EQ)});
    const int le_a = at_a[0].chi_c(), eq_a = at_a[1].chi_c();
    const int ge_b = at_b[0].chi_c(), eq_b = at_b[1].chi_c();
    const int eq = 1 - le_a + eq_a - ge_b + eq_b;
    return {le_a - eq_a + eq, eq, ge_b - eq_b + eq};
}

int chi_c_at(const BPoly& f, const AlgNumber& gamma, Flavor fl, const std::vector<AlgNumber>& bps) {
    if (gamma.is_rational()) return chi_c(f, gamma.value(), fl);
    return chi_c_levels(f, gamma, bps).of(fl);
}

int chi_at(const BPoly& f, const AlgNumber& gamma, Flavor fl, const std::vector<AlgNumber>& bps, unsigned seed) {
    if (gamma.is_rational()) return chi(f, gamma.value(), fl);
    return chi_c_at(f, gamma, fl, bps) + link_chi(f, gamma, fl, seed);
}

std::vector<Rat> probes(const AlgNumber* lo, const AlgNumber* hi, const Rat& sample) {
    const AlgNumber s(sample);
    Rat l = lo ? lo->rational_between(s) : sample - 5;
    Rat h = hi ? s.rational_between(*hi) : sample + 5;
    return {l, h};
}

FiberProfile fiber_profile(const BPoly& f, Flavor fl, unsigned seed) {
    FiberProfile pr;
    pr.flavor = fl;
    std::vector<AlgNumber> lam = lambda_set(f, seed);
    JumpSets js = jump_sets(f, lam, seed);
    std::vector<AlgNumber> bt = critical_values(f);
    for (auto& v : js.le) bt.push_back(v);
    for (auto& v : js.ge) bt.push_back(v);
    pr.breakpoints = merge_roots(std::move(bt));
    std::vector<AlgNumber> all = pr.breakpoints;
    for (auto& v : lam) all.push_back(v);
    all = merge_roots(std::move(all));
    pr.samples = separating_samples(pr.breakpoints);
    for (const Rat& s : pr.samples) pr.on_intervals.push_back(chi(f, s, fl));
    for (const auto& b : pr.breakpoints) pr.at_breakpoints.push_back(chi_at(f, b, fl, all, seed));
    const size_t k = pr.breakpoints.size();
    for (size_t i = 0; i <= k; ++i) {
        const AlgNumber* lo = i > 0 ? &pr.breakpoints[i - 1] : nullptr;
        const AlgNumber* hi = i < k ? &pr.breakpoints[i] : nullptr;
        for (const Rat& p : probes(lo, hi, pr.samples[i]))
            if (chi(f, p, fl) != pr.on_intervals[i]) pr.constant_between = false;
    }
    return pr;
}

}  // namespace satopo
