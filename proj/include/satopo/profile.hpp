#pragma once

#include <vector>

#include "satopo/euler.hpp"
#include "satopo/roots.hpp"

namespace satopo {

/// Critical values together with the asymptotic critical values; f is a
/// locally trivial fibration over every open gap between them.
std::vector<AlgNumber> fibration_breakpoints(const BPoly& f, unsigned seed = 0);

/// chi_c and chi of {f flavor gamma} for an algebraic level. Rational
/// levels go straight to the sweep; irrational ones use rational levels
/// a < gamma < b with no breakpoint other than gamma in [a, b].
int chi_c_at(const BPoly& f, const AlgNumber& gamma, Flavor fl, const std::vector<AlgNumber>& breakpoints);

/// All three flavors at once; they share the sweeps at the gap ends.
struct LevelChi {
    int le = 0, eq = 0, ge = 0;
    int of(Flavor fl) const { return fl == Flavor::LE ? le : fl == Flavor::EQ ? eq : ge; }
};
LevelChi chi_c_levels(const BPoly& f, const AlgNumber& gamma, const std::vector<AlgNumber>& breakpoints);
int chi_at(const BPoly& f, const AlgNumber& gamma, Flavor fl, const std::vector<AlgNumber>& breakpoints,
           unsigned seed = 0);

struct FiberProfile {
    Flavor flavor = Flavor::EQ;
    std::vector<AlgNumber> breakpoints;  // critical values and Lambda^<= and Lambda^>= jumps
    std::vector<Rat> samples;            // one rational per open interval
    std::vector<int> on_intervals;       // chi at the samples
    std::vector<int> at_breakpoints;
    bool constant_between = true;        // two extra probes per interval agree
};

FiberProfile fiber_profile(const BPoly& f, Flavor fl = Flavor::EQ, unsigned seed = 0);

/// Two rationals in (lo, hi) on either side of `sample`; a null end is
/// unbounded.
std::vector<Rat> probes(const AlgNumber* lo, const AlgNumber* hi, const Rat& sample);

}  // namespace satopo
