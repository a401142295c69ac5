#pragma once

#include <optional>
#include <vector>

#include "satopo/circle.hpp"
#include "satopo/euler.hpp"

namespace satopo {

using Point = std::pair<Rat, Rat>;

/// The polar curve of f relative to the distance to a.
struct GammaCurve {
    BPoly h;  // (x - a1) f_y - (y - a2) f_x
    Point base;
};

GammaCurve gamma_polynomial(const BPoly& f, const Point& a);

/// Radius R* beyond which every circle centred at a avoids the zeros of
/// the gradient, meets Gamma and every curve in `extra` transversally and
/// leaves their mutual intersections inside. Nullopt when an eliminant
/// vanishes identically (a is not generic).
std::optional<Rat> try_certified_radius(const BPoly& f, const Point& a, const std::vector<BPoly>& extra = {});
/// Throws DegenerateInput instead of returning nullopt.
Rat certified_radius(const BPoly& f, const Point& a, const std::vector<BPoly>& extra = {});

/// Small rational a for which the certified radius exists. Deterministic
/// in the seed; 20 draws at most.
Point generic_basepoint(const BPoly& f, unsigned seed = 0);

struct CircleCritPoint {
    CirclePoint point;
    int mu_sign = 0;       // sign of <grad f, x - a>
    int circle_index = 0;  // 1 at a local min of f on the circle, -1 at a max
};

/// Critical points of f restricted to the circle of radius R around a.
std::vector<CircleCritPoint> circle_morse_data(const BPoly& f, const Point& a, const Rat& R);

struct LambdaMuNu {
    int lambda = 0, mu = 0, nu = 0;
    Rat radius;  // radius at which the sums stabilized
    bool operator==(const LambdaMuNu& o) const { return lambda == o.lambda && mu == o.mu && nu == o.nu; }
};

/// Filtered sums of circle indices at a large radius, doubled until three
/// consecutive radii agree.
LambdaMuNu lambda_mu_nu(const BPoly& f, const Point& a, const Rat& alpha);
LambdaMuNu lambda_mu_nu(const BPoly& f, const Rat& alpha, unsigned seed = 0);

/// Euler characteristic of the link at infinity of {f flavor alpha}.
int link_chi(const BPoly& f, const Rat& alpha, Flavor fl, unsigned seed = 0);
/// Same for an algebraic level; the circle is certified for that level.
int link_chi(const BPoly& f, const AlgNumber& alpha, Flavor fl, unsigned seed = 0);

/// Finite limits of f along unbounded branches of Gamma, sorted.
std::vector<AlgNumber> lambda_set(const BPoly& f, const Point& a);
std::vector<AlgNumber> lambda_set(const BPoly& f, unsigned seed = 0);

struct JumpSets {
    std::vector<AlgNumber> le, eq, ge;
};

/// Members of lambda where the link of {f flavor t} changes.
JumpSets jump_sets(const BPoly& f, const std::vector<AlgNumber>& lambda, unsigned seed = 0);

/// Points of {g = 0} on a large circle, and half of that.
int half_branches(const BPoly& g, unsigned seed = 0);
int r_infinity(const BPoly& g, unsigned seed = 0);

}  // namespace satopo
