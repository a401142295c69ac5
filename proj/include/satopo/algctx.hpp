#pragma once

#include <vector>

#include "satopo/bpoly.hpp"
#include "satopo/roots.hpp"

namespace satopo {

/// Arithmetic in Q(e) for a real algebraic number e, by dynamic evaluation:
/// elements are polynomials in x reduced modulo the defining polynomial E.
/// Whenever a zero test meets a nontrivial factor of E, E is replaced by
/// the factor that still vanishes at e; reduced elements stay valid.
///
/// Polynomials in y over Q(e) (YPoly) are coefficient lists, entry k being
/// the coefficient of y^k. They are kept normalized: the leading entry is
/// nonzero at e.
class AlgCtx {
public:
    using YPoly = std::vector<UPoly>;

    explicit AlgCtx(AlgNumber e);

    const AlgNumber& number() const { return e_; }
    const UPoly& modulus() const { return e_.defining(); }

    UPoly reduce(const UPoly& a) const;
    bool is_zero(const UPoly& a);
    int sign(const UPoly& a);
    /// Requires a(e) != 0.
    UPoly inverse(const UPoly& a);
    UPoly mul(const UPoly& a, const UPoly& b) const { return reduce(a * b); }
    /// Enclosure of a(e) from the current interval of e.
    Interval enclose(const UPoly& a) const { return a.eval(e_.interval()); }
    void refine(const Rat& w) { e_.refine(w); }
    void bisect() { e_.bisect(); }

    /// f(e, y).
    YPoly fiber(const BPoly& f);
    void normalize(YPoly& p);
    int degree(const YPoly& p) const { return static_cast<int>(p.size()) - 1; }

    YPoly rem(YPoly a, const YPoly& b);
    /// Monic gcd; the zero polynomial when both are zero.
    YPoly gcd(YPoly a, YPoly b);
    YPoly derivative(const YPoly& p) const;
    YPoly exact_div(YPoly a, const YPoly& b);
    YPoly squarefree(const YPoly& p);
    YPoly mul(const YPoly& a, const YPoly& b) const;

    /// sign of p(e, y).
    int sign_at(const YPoly& p, const Rat& y);
    /// Enclosure of p(e, y) for y in an interval.
    Interval enclose(const YPoly& p, const Interval& y) const;

    std::vector<YPoly> sturm(const YPoly& p);
    /// Distinct roots in the open interval (a, b); a or b may be roots of
    /// seq[0].
    int count_open(const std::vector<YPoly>& seq, const Rat& a, const Rat& b);
    /// Bound B with every real root of p(e, .) in (-B, B).
    Rat root_bound(const YPoly& p);
    /// Isolating intervals (sorted) for the real roots of a square-free p.
    /// Exact rational roots come back as [r, r]; open intervals have p
    /// nonzero with opposite signs at both ends.
    std::vector<Interval> isolate(const YPoly& p);
    /// Shrink an isolating interval of p (square-free) to width <= w.
    void refine_root(const YPoly& p, Interval& iv, const Rat& w);
    /// Does the unique root of square-free p in iv also annul q?
    bool root_annuls(const YPoly& p, const Interval& iv, const YPoly& q);

    /// Representative bivariate polynomial (x stands for e).
    static BPoly to_bpoly(const YPoly& p);

private:
    void set_modulus(const UPoly& m);
    AlgNumber e_;
};

}  // namespace satopo
