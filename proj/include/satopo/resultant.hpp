#pragma once

#include <vector>

#include "satopo/bpoly.hpp"
#include "satopo/upoly.hpp"

namespace satopo {

/// Sylvester resultant with respect to `eliminate`, as a polynomial in the
/// other variable. Formal degrees are the full degrees in `eliminate`, so
/// the specialization property holds at every value of the kept variable.
UPoly resultant(const BPoly& p, const BPoly& q, Var eliminate);

/// Principal subresultant coefficients psc_0 .. psc_{min(m,n)}, where
/// m, n are the degrees in `eliminate`. psc_0 is the resultant.
std::vector<UPoly> principal_subresultants(const BPoly& p, const BPoly& q, Var eliminate);

/// Res(p, q - t) with respect to `eliminate`. The result is stored with
/// the kept variable in the x slot and t in the y slot.
BPoly resultant_level(const BPoly& p, const BPoly& q, Var eliminate);

/// k-th subresultant polynomial with respect to `eliminate` (a multiple of
/// the gcd over the field of fractions when psc_k is the first nonzero one).
BPoly subresultant_poly(const BPoly& p, const BPoly& q, Var eliminate, int k);

/// Monic gcd of the coefficients of p with respect to y, as a UPoly in x.
UPoly content_y(const BPoly& p);
/// Divide every y-coefficient of p by c(x); c must divide them all.
BPoly divide_x_factor(const BPoly& p, const UPoly& c);
/// Multiply by c(x).
BPoly times_x_factor(const BPoly& p, const UPoly& c);
/// Exact quotient p / d in Q[x, y]; d must divide p.
BPoly exact_div(const BPoly& p, const BPoly& d);
/// Greatest common divisor in Q[x, y], up to a constant factor.
BPoly gcd(const BPoly& p, const BPoly& q);
/// Square-free part: same zero set, no repeated factors.
BPoly squarefree(const BPoly& p);

/// Determinant of a square matrix over Q (Gaussian elimination).
Rat determinant(std::vector<std::vector<Rat>> m);

/// Newton interpolation through (xs[i], ys[i]); xs pairwise distinct.
UPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys, char var = 'x');

}  // namespace satopo
