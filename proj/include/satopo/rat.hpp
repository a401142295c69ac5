#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace satopo {

/// Arbitrary-precision rational. GMP keeps every value canonical
/// (gcd(num, den) = 1, den > 0) after each arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates a precondition in a way that no retry can fix here
/// (zero polynomial, curve vanishing on a circle, ...).
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// A hypothesis of the underlying theory fails (infinite critical set,
/// lambda(p) = 0 at a boundary critical point, ...).
class HypothesisViolation : public Error {
public:
    using Error::Error;
};

/// A rational endpoint hit a root exactly; callers nudge and retry.
class EndpointRoot : public Error {
public:
    EndpointRoot(const std::string& what, bool at_lo) : Error(what), at_lo_(at_lo) {}
    bool at_lo() const { return at_lo_; }

private:
    bool at_lo_;
};

inline int sgn(const Rat& r) { return ::sgn(r); }

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// "p/q" (or "p" when q = 1).
inline std::string to_string(const Rat& r) { return r.get_str(); }

inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw Error("not a rational literal: " + s);
    if (r.get_den() == 0) throw Error("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline Rat abs_rat(const Rat& r) { return sgn(r) < 0 ? Rat(-r) : r; }

inline Rat pow_rat(const Rat& r, unsigned e) {
    Rat out = 1;
    Rat b = r;
    while (e) {
        if (e & 1u) out *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return out;
}

inline Rat midpoint(const Rat& a, const Rat& b) { return (a + b) / 2; }

inline double to_double(const Rat& r) { return r.get_d(); }

/// Rational with small denominator close to v (continued fraction, bounded
/// denominator). Used only to pick pleasant sample points.
Rat rat_from_double(double v, long max_den = 1L << 20);

}  // namespace satopo
