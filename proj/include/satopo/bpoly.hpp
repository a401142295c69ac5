#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "satopo/interval.hpp"
#include "satopo/rat.hpp"
#include "satopo/upoly.hpp"

namespace satopo {

enum class Var { X, Y };

/// Sparse bivariate polynomial over Q: (i, j) -> coefficient of x^i y^j.
/// Zero coefficients are never stored.
class BPoly {
public:
    using Exp = std::pair<int, int>;

    BPoly() = default;
    BPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
    BPoly(long c) : BPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

    static BPoly x();
    static BPoly y();
    static BPoly monomial(int i, int j, const Rat& c = 1);
    /// Embed a univariate polynomial in the given variable.
    static BPoly from_upoly(const UPoly& p, Var v);
    /// Assemble from coefficients of powers of `v`, each a UPoly in the
    /// other variable.
    static BPoly from_coeffs(const std::vector<UPoly>& cs, Var v);

    const std::map<Exp, Rat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Rat constant_term() const;
    int total_degree() const;
    int degree(Var v) const;
    /// Leading form: homogeneous part of top total degree.
    BPoly leading_form() const;

    Rat eval(const Rat& x, const Rat& y) const;
    Interval eval(const Interval& x, const Interval& y) const;
    /// Substitute a value for one variable, leaving a UPoly in the other
    /// (tagged 'x' or 'y').
    UPoly specialize(Var v, const Rat& value) const;
    /// Coefficients with respect to powers of `v`; entry k is the
    /// coefficient of v^k as a UPoly in the other variable. Length is
    /// degree(v) + 1 (empty for the zero polynomial).
    std::vector<UPoly> coeffs_in(Var v) const;

    BPoly diff(Var v) const;
    BPoly swap_vars() const;
    /// this(x + dx, y + dy)
    BPoly translate(const Rat& dx, const Rat& dy) const;
    /// this(p, q) for bivariate p, q.
    BPoly compose(const BPoly& p, const BPoly& q) const;

    BPoly operator-() const;
    BPoly& operator+=(const BPoly& o);
    BPoly& operator-=(const BPoly& o);
    BPoly& operator*=(const BPoly& o);
    BPoly& operator*=(const Rat& s);
    bool operator==(const BPoly& o) const { return t_ == o.t_; }
    bool operator!=(const BPoly& o) const { return !(*this == o); }

    std::string str(char xname = 'x', char yname = 'y') const;

private:
    void add_term(int i, int j, const Rat& c);
    std::map<Exp, Rat> t_;
};

BPoly operator+(BPoly a, const BPoly& b);
BPoly operator-(BPoly a, const BPoly& b);
BPoly operator*(BPoly a, const BPoly& b);
BPoly operator*(const Rat& s, BPoly a);
BPoly pow(const BPoly& p, unsigned e);

/// Parse the polynomial text grammar: variables x and y, integer and p/q
/// literals, binary + - *, ^ with a nonnegative integer exponent, unary
/// minus and parentheses. No implicit multiplication.
BPoly parse_poly(const std::string& text);

}  // namespace satopo
