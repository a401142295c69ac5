#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "satopo/interval.hpp"
#include "satopo/rat.hpp"

namespace satopo {

/// Dense univariate polynomial over Q. coeffs()[i] multiplies var^i; the
/// coefficient list never ends in a zero, so the zero polynomial is empty
/// and has degree -1.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> coeffs, char var = 'x');
    UPoly(std::initializer_list<long> coeffs, char var = 'x');
    UPoly(const Rat& c) : UPoly(std::vector<Rat>{c}) {}  // NOLINT(google-explicit-constructor)
    UPoly(long c) : UPoly(Rat(c)) {}                     // NOLINT(google-explicit-constructor)

    /// var^k
    static UPoly monomial(int k, const Rat& c = 1, char var = 'x');
    /// The linear polynomial var - r.
    static UPoly linear_root(const Rat& r, char var = 'x');

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0); }
    Rat lc() const { return c_.empty() ? Rat(0) : c_.back(); }
    char var() const { return var_; }
    void set_var(char v) { var_ = v; }

    Rat eval(const Rat& x) const;
    int sign_at(const Rat& x) const { return sgn(eval(x)); }
    Interval eval(const Interval& x) const;

    UPoly derivative() const;
    UPoly monic() const;
    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o);
    UPoly& operator*=(const Rat& s);

    /// Polynomial composition this(q(var)).
    UPoly compose(const UPoly& q) const;
    /// this(-var)
    UPoly reflect() const;

    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    std::string str() const;

private:
    void trim();
    std::vector<Rat> c_;
    char var_ = 'x';
};

UPoly operator+(UPoly a, const UPoly& b);
UPoly operator-(UPoly a, const UPoly& b);
UPoly operator*(UPoly a, const UPoly& b);
UPoly operator*(const Rat& s, UPoly a);

/// Euclidean division: a = q*b + r, deg r < deg b. b must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly rem(const UPoly& a, const UPoly& b);
/// Exact quotient; throws if b does not divide a.
UPoly exact_div(const UPoly& a, const UPoly& b);
/// Monic gcd (zero if both are zero).
UPoly gcd(UPoly a, UPoly b);
/// Monic square-free part p / gcd(p, p').
UPoly squarefree(const UPoly& p);
/// Square-free factorisation: pairs (factor, multiplicity), factors monic,
/// pairwise coprime.
std::vector<std::pair<UPoly, int>> squarefree_factors(const UPoly& p);
/// Scale to integer coefficients with positive leading coefficient; the
/// zero set is unchanged. Keeps Sturm sequences small.
UPoly primitive_integer(const UPoly& p);

}  // namespace satopo
