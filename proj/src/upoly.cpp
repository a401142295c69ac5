#include "satopo/upoly.hpp"

#include <cmath>
#include <sstream>

namespace satopo {

Rat rat_from_double(double v, long max_den) {
    if (!std::isfinite(v)) throw Error("rat_from_double: non-finite value");
    // Continued fraction convergents until the denominator bound.
    long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double x = v;
    for (int it = 0; it < 64; ++it) {
        double a = std::floor(x);
        if (std::fabs(a) > 1e15) break;
        long ai = static_cast<long>(a);
        long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 > max_den || k2 <= 0) break;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        double frac = x - a;
        if (frac < 1e-15) break;
        x = 1.0 / frac;
    }
    if (k1 == 0) return Rat(static_cast<long>(std::floor(v)));
    return make_rat(h1, k1);
}

UPoly::UPoly(std::vector<Rat> coeffs, char var) : c_(std::move(coeffs)), var_(var) { trim(); }

UPoly::UPoly(std::initializer_list<long> coeffs, char var) : var_(var) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

UPoly UPoly::monomial(int k, const Rat& c, char var) {
    std::vector<Rat> v(static_cast<size_t>(k) + 1, Rat(0));
    v[static_cast<size_t>(k)] = c;
    return UPoly(std::move(v), var);
}

UPoly UPoly::linear_root(const Rat& r, char var) { return UPoly({Rat(-r), Rat(1)}, var); }

void UPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rat UPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Interval UPoly::eval(const Interval& x) const {
    if (c_.empty()) return Interval(Rat(0));
    // Centered form around the midpoint gives much tighter enclosures than
    // plain Horner on wide intervals: p(m + d) with d in [-r, r].
    if (x.lo == x.hi) return Interval(eval(x.lo));
    Rat m = x.mid();
    Rat r = x.hi - m;
    // Taylor coefficients at m via repeated synthetic division.
    std::vector<Rat> t = c_;
    const size_t n = t.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = n - 1; j > i; --j) t[j - 1] += m * t[j];
    Interval acc(Rat(0));
    Interval d(-r, r);
    for (size_t i = n; i-- > 0;) acc = acc * d + Interval(t[i]);
    return acc;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly({}, var_);
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return UPoly(std::move(d), var_);
}

UPoly UPoly::monic() const {
    if (c_.empty()) return *this;
    UPoly out = *this;
    Rat l = lc();
    for (auto& v : out.c_) v /= l;
    return out;
}

UPoly UPoly::operator-() const {
    UPoly out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const Rat& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
}

UPoly UPoly::compose(const UPoly& q) const {
    UPoly acc({}, q.var());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= q;
        acc += UPoly(*it);
    }
    acc.set_var(q.var());
    return acc;
}

UPoly UPoly::reflect() const {
    UPoly out = *this;
    for (size_t i = 1; i < out.c_.size(); i += 2) out.c_[i] = -out.c_[i];
    return out;
}

std::string UPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rat& v = c_[i];
        if (sgn(v) == 0) continue;
        Rat a = abs_rat(v);
        if (first) {
            if (sgn(v) < 0) os << "-";
        } else {
            os << (sgn(v) < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = (a == 1);
        if (i == 0 || !unit) os << a.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
UPoly operator*(const Rat& s, UPoly a) { return a *= s; }

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DegenerateInput("divmod: division by zero polynomial");
    std::vector<Rat> r = a.coeffs();
    const int db = b.degree();
    const int da = a.degree();
    if (da < db) return {UPoly({}, a.var()), a};
    std::vector<Rat> q(static_cast<size_t>(da - db) + 1, Rat(0));
    const Rat& l = b.lc();
    const auto& bc = b.coeffs();
    for (int i = da; i >= db; --i) {
        if (sgn(r[i]) == 0) continue;
        Rat f = r[i] / l;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * bc[j];
    }
    r.resize(static_cast<size_t>(db));
    return {UPoly(std::move(q), a.var()), UPoly(std::move(r), a.var())};
}

UPoly rem(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

UPoly exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error("exact_div: nonzero remainder");
    return q;
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = primitive_integer(rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UPoly squarefree(const UPoly& p) {
    if (p.degree() <= 0) return p.is_zero() ? p : UPoly(Rat(1));
    UPoly g = gcd(p, p.derivative());
    return exact_div(p, g).monic();
}

std::vector<std::pair<UPoly, int>> squarefree_factors(const UPoly& p) {
    // Yun's algorithm.
    std::vector<std::pair<UPoly, int>> out;
    if (p.degree() <= 0) return out;
    UPoly f = p.monic();
    UPoly d = f.derivative();
    UPoly a = gcd(f, d);
    UPoly b = exact_div(f, a);
    UPoly c = exact_div(d, a);
    UPoly dd = c - b.derivative();
    int k = 1;
    while (b.degree() > 0) {
        UPoly g = gcd(b, dd);
        if (g.degree() > 0) out.emplace_back(g, k);
        b = exact_div(b, g);
        c = exact_div(dd, g);
        dd = c - b.derivative();
        ++k;
    }
    return out;
}

UPoly primitive_integer(const UPoly& p) {
    if (p.is_zero()) return p;
    Int den = 1;
    for (const auto& v : p.coeffs()) {
        if (sgn(v) == 0) continue;
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    }
    Int g = 0;
    for (const auto& v : p.coeffs()) {
        if (sgn(v) == 0) continue;
        Int num = v.get_num() * (den / v.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    std::vector<Rat> out;
    out.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) {
        Int num = v.get_num() * (den / v.get_den());
        out.emplace_back(Rat(Int(num / g)));
    }
    UPoly r(std::move(out), p.var());
    if (sgn(r.lc()) < 0) r = -r;
    return r;
}

}  // namespace satopo
