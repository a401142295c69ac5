#include "satopo/bpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace satopo {

BPoly::BPoly(const Rat& c) {
    if (sgn(c) != 0) t_[{0, 0}] = c;
}

BPoly BPoly::x() { return monomial(1, 0); }
BPoly BPoly::y() { return monomial(0, 1); }

BPoly BPoly::monomial(int i, int j, const Rat& c) {
    BPoly p;
    p.add_term(i, j, c);
    return p;
}

BPoly BPoly::from_upoly(const UPoly& p, Var v) {
    BPoly out;
    const auto& c = p.coeffs();
    for (size_t k = 0; k < c.size(); ++k) {
        int e = static_cast<int>(k);
        if (v == Var::X) out.add_term(e, 0, c[k]);
        else out.add_term(0, e, c[k]);
    }
    return out;
}

BPoly BPoly::from_coeffs(const std::vector<UPoly>& cs, Var v) {
    BPoly out;
    for (size_t k = 0; k < cs.size(); ++k) {
        const auto& c = cs[k].coeffs();
        for (size_t m = 0; m < c.size(); ++m) {
            int a = static_cast<int>(k), b = static_cast<int>(m);
            if (v == Var::Y) out.add_term(b, a, c[m]);
            else out.add_term(a, b, c[m]);
        }
    }
    return out;
}

void BPoly::add_term(int i, int j, const Rat& c) {
    if (sgn(c) == 0) return;
    auto it = t_.find({i, j});
    if (it == t_.end()) {
        t_.emplace(Exp{i, j}, c);
        return;
    }
    it->second += c;
    if (sgn(it->second) == 0) t_.erase(it);
}

bool BPoly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exp{0, 0}); }

Rat BPoly::constant_term() const {
    auto it = t_.find({0, 0});
    return it == t_.end() ? Rat(0) : it->second;
}

int BPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.first + e.second);
    return d;
}

int BPoly::degree(Var v) const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, v == Var::X ? e.first : e.second);
    return d;
}

BPoly BPoly::leading_form() const {
    BPoly out;
    int d = total_degree();
    for (const auto& [e, c] : t_)
        if (e.first + e.second == d) out.add_term(e.first, e.second, c);
    return out;
}

Rat BPoly::eval(const Rat& x, const Rat& y) const {
    // Horner in y over x-polynomials keeps the cost low for dense inputs.
    auto cs = coeffs_in(Var::Y);
    Rat acc = 0;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        acc *= y;
        acc += it->eval(x);
    }
    return acc;
}

Interval BPoly::eval(const Interval& x, const Interval& y) const {
    if (x.lo == x.hi && y.lo == y.hi) return Interval(eval(x.lo, y.lo));
    // Centered (Taylor) form at the box midpoint.
    Rat mx = x.mid(), my = y.mid();
    BPoly shifted = translate(mx, my);
    Interval dx(x.lo - mx, x.hi - mx), dy(y.lo - my, y.hi - my);
    auto cs = shifted.coeffs_in(Var::Y);
    Interval acc(Rat(0));
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        Interval cx(Rat(0));
        const auto& c = it->coeffs();
        for (auto jt = c.rbegin(); jt != c.rend(); ++jt) cx = cx * dx + Interval(*jt);
        acc = acc * dy + cx;
    }
    return acc;
}

UPoly BPoly::specialize(Var v, const Rat& value) const {
    // Result is a polynomial in the other variable.
    int d = degree(v == Var::X ? Var::Y : Var::X);
    std::vector<Rat> out(static_cast<size_t>(std::max(d, -1) + 1), Rat(0));
    std::map<int, Rat> powers;
    for (const auto& [e, c] : t_) {
        int pe = v == Var::X ? e.first : e.second;
        int keep = v == Var::X ? e.second : e.first;
        auto it = powers.find(pe);
        if (it == powers.end()) it = powers.emplace(pe, pow_rat(value, static_cast<unsigned>(pe))).first;
        out[static_cast<size_t>(keep)] += c * it->second;
    }
    return UPoly(std::move(out), v == Var::X ? 'y' : 'x');
}

std::vector<UPoly> BPoly::coeffs_in(Var v) const {
    int d = degree(v);
    std::vector<std::vector<Rat>> raw(static_cast<size_t>(std::max(d, -1) + 1));
    int od = degree(v == Var::X ? Var::Y : Var::X);
    for (auto& r : raw) r.assign(static_cast<size_t>(std::max(od, 0) + 1), Rat(0));
    for (const auto& [e, c] : t_) {
        int k = v == Var::X ? e.first : e.second;
        int m = v == Var::X ? e.second : e.first;
        raw[static_cast<size_t>(k)][static_cast<size_t>(m)] = c;
    }
    std::vector<UPoly> out;
    out.reserve(raw.size());
    char other = v == Var::X ? 'y' : 'x';
    for (auto& r : raw) out.emplace_back(std::move(r), other);
    return out;
}

BPoly BPoly::diff(Var v) const {
    BPoly out;
    for (const auto& [e, c] : t_) {
        int k = v == Var::X ? e.first : e.second;
        if (k == 0) continue;
        if (v == Var::X) out.add_term(e.first - 1, e.second, c * k);
        else out.add_term(e.first, e.second - 1, c * k);
    }
    return out;
}

BPoly BPoly::swap_vars() const {
    BPoly out;
    for (const auto& [e, c] : t_) out.add_term(e.second, e.first, c);
    return out;
}

BPoly BPoly::translate(const Rat& dx, const Rat& dy) const {
    return compose(BPoly::x() + BPoly(dx), BPoly::y() + BPoly(dy));
}

BPoly BPoly::compose(const BPoly& p, const BPoly& q) const {
    int dx = degree(Var::X), dy = degree(Var::Y);
    std::vector<BPoly> pp{BPoly(1)}, qp{BPoly(1)};
    for (int i = 1; i <= dx; ++i) pp.push_back(pp.back() * p);
    for (int j = 1; j <= dy; ++j) qp.push_back(qp.back() * q);
    BPoly out;
    for (const auto& [e, c] : t_) out += c * (pp[static_cast<size_t>(e.first)] * qp[static_cast<size_t>(e.second)]);
    return out;
}

BPoly BPoly::operator-() const {
    BPoly out = *this;
    for (auto& [e, c] : out.t_) c = -c;
    return out;
}

BPoly& BPoly::operator+=(const BPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e.first, e.second, c);
    return *this;
}

BPoly& BPoly::operator-=(const BPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e.first, e.second, -c);
    return *this;
}

BPoly& BPoly::operator*=(const BPoly& o) {
    BPoly out;
    for (const auto& [a, ca] : t_)
        for (const auto& [b, cb] : o.t_) out.add_term(a.first + b.first, a.second + b.second, ca * cb);
    *this = std::move(out);
    return *this;
}

BPoly& BPoly::operator*=(const Rat& s) {
    if (sgn(s) == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [e, c] : t_) c *= s;
    return *this;
}

std::string BPoly::str(char xname, char yname) const {
    if (t_.empty()) return "0";
    std::vector<std::pair<Exp, Rat>> terms(t_.begin(), t_.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        Rat a = abs_rat(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = a == 1;
        bool constant = e.first == 0 && e.second == 0;
        bool wrote = false;
        if (!unit || constant) {
            os << a.get_str();
            wrote = true;
        }
        auto var = [&](char n, int k) {
            if (k == 0) return;
            if (wrote) os << "*";
            os << n;
            if (k > 1) os << "^" << k;
            wrote = true;
        };
        var(xname, e.first);
        var(yname, e.second);
    }
    return os.str();
}

BPoly operator+(BPoly a, const BPoly& b) { return a += b; }
BPoly operator-(BPoly a, const BPoly& b) { return a -= b; }
BPoly operator*(BPoly a, const BPoly& b) { return a *= b; }
BPoly operator*(const Rat& s, BPoly a) { return a *= s; }

BPoly pow(const BPoly& p, unsigned e) {
    BPoly out(1), b = p;
    while (e) {
        if (e & 1u) out *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    BPoly parse() {
        BPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + msg);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    BPoly expr() {
        BPoly acc = term();
        while (true) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }
    BPoly term() {
        BPoly acc = unary();
        while (true) {
            skip();
            if (peek('*')) {
                ++pos_;
                acc *= unary();
                continue;
            }
            if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '('))
                fail("implicit multiplication is not allowed");
            return acc;
        }
    }
    BPoly unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }
    BPoly power() {
        BPoly base = atom();
        if (peek('^')) {
            ++pos_;
            skip();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent must be a nonnegative integer");
            unsigned long e = std::stoul(s_.substr(start, pos_ - start));
            if (e > 64) fail("exponent too large");
            return pow(base, static_cast<unsigned>(e));
        }
        return base;
    }
    BPoly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            BPoly p = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return p;
        }
        if (c == 'x') {
            ++pos_;
            return BPoly::x();
        }
        if (c == 'y') {
            ++pos_;
            return BPoly::y();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = digits();
            Int den = 1;
            size_t save = pos_;
            skip();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip();
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    fail("expected denominator after '/'");
                den = digits();
                if (den == 0) fail("zero denominator");
            } else {
                pos_ = save;
            }
            Rat r(num, den);
            r.canonicalize();
            return BPoly(r);
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }
    Int digits() {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return Int(s_.substr(start, pos_ - start));
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

BPoly parse_poly(const std::string& text) { return Parser(text).parse(); }

}  // namespace satopo
