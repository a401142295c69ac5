#include "satopo/algctx.hpp"

#include <algorithm>

namespace satopo {

namespace {

// s with s*a = 1 mod m, assuming gcd(a, m) = 1.
UPoly inverse_mod(const UPoly& a, const UPoly& m) {
    UPoly r0 = m, r1 = a, s0(0), s1(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0) throw Error("inverse_mod: not invertible");
    s0 *= Rat(1 / r0.lc());
    return rem(s0, m);
}

}  // namespace

AlgCtx::AlgCtx(AlgNumber e) : e_(std::move(e)) {}

void AlgCtx::set_modulus(const UPoly& m) { e_ = AlgNumber(primitive_integer(m), e_.interval()); }

UPoly AlgCtx::reduce(const UPoly& a) const {
    if (a.degree() < modulus().degree()) return a;
    return satopo::rem(a, modulus());
}

bool AlgCtx::is_zero(const UPoly& a) {
    UPoly r = reduce(a);
    if (r.is_zero()) return true;
    if (e_.is_rational()) return r.sign_at(e_.value()) == 0;
    UPoly g = satopo::gcd(modulus(), r);
    if (g.degree() <= 0) return false;
    if (sturm_count(g, e_.interval()) == 1) {
        set_modulus(g);
        return true;
    }
    set_modulus(satopo::exact_div(modulus(), g));
    return false;
}

int AlgCtx::sign(const UPoly& a) {
    if (is_zero(a)) return 0;
    UPoly r = reduce(a);
    while (true) {
        if (e_.is_rational()) return r.sign_at(e_.value());
        int s = r.eval(e_.interval()).certain_sign();
        if (s != 0) return s;
        e_.bisect();
    }
}

UPoly AlgCtx::inverse(const UPoly& a) {
    if (is_zero(a)) throw Error("AlgCtx::inverse: element is zero");
    UPoly r = reduce(a);
    if (e_.is_rational()) return UPoly(Rat(1 / r.eval(e_.value())));
    return inverse_mod(r, modulus());
}

AlgCtx::YPoly AlgCtx::fiber(const BPoly& f) {
    YPoly p = f.coeffs_in(Var::Y);
    for (auto& c : p) {
        c.set_var('x');
        c = reduce(c);
    }
    normalize(p);
    return p;
}

void AlgCtx::normalize(YPoly& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
    for (auto& c : p) c = reduce(c);
}

AlgCtx::YPoly AlgCtx::mul(const YPoly& a, const YPoly& b) const {
    if (a.empty() || b.empty()) return {};
    YPoly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    for (auto& c : out) c = reduce(c);
    return out;
}

AlgCtx::YPoly AlgCtx::rem(YPoly a, const YPoly& b) {
    if (b.empty()) throw Error("AlgCtx::rem: division by zero");
    normalize(a);
    const int db = degree(b);
    if (db == 0) return {};
    UPoly inv = inverse(b.back());
    while (degree(a) >= db) {
        UPoly c = mul(a.back(), inv);
        const int shift = degree(a) - db;
        for (int j = 0; j < db; ++j) a[static_cast<size_t>(shift + j)] = reduce(a[static_cast<size_t>(shift + j)] - c * b[static_cast<size_t>(j)]);
        a.pop_back();
        normalize(a);
    }
    return a;
}

AlgCtx::YPoly AlgCtx::exact_div(YPoly a, const YPoly& b) {
    normalize(a);
    const int db = degree(b);
    if (degree(a) < db) return {};
    UPoly inv = inverse(b.back());
    YPoly q(static_cast<size_t>(degree(a) - db + 1));
    while (degree(a) >= db) {
        UPoly c = mul(a.back(), inv);
        const int shift = degree(a) - db;
        q[static_cast<size_t>(shift)] = c;
        for (int j = 0; j < db; ++j) a[static_cast<size_t>(shift + j)] = reduce(a[static_cast<size_t>(shift + j)] - c * b[static_cast<size_t>(j)]);
        a.pop_back();
        normalize(a);
    }
    normalize(q);
    return q;
}

AlgCtx::YPoly AlgCtx::gcd(YPoly a, YPoly b) {
    normalize(a);
    normalize(b);
    if (degree(a) < degree(b)) std::swap(a, b);
    while (!b.empty()) {
        YPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    UPoly inv = inverse(a.back());
    for (auto& c : a) c = mul(c, inv);
    return a;
}

AlgCtx::YPoly AlgCtx::derivative(const YPoly& p) const {
    if (p.size() <= 1) return {};
    YPoly d(p.size() - 1);
    for (size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * Rat(static_cast<long>(k));
    return d;
}

AlgCtx::YPoly AlgCtx::squarefree(const YPoly& p) {
    YPoly q = p;
    normalize(q);
    if (degree(q) <= 0) return q;
    YPoly g = gcd(q, derivative(q));
    if (degree(g) <= 0) return q;
    return exact_div(q, g);
}

int AlgCtx::sign_at(const YPoly& p, const Rat& y) {
    UPoly acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc *= y;
        acc += *it;
    }
    return sign(acc);
}

Interval AlgCtx::enclose(const YPoly& p, const Interval& y) const {
    Interval acc(Rat(0));
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * y + enclose(*it);
    return acc;
}

std::vector<AlgCtx::YPoly> AlgCtx::sturm(const YPoly& p) {
    std::vector<YPoly> seq;
    YPoly a = p;
    normalize(a);
    if (a.empty()) return seq;
    seq.push_back(a);
    YPoly d = derivative(a);
    normalize(d);
    if (d.empty()) return seq;
    seq.push_back(d);
    while (true) {
        YPoly r = rem(seq[seq.size() - 2], seq.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        seq.push_back(std::move(r));
    }
    return seq;
}

int AlgCtx::count_open(const std::vector<YPoly>& seq, const Rat& a, const Rat& b) {
    auto var = [&](const Rat& y) {
        int v = 0, last = 0;
        for (const auto& p : seq) {
            int s = sign_at(p, y);
            if (s == 0) continue;
            if (last != 0 && s != last) ++v;
            last = s;
        }
        return v;
    };
    int c = var(a) - var(b);
    if (sign_at(seq[0], b) == 0) --c;
    return c;
}

Rat AlgCtx::root_bound(const YPoly& p) {
    if (degree(p) <= 0) return 0;
    Interval l = enclose(p.back());
    while (l.certain_sign() == 0) {
        if (e_.is_rational()) break;
        e_.bisect();
        l = enclose(p.back());
    }
    Rat lmin = std::min(abs_rat(l.lo), abs_rat(l.hi));
    Rat m = 0;
    for (size_t k = 0; k + 1 < p.size(); ++k) m = std::max(m, enclose(p[k]).mag());
    Rat b = 1 + m / lmin;
    Int cl;
    mpz_cdiv_q(cl.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    return Rat(cl);
}

std::vector<Interval> AlgCtx::isolate(const YPoly& p) {
    std::vector<Interval> out;
    if (degree(p) <= 0) return out;
    auto seq = sturm(p);
    Rat b = root_bound(p);
    struct Item {
        Rat lo, hi;
        int n;
    };
    std::vector<Item> work{{-b, b, count_open(seq, -b, b)}};
    while (!work.empty()) {
        Item it = std::move(work.back());
        work.pop_back();
        if (it.n == 0) continue;
        if (it.n == 1) {
            Rat lo = it.lo, hi = it.hi;
            bool exact = false;
            while (sign_at(seq[0], lo) == 0 || sign_at(seq[0], hi) == 0) {
                Rat m = midpoint(lo, hi);
                if (sign_at(seq[0], m) == 0) {
                    lo = hi = m;
                    exact = true;
                    break;
                }
                if (count_open(seq, lo, m) == 1) hi = m;
                else lo = m;
            }
            (void)exact;
            out.emplace_back(lo, hi);
            continue;
        }
        Rat m = midpoint(it.lo, it.hi);
        if (sign_at(seq[0], m) == 0) out.emplace_back(m, m);
        work.push_back({m, it.hi, count_open(seq, m, it.hi)});
        work.push_back({it.lo, m, count_open(seq, it.lo, m)});
    }
    std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    return out;
}

void AlgCtx::refine_root(const YPoly& p, Interval& iv, const Rat& w) {
    if (iv.lo == iv.hi) return;
    int slo = sign_at(p, iv.lo);
    while (iv.width() > w) {
        Rat m = iv.mid();
        int s = sign_at(p, m);
        if (s == 0) {
            iv = Interval(m, m);
            return;
        }
        if (s == slo) iv.lo = m;
        else iv.hi = m;
    }
}

bool AlgCtx::root_annuls(const YPoly& p, const Interval& iv, const YPoly& q) {
    if (iv.lo == iv.hi) {
        if (q.empty()) return true;
        return sign_at(q, iv.lo) == 0;
    }
    YPoly g = gcd(p, q);
    if (degree(g) <= 0) return false;
    auto seq = sturm(g);
    return count_open(seq, iv.lo, iv.hi) >= 1;
}

BPoly AlgCtx::to_bpoly(const YPoly& p) { return BPoly::from_coeffs(p, Var::Y); }

}  // namespace satopo
