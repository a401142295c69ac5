#include "satopo/roots.hpp"

#include <algorithm>
#include <sstream>

namespace satopo {

namespace {

// Integer coefficients, content removed, sign kept.
UPoly positive_primitive(const UPoly& p) {
    if (p.is_zero()) return p;
    UPoly q = primitive_integer(p);
    if (sgn(q.lc()) != sgn(p.lc())) q = -q;
    return q;
}

int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// Simplest rational in the open interval (a, b), a < b.
Rat simplest_between(const Rat& a, const Rat& b) {
    if (sgn(a) < 0 && sgn(b) > 0) return 0;
    if (sgn(b) <= 0) return -simplest_between(-b, -a);
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    Rat cand(fl + 1);
    if (cand < b) return cand;
    Rat a1 = a - Rat(fl), b1 = b - Rat(fl);
    Rat inner;
    if (sgn(a1) == 0) {
        Rat inv = 1 / b1;
        Int f2;
        mpz_fdiv_q(f2.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
        inner = Rat(f2 + 1);
    } else {
        inner = simplest_between(1 / b1, 1 / a1);
    }
    return Rat(fl) + 1 / inner;
}

// Roots in the open interval (a, b) where a or b may be roots of the
// square-free polynomial seq[0]. Zeros are skipped, which makes the count
// at a root equal to the right-hand limit.
int count_open(const std::vector<UPoly>& seq, const Rat& a, const Rat& b) {
    int c = sign_variations(seq, a) - sign_variations(seq, b);
    if (seq[0].sign_at(b) == 0) --c;
    return c;
}

}  // namespace

std::vector<UPoly> sturm_sequence(const UPoly& p) {
    std::vector<UPoly> seq;
    if (p.is_zero()) return seq;
    seq.push_back(positive_primitive(p));
    UPoly d = p.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(positive_primitive(d));
    while (true) {
        UPoly r = rem(seq[seq.size() - 2], seq.back());
        if (r.is_zero()) break;
        seq.push_back(positive_primitive(-r));
    }
    return seq;
}

int sign_variations(const std::vector<UPoly>& seq, const Rat& x) {
    std::vector<int> s;
    s.reserve(seq.size());
    for (const auto& p : seq) s.push_back(p.sign_at(x));
    return variations(s);
}

int sign_variations_inf(const std::vector<UPoly>& seq, int dir) {
    std::vector<int> s;
    s.reserve(seq.size());
    for (const auto& p : seq) {
        int v = sgn(p.lc());
        if (dir < 0 && p.degree() % 2 == 1) v = -v;
        s.push_back(v);
    }
    return variations(s);
}

int sturm_count(const std::vector<UPoly>& seq, const IsolInterval& iv) {
    if (seq.empty()) throw DegenerateInput("sturm_count: zero polynomial");
    if (seq[0].sign_at(iv.lo) == 0) throw EndpointRoot("sturm_count: root at lower endpoint", true);
    if (seq[0].sign_at(iv.hi) == 0) throw EndpointRoot("sturm_count: root at upper endpoint", false);
    if (iv.lo >= iv.hi) return 0;
    return sign_variations(seq, iv.lo) - sign_variations(seq, iv.hi);
}

int sturm_count(const UPoly& p, const IsolInterval& iv) {
    if (p.is_zero()) throw DegenerateInput("sturm_count: zero polynomial");
    return sturm_count(sturm_sequence(p), iv);
}

int real_root_count(const UPoly& p) {
    if (p.is_zero()) throw DegenerateInput("real_root_count: zero polynomial");
    auto seq = sturm_sequence(p);
    return sign_variations_inf(seq, -1) - sign_variations_inf(seq, 1);
}

Rat cauchy_root_bound(const UPoly& p) {
    if (p.is_zero()) throw DegenerateInput("cauchy_root_bound: zero polynomial");
    if (p.degree() == 0) return 0;
    Rat m = 0;
    const Rat& l = p.lc();
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs_rat(p.coeff(i) / l));
    return m + 1;
}

std::vector<IsolInterval> isolate_roots(const UPoly& p, const Rat& max_width) {
    if (p.is_zero()) throw DegenerateInput("isolate_roots: zero polynomial");
    std::vector<IsolInterval> out;
    if (p.degree() <= 0) return out;
    UPoly q = positive_primitive(squarefree(p));
    if (q.degree() == 1) {
        Rat r = -q.coeff(0) / q.coeff(1);
        out.emplace_back(r, r);
        return out;
    }
    auto seq = sturm_sequence(q);
    Rat b = cauchy_root_bound(q);
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
            // Shrink until both endpoints are non-roots.
            Rat lo = it.lo, hi = it.hi;
            bool exact = false;
            while (q.sign_at(lo) == 0 || q.sign_at(hi) == 0) {
                Rat m = midpoint(lo, hi);
                if (q.sign_at(m) == 0) {
                    lo = hi = m;
                    exact = true;
                    break;
                }
                if (count_open(seq, lo, m) == 1) hi = m;
                else lo = m;
            }
            if (exact) {
                out.emplace_back(lo, hi);
            } else {
                AlgNumber a(q, IsolInterval(lo, hi));
                if (sgn(max_width) > 0) a.refine(max_width);
                out.push_back(a.interval());
            }
            continue;
        }
        Rat m = midpoint(it.lo, it.hi);
        if (q.sign_at(m) == 0) out.emplace_back(m, m);
        work.push_back({m, it.hi, count_open(seq, m, it.hi)});
        work.push_back({it.lo, m, count_open(seq, it.lo, m)});
    }
    std::sort(out.begin(), out.end(), [](const IsolInterval& a, const IsolInterval& b) { return a.lo < b.lo; });
    return out;
}

AlgNumber::AlgNumber(const Rat& r) : p_(UPoly::linear_root(r)), iv_(r, r) {}

AlgNumber::AlgNumber(UPoly defining, IsolInterval iv) : p_(std::move(defining)), iv_(std::move(iv)) {
    if (p_.degree() < 1) throw Error("AlgNumber: defining polynomial must be nonconstant");
    p_.set_var('x');
    if (p_.degree() == 1) {
        Rat r = -p_.coeff(0) / p_.coeff(1);
        iv_ = IsolInterval(r, r);
        p_ = UPoly::linear_root(r);
        return;
    }
    if (iv_.lo != iv_.hi) {
        int sl = p_.sign_at(iv_.lo), sh = p_.sign_at(iv_.hi);
        if (sl == 0) {
            Rat r = iv_.lo;
            iv_ = IsolInterval(r, r);
        } else if (sh == 0) {
            Rat r = iv_.hi;
            iv_ = IsolInterval(r, r);
        }
    }
}

void AlgNumber::bisect() {
    if (is_rational()) return;
    Rat m = iv_.mid();
    int s = p_.sign_at(m);
    if (s == 0) {
        iv_ = IsolInterval(m, m);
        return;
    }
    if (s == p_.sign_at(iv_.lo)) iv_.lo = m;
    else iv_.hi = m;
}

void AlgNumber::refine(const Rat& w) {
    while (!is_rational() && iv_.width() > w) bisect();
}

AlgNumber AlgNumber::refined(const Rat& w) const {
    AlgNumber a = *this;
    a.refine(w);
    return a;
}

int AlgNumber::sign_of(const UPoly& q) const {
    if (is_rational()) return q.sign_at(iv_.lo);
    if (q.is_zero()) return 0;
    UPoly g = gcd(p_, q);
    if (g.degree() >= 1 && sturm_count(g, iv_) == 1) return 0;
    AlgNumber a = *this;
    while (true) {
        if (a.is_rational()) return q.sign_at(a.iv_.lo);
        int s = q.eval(a.iv_).certain_sign();
        if (s != 0) return s;
        a.bisect();
    }
}

int AlgNumber::compare(const Rat& r) const {
    if (is_rational()) return cmp(iv_.lo, r) < 0 ? -1 : (cmp(iv_.lo, r) > 0 ? 1 : 0);
    if (r <= iv_.lo) return 1;
    if (r >= iv_.hi) return -1;
    return sign_of(UPoly({Rat(-r), Rat(1)}));
}

int AlgNumber::compare(const AlgNumber& o) const {
    if (o.is_rational()) return compare(o.value());
    if (is_rational()) return -o.compare(value());
    if (iv_.hi < o.iv_.lo) return -1;
    if (o.iv_.hi < iv_.lo) return 1;
    UPoly g = gcd(p_, o.p_);
    if (g.degree() >= 1) {
        IsolInterval inter(std::max(iv_.lo, o.iv_.lo), std::min(iv_.hi, o.iv_.hi));
        if (inter.lo < inter.hi && sturm_count(g, inter) >= 1) return 0;
    }
    AlgNumber a = *this, b = o;
    while (true) {
        if (a.is_rational()) return -b.compare(a.value());
        if (b.is_rational()) return a.compare(b.value());
        if (a.iv_.hi < b.iv_.lo) return -1;
        if (b.iv_.hi < a.iv_.lo) return 1;
        if (a.iv_.width() >= b.iv_.width()) a.bisect();
        else b.bisect();
    }
}

Rat AlgNumber::rational_between(const AlgNumber& o) const {
    AlgNumber a = *this, b = o;
    while (true) {
        Rat lo = a.iv_.hi, hi = b.iv_.lo;
        // lo >= a and hi <= b, so the open gap (lo, hi) sits strictly between.
        if (lo < hi) return simplest_between(lo, hi);
        if (a.is_rational() && b.is_rational()) throw Error("rational_between: numbers not ordered");
        if (!a.is_rational() && (b.is_rational() || a.iv_.width() >= b.iv_.width())) a.bisect();
        else b.bisect();
    }
}

double AlgNumber::approx() const {
    AlgNumber a = refined(Rat(1, 1L << 40));
    return to_double(a.iv_.mid());
}

std::string AlgNumber::str() const {
    if (is_rational()) return to_string(iv_.lo);
    std::ostringstream os;
    os << "root of " << p_.str() << " in (" << to_string(iv_.lo) << ", " << to_string(iv_.hi) << ") ~ " << approx();
    return os.str();
}

bool operator<(const AlgNumber& a, const AlgNumber& b) { return a.compare(b) < 0; }
bool operator==(const AlgNumber& a, const AlgNumber& b) { return a.compare(b) == 0; }

std::vector<AlgNumber> real_roots(const UPoly& p) {
    std::vector<AlgNumber> out;
    if (p.degree() <= 0) return out;
    UPoly q = positive_primitive(squarefree(p));
    for (const auto& iv : isolate_roots(q)) {
        if (iv.lo == iv.hi) out.emplace_back(iv.lo);
        else out.emplace_back(q, iv);
    }
    return out;
}

std::vector<AlgNumber> merge_roots(std::vector<AlgNumber> roots) {
    std::sort(roots.begin(), roots.end());
    std::vector<AlgNumber> out;
    for (auto& r : roots)
        if (out.empty() || out.back().compare(r) != 0) out.push_back(std::move(r));
    return out;
}

std::vector<Rat> separating_samples(const std::vector<AlgNumber>& sorted) {
    std::vector<Rat> out;
    if (sorted.empty()) {
        out.emplace_back(0);
        return out;
    }
    Rat first = sorted.front().interval().lo;
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), first.get_num_mpz_t(), first.get_den_mpz_t());
    out.emplace_back(Rat(fl - 1));
    for (size_t i = 1; i < sorted.size(); ++i) out.push_back(sorted[i - 1].rational_between(sorted[i]));
    Rat last = sorted.back().interval().hi;
    Int cl;
    mpz_cdiv_q(cl.get_mpz_t(), last.get_num_mpz_t(), last.get_den_mpz_t());
    out.emplace_back(Rat(cl + 1));
    return out;
}

int sign_at_root(const UPoly& q, const UPoly& p, IsolInterval iv) { return AlgNumber(p, std::move(iv)).sign_of(q); }

}  // namespace satopo
