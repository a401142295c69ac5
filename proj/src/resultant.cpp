#include "satopo/resultant.hpp"

#include <algorithm>

namespace satopo {

Rat determinant(std::vector<std::vector<Rat>> m) {
    const size_t n = m.size();
    Rat det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && sgn(m[piv][c]) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (sgn(m[r][c]) == 0) continue;
            Rat f = m[r][c] / m[c][c];
            for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

UPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys, char var) {
    const size_t n = xs.size();
    std::vector<Rat> dd = ys;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    UPoly acc({}, var);
    for (size_t i = n; i-- > 0;) {
        acc *= UPoly({Rat(-xs[i]), Rat(1)}, var);
        acc += UPoly(std::vector<Rat>{dd[i]}, var);
    }
    acc.set_var(var);
    return acc;
}

namespace {

Rat sample_point(size_t k) {
    // 0, 1, -1, 2, -2, ...
    long v = static_cast<long>((k + 1) / 2);
    return Rat(k % 2 == 1 ? v : -v);
}

struct Coeffs {
    std::vector<UPoly> p, q;  // coefficients in the eliminated variable
    int m, n;                 // formal degrees
    int dp, dq;               // degrees in the kept variable
    char kept;
};

Coeffs prepare(const BPoly& p, const BPoly& q, Var eliminate) {
    if (p.is_zero() && q.is_zero()) throw DegenerateInput("resultant: both inputs are zero");
    Var other = eliminate == Var::X ? Var::Y : Var::X;
    Coeffs c;
    c.p = p.coeffs_in(eliminate);
    c.q = q.coeffs_in(eliminate);
    c.m = p.degree(eliminate);
    c.n = q.degree(eliminate);
    c.dp = std::max(p.degree(other), 0);
    c.dq = std::max(q.degree(other), 0);
    c.kept = eliminate == Var::X ? 'y' : 'x';
    return c;
}

// Rows: n - j shifted copies of p, m - j shifted copies of q, columns for
// powers m+n-j-1 .. j of the eliminated variable.
Rat psc_at(const std::vector<Rat>& pv, const std::vector<Rat>& qv, int m, int n, int j) {
    const int size = m + n - 2 * j;
    if (size == 0) return 1;
    const int top = m + n - j - 1;
    std::vector<std::vector<Rat>> mat(static_cast<size_t>(size), std::vector<Rat>(static_cast<size_t>(size), Rat(0)));
    int row = 0;
    auto fill = [&](const std::vector<Rat>& cv, int deg, int copies) {
        for (int s = copies - 1; s >= 0; --s, ++row) {
            for (int k = 0; k <= deg; ++k) {
                int power = k + s;
                int col = top - power;
                if (col < 0 || col >= size) continue;
                mat[static_cast<size_t>(row)][static_cast<size_t>(col)] = cv[static_cast<size_t>(k)];
            }
        }
    };
    fill(pv, m, n - j);
    fill(qv, n, m - j);
    return determinant(std::move(mat));
}

std::vector<Rat> eval_coeffs(const std::vector<UPoly>& cs, const Rat& v, int deg) {
    std::vector<Rat> out(static_cast<size_t>(deg + 1), Rat(0));
    for (size_t k = 0; k < cs.size(); ++k) out[k] = cs[k].eval(v);
    return out;
}

// Determinant polynomial coefficient: the columns for powers
// m+n-k-1 .. k+1 followed by the column for power i.
Rat subres_coeff_at(const std::vector<Rat>& pv, const std::vector<Rat>& qv, int m, int n, int k, int i) {
    const int size = m + n - 2 * k;
    const int top = m + n - k - 1;
    std::vector<std::vector<Rat>> mat(static_cast<size_t>(size), std::vector<Rat>(static_cast<size_t>(size), Rat(0)));
    auto col_of = [&](int power) -> int {
        if (power > k) return top - power;
        if (power == i) return size - 1;
        return -1;
    };
    int row = 0;
    auto fill = [&](const std::vector<Rat>& cv, int deg, int copies) {
        for (int s = copies - 1; s >= 0; --s, ++row)
            for (int e = 0; e <= deg; ++e) {
                int col = col_of(e + s);
                if (col < 0) continue;
                mat[static_cast<size_t>(row)][static_cast<size_t>(col)] = cv[static_cast<size_t>(e)];
            }
    };
    fill(pv, m, n - k);
    fill(qv, n, m - k);
    return determinant(std::move(mat));
}

UPoly psc_poly(const Coeffs& c, int j, int bound) {
    std::vector<Rat> xs, ys;
    for (int k = 0; k <= bound; ++k) {
        Rat v = sample_point(static_cast<size_t>(k));
        xs.push_back(v);
        ys.push_back(psc_at(eval_coeffs(c.p, v, c.m), eval_coeffs(c.q, v, c.n), c.m, c.n, j));
    }
    return interpolate(xs, ys, c.kept);
}

}  // namespace

UPoly resultant(const BPoly& p, const BPoly& q, Var eliminate) {
    Coeffs c = prepare(p, q, eliminate);
    if (p.is_zero() || q.is_zero()) return UPoly({}, c.kept);
    int bound = c.n * c.dp + c.m * c.dq;
    bound = std::min(bound, p.total_degree() * q.total_degree());
    return psc_poly(c, 0, bound);
}

std::vector<UPoly> principal_subresultants(const BPoly& p, const BPoly& q, Var eliminate) {
    Coeffs c = prepare(p, q, eliminate);
    std::vector<UPoly> out;
    if (p.is_zero() || q.is_zero()) return out;
    int top = std::min(c.m, c.n);
    for (int j = 0; j <= top; ++j) {
        int bound = (c.n - j) * c.dp + (c.m - j) * c.dq;
        out.push_back(psc_poly(c, j, bound));
    }
    return out;
}

BPoly subresultant_poly(const BPoly& p, const BPoly& q, Var eliminate, int k) {
    Coeffs c = prepare(p, q, eliminate);
    if (k < 0 || k > std::min(c.m, c.n)) throw Error("subresultant_poly: index out of range");
    if (k == std::min(c.m, c.n)) return c.m <= c.n ? p : q;
    const int bound = (c.n - k) * c.dp + (c.m - k) * c.dq;
    BPoly out;
    for (int i = 0; i <= k; ++i) {
        std::vector<Rat> xs, ys;
        for (int s = 0; s <= bound; ++s) {
            Rat v = sample_point(static_cast<size_t>(s));
            xs.push_back(v);
            ys.push_back(subres_coeff_at(eval_coeffs(c.p, v, c.m), eval_coeffs(c.q, v, c.n), c.m, c.n, k, i));
        }
        UPoly ci = interpolate(xs, ys);
        const auto& cc = ci.coeffs();
        for (size_t e = 0; e < cc.size(); ++e) {
            int a = static_cast<int>(e);
            out += eliminate == Var::Y ? BPoly::monomial(a, i, cc[e]) : BPoly::monomial(i, a, cc[e]);
        }
    }
    return out;
}

UPoly content_y(const BPoly& p) {
    UPoly g;
    for (const auto& c : p.coeffs_in(Var::Y)) {
        UPoly cx = c;
        cx.set_var('x');
        g = gcd(g, cx);
        if (g.degree() == 0) break;
    }
    g.set_var('x');
    return g;
}

BPoly divide_x_factor(const BPoly& p, const UPoly& c) {
    auto cs = p.coeffs_in(Var::Y);
    for (auto& v : cs) {
        v.set_var('x');
        v = satopo::exact_div(v, c);
    }
    return BPoly::from_coeffs(cs, Var::Y);
}

BPoly times_x_factor(const BPoly& p, const UPoly& c) { return p * BPoly::from_upoly(c, Var::X); }

BPoly exact_div(const BPoly& p, const BPoly& d) {
    if (d.is_zero()) throw DegenerateInput("exact_div: division by zero");
    const int dy = p.degree(Var::Y) - d.degree(Var::Y);
    if (dy < 0) throw Error("exact_div: degree mismatch");
    const int dx = std::max(p.degree(Var::X), 0);
    UPoly lc = d.coeffs_in(Var::Y).back();
    std::vector<Rat> xs;
    std::vector<std::vector<Rat>> cols(static_cast<size_t>(dy + 1));
    for (size_t s = 0; static_cast<int>(xs.size()) <= dx; ++s) {
        Rat v = sample_point(s);
        if (sgn(lc.eval(v)) == 0) continue;
        UPoly q = satopo::exact_div(p.specialize(Var::X, v), d.specialize(Var::X, v));
        xs.push_back(v);
        for (int j = 0; j <= dy; ++j) cols[static_cast<size_t>(j)].push_back(q.coeff(j));
    }
    std::vector<UPoly> cs;
    for (auto& col : cols) cs.push_back(interpolate(xs, col));
    return BPoly::from_coeffs(cs, Var::Y);
}

BPoly gcd(const BPoly& p, const BPoly& q) {
    if (p.is_zero()) return q;
    if (q.is_zero()) return p;
    UPoly cp = content_y(p), cq = content_y(q);
    UPoly c = satopo::gcd(cp, cq);
    c.set_var('x');
    BPoly pp = divide_x_factor(p, cp), pq = divide_x_factor(q, cq);
    BPoly g(1);
    if (pp.degree(Var::Y) >= 1 && pq.degree(Var::Y) >= 1) {
        auto psc = principal_subresultants(pp, pq, Var::Y);
        int k = 0;
        while (k < static_cast<int>(psc.size()) && psc[static_cast<size_t>(k)].is_zero()) ++k;
        if (k > 0) {
            BPoly s = subresultant_poly(pp, pq, Var::Y, k);
            g = divide_x_factor(s, content_y(s));
        }
    }
    return times_x_factor(g, c);
}

BPoly squarefree(const BPoly& p) {
    if (p.is_zero() || p.is_constant()) return p;
    UPoly c = content_y(p);
    BPoly prim = divide_x_factor(p, c);
    UPoly csf = c.degree() > 0 ? satopo::squarefree(c) : UPoly(1);
    if (prim.degree(Var::Y) >= 1) {
        auto psc = principal_subresultants(prim, prim.diff(Var::Y), Var::Y);
        int k = 0;
        while (k < static_cast<int>(psc.size()) && psc[static_cast<size_t>(k)].is_zero()) ++k;
        if (k > 0) {
            BPoly s = subresultant_poly(prim, prim.diff(Var::Y), Var::Y, k);
            BPoly g = divide_x_factor(s, content_y(s));
            prim = exact_div(prim, g);
        }
    } else {
        prim = BPoly(1);
    }
    return times_x_factor(prim, csf);
}

BPoly resultant_level(const BPoly& p, const BPoly& q, Var eliminate) {
    if (p.is_zero()) throw DegenerateInput("resultant_level: zero polynomial");
    const int tdeg = std::max(p.degree(eliminate), 0);
    std::vector<Rat> ts;
    std::vector<UPoly> rs;
    for (int k = 0; k <= tdeg; ++k) {
        Rat t = sample_point(static_cast<size_t>(k));
        ts.push_back(t);
        rs.push_back(resultant(p, q - BPoly(t), eliminate));
    }
    int xdeg = 0;
    for (const auto& r : rs) xdeg = std::max(xdeg, r.degree());
    BPoly out;
    for (int i = 0; i <= xdeg; ++i) {
        std::vector<Rat> ys;
        for (const auto& r : rs) ys.push_back(r.coeff(i));
        UPoly ct = interpolate(ts, ys, 't');
        const auto& cc = ct.coeffs();
        for (size_t j = 0; j < cc.size(); ++j) out += BPoly::monomial(i, static_cast<int>(j), cc[j]);
    }
    return out;
}

}  // namespace satopo
