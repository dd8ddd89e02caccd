#include "lacfactor/dense.hpp"

#include <algorithm>

namespace lacfactor {

MPoly MPoly::constant(int nv, const Rational& c) {
    MPoly p(nv);
    if (c != 0) p.t[Mono(nv, 0)] = c;
    return p;
}

MPoly MPoly::var(int nv, int i) {
    MPoly p(nv);
    Mono m(nv, 0);
    m.at(i) = 1;
    p.t[m] = 1;
    return p;
}

int MPoly::total_degree() const {
    int d = -1;
    for (auto& [m, c] : t) {
        int s = 0;
        for (int e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

int MPoly::degree(int v) const {
    int d = -1;
    for (auto& [m, c] : t) d = std::max(d, m[v]);
    return d;
}

int MPoly::min_degree(int v) const {
    int d = -1;
    for (auto& [m, c] : t) d = d < 0 ? m[v] : std::min(d, m[v]);
    return d;
}

void MPoly::add_term(const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (auto& [m, c] : o.t) r.add_term(m, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (auto& [m, c] : o.t) r.add_term(m, -c);
    return r;
}

MPoly MPoly::operator-() const { return scaled(-1); }

MPoly MPoly::scaled(const Rational& c) const {
    MPoly r(n);
    if (c == 0) return r;
    for (auto& [m, a] : t) r.t.emplace_hint(r.t.end(), m, a * c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const { return mul_truncated(*this, o, {}, -1); }

MPoly MPoly::pow(unsigned e) const {
    MPoly r = constant(n, 1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

static int partial_degree(const Mono& m, const std::vector<int>& vars) {
    int s = 0;
    for (int v : vars) s += m[v];
    return s;
}

MPoly mul_truncated(const MPoly& a, const MPoly& b, const std::vector<int>& vars, int maxdeg) {
    MPoly r(a.n);
    Mono m(a.n);
    Rational c;
    for (auto& [ma, ca] : a.t) {
        int da = maxdeg >= 0 ? partial_degree(ma, vars) : 0;
        if (maxdeg >= 0 && da > maxdeg) continue;
        for (auto& [mb, cb] : b.t) {
            if (maxdeg >= 0 && da + partial_degree(mb, vars) > maxdeg) continue;
            for (int i = 0; i < a.n; ++i) m[i] = ma[i] + mb[i];
            mpq_mul(c.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
            r.add_term(m, c);
        }
    }
    return r;
}

MPoly truncate(const MPoly& a, const std::vector<int>& vars, int maxdeg) {
    MPoly r(a.n);
    for (auto& [m, c] : a.t)
        if (partial_degree(m, vars) <= maxdeg) r.t.emplace_hint(r.t.end(), m, c);
    return r;
}

MPoly derivative(const MPoly& a, int v) {
    MPoly r(a.n);
    for (auto& [m, c] : a.t) {
        if (m[v] == 0) continue;
        Mono k = m;
        k[v] -= 1;
        r.add_term(k, c * m[v]);
    }
    return r;
}

Rational evaluate(const MPoly& a, const std::vector<Rational>& x) {
    Rational s = 0, p;
    for (auto& [m, c] : a.t) {
        p = c;
        for (int i = 0; i < a.n; ++i)
            for (int k = 0; k < m[i]; ++k) p *= x[i];
        s += p;
    }
    return s;
}

static bool mono_divides(const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool divide_exact(const MPoly& a, const MPoly& b, MPoly& q) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    q = MPoly(a.n);
    MPoly r = a;
    const auto& [lb, lc] = *b.t.rbegin();
    Mono m(a.n);
    while (!r.is_zero()) {
        auto [lr, cr] = *r.t.rbegin();
        if (!mono_divides(lb, lr)) return false;
        for (int i = 0; i < a.n; ++i) m[i] = lr[i] - lb[i];
        Rational c = cr / lc;
        q.add_term(m, c);
        Mono k(a.n);
        for (auto& [mb, cb] : b.t) {
            for (int i = 0; i < a.n; ++i) k[i] = m[i] + mb[i];
            r.add_term(k, -c * cb);
        }
    }
    return true;
}

MPoly substitute_linear(const MPoly& f, int v, const Rational& c, int w, const Rational& s,
                        const std::vector<int>& vars, int maxdeg) {
    // Horner in x_v: f = sum_k C_k x_v^k, result = (..(C_m L + C_{m-1}) L + ..) with L = x_v + c x_w + s
    int top = f.degree(v);
    if (top < 0) return f;
    std::vector<MPoly> C(top + 1, MPoly(f.n));
    for (auto& [m, a] : f.t) {
        Mono k = m;
        k[v] = 0;
        C[m[v]].t.emplace(k, a);
    }
    MPoly r = C[top];
    for (int k = top - 1; k >= 0; --k) {
        MPoly next(f.n);
        for (auto& [m, a] : r.t) {
            Mono u = m;
            u[v] += 1;
            next.add_term(u, a);
            if (c != 0) {
                Mono x = m;
                x[w] += 1;
                next.add_term(x, a * c);
            }
            if (s != 0) next.add_term(m, a * s);
        }
        for (auto& [m, a] : C[k].t) next.add_term(m, a);
        r = maxdeg >= 0 ? truncate(next, vars, maxdeg) : std::move(next);
    }
    return r;
}

MPoly primitive_part(const MPoly& f) {
    if (f.is_zero()) return f;
    BigInt den = 1, num = 0;
    for (auto& [m, c] : f.t) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    }
    Rational s(den, num);
    s.canonicalize();
    return f.scaled(s);
}

MPoly expand_dense(const LacunaryPoly& f, long cap) {
    BigNat td = f.total_degree();
    if (td > cap)
        throw CapacityExceeded("dense expansion of total degree " + td.get_str() + " exceeds cap " +
                               std::to_string(cap));
    MPoly p(static_cast<int>(f.nvars()));
    for (auto& t : f.terms()) {
        Mono m(f.nvars());
        for (std::size_t i = 0; i < f.nvars(); ++i) m[i] = static_cast<int>(t.exps[i].get_si());
        p.t.emplace(std::move(m), t.coeff);
    }
    return p;
}

LacunaryPoly to_lacunary(const MPoly& f) {
    std::vector<Term> raw;
    raw.reserve(f.t.size());
    for (auto& [m, c] : f.t) {
        Term t{c, {}};
        for (int e : m) t.exps.emplace_back(e);
        raw.push_back(std::move(t));
    }
    return LacunaryPoly::canonicalize(f.n, std::move(raw));
}

namespace upoly {

int deg(const QPoly& a) { return static_cast<int>(a.size()) - 1; }
int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

void trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
void trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    Rational t;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpq_mul(t.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
            r[i + j] += t;
        }
    }
    trim(r);
    return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
    return r;
}

QPoly scale(const QPoly& a, const Rational& c) {
    if (c == 0) return {};
    QPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

QPoly deriv(const QPoly& a) {
    QPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<unsigned long>(i));
    trim(r);
    return r;
}

ZPoly deriv(const ZPoly& a) {
    ZPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<unsigned long>(i));
    trim(r);
    return r;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    if (b.empty()) throw std::invalid_argument("polynomial division by zero");
    r = a;
    trim(r);
    int db = deg(b);
    if (deg(r) < db) {
        q.clear();
        return;
    }
    q.assign(r.size() - b.size() + 1, Rational(0));
    Rational inv = 1 / b.back();
    for (int i = deg(r); i >= db; --i) {
        if (r[i] == 0) continue;
        Rational c = r[i] * inv;
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
    }
    r.resize(db);
    trim(r);
    trim(q);
}

QPoly rem(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    divmod(a, b, q, r);
    return r;
}

QPoly quo(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    divmod(a, b, q, r);
    return q;
}

bool divides(const QPoly& b, const QPoly& a) { return rem(a, b).empty(); }

QPoly monic(const QPoly& a) {
    if (a.empty()) return a;
    return scale(a, 1 / a.back());
}

QPoly gcd(const QPoly& a, const QPoly& b) {
    if (a.empty()) return monic(b);
    if (b.empty()) return monic(a);
    return to_q(gcd(primitive(a), primitive(b)));
}

QPoly inverse_mod(const QPoly& a, const QPoly& m) {
    // extended Euclid over Q, keeping remainders monic
    QPoly r0 = m, r1 = rem(a, m), s0, s1{Rational(1)};
    while (deg(r1) > 0) {
        QPoly q, r;
        divmod(r0, r1, q, r);
        QPoly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        if (!r1.empty()) {
            Rational c = 1 / r1.back();
            r1 = scale(r1, c);
            s1 = scale(s1, c);
        }
    }
    if (r1.empty()) throw std::logic_error("inverse_mod: not coprime");
    return rem(scale(s1, 1 / r1[0]), m);
}

Rational eval(const QPoly& a, const Rational& x) {
    Rational s = 0;
    for (int i = deg(a); i >= 0; --i) s = s * x + a[i];
    return s;
}

BigInt content(const ZPoly& a) {
    BigInt g = 0;
    for (auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly primitive(const ZPoly& a) {
    ZPoly r = a;
    trim(r);
    if (r.empty()) return r;
    BigInt g = content(r);
    if (sgn(r.back()) < 0) g = -g;
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

ZPoly primitive(const QPoly& a) {
    BigInt den = 1;
    for (auto& c : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    ZPoly r;
    for (auto& c : a) r.push_back(BigInt(c * den));
    return primitive(r);
}

QPoly to_q(const ZPoly& a) {
    QPoly r;
    for (auto& c : a) r.emplace_back(c);
    return r;
}

bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& q) {
    if (b.empty()) throw std::invalid_argument("polynomial division by zero");
    ZPoly r = a;
    trim(r);
    int db = deg(b);
    if (r.empty()) {
        q.clear();
        return true;
    }
    if (deg(r) < db) return false;
    q.assign(r.size() - b.size() + 1, BigInt(0));
    BigInt c;
    for (int i = deg(r); i >= db; --i) {
        if (r[i] == 0) continue;
        if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return false;
        mpz_divexact(c.get_mpz_t(), r[i].get_mpz_t(), b.back().get_mpz_t());
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    }
    for (int i = 0; i < db && i < static_cast<int>(r.size()); ++i)
        if (r[i] != 0) return false;
    trim(q);
    return true;
}

static BigInt max_norm(const ZPoly& a) {
    BigInt m = 0;
    for (auto& c : a)
        if (abs(c) > m) m = abs(c);
    return m;
}

static ZPoly prs_gcd(ZPoly a, ZPoly b) {
    // primitive remainder sequence
    a = primitive(a);
    b = primitive(b);
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!b.empty()) {
        QPoly q, r;
        divmod(to_q(a), to_q(b), q, r);
        a = std::move(b);
        b = primitive(r);
    }
    return primitive(a);
}

ZPoly gcd(const ZPoly& a0, const ZPoly& b0) {
    ZPoly a = primitive(a0), b = primitive(b0);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (deg(a) == 0 || deg(b) == 0) return {BigInt(1)};
    BigInt ca = content(a0), cb = content(b0);
    // heuristic gcd: evaluate at a large integer, recover from the xi-adic digits
    BigInt xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        BigInt va = 0, vb = 0;
        for (int i = deg(a); i >= 0; --i) va = va * xi + a[i];
        for (int i = deg(b); i >= 0; --i) vb = vb * xi + b[i];
        BigInt g;
        mpz_gcd(g.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
        ZPoly G;
        BigInt half = xi / 2;
        while (g != 0) {
            BigInt d;
            mpz_fdiv_r(d.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
            if (d > half) d -= xi;
            G.push_back(d);
            g = (g - d) / xi;
        }
        G = primitive(G);
        ZPoly q;
        if (!G.empty() && divide_exact(a, G, q) && divide_exact(b, G, q)) return G;
        xi = xi * 73794 / 27011;
    }
    return prs_gcd(a, b);
}

std::vector<std::pair<ZPoly, unsigned>> yun(const ZPoly& a0) {
    std::vector<std::pair<ZPoly, unsigned>> out;
    ZPoly a = primitive(a0);
    if (deg(a) <= 0) return out;
    ZPoly da = deriv(a);
    ZPoly g = gcd(a, da);
    ZPoly c, d, q;
    divide_exact(a, g, c);
    QPoly dq = quo(to_q(da), to_q(g));
    QPoly dd = sub(dq, deriv(to_q(c)));
    unsigned i = 1;
    while (deg(c) > 0) {
        ZPoly h = gcd(c, primitive(dd));
        if (dd.empty()) h = c;
        if (deg(h) > 0) out.push_back({h, i});
        ZPoly cn;
        divide_exact(c, h, cn);
        QPoly dn = quo(dd, to_q(h));
        c = primitive(cn);
        dd = sub(dn, deriv(to_q(c)));
        ++i;
    }
    return out;
}

QPoly from_mpoly(const MPoly& f, int v) {
    QPoly r;
    for (auto& [m, c] : f.t) {
        for (int i = 0; i < f.n; ++i)
            if (i != v && m[i] != 0) throw std::invalid_argument("polynomial is not univariate");
        if (static_cast<int>(r.size()) <= m[v]) r.resize(m[v] + 1);
        r[m[v]] += c;
    }
    trim(r);
    return r;
}

MPoly to_mpoly(const QPoly& a, int nv, int v) {
    MPoly p(nv);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) {
            Mono m(nv, 0);
            m[v] = static_cast<int>(i);
            p.t.emplace(std::move(m), a[i]);
        }
    return p;
}

}  // namespace upoly

}  // namespace lacfactor
