#include "lacfactor/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace lacfactor {

namespace {

using YGroups = std::map<Mono, QPoly>;

// Split by monomial in the y variables (all but variable 0), keeping the
// terms whose y-degree equals k.
YGroups y_level(const MPoly& f, int k) {
    YGroups g;
    for (auto& [m, c] : f.t) {
        int s = 0;
        for (int i = 1; i < f.n; ++i) s += m[i];
        if (s != k) continue;
        Mono key = m;
        key[0] = 0;
        auto& q = g[key];
        if (static_cast<int>(q.size()) <= m[0]) q.resize(m[0] + 1);
        q[m[0]] = c;
    }
    for (auto& [k2, q] : g) upoly::trim(q);
    return g;
}

void add_times_monomial(MPoly& f, const QPoly& a, const Mono& ymono) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        Mono m = ymono;
        m[0] = static_cast<int>(i);
        f.add_term(m, a[i]);
    }
}

// Linear y-adic lifting of F = prod W_j modulo (y)^(d+1), W_j monic in x0.
std::vector<MPoly> lift(const MPoly& F, const std::vector<QPoly>& w, const std::vector<int>& ys, int d) {
    std::size_t r = w.size();
    std::vector<QPoly> sigma(r);
    for (std::size_t j = 0; j < r; ++j) {
        QPoly q{Rational(1)};
        for (std::size_t k = 0; k < r; ++k)
            if (k != j) q = upoly::rem(upoly::mul(q, w[k]), w[j]);
        sigma[j] = upoly::inverse_mod(q, w[j]);
    }
    std::vector<MPoly> W;
    for (auto& x : w) W.push_back(upoly::to_mpoly(x, F.n, 0));
    for (int k = 1; k <= d; ++k) {
        MPoly prod = MPoly::constant(F.n, 1);
        for (auto& x : W) prod = mul_truncated(prod, x, ys, k);
        MPoly E = truncate(F, ys, k) - prod;
        for (auto& [ym, e] : y_level(E, k)) {
            if (e.empty()) continue;
            for (std::size_t j = 0; j < r; ++j) add_times_monomial(W[j], upoly::rem(upoly::mul(sigma[j], e), w[j]), ym);
        }
    }
    return W;
}

// G with G^i = P modulo (y)^(d+1), G = G0 at y = 0.
bool iroot(const MPoly& P, unsigned i, const QPoly& G0, const std::vector<int>& ys, int d, MPoly& G) {
    G = upoly::to_mpoly(G0, P.n, 0);
    if (i == 1) {
        G = P;
        return true;
    }
    QPoly denom = upoly::scale(QPoly{Rational(1)}, Rational(i));
    for (unsigned k = 1; k < i; ++k) denom = upoly::mul(denom, G0);
    for (int k = 1; k <= d; ++k) {
        MPoly Gi = MPoly::constant(P.n, 1);
        for (unsigned s = 0; s < i; ++s) Gi = mul_truncated(Gi, G, ys, k);
        MPoly R = truncate(P, ys, k) - Gi;
        for (int l = 0; l < k; ++l)
            if (!y_level(R, l).empty()) return false;
        for (auto& [ym, r] : y_level(R, k)) {
            QPoly q, rr;
            upoly::divmod(r, denom, q, rr);
            if (!rr.empty()) return false;
            add_times_monomial(G, q, ym);
        }
    }
    return true;
}

struct Found {
    MPoly g;
    unsigned long mult;
};

// f primitive, no monomial content, at least two variables all present.
std::vector<Found> factor_core(const MPoly& f, long d, std::uint64_t seed) {
    int n = f.n;
    int D = f.total_degree();
    int dd = static_cast<int>(std::min<long>(d, D));
    std::vector<int> ys;
    for (int i = 1; i < n; ++i) ys.push_back(i);
    std::mt19937_64 rng(seed);

    for (int attempt = 0; attempt < 12; ++attempt) {
        long range = 1L << std::min(6 + 2 * attempt, 40);
        std::uniform_int_distribution<long> cd(-16 - attempt * 8, 16 + attempt * 8), ad(-range, range);
        std::vector<Rational> c(n), a(n);
        MPoly fp = f;
        std::vector<int> done;
        for (int i = 1; i < n; ++i) {
            do c[i] = cd(rng);
            while (c[i] == 0);
            a[i] = ad(rng);
            done.push_back(i);
            fp = substitute_linear(fp, i, c[i], 0, a[i], done, dd);
        }
        QPoly u;
        for (auto& [m, co] : fp.t) {
            bool base = true;
            for (int i = 1; i < n; ++i) base = base && m[i] == 0;
            if (!base) continue;
            if (static_cast<int>(u.size()) <= m[0]) u.resize(m[0] + 1);
            u[m[0]] = co;
        }
        upoly::trim(u);
        if (upoly::deg(u) != D) continue;
        Rational lc = u.back();
        fp = fp.scaled(1 / lc);
        u = upoly::scale(u, 1 / lc);

        struct Small {
            QPoly t;
            unsigned mult;
        };
        std::vector<Small> small;
        for (auto& [s, i] : upoly::yun(upoly::primitive(u)))
            for (auto& g : small_factors_squarefree(s, d)) small.push_back({upoly::monic(upoly::to_q(g)), i});
        if (small.empty()) return {};

        std::vector<QPoly> w;
        QPoly rest = u;
        for (auto& s : small) {
            QPoly p{Rational(1)};
            for (unsigned k = 0; k < s.mult; ++k) p = upoly::mul(p, s.t);
            w.push_back(p);
            rest = upoly::quo(rest, p);
        }
        if (upoly::deg(rest) > 0) w.push_back(upoly::monic(rest));
        std::vector<MPoly> L = lift(fp, w, ys, dd);

        std::vector<Found> found;
        MPoly cur = f;
        bool consistent = true;
        std::vector<std::size_t> pool(small.size());
        for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
        for (std::size_t k = 1; k <= pool.size() && consistent; ++k) {
            bool again = true;
            while (again && consistent && k <= pool.size()) {
                again = false;
                std::vector<std::size_t> idx(k);
                for (std::size_t i = 0; i < k; ++i) idx[i] = i;
                while (true) {
                    long deg = 0;
                    unsigned mult = small[pool[idx[0]]].mult;
                    bool ok = true;
                    for (auto s : idx) {
                        deg += upoly::deg(small[pool[s]].t);
                        ok = ok && small[pool[s]].mult == mult;
                    }
                    if (ok && deg <= d) {
                        MPoly P = MPoly::constant(n, 1);
                        QPoly G0{Rational(1)};
                        for (auto s : idx) {
                            P = mul_truncated(P, L[pool[s]], ys, dd);
                            G0 = upoly::mul(G0, small[pool[s]].t);
                        }
                        MPoly G;
                        if (iroot(P, mult, G0, ys, dd, G) && G.total_degree() == deg) {
                            MPoly back = G;
                            for (int i = 1; i < n; ++i) back = substitute_linear(back, i, -c[i], 0, -a[i]);
                            back = primitive_part(back);
                            unsigned long mu = 0;
                            MPoly q;
                            while (divide_exact(cur, back, q)) {
                                cur = q;
                                ++mu;
                            }
                            if (mu > 0) {
                                if (mu != mult) consistent = false;
                                found.push_back({back, mu});
                                std::vector<std::size_t> rem;
                                for (std::size_t i = 0; i < pool.size(); ++i)
                                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) rem.push_back(pool[i]);
                                pool = rem;
                                again = true;
                                break;
                            }
                        }
                    }
                    std::size_t i = k;
                    while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
                    if (i == 0) break;
                    ++idx[i - 1];
                    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
                }
            }
        }
        // every small image factor must be explained, otherwise the point was unlucky
        if (consistent && pool.empty()) return found;
    }
    throw std::runtime_error("dense multivariate factorization found no lucky evaluation point");
}

}  // namespace

FactorList dense_multivariate_factors(const MPoly& f0, long d, std::uint64_t seed) {
    if (f0.is_zero()) throw std::invalid_argument("factoring the zero polynomial");
    int n = f0.n;
    MPoly f = primitive_part(f0);
    std::vector<FactorEntry> out;
    std::vector<int> active;
    {
        MPoly g(n);
        Mono lo(n);
        for (int v = 0; v < n; ++v) lo[v] = f.min_degree(v);
        for (auto& [m, c] : f.t) {
            Mono k = m;
            for (int v = 0; v < n; ++v) k[v] -= lo[v];
            g.t.emplace(k, c);
        }
        for (int v = 0; v < n; ++v) {
            if (lo[v] > 0 && d >= 1) out.push_back({LacunaryPoly::variable(n, v), static_cast<unsigned long>(lo[v])});
            if (g.degree(v) > 0) active.push_back(v);
        }
        f = g;
    }
    if (active.size() == 1) {
        int v = active[0];
        for (auto& e : dense_univariate_factors(upoly::from_mpoly(f, v), d))
            out.push_back({embed(e.factor, n, {static_cast<std::size_t>(v)}), e.mult});
    } else if (active.size() >= 2) {
        int m = static_cast<int>(active.size());
        MPoly g(m);
        for (auto& [mono, c] : f.t) {
            Mono k(m);
            for (int i = 0; i < m; ++i) k[i] = mono[active[i]];
            g.t.emplace(k, c);
        }
        std::vector<std::size_t> where(active.begin(), active.end());
        for (auto& fd : factor_core(g, d, seed)) out.push_back({embed(to_lacunary(fd.g), n, where), fd.mult});
    }
    return make_factor_list(std::move(out));
}

}  // namespace lacfactor
