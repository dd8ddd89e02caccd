#include "lacfactor/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace lacfactor {

namespace {

using u64 = std::uint64_t;
using Pp = std::vector<u64>;  // coefficients mod p, ascending

void trimp(Pp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 powm(u64 b, u64 e, u64 p) {
    u64 r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

u64 invm(u64 a, u64 p) { return powm(a, p - 2, p); }

Pp reduce(const ZPoly& a, u64 p) {
    Pp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
    trimp(r);
    return r;
}

Pp mulp(const Pp& a, const Pp& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
    }
    Pp r(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<u64>(acc[i] % p);
    trimp(r);
    return r;
}

Pp subp(const Pp& a, const Pp& b, u64 p) {
    Pp r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
    trimp(r);
    return r;
}

Pp addp(const Pp& a, const Pp& b, u64 p) {
    Pp r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
    trimp(r);
    return r;
}

void divmodp(const Pp& a, const Pp& b, u64 p, Pp& q, Pp& r) {
    r = a;
    trimp(r);
    if (r.size() < b.size()) {
        q.clear();
        return;
    }
    q.assign(r.size() - b.size() + 1, 0);
    u64 inv = invm(b.back(), p);
    std::size_t db = b.size() - 1;
    for (std::size_t i = r.size(); i-- > db;) {
        if (!r[i]) continue;
        u64 c = r[i] * inv % p;
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = (r[i - db + j] + (p - c) * b[j]) % p;
    }
    r.resize(db);
    trimp(r);
    trimp(q);
}

Pp modp(const Pp& a, const Pp& b, u64 p) {
    Pp q, r;
    divmodp(a, b, p, q, r);
    return r;
}

Pp quop(const Pp& a, const Pp& b, u64 p) {
    Pp q, r;
    divmodp(a, b, p, q, r);
    return q;
}

Pp monicp(const Pp& a, u64 p) {
    if (a.empty()) return a;
    u64 inv = invm(a.back(), p);
    Pp r = a;
    for (auto& c : r) c = c * inv % p;
    return r;
}

Pp gcdp(Pp a, Pp b, u64 p) {
    trimp(a);
    trimp(b);
    while (!b.empty()) {
        Pp r = modp(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monicp(a, p);
}

Pp derivp(const Pp& a, u64 p) {
    Pp r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * (i % p) % p);
    trimp(r);
    return r;
}

Pp powmodp(Pp b, const BigNat& e, const Pp& m, u64 p) {
    Pp r{1};
    b = modp(b, m, p);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = modp(mulp(r, r, p), m, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = modp(mulp(r, b, p), m, p);
    }
    return r;
}

Pp invmodp(const Pp& a, const Pp& m, u64 p) {
    Pp r0 = m, r1 = modp(a, m, p), s0, s1{1};
    while (r1.size() > 1) {
        Pp q, r;
        divmodp(r0, r1, p, q, r);
        Pp s = subp(s0, mulp(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.empty()) throw std::logic_error("inverse mod p: not coprime");
    u64 c = invm(r1[0], p);
    for (auto& x : s1) x = x * c % p;
    return modp(s1, m, p);
}

struct DDF {
    std::vector<std::pair<int, Pp>> parts;  // (degree, product of irreducibles of that degree)
    Pp rest;                                // product of irreducibles of degree > d
    std::size_t small_count = 0;
};

DDF distinct_degree(Pp f, long d, u64 p) {
    DDF out;
    Pp h{0, 1};
    bool irreducible_left = false;
    for (long i = 1; i <= d; ++i) {
        if (static_cast<long>(f.size()) - 1 < 2 * i) {
            irreducible_left = true;
            break;
        }
        h = powmodp(h, BigNat(static_cast<unsigned long>(p)), f, p);
        Pp g = gcdp(f, subp(h, Pp{0, 1}, p), p);
        if (g.size() > 1) {
            out.parts.push_back({static_cast<int>(i), g});
            out.small_count += (g.size() - 1) / i;
            f = quop(f, g, p);
            h = modp(h, f, p);
        }
    }
    long df = static_cast<long>(f.size()) - 1;
    if (df > 0) {
        if (irreducible_left && df <= d) {
            out.parts.push_back({static_cast<int>(df), f});
            out.small_count += 1;
        } else {
            out.rest = f;
        }
    }
    return out;
}

void equal_degree(const Pp& g, int i, u64 p, std::mt19937_64& rng, std::vector<Pp>& out) {
    std::size_t n = g.size() - 1;
    if (static_cast<int>(n) == i) {
        out.push_back(g);
        return;
    }
    BigNat e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, i);
    e = (e - 1) / 2;
    std::uniform_int_distribution<u64> dist(0, p - 1);
    while (true) {
        Pp a(n);
        for (auto& c : a) c = dist(rng);
        trimp(a);
        if (a.size() < 2) continue;
        Pp b = powmodp(a, e, g, p);
        Pp h = gcdp(g, subp(b, Pp{1}, p), p);
        if (h.size() > 1 && h.size() < g.size()) {
            equal_degree(h, i, p, rng, out);
            equal_degree(quop(g, h, p), i, p, rng, out);
            return;
        }
    }
}

ZPoly from_pp(const Pp& a) {
    ZPoly r;
    for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
    return r;
}

void sym_mod(ZPoly& a, const BigInt& m) {
    BigInt half = m / 2;
    for (auto& c : a) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    upoly::trim(a);
}

void mod_pos(ZPoly& a, const BigInt& m) {
    for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    upoly::trim(a);
}

// Multifactor linear lifting: f = lc * prod W_j mod p^K with W_j monic.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<Pp>& w, u64 p, int K) {
    std::size_t r = w.size();
    BigInt lc = f.back();
    u64 lcinv = invm(mpz_fdiv_ui(lc.get_mpz_t(), p), p);
    std::vector<Pp> sigma(r);
    for (std::size_t j = 0; j < r; ++j) {
        Pp q{1};
        for (std::size_t k = 0; k < r; ++k)
            if (k != j) q = modp(mulp(q, w[k], p), w[j], p);
        sigma[j] = invmodp(q, w[j], p);
    }
    std::vector<ZPoly> W;
    for (auto& x : w) W.push_back(from_pp(x));
    BigInt pk = static_cast<unsigned long>(p);
    for (int k = 1; k < K; ++k) {
        ZPoly prod{lc};
        for (auto& x : W) prod = upoly::mul(prod, x);
        ZPoly E(std::max(f.size(), prod.size()));
        for (std::size_t i = 0; i < f.size(); ++i) E[i] += f[i];
        for (std::size_t i = 0; i < prod.size(); ++i) E[i] -= prod[i];
        Pp e(E.size());
        for (std::size_t i = 0; i < E.size(); ++i) {
            BigInt t;
            mpz_divexact(t.get_mpz_t(), E[i].get_mpz_t(), pk.get_mpz_t());
            e[i] = mpz_fdiv_ui(t.get_mpz_t(), p) * lcinv % p;
        }
        trimp(e);
        if (!e.empty())
            for (std::size_t j = 0; j < r; ++j) {
                Pp delta = modp(mulp(sigma[j], e, p), w[j], p);
                for (std::size_t i = 0; i < delta.size(); ++i) {
                    if (W[j].size() <= i) W[j].resize(i + 1);
                    W[j][i] += pk * static_cast<unsigned long>(delta[i]);
                }
            }
        pk *= static_cast<unsigned long>(p);
    }
    return W;
}

BigInt two_norm_ceil(const ZPoly& f) {
    BigInt s = 0;
    for (auto& c : f) s += c * c;
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    return r + 1;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (fn(idx)) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<ZPoly> small_factors_squarefree(const ZPoly& f0, long d) {
    ZPoly f = upoly::primitive(f0);
    int n = upoly::deg(f);
    if (n <= 0 || d <= 0) return {};
    if (n == 1) return {f};

    // pick the prime with the fewest small modular factors among a few good ones
    ZPoly df = upoly::deriv(f);
    u64 best_p = 0;
    DDF best;
    BigInt cand = 1073741827;
    int good = 0;
    while (good < 3) {
        mpz_nextprime(cand.get_mpz_t(), cand.get_mpz_t());
        u64 p = cand.get_ui();
        if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0) continue;
        Pp fp = reduce(f, p);
        if (gcdp(fp, derivp(fp, p), p).size() != 1) continue;
        ++good;
        DDF dd = distinct_degree(monicp(fp, p), d, p);
        if (best_p == 0 || dd.small_count < best.small_count) {
            best_p = p;
            best = std::move(dd);
        }
        if (best.small_count <= 1) break;
    }
    u64 p = best_p;
    if (best.small_count == 0) return {};

    std::mt19937_64 rng(p ^ static_cast<u64>(n));
    std::vector<Pp> small;
    for (auto& [i, g] : best.parts) equal_degree(g, i, p, rng, small);
    std::vector<Pp> lifting = small;
    if (!best.rest.empty() && best.rest.size() > 1) lifting.push_back(best.rest);

    BigInt lc = f.back();
    BigInt bound = 2 * abs(lc) * two_norm_ceil(f);
    bound <<= static_cast<unsigned long>(d);
    int K = 1;
    BigInt pk = static_cast<unsigned long>(p);
    while (pk <= bound) {
        pk *= static_cast<unsigned long>(p);
        ++K;
    }
    std::vector<ZPoly> W = hensel_lift(f, lifting, p, K);

    std::vector<ZPoly> found;
    std::vector<std::size_t> pool(small.size());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
    ZPoly F = f;
    for (std::size_t k = 1; k <= pool.size(); ++k) {
        bool again = true;
        while (again && k <= pool.size()) {
            again = false;
            for_each_subset(pool.size(), k, [&](const std::vector<std::size_t>& S) {
                long deg = 0;
                for (auto s : S) deg += static_cast<long>(small[pool[s]].size()) - 1;
                if (deg > d) return false;
                ZPoly g{F.back()};
                for (auto s : S) {
                    g = upoly::mul(g, W[pool[s]]);
                    mod_pos(g, pk);
                }
                sym_mod(g, pk);
                g = upoly::primitive(g);
                ZPoly q;
                if (upoly::deg(g) < 1 || !upoly::divide_exact(F, g, q)) return false;
                found.push_back(g);
                F = upoly::primitive(q);
                std::vector<std::size_t> rest;
                for (std::size_t i = 0; i < pool.size(); ++i)
                    if (std::find(S.begin(), S.end(), i) == S.end()) rest.push_back(pool[i]);
                pool = rest;
                again = true;
                return true;
            });
        }
    }
    return found;
}

FactorList dense_univariate_factors(const QPoly& f0, long d) {
    QPoly f = f0;
    upoly::trim(f);
    if (f.empty()) throw std::invalid_argument("factoring the zero polynomial");
    std::vector<FactorEntry> out;
    std::size_t k = 0;
    while (k < f.size() && f[k] == 0) ++k;
    if (k > 0 && d >= 1) out.push_back({LacunaryPoly::variable(1, 0), k});
    ZPoly a = upoly::primitive(QPoly(f.begin() + static_cast<long>(k), f.end()));
    for (auto& [s, i] : upoly::yun(a))
        for (auto& g : small_factors_squarefree(s, d)) out.push_back({to_lacunary(upoly::to_mpoly(upoly::to_q(g), 1, 0)), i});
    return make_factor_list(std::move(out));
}

}  // namespace lacfactor
