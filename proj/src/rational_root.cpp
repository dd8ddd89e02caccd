#include "lacfactor/oracle.hpp"

#include <algorithm>

namespace lacfactor {

namespace {

constexpr std::size_t kMaxCandidates = 200000;

bool pollard_brent(const BigInt& n, BigInt& factor, std::uint64_t c0) {
    BigInt y = 2, c = static_cast<unsigned long>(c0), g = 1, q = 1, x, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    std::uint64_t work = 0;
    auto f = [&](BigInt& v) {
        v = v * v + c;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) f(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                f(y);
                BigInt diff = abs(x - y);
                q = q * diff;
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        }
        r *= 2;
        work += r;
        if (work > (1u << 22)) return false;
    }
    if (g == n) {
        do {
            f(ys);
            BigInt diff = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    if (g == n) return false;
    factor = g;
    return true;
}

void factor_into(BigInt n, std::map<BigInt, unsigned>& out) {
    if (n <= 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        out[n] += 1;
        return;
    }
    for (std::uint64_t c = 1; c < 24; ++c) {
        BigInt f;
        if (pollard_brent(n, f, c)) {
            factor_into(f, out);
            factor_into(n / f, out);
            return;
        }
    }
    throw CapacityExceeded("could not factor coefficient " + n.get_str() + " for rational root candidates");
}

std::map<BigInt, unsigned> factor_integer(BigInt n) {
    std::map<BigInt, unsigned> out;
    n = abs(n);
    for (unsigned long p = 2; p < 20000 && n > 1; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[BigInt(p)] += 1;
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    factor_into(n, out);
    return out;
}

std::vector<BigInt> divisors(const std::map<BigInt, unsigned>& fac) {
    std::size_t count = 1;
    for (auto& [p, e] : fac) {
        count *= e + 1;
        if (count > kMaxCandidates) throw CapacityExceeded("too many rational root candidates");
    }
    std::vector<BigInt> ds{1};
    for (auto& [p, e] : fac) {
        std::size_t n = ds.size();
        BigInt pw = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pw *= p;
            for (std::size_t i = 0; i < n; ++i) ds.push_back(ds[i] * pw);
        }
    }
    return ds;
}

BigInt random_prime(std::mt19937_64& rng) {
    BigInt x = 1;
    for (int i = 0; i < 2; ++i) {
        x <<= 64;
        x += static_cast<unsigned long>(rng());
    }
    mpz_setbit(x.get_mpz_t(), 128);
    mpz_nextprime(x.get_mpz_t(), x.get_mpz_t());
    return x;
}

// theta^j f(r) mod P, theta = x d/dx
BigInt theta_eval(const std::vector<BigInt>& c, const std::vector<BigNat>& e, unsigned j, const BigInt& r,
                  const BigInt& P) {
    BigInt pm1 = P - 1, s = 0, t, ej, re;
    for (std::size_t i = 0; i < c.size(); ++i) {
        mpz_mod(re.get_mpz_t(), e[i].get_mpz_t(), pm1.get_mpz_t());
        mpz_powm(t.get_mpz_t(), r.get_mpz_t(), re.get_mpz_t(), P.get_mpz_t());
        t *= c[i];
        if (j > 0) {
            mpz_mod(ej.get_mpz_t(), e[i].get_mpz_t(), P.get_mpz_t());
            BigInt pw;
            mpz_powm_ui(pw.get_mpz_t(), ej.get_mpz_t(), j, P.get_mpz_t());
            t *= pw;
        }
        s += t;
        mpz_mod(s.get_mpz_t(), s.get_mpz_t(), P.get_mpz_t());
    }
    return s;
}

}  // namespace

FactorList rational_root_factors(const LacunaryPoly& f, long d, std::mt19937_64& rng, int primes) {
    if (f.nvars() != 1) throw std::invalid_argument("rational root backend expects one variable");
    if (f.is_zero()) throw std::invalid_argument("rational root backend on the zero polynomial");
    if (d < 1 || f.is_constant()) return {};
    if (f.term(0).exps[0] != 0) throw std::invalid_argument("rational root backend expects a normalized input");

    BigInt den = 1;
    for (auto& t : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    std::vector<BigInt> c;
    std::vector<BigNat> e;
    for (auto& t : f.terms()) {
        c.push_back(BigInt(t.coeff * den));
        e.push_back(t.exps[0]);
    }
    auto da = divisors(factor_integer(c.front()));
    auto db = divisors(factor_integer(c.back()));
    if (da.size() * db.size() > kMaxCandidates) throw CapacityExceeded("too many rational root candidates");

    std::vector<BigInt> P;
    for (int i = 0; i < std::max(primes, 1); ++i) P.push_back(random_prime(rng));

    std::vector<FactorEntry> out;
    for (auto& a0 : da)
        for (auto& b : db) {
            BigInt g;
            mpz_gcd(g.get_mpz_t(), a0.get_mpz_t(), b.get_mpz_t());
            if (g != 1) continue;
            for (int sign : {1, -1}) {
                BigInt a = a0 * sign;
                bool root = true;
                std::vector<BigInt> r(P.size());
                for (std::size_t i = 0; i < P.size() && root; ++i) {
                    BigInt binv;
                    BigInt bm = b % P[i];
                    while (bm == 0 || a % P[i] == 0) {
                        P[i] = random_prime(rng);
                        bm = b % P[i];
                    }
                    mpz_invert(binv.get_mpz_t(), bm.get_mpz_t(), P[i].get_mpz_t());
                    r[i] = a * binv;
                    mpz_mod(r[i].get_mpz_t(), r[i].get_mpz_t(), P[i].get_mpz_t());
                    if (theta_eval(c, e, 0, r[i], P[i]) != 0) root = false;
                }
                if (!root) continue;
                // a nonzero root of a k-term polynomial has multiplicity < k
                unsigned long mult = 1;
                for (unsigned j = 1; j + 1 < c.size(); ++j) {
                    bool zero = true;
                    for (std::size_t i = 0; i < P.size() && zero; ++i)
                        if (theta_eval(c, e, j, r[i], P[i]) != 0) zero = false;
                    if (!zero) break;
                    ++mult;
                }
                out.push_back({LacunaryPoly::canonicalize(1, {{Rational(b), {BigNat(1)}}, {Rational(-a), {BigNat(0)}}}),
                               mult});
            }
        }
    return make_factor_list(std::move(out));
}

}  // namespace lacfactor
