#pragma once

#include "lacfactor/core.hpp"
#include "lacfactor/dense.hpp"
#include "lacfactor/io.hpp"
#include "lacfactor/oracle.hpp"

#include <random>
#include <string>
#include <vector>

namespace testsupport {

using namespace lacfactor;

inline LacunaryPoly P(const std::string& s, const std::vector<std::string>& vars = {"x", "y"}) {
    return parse(s, vars).poly;
}

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline long nonzero_coeff(std::mt19937_64& rng, long r) {
    long c = 0;
    while (c == 0) c = uniform(rng, -r, r);
    return c;
}

// Random polynomial with `terms` terms, exponents of total degree <= maxdeg.
inline LacunaryPoly random_poly(std::mt19937_64& rng, std::size_t n, int maxdeg, int terms, long coef = 5) {
    std::vector<Term> raw;
    for (int t = 0; t < terms; ++t) {
        Term u{Rational(nonzero_coeff(rng, coef)), std::vector<BigNat>(n)};
        long left = maxdeg;
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        for (auto v : order) {
            long e = uniform(rng, 0, left);
            u.exps[v] = e;
            left -= e;
        }
        raw.push_back(u);
    }
    return LacunaryPoly::canonicalize(n, raw);
}

// Random non-monomial polynomial of total degree between 1 and maxdeg with
// no monomial content.
inline LacunaryPoly random_factor(std::mt19937_64& rng, std::size_t n, int maxdeg, int maxterms = 4) {
    while (true) {
        LacunaryPoly g = random_poly(rng, n, maxdeg, static_cast<int>(uniform(rng, 2, maxterms)), 4);
        if (g.num_terms() < 2) continue;
        g = normalize(g);
        if (g.is_constant()) continue;
        return g;
    }
}

// Sparse cofactor whose exponents spread over [0, spread].
inline LacunaryPoly random_sparse(std::mt19937_64& rng, std::size_t n, int spread, int maxterms) {
    std::vector<Term> raw;
    int terms = static_cast<int>(uniform(rng, 1, maxterms));
    for (int t = 0; t < terms; ++t) {
        Term u{Rational(nonzero_coeff(rng, 3)), std::vector<BigNat>(n)};
        for (std::size_t v = 0; v < n; ++v) u.exps[v] = uniform(rng, 0, 1) ? uniform(rng, 0, spread) : 0;
        raw.push_back(u);
    }
    LacunaryPoly h = LacunaryPoly::canonicalize(n, raw);
    return h.is_zero() ? LacunaryPoly::constant(n, 1) : h;
}

// Dense reference: full factorization of the expanded polynomial.
inline FactorList dense_reference(const LacunaryPoly& f, long d, long cap = 4096) {
    return dense_multivariate_factors(expand_dense(f, cap), d, 12345);
}

inline std::string show(const FactorList& fl, const std::vector<std::string>& vars) {
    std::string s = "{";
    for (auto& e : fl) s += " (" + format(e.factor, vars) + ")^" + std::to_string(e.mult);
    return s + " }";
}

}  // namespace testsupport
