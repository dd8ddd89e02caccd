#pragma once

#include "lacfactor/core.hpp"

#include <map>
#include <vector>

namespace lacfactor {

// Small-degree exact polynomials, the working currency of the dense
// backends and of the probes.

using Mono = std::vector<int>;

struct MPoly {
    int n = 0;
    std::map<Mono, Rational> t;  // lex order, variable 0 most significant

    MPoly() = default;
    explicit MPoly(int nv) : n(nv) {}
    static MPoly constant(int nv, const Rational& c);
    static MPoly var(int nv, int i);

    bool is_zero() const { return t.empty(); }
    int total_degree() const;
    int degree(int v) const;
    int min_degree(int v) const;
    void add_term(const Mono& m, const Rational& c);

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator-() const;
    MPoly scaled(const Rational& c) const;
    MPoly pow(unsigned e) const;
    bool operator==(const MPoly& o) const { return n == o.n && t == o.t; }
};

MPoly mul_truncated(const MPoly& a, const MPoly& b, const std::vector<int>& vars, int maxdeg);
MPoly truncate(const MPoly& a, const std::vector<int>& vars, int maxdeg);
MPoly derivative(const MPoly& a, int v);
Rational evaluate(const MPoly& a, const std::vector<Rational>& x);
// Exact division over the rationals; false when b does not divide a.
bool divide_exact(const MPoly& a, const MPoly& b, MPoly& q);
// f(..., x_v + c*x_w + s, ...), keeping only terms whose degree in vars is <= maxdeg
// (maxdeg < 0 keeps everything).
MPoly substitute_linear(const MPoly& f, int v, const Rational& c, int w, const Rational& s,
                        const std::vector<int>& vars = {}, int maxdeg = -1);
// Integer coefficients with gcd 1, sign kept.
MPoly primitive_part(const MPoly& f);

MPoly expand_dense(const LacunaryPoly& f, long cap);
LacunaryPoly to_lacunary(const MPoly& f);

// Univariate helpers, coefficient vectors in ascending degree.
using QPoly = std::vector<Rational>;
using ZPoly = std::vector<BigInt>;

namespace upoly {

int deg(const QPoly& a);
int deg(const ZPoly& a);
void trim(QPoly& a);
void trim(ZPoly& a);
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
QPoly scale(const QPoly& a, const Rational& c);
QPoly deriv(const QPoly& a);
ZPoly deriv(const ZPoly& a);
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
QPoly rem(const QPoly& a, const QPoly& b);
QPoly quo(const QPoly& a, const QPoly& b);
bool divides(const QPoly& b, const QPoly& a);
QPoly monic(const QPoly& a);
QPoly gcd(const QPoly& a, const QPoly& b);
// Inverse of a modulo m (coprime), degree < deg m.
QPoly inverse_mod(const QPoly& a, const QPoly& m);
Rational eval(const QPoly& a, const Rational& x);
ZPoly primitive(const QPoly& a);
ZPoly primitive(const ZPoly& a);
QPoly to_q(const ZPoly& a);
BigInt content(const ZPoly& a);
ZPoly gcd(const ZPoly& a, const ZPoly& b);
bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& q);

// Squarefree decomposition: pairs (s_i, i) with a = c * prod s_i^i.
std::vector<std::pair<ZPoly, unsigned>> yun(const ZPoly& a);

QPoly from_mpoly(const MPoly& f, int v);
MPoly to_mpoly(const QPoly& a, int nv, int v);

}  // namespace upoly

}  // namespace lacfactor
