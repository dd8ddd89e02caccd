#pragma once

#include "lacfactor/core.hpp"
#include "lacfactor/dense.hpp"

#include <utility>
#include <vector>

namespace lacfactor {

// Largest v with X^v dividing a; -1 for the zero polynomial.
int valuation(const QPoly& a);

QPoly wronskian(const std::vector<QPoly>& fs);
// val(wr) >= sum val(f_j) - C(l,2); requires wr != 0.
bool wronskian_val_check(const std::vector<QPoly>& fs);

// res_Z(g(X,Z), Y - h(X,Z)) as a polynomial in (X,Y). Inputs use variable 0
// for X and variable 1 for Z.
MPoly sylvester_resultant(const MPoly& g, const MPoly& h);

struct ValuationMultiset {
    std::vector<std::pair<Rational, unsigned long>> entries;  // distinct v, ascending
    unsigned long infinite = 0;                               // roots equal to zero
    bool operator==(const ValuationMultiset& o) const { return entries == o.entries && infinite == o.infinite; }
};

// Valuations in X of the roots in Y of g(X,Y) (variable 0 = X, 1 = Y), read
// from the lower hull.
ValuationMultiset root_valuations(const MPoly& g);

// Valuations of f(X,phi) over the roots phi of g(X,Z); g's lower hull must
// have a single slope.
ValuationMultiset composed_valuations(const MPoly& f, const MPoly& g);
// The common root valuation of a single-slope g.
Rational single_slope_valuation(const MPoly& g);

Rational valuation_gap_bound(const std::vector<std::pair<BigInt, BigInt>>& terms, const Rational& v, long d);

// Whether X^a_j Z^b_j are linearly independent over Q modulo g, with g
// monic in Z.
bool independent_mod(const std::vector<std::pair<int, int>>& terms, const MPoly& g);

}  // namespace lacfactor
