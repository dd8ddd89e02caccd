#pragma once

#include "lacfactor/core.hpp"
#include "lacfactor/newton.hpp"
#include "lacfactor/oracle.hpp"

#include <vector>

namespace lacfactor {

struct Component {
    BigInt omega;
    LacunaryPoly poly;
};

// Terms grouped by p*alpha + q*beta, ascending.
std::vector<Component> components(const LacunaryPoly& f, const BigInt& p, const BigNat& q);
LacunaryPoly homogenize(const LacunaryPoly& h, const BigInt& p, const BigNat& q);
// Total degree of homogenize(h) per unit degree of h.
BigNat homogenized_weight(const BigInt& p, const BigNat& q);
// Inverse of homogenize on a normalized (p,q)-homogeneous polynomial.
LacunaryPoly dehomogenize(const LacunaryPoly& g, const BigInt& p, const BigNat& q);
bool is_weighted_homogeneous(const LacunaryPoly& f, const BigInt& p, const BigNat& q);

FactorList weighted_homogeneous_factors(const LacunaryPoly& f, long d, Oracles& oracles);

}  // namespace lacfactor
