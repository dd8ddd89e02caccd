#pragma once

#include "lacfactor/core.hpp"
#include "lacfactor/gap.hpp"
#include "lacfactor/oracle.hpp"

#include <vector>

namespace lacfactor {

using Direction = std::vector<BigInt>;

struct GradedClass {
    std::vector<BigNat> base;  // exponent at t = 0
    std::vector<std::size_t> terms;
    LacunaryPoly image;  // univariate u(Z)
};

std::vector<Direction> direction_candidates(const LacunaryPoly& f, long d);
std::vector<GradedClass> unidimensional_components(const LacunaryPoly& f, const Direction& w);
BigNat direction_weight(const Direction& w);
FactorList unidimensional_factors(const LacunaryPoly& f, long d, Oracles& oracles);

class DisjointSet {
public:
    explicit DisjointSet(std::size_t n);
    std::size_t find(std::size_t x);
    void unite(std::size_t a, std::size_t b);
    std::size_t size() const { return parent_.size(); }

private:
    std::vector<std::size_t> parent_, rank_;
};

TermPartition join_partitions(const TermPartition& a, const TermPartition& b);

struct MultiPartition {
    TermPartition partition;
    std::vector<std::vector<Rational>> bounds;  // per block, per variable exponent spread bound
    std::vector<std::vector<BigNat>> spreads;   // per block, per variable observed spread
    std::uint64_t gap_checks = 0, gap_violations = 0;
    bool ok() const;
};

MultiPartition multivariate_partition(const LacunaryPoly& f, long d);
FactorList multidimensional_factors(const LacunaryPoly& f, long d, Oracles& oracles);

// Irreducible factors of degree <= d with multiplicity.
FactorList factor(const LacunaryPoly& f, long d, Oracles& oracles);

}  // namespace lacfactor
