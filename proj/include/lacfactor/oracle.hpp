#pragma once

#include "lacfactor/core.hpp"
#include "lacfactor/dense.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace lacfactor {

struct FactorEntry {
    LacunaryPoly factor;
    unsigned long mult = 0;
};

// Canonical factors, pairwise distinct, sorted by factor_less.
using FactorList = std::vector<FactorEntry>;

bool factor_less(const LacunaryPoly& a, const LacunaryPoly& b);
// Canonicalizes every factor; repeated factors keep the largest multiplicity.
FactorList make_factor_list(std::vector<FactorEntry> entries);
FactorList union_max(const FactorList& a, const FactorList& b);
FactorList intersect_min(const FactorList& a, const FactorList& b);
FactorList filter_degree(const FactorList& a, long d);
bool same_factors(const FactorList& a, const FactorList& b);

struct OracleBudget {
    std::uint64_t univariate_calls = 0;
    std::uint64_t univariate_size = 0;  // sum of lacunary bit sizes passed in
    std::uint64_t dense_calls = 0;
    std::uint64_t dense_degree_sum = 0;
    std::uint64_t dense_degree_max = 0;
    std::uint64_t gap_checks = 0;
    std::uint64_t gap_violations = 0;

    OracleBudget& operator+=(const OracleBudget& o);
};

struct OracleConfig {
    long dense_cap = 4096;
    std::uint64_t seed = 0x5eed;
    int primes = 3;
};

enum class Scope { FullWithinCap, Degree1Only };

// Backends. Factors come back in canonical form.
FactorList rational_root_factors(const LacunaryPoly& f, long d, std::mt19937_64& rng, int primes);
FactorList dense_univariate_factors(const QPoly& f, long d);
FactorList dense_multivariate_factors(const MPoly& f, long d, std::uint64_t seed);

// Irreducible factors of degree <= d of a squarefree primitive integer
// polynomial (primitive, positive leading coefficient).
std::vector<ZPoly> small_factors_squarefree(const ZPoly& f, long d);

// Composition used by the pipeline: degree-1 requests go to the rational
// root backend, everything else (and its capacity failures) to the dense
// backend when the input is expandable.
class Oracles {
public:
    explicit Oracles(OracleConfig cfg = {}) : cfg_(cfg) {}

    FactorList univariate(const LacunaryPoly& f, long d);
    FactorList dense(const LacunaryPoly& f, long d);

    const OracleConfig& config() const { return cfg_; }
    OracleBudget budget;

private:
    std::uint64_t seed_for(const std::string& key) const;

    OracleConfig cfg_;
    std::map<std::string, FactorList> cache_;
};

std::string poly_key(const LacunaryPoly& f);

}  // namespace lacfactor
