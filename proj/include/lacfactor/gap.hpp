#pragma once

#include "lacfactor/core.hpp"
#include "lacfactor/newton.hpp"
#include "lacfactor/oracle.hpp"

#include <vector>

namespace lacfactor {

struct TermPartition {
    std::vector<std::vector<std::size_t>> blocks;

    // Blocks sorted internally and by first element.
    TermPartition normalized() const;
    bool operator==(const TermPartition& o) const { return normalized().blocks == o.normalized().blocks; }
};

// A linear weight a*alpha + b*beta attached to an edge, read in the frame
// (reciprocal and/or swapped variables) where the edge becomes lower-left.
struct EdgeFrame {
    Rational a, b;
    Rational v;      // valuation used in that frame
    Rational delta;  // 2d(4d+1) - v
};

EdgeFrame edge_frame(const Edge& e, long d);

struct BlockReport {
    std::vector<std::size_t> block;
    Rational spread1, spread2;  // weight spreads under each edge
    Rational bound1, bound2;    // gap bounds those spreads must respect
    BigInt spread_alpha, spread_beta;
    Rational bound_alpha, bound_beta;
    bool ok() const;
};

struct GapReport {
    std::vector<BlockReport> blocks;
    bool ok() const;
};

Rational gap_threshold(long d, const Rational& v, std::size_t l);
// Items sorted by weight (ties by index), split at the first excess.
std::vector<std::vector<std::size_t>> split_by_weight(std::vector<std::size_t> items,
                                                      const std::vector<Rational>& weight, const Rational& delta);
TermPartition gap_split(const LacunaryPoly& f, const Rational& v, long d);

// Partition of points (x = beta, y = alpha) under two non-parallel edges.
std::pair<TermPartition, GapReport> refine_points(const std::vector<SupportPoint>& pts, const Edge& e1,
                                                  const Edge& e2, long d);
std::pair<TermPartition, GapReport> refine_partition(const LacunaryPoly& f, const Edge& e1, const Edge& e2, long d);

FactorList inhomogeneous_factors(const LacunaryPoly& f, long d, Oracles& oracles);

}  // namespace lacfactor
