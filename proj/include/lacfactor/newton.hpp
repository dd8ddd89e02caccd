#pragma once

#include "lacfactor/core.hpp"

#include <map>
#include <string>
#include <vector>

namespace lacfactor {

// x is the Y-exponent, y the X-exponent.
struct SupportPoint {
    BigInt x, y;
    bool operator==(const SupportPoint& o) const { return x == o.x && y == o.y; }
    bool operator<(const SupportPoint& o) const {
        int c = cmp(x, o.x);
        return c != 0 ? c < 0 : y < o.y;
    }
};

struct ExactSlope {
    bool vertical = false;
    BigInt u = 0, w = 1;  // u/w, reduced, w > 0

    static ExactSlope from(const BigInt& dy, const BigInt& dx);
    bool operator==(const ExactSlope& o) const {
        return vertical == o.vertical && (vertical || (u == o.u && w == o.w));
    }
    bool operator<(const ExactSlope& o) const;
    Rational value() const;
    std::string str() const;
};

enum class Hull { Lower, Upper, VerticalLeft, VerticalRight };
enum class Degeneracy { Point, Segment, Polygon2D };

const char* hull_name(Hull h);
const char* degeneracy_name(Degeneracy d);

struct Edge {
    SupportPoint a, b;  // ordered by x, then y
    ExactSlope slope;
    Hull hull;
};

struct NewtonPolygon {
    std::vector<SupportPoint> vertices;  // counterclockwise from the smallest (x, y)
    std::vector<Edge> edges;             // in counterclockwise order
    Degeneracy degeneracy = Degeneracy::Point;

    // Same vertex set.
    bool same_shape(const NewtonPolygon& o) const;
};

struct PQ {
    BigInt p;
    BigNat q;
};

std::vector<SupportPoint> support(const LacunaryPoly& f, std::size_t i1, std::size_t i2);
// Projected points together with the term indices that land on each.
std::map<SupportPoint, std::vector<std::size_t>> support_groups(const LacunaryPoly& f, std::size_t i1,
                                                                std::size_t i2);
NewtonPolygon convex_polygon(std::vector<SupportPoint> pts);
PQ slope_to_pq(const ExactSlope& s);
bool admissible(const ExactSlope& s, long d);

struct ParallelPair {
    ExactSlope slope;
    PQ pq;
    std::size_t e1, e2;  // edge indices; equal for a segment
};

std::vector<ParallelPair> admissible_parallel_pairs(const NewtonPolygon& P, long d);
std::vector<std::pair<std::size_t, std::size_t>> admissible_nonparallel_pairs(const NewtonPolygon& P, long d);
NewtonPolygon minkowski_sum(const NewtonPolygon& P, const NewtonPolygon& Q);

}  // namespace lacfactor
