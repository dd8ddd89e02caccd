#include "lacfactor/newton.hpp"

#include <algorithm>

namespace lacfactor {

ExactSlope ExactSlope::from(const BigInt& dy, const BigInt& dx) {
    ExactSlope s;
    if (dx == 0) {
        s.vertical = true;
        return s;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), dy.get_mpz_t(), dx.get_mpz_t());
    s.u = dy / g;
    s.w = dx / g;
    if (s.w < 0) {
        s.u = -s.u;
        s.w = -s.w;
    }
    return s;
}

bool ExactSlope::operator<(const ExactSlope& o) const {
    if (vertical || o.vertical) return !vertical && o.vertical;
    return u * o.w < o.u * w;
}

Rational ExactSlope::value() const {
    if (vertical) throw std::logic_error("vertical slope has no finite value");
    return Rational(u, w);
}

std::string ExactSlope::str() const {
    if (vertical) return "-1/0";
    return u.get_str() + "/" + w.get_str();
}

const char* hull_name(Hull h) {
    switch (h) {
        case Hull::Lower: return "lower";
        case Hull::Upper: return "upper";
        case Hull::VerticalLeft: return "vertical-left";
        case Hull::VerticalRight: return "vertical-right";
    }
    return "?";
}

const char* degeneracy_name(Degeneracy d) {
    switch (d) {
        case Degeneracy::Point: return "point";
        case Degeneracy::Segment: return "segment";
        case Degeneracy::Polygon2D: return "polygon";
    }
    return "?";
}

bool NewtonPolygon::same_shape(const NewtonPolygon& o) const {
    auto a = vertices, b = o.vertices;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::vector<SupportPoint> support(const LacunaryPoly& f, std::size_t i1, std::size_t i2) {
    std::vector<SupportPoint> pts;
    for (auto& [p, idx] : support_groups(f, i1, i2)) pts.push_back(p);
    return pts;
}

std::map<SupportPoint, std::vector<std::size_t>> support_groups(const LacunaryPoly& f, std::size_t i1,
                                                                std::size_t i2) {
    if (i1 == i2) throw std::invalid_argument("support needs two distinct variables");
    if (f.is_zero()) throw std::invalid_argument("support of the zero polynomial");
    std::map<SupportPoint, std::vector<std::size_t>> g;
    for (std::size_t j = 0; j < f.num_terms(); ++j) {
        const auto& e = f.term(j).exps;
        g[SupportPoint{e.at(i2), e.at(i1)}].push_back(j);
    }
    return g;
}

static BigInt cross(const SupportPoint& o, const SupportPoint& a, const SupportPoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

static Edge make_edge(const SupportPoint& from, const SupportPoint& to) {
    Edge e;
    BigInt dx = to.x - from.x, dy = to.y - from.y;
    e.slope = ExactSlope::from(dy, dx);
    if (dx > 0)
        e.hull = Hull::Lower;
    else if (dx < 0)
        e.hull = Hull::Upper;
    else
        e.hull = dy < 0 ? Hull::VerticalLeft : Hull::VerticalRight;
    e.a = from < to ? from : to;
    e.b = from < to ? to : from;
    return e;
}

NewtonPolygon convex_polygon(std::vector<SupportPoint> pts) {
    if (pts.empty()) throw std::invalid_argument("convex hull of an empty point set");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    NewtonPolygon P;
    if (pts.size() == 1) {
        P.vertices = pts;
        P.degeneracy = Degeneracy::Point;
        return P;
    }
    std::vector<SupportPoint> h;
    h.reserve(2 * pts.size());
    for (auto& p : pts) {
        while (h.size() >= 2 && sgn(cross(h[h.size() - 2], h.back(), p)) <= 0) h.pop_back();
        h.push_back(p);
    }
    std::size_t lower = h.size() + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        while (h.size() >= lower && sgn(cross(h[h.size() - 2], h.back(), pts[i])) <= 0) h.pop_back();
        h.push_back(pts[i]);
    }
    h.pop_back();
    if (h.size() == 2) {
        P.vertices = h;
        P.degeneracy = Degeneracy::Segment;
        Edge e = make_edge(h[0], h[1]);
        if (e.hull == Hull::VerticalRight) e.hull = Hull::VerticalLeft;
        P.edges.push_back(e);
        return P;
    }
    P.vertices = h;
    P.degeneracy = Degeneracy::Polygon2D;
    for (std::size_t i = 0; i < h.size(); ++i) P.edges.push_back(make_edge(h[i], h[(i + 1) % h.size()]));
    return P;
}

PQ slope_to_pq(const ExactSlope& s) {
    if (s.vertical) return {0, 1};
    // -q/p = u/w
    if (s.u <= 0) return {s.w, BigNat(-s.u)};
    return {-s.w, s.u};
}

bool admissible(const ExactSlope& s, long d) {
    PQ pq = slope_to_pq(s);
    return abs(pq.p) <= d && pq.q <= d;
}

std::vector<ParallelPair> admissible_parallel_pairs(const NewtonPolygon& P, long d) {
    std::vector<ParallelPair> out;
    if (P.degeneracy == Degeneracy::Segment) {
        if (admissible(P.edges[0].slope, d)) out.push_back({P.edges[0].slope, slope_to_pq(P.edges[0].slope), 0, 0});
        return out;
    }
    std::map<ExactSlope, std::vector<std::size_t>> by;
    for (std::size_t i = 0; i < P.edges.size(); ++i) by[P.edges[i].slope].push_back(i);
    for (auto& [s, idx] : by)
        if (idx.size() == 2 && admissible(s, d)) out.push_back({s, slope_to_pq(s), idx[0], idx[1]});
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> admissible_nonparallel_pairs(const NewtonPolygon& P, long d) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    if (P.degeneracy != Degeneracy::Polygon2D) return out;
    for (std::size_t i = 0; i < P.edges.size(); ++i) {
        if (!admissible(P.edges[i].slope, d)) continue;
        for (std::size_t j = i + 1; j < P.edges.size(); ++j)
            if (!(P.edges[i].slope == P.edges[j].slope) && admissible(P.edges[j].slope, d)) out.push_back({i, j});
    }
    return out;
}

namespace {

struct Vec {
    BigInt dx, dy;
};

int half(const Vec& v) { return (sgn(v.dy) > 0 || (v.dy == 0 && sgn(v.dx) > 0)) ? 0 : 1; }

bool angle_less(const Vec& a, const Vec& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return sgn(a.dx * b.dy - a.dy * b.dx) > 0;
}

// Edge vectors counterclockwise from the lowest (then leftmost) vertex.
std::pair<SupportPoint, std::vector<Vec>> boundary(const NewtonPolygon& P) {
    const auto& V = P.vertices;
    std::size_t s = 0;
    for (std::size_t i = 1; i < V.size(); ++i)
        if (V[i].y < V[s].y || (V[i].y == V[s].y && V[i].x < V[s].x)) s = i;
    std::vector<Vec> out;
    if (V.size() >= 2)
        for (std::size_t k = 0; k < V.size(); ++k) {
            const auto& a = V[(s + k) % V.size()];
            const auto& b = V[(s + k + 1) % V.size()];
            out.push_back({b.x - a.x, b.y - a.y});
        }
    return {V[s], out};
}

}  // namespace

NewtonPolygon minkowski_sum(const NewtonPolygon& P, const NewtonPolygon& Q) {
    auto [p0, ep] = boundary(P);
    auto [q0, eq] = boundary(Q);
    std::vector<Vec> all;
    std::merge(ep.begin(), ep.end(), eq.begin(), eq.end(), std::back_inserter(all), angle_less);
    // fuse consecutive edges of equal direction
    std::vector<Vec> fused;
    for (auto& v : all) {
        if (!fused.empty()) {
            auto& u = fused.back();
            if (u.dx * v.dy - u.dy * v.dx == 0 && sgn(u.dx * v.dx + u.dy * v.dy) > 0) {
                u.dx += v.dx;
                u.dy += v.dy;
                continue;
            }
        }
        fused.push_back(v);
    }
    std::vector<SupportPoint> verts{{p0.x + q0.x, p0.y + q0.y}};
    for (std::size_t i = 0; i + 1 < fused.size(); ++i)
        verts.push_back({verts.back().x + fused[i].dx, verts.back().y + fused[i].dy});
    return convex_polygon(verts);
}

}  // namespace lacfactor
