#include "lacfactor/gap.hpp"

#include <algorithm>
#include <numeric>

namespace lacfactor {

TermPartition TermPartition::normalized() const {
    TermPartition p = *this;
    for (auto& b : p.blocks) std::sort(b.begin(), b.end());
    std::sort(p.blocks.begin(), p.blocks.end());
    return p;
}

static Rational big_delta(long d, const Rational& v) { return Rational(2 * d * (4 * d + 1)) - v; }

static Rational choose2(std::size_t n) {
    return n < 2 ? Rational(0) : Rational(static_cast<unsigned long>(n * (n - 1) / 2));
}

EdgeFrame edge_frame(const Edge& e, long d) {
    EdgeFrame f;
    switch (e.hull) {
        case Hull::Lower:
            f.v = -e.slope.value();
            f.a = 1;
            f.b = f.v;
            break;
        case Hull::Upper:
            // X-reciprocal turns the edge into a lower edge of slope -s
            f.v = e.slope.value();
            f.a = -1;
            f.b = f.v;
            break;
        case Hull::VerticalLeft:
            // swapped variables: the edge becomes the bottom horizontal edge
            f.v = 0;
            f.a = 0;
            f.b = 1;
            break;
        case Hull::VerticalRight:
            f.v = 0;
            f.a = 0;
            f.b = -1;
            break;
    }
    f.delta = big_delta(d, f.v);
    return f;
}

bool BlockReport::ok() const {
    return spread1 <= bound1 && spread2 <= bound2 && spread_alpha <= bound_alpha && spread_beta <= bound_beta;
}

bool GapReport::ok() const {
    return std::all_of(blocks.begin(), blocks.end(), [](const BlockReport& b) { return b.ok(); });
}

Rational gap_threshold(long d, const Rational& v, std::size_t l) { return big_delta(d, v) * choose2(l); }

std::vector<std::vector<std::size_t>> split_by_weight(std::vector<std::size_t> items,
                                                      const std::vector<Rational>& weight, const Rational& delta) {
    std::stable_sort(items.begin(), items.end(), [&](std::size_t a, std::size_t b) {
        int c = cmp(weight[a], weight[b]);
        return c != 0 ? c < 0 : a < b;
    });
    std::vector<std::vector<std::size_t>> blocks;
    std::size_t start = 0;
    while (start < items.size()) {
        const Rational& wmin = weight[items[start]];
        std::size_t l = 1;
        while (start + l < items.size() && weight[items[start + l]] <= wmin + delta * choose2(l)) ++l;
        blocks.emplace_back(items.begin() + static_cast<long>(start), items.begin() + static_cast<long>(start + l));
        start += l;
    }
    return blocks;
}

TermPartition gap_split(const LacunaryPoly& f, const Rational& v, long d) {
    if (f.nvars() != 2) throw std::invalid_argument("gap_split expects a bivariate polynomial");
    std::vector<Rational> w;
    std::vector<std::size_t> items;
    for (std::size_t j = 0; j < f.num_terms(); ++j) {
        w.push_back(Rational(f.term(j).exps[0]) + v * Rational(f.term(j).exps[1]));
        items.push_back(j);
    }
    return {split_by_weight(items, w, big_delta(d, v))};
}

std::pair<TermPartition, GapReport> refine_points(const std::vector<SupportPoint>& pts, const Edge& e1,
                                                  const Edge& e2, long d) {
    if (e1.slope == e2.slope) throw std::invalid_argument("refine_partition needs non-parallel edges");
    if (!admissible(e1.slope, d) || !admissible(e2.slope, d))
        throw std::invalid_argument("refine_partition needs admissible edges");
    EdgeFrame f1 = edge_frame(e1, d), f2 = edge_frame(e2, d);
    std::size_t n = pts.size();
    std::vector<Rational> w1(n), w2(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational al(pts[i].y), be(pts[i].x);
        w1[i] = f1.a * al + f1.b * be;
        w2[i] = f2.a * al + f2.b * be;
    }
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    Rational det = abs(f1.a * f2.b - f2.a * f1.b);

    TermPartition part;
    GapReport rep;
    for (auto& b1 : split_by_weight(all, w1, f1.delta)) {
        Rational S1 = f1.delta * choose2(b1.size() - 1);
        for (auto& b : split_by_weight(b1, w2, f2.delta)) {
            BlockReport r;
            r.block = b;
            Rational S2 = f2.delta * choose2(b.size() - 1);
            auto [lo1, hi1] = std::minmax_element(b.begin(), b.end(), [&](auto x, auto y) { return w1[x] < w1[y]; });
            auto [lo2, hi2] = std::minmax_element(b.begin(), b.end(), [&](auto x, auto y) { return w2[x] < w2[y]; });
            auto [loa, hia] = std::minmax_element(b.begin(), b.end(), [&](auto x, auto y) { return pts[x].y < pts[y].y; });
            auto [lob, hib] = std::minmax_element(b.begin(), b.end(), [&](auto x, auto y) { return pts[x].x < pts[y].x; });
            r.spread1 = w1[*hi1] - w1[*lo1];
            r.spread2 = w2[*hi2] - w2[*lo2];
            r.bound1 = S1;
            r.bound2 = S2;
            r.spread_alpha = pts[*hia].y - pts[*loa].y;
            r.spread_beta = pts[*hib].x - pts[*lob].x;
            r.bound_beta = (abs(f2.a) * S1 + abs(f1.a) * S2) / det;
            r.bound_alpha = (abs(f2.b) * S1 + abs(f1.b) * S2) / det;
            rep.blocks.push_back(std::move(r));
            part.blocks.push_back(b);
        }
    }
    return {part, rep};
}

std::pair<TermPartition, GapReport> refine_partition(const LacunaryPoly& f, const Edge& e1, const Edge& e2, long d) {
    if (f.nvars() != 2) throw std::invalid_argument("refine_partition expects a bivariate polynomial");
    std::vector<SupportPoint> pts;
    for (auto& t : f.terms()) pts.push_back({t.exps[1], t.exps[0]});
    return refine_points(pts, e1, e2, d);
}

FactorList inhomogeneous_factors(const LacunaryPoly& f0, long d, Oracles& oracles) {
    if (f0.nvars() != 2) throw std::invalid_argument("inhomogeneous_factors expects two variables");
    LacunaryPoly f = normalize(f0);
    FactorList result;
    if (f.is_constant()) return result;
    NewtonPolygon P = convex_polygon(support(f, 0, 1));
    for (auto [i, j] : admissible_nonparallel_pairs(P, d)) {
        auto [part, rep] = refine_partition(f, P.edges[i], P.edges[j], d);
        oracles.budget.gap_checks += rep.blocks.size();
        for (auto& b : rep.blocks)
            if (!b.ok()) oracles.budget.gap_violations += 1;
        FactorList common;
        for (std::size_t t = 0; t < part.blocks.size(); ++t) {
            LacunaryPoly g = normalize(restrict_terms(f, part.blocks[t]));
            FactorList lt;
            if (!g.is_constant()) {
                try {
                    lt = oracles.dense(g, d);
                } catch (const CapacityExceeded& ex) {
                    throw CapacityExceeded(std::string(ex.what()) + " [block of " +
                                           std::to_string(part.blocks[t].size()) + " terms, degree bounds X<=" +
                                           rep.blocks[t].bound_alpha.get_str() +
                                           " Y<=" + rep.blocks[t].bound_beta.get_str() + "]");
                }
            }
            common = t == 0 ? lt : intersect_min(common, lt);
            if (common.empty()) break;
        }
        result = union_max(result, common);
    }
    FactorList out;
    for (auto& e : result)
        if (!e.factor.is_monomial() && !support_on_line(e.factor)) out.push_back(e);
    return out;
}

}  // namespace lacfactor
