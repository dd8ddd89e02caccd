#include "lacfactor/multivar.hpp"

#include "lacfactor/homogeneous.hpp"
#include "lacfactor/newton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace lacfactor {

namespace {

struct VecLess {
    bool operator()(const std::vector<BigInt>& a, const std::vector<BigInt>& b) const { return exps_less(a, b); }
};

void split_signs(const Direction& w, std::vector<BigNat>& plus, std::vector<BigNat>& minus) {
    plus.assign(w.size(), 0);
    minus.assign(w.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) (sgn(w[i]) > 0 ? plus[i] : minus[i]) = abs(w[i]);
}

}  // namespace

BigNat direction_weight(const Direction& w) {
    BigNat p = 0, m = 0;
    for (auto& x : w) (sgn(x) > 0 ? p : m) += abs(x);
    return p > m ? p : m;
}

std::vector<Direction> direction_candidates(const LacunaryPoly& f, long d) {
    std::set<Direction, VecLess> seen;
    std::size_t n = f.nvars();
    for (std::size_t i = 0; i < f.num_terms(); ++i)
        for (std::size_t j = i + 1; j < f.num_terms(); ++j) {
            Direction w(n);
            BigInt g = 0;
            for (std::size_t v = 0; v < n; ++v) {
                w[v] = f.term(j).exps[v] - f.term(i).exps[v];
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[v].get_mpz_t());
            }
            bool small = true;
            int sign = 0;
            for (auto& x : w) {
                x /= g;
                if (sign == 0 && x != 0) sign = sgn(x);
                if (abs(x) > d) small = false;
            }
            if (!small) continue;
            if (sign < 0)
                for (auto& x : w) x = -x;
            if (direction_weight(w) > d) continue;
            seen.insert(w);
        }
    return {seen.begin(), seen.end()};
}

std::vector<GradedClass> unidimensional_components(const LacunaryPoly& f, const Direction& w) {
    std::size_t n = f.nvars(), j = 0;
    while (j < n && w[j] == 0) ++j;
    if (j == n || w[j] < 0) throw std::invalid_argument("direction must be nonzero with a positive leading entry");
    std::map<std::vector<BigInt>, std::vector<std::pair<std::size_t, BigInt>>, VecLess> by;
    for (std::size_t k = 0; k < f.num_terms(); ++k) {
        const auto& e = f.term(k).exps;
        BigInt t;
        mpz_fdiv_q(t.get_mpz_t(), e[j].get_mpz_t(), w[j].get_mpz_t());
        std::vector<BigInt> key(n);
        for (std::size_t v = 0; v < n; ++v) key[v] = e[v] - t * w[v];
        by[key].push_back({k, t});
    }
    std::vector<GradedClass> out;
    for (auto& [key, members] : by) {
        BigInt tmin = members[0].second;
        for (auto& [k, t] : members)
            if (t < tmin) tmin = t;
        GradedClass c;
        c.base.resize(n);
        for (std::size_t v = 0; v < n; ++v) c.base[v] = key[v] + tmin * w[v];
        std::vector<Term> raw;
        for (auto& [k, t] : members) {
            c.terms.push_back(k);
            raw.push_back({f.term(k).coeff, {BigNat(t - tmin)}});
        }
        c.image = LacunaryPoly::canonicalize(1, std::move(raw));
        out.push_back(std::move(c));
    }
    return out;
}

FactorList unidimensional_factors(const LacunaryPoly& f0, long d, Oracles& oracles) {
    LacunaryPoly f = normalize(f0);
    FactorList result;
    if (f.num_terms() < 2) return result;
    std::size_t n = f.nvars();
    for (auto& w : direction_candidates(f, d)) {
        long req = static_cast<long>(BigNat(d / direction_weight(w)).get_si());
        if (req < 1) continue;
        auto classes = unidimensional_components(f, w);
        if (std::any_of(classes.begin(), classes.end(), [](const GradedClass& c) { return c.terms.size() < 2; }))
            continue;
        std::vector<BigNat> wp, wm;
        split_signs(w, wp, wm);
        FactorList common;
        for (std::size_t ci = 0; ci < classes.size(); ++ci) {
            std::vector<FactorEntry> lifted;
            for (auto& e : oracles.univariate(classes[ci].image, req)) {
                BigNat deg = e.factor.degree(0);
                std::vector<Term> raw;
                for (auto& t : e.factor.terms()) {
                    Term u{t.coeff, std::vector<BigNat>(n)};
                    for (std::size_t v = 0; v < n; ++v) u.exps[v] = t.exps[0] * wp[v] + (deg - t.exps[0]) * wm[v];
                    raw.push_back(std::move(u));
                }
                LacunaryPoly g = LacunaryPoly::canonicalize(n, std::move(raw));
                if (g.total_degree() <= d) lifted.push_back({g, e.mult});
            }
            FactorList lt = make_factor_list(std::move(lifted));
            common = ci == 0 ? lt : intersect_min(common, lt);
            if (common.empty()) break;
        }
        result = union_max(result, common);
    }
    return result;
}

DisjointSet::DisjointSet(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

std::size_t DisjointSet::find(std::size_t x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

void DisjointSet::unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
}

static std::vector<std::size_t> ground(const TermPartition& p) {
    std::vector<std::size_t> g;
    for (auto& b : p.blocks) g.insert(g.end(), b.begin(), b.end());
    std::sort(g.begin(), g.end());
    return g;
}

static TermPartition classes_of(DisjointSet& ds, const std::vector<std::size_t>& elems) {
    std::map<std::size_t, std::vector<std::size_t>> by;
    for (auto e : elems) by[ds.find(e)].push_back(e);
    TermPartition p;
    for (auto& [r, b] : by) p.blocks.push_back(b);
    std::sort(p.blocks.begin(), p.blocks.end());
    return p;
}

TermPartition join_partitions(const TermPartition& a, const TermPartition& b) {
    auto ga = ground(a), gb = ground(b);
    if (ga != gb) throw std::invalid_argument("join of partitions over different ground sets");
    if (ga.empty()) return {};
    DisjointSet ds(ga.back() + 1);
    for (const auto* p : {&a, &b})
        for (auto& blk : p->blocks)
            for (std::size_t i = 1; i < blk.size(); ++i) ds.unite(blk[0], blk[i]);
    return classes_of(ds, ga);
}

bool MultiPartition::ok() const {
    if (gap_violations) return false;
    for (std::size_t b = 0; b < spreads.size(); ++b)
        for (std::size_t v = 0; v < spreads[b].size(); ++v)
            if (Rational(spreads[b][v]) > bounds[b][v]) return false;
    return true;
}

MultiPartition multivariate_partition(const LacunaryPoly& f, long d) {
    std::size_t n = f.nvars(), k = f.num_terms();
    MultiPartition mp;
    struct Blk {
        std::vector<std::size_t> terms;
        std::vector<Rational> bound;
    };
    std::vector<Blk> blocks;
    if (k == 0) return mp;
    {
        Blk all;
        all.terms.resize(k);
        std::iota(all.terms.begin(), all.terms.end(), 0);
        all.bound.assign(n, Rational(0));
        blocks.push_back(all);
    }
    for (std::size_t m = 0; m < n; ++m) {
        std::vector<Blk> next;
        for (auto& B : blocks) {
            std::size_t kb = B.terms.size();
            if (kb == 1) {
                next.push_back(B);
                continue;
            }
            LacunaryPoly fb = restrict_terms(f, B.terms);  // local index i is B.terms[i]
            // every sub-partition as (blocks of local indices, exponent-m bound per block)
            std::vector<std::pair<std::vector<std::size_t>, Rational>> pieces;
            {
                std::map<BigNat, std::vector<std::size_t>> eq;
                for (std::size_t i = 0; i < kb; ++i) eq[fb.term(i).exps[m]].push_back(i);
                for (auto& [e, idx] : eq) pieces.push_back({idx, Rational(0)});
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == m) continue;
                auto groups = support_groups(fb, m, i);
                std::vector<SupportPoint> pts;
                std::vector<const std::vector<std::size_t>*> members;
                for (auto& [p, idx] : groups) {
                    pts.push_back(p);
                    members.push_back(&idx);
                }
                NewtonPolygon P = convex_polygon(pts);
                for (auto [a, b] : admissible_nonparallel_pairs(P, d)) {
                    auto [part, rep] = refine_points(pts, P.edges[a], P.edges[b], d);
                    mp.gap_checks += rep.blocks.size();
                    for (std::size_t t = 0; t < part.blocks.size(); ++t) {
                        if (!rep.blocks[t].ok()) mp.gap_violations += 1;
                        std::vector<std::size_t> terms;
                        for (auto pi : part.blocks[t]) terms.insert(terms.end(), members[pi]->begin(), members[pi]->end());
                        pieces.push_back({terms, rep.blocks[t].bound_alpha});
                    }
                }
            }
            DisjointSet ds(kb);
            for (auto& [blk, bd] : pieces)
                for (std::size_t t = 1; t < blk.size(); ++t) ds.unite(blk[0], blk[t]);
            std::map<std::size_t, Blk> joined;
            for (std::size_t i = 0; i < kb; ++i) {
                auto& J = joined[ds.find(i)];
                if (J.terms.empty()) {
                    J.bound = B.bound;
                    J.bound[m] = 0;
                }
                J.terms.push_back(B.terms[i]);
            }
            for (auto& [blk, bd] : pieces) joined[ds.find(blk[0])].bound[m] += bd;
            for (auto& [r, J] : joined) next.push_back(std::move(J));
        }
        blocks = std::move(next);
    }
    std::sort(blocks.begin(), blocks.end(), [](const Blk& a, const Blk& b) { return a.terms < b.terms; });
    for (auto& B : blocks) {
        mp.partition.blocks.push_back(B.terms);
        mp.bounds.push_back(B.bound);
        std::vector<BigNat> sp(n);
        for (std::size_t v = 0; v < n; ++v) {
            BigNat lo = f.term(B.terms[0]).exps[v], hi = lo;
            for (auto t : B.terms) {
                const auto& e = f.term(t).exps[v];
                if (e < lo) lo = e;
                if (e > hi) hi = e;
            }
            sp[v] = hi - lo;
        }
        mp.spreads.push_back(sp);
    }
    return mp;
}

FactorList multidimensional_factors(const LacunaryPoly& f0, long d, Oracles& oracles) {
    LacunaryPoly f = normalize(f0);
    FactorList common;
    if (f.is_constant()) return common;
    MultiPartition mp = multivariate_partition(f, d);
    oracles.budget.gap_checks += mp.gap_checks;
    oracles.budget.gap_violations += mp.gap_violations;
    for (std::size_t t = 0; t < mp.partition.blocks.size(); ++t) {
        LacunaryPoly g = normalize(restrict_terms(f, mp.partition.blocks[t]));
        FactorList lt;
        if (!g.is_constant()) {
            try {
                lt = oracles.dense(g, d);
            } catch (const CapacityExceeded& ex) {
                std::string b;
                for (auto& x : mp.bounds[t]) b += (b.empty() ? "" : ",") + x.get_str();
                throw CapacityExceeded(std::string(ex.what()) + " [block of " +
                                       std::to_string(mp.partition.blocks[t].size()) + " terms, exponent bounds (" + b +
                                       ")]");
            }
        }
        common = t == 0 ? lt : intersect_min(common, lt);
        if (common.empty()) break;
    }
    FactorList out;
    for (auto& e : common)
        if (!e.factor.is_monomial() && !support_on_line(e.factor)) out.push_back(e);
    return out;
}

FactorList factor(const LacunaryPoly& f, long d, Oracles& oracles) {
    if (f.is_zero()) throw std::invalid_argument("factor of the zero polynomial");
    if (d < 1) throw std::invalid_argument("degree bound must be at least 1");
    if (f.nvars() < 1) throw std::invalid_argument("need at least one variable");
    auto [content, g] = monomial_content(f);
    std::vector<FactorEntry> mono;
    for (std::size_t v = 0; v < f.nvars(); ++v)
        if (content.exps[v] > 0)
            mono.push_back({LacunaryPoly::variable(f.nvars(), v), to_ulong_checked(content.exps[v], "multiplicity")});
    FactorList out = make_factor_list(std::move(mono));
    if (g.is_constant()) return out;
    if (f.nvars() == 1)
        out = union_max(out, oracles.univariate(g, d));
    else if (f.nvars() == 2)
        out = union_max(out, union_max(weighted_homogeneous_factors(g, d, oracles), inhomogeneous_factors(g, d, oracles)));
    else
        out = union_max(out, union_max(unidimensional_factors(g, d, oracles), multidimensional_factors(g, d, oracles)));
    return out;
}

}  // namespace lacfactor
