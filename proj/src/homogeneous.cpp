#include "lacfactor/homogeneous.hpp"

#include <map>

namespace lacfactor {

static void check_pq(const BigInt& p, const BigNat& q) {
    if (q < 0 || (p == 0 && q == 0)) throw std::invalid_argument("invalid weight pair (p,q)");
    BigInt g;
    BigInt ap = abs(p);
    mpz_gcd(g.get_mpz_t(), ap.get_mpz_t(), q.get_mpz_t());
    if (g != 1) throw std::invalid_argument("weight pair (p,q) is not coprime");
}

std::vector<Component> components(const LacunaryPoly& f, const BigInt& p, const BigNat& q) {
    check_pq(p, q);
    if (f.nvars() != 2) throw std::invalid_argument("components expects a bivariate polynomial");
    std::map<BigInt, std::vector<Term>> by;
    for (auto& t : f.terms()) by[p * t.exps[0] + q * t.exps[1]].push_back(t);
    std::vector<Component> out;
    for (auto& [w, ts] : by) out.push_back({w, LacunaryPoly::canonicalize(2, ts)});
    return out;
}

LacunaryPoly homogenize(const LacunaryPoly& h, const BigInt& p, const BigNat& q) {
    check_pq(p, q);
    if (h.nvars() != 1 || h.is_zero()) throw std::invalid_argument("homogenize expects a nonzero univariate polynomial");
    BigNat deg = h.degree(0);
    std::vector<Term> raw;
    for (auto& t : h.terms()) {
        const BigNat& dl = t.exps[0];
        Term u{t.coeff, {0, 0}};
        if (q == 0) {
            if (p != 1) throw std::invalid_argument("invalid weight pair (p,q)");
            u.exps[1] = dl;
        } else if (p > 0) {
            u.exps[0] = q * dl;
            u.exps[1] = p * (deg - dl);
        } else {
            u.exps[0] = q * dl;
            u.exps[1] = -p * dl;
        }
        raw.push_back(std::move(u));
    }
    return LacunaryPoly::canonicalize(2, std::move(raw));
}

BigNat homogenized_weight(const BigInt& p, const BigNat& q) {
    check_pq(p, q);
    if (q == 0 || p == 0) return 1;
    if (p > 0) return p > q ? BigNat(p) : q;
    return q - p;
}

LacunaryPoly dehomogenize(const LacunaryPoly& g, const BigInt& p, const BigNat& q) {
    check_pq(p, q);
    if (q == 0) return read_in_y(g);
    return to_univariate(g, q);
}

bool is_weighted_homogeneous(const LacunaryPoly& f, const BigInt& p, const BigNat& q) {
    return components(f, p, q).size() <= 1;
}

FactorList weighted_homogeneous_factors(const LacunaryPoly& f0, long d, Oracles& oracles) {
    if (f0.is_zero()) throw std::invalid_argument("weighted_homogeneous_factors on the zero polynomial");
    if (f0.nvars() != 2) throw std::invalid_argument("weighted_homogeneous_factors expects two variables");
    LacunaryPoly f = normalize(f0);
    FactorList result;
    if (f.is_constant()) return result;
    NewtonPolygon P = convex_polygon(support(f, 0, 1));
    for (auto& pair : admissible_parallel_pairs(P, d)) {
        const BigInt& p = pair.pq.p;
        const BigNat& q = pair.pq.q;
        BigNat w = homogenized_weight(p, q);
        long req = static_cast<long>(BigNat(d / w).get_si());
        if (req < 1) continue;
        FactorList common;
        bool first = true;
        for (auto& comp : components(f, p, q)) {
            LacunaryPoly h = dehomogenize(normalize(comp.poly), p, q);
            FactorList lt;
            try {
                std::vector<FactorEntry> hom;
                for (auto& e : oracles.univariate(h, req)) {
                    LacunaryPoly H = homogenize(e.factor, p, q);
                    if (H.total_degree() <= d) hom.push_back({H, e.mult});
                }
                lt = make_factor_list(std::move(hom));
            } catch (const CapacityExceeded& ex) {
                throw CapacityExceeded(std::string(ex.what()) + " [component omega=" + comp.omega.get_str() +
                                       " of weights (" + p.get_str() + "," + q.get_str() + ")]");
            }
            common = first ? lt : intersect_min(common, lt);
            first = false;
            if (common.empty()) break;
        }
        result = union_max(result, common);
    }
    return result;
}

}  // namespace lacfactor
