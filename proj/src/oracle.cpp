#include "lacfactor/oracle.hpp"

#include <algorithm>

namespace lacfactor {

bool factor_less(const LacunaryPoly& a, const LacunaryPoly& b) {
    BigNat da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    if (a.num_terms() != b.num_terms()) return a.num_terms() < b.num_terms();
    for (std::size_t i = 0; i < a.num_terms(); ++i) {
        const auto& ta = a.term(i);
        const auto& tb = b.term(i);
        if (exps_less(ta.exps, tb.exps)) return true;
        if (exps_less(tb.exps, ta.exps)) return false;
        if (ta.coeff != tb.coeff) return ta.coeff < tb.coeff;
    }
    return false;
}

static FactorList sorted_unique(std::vector<FactorEntry> v) {
    std::sort(v.begin(), v.end(), [](const FactorEntry& a, const FactorEntry& b) {
        if (factor_less(a.factor, b.factor)) return true;
        if (factor_less(b.factor, a.factor)) return false;
        return a.mult > b.mult;
    });
    FactorList out;
    for (auto& e : v) {
        if (!out.empty() && out.back().factor == e.factor) continue;
        out.push_back(std::move(e));
    }
    return out;
}

FactorList make_factor_list(std::vector<FactorEntry> entries) {
    std::vector<FactorEntry> v;
    for (auto& e : entries) {
        if (e.mult == 0 || e.factor.is_constant()) continue;
        v.push_back({canonical_associate(e.factor), e.mult});
    }
    return sorted_unique(std::move(v));
}

FactorList union_max(const FactorList& a, const FactorList& b) {
    std::vector<FactorEntry> v = a;
    v.insert(v.end(), b.begin(), b.end());
    return sorted_unique(std::move(v));
}

FactorList intersect_min(const FactorList& a, const FactorList& b) {
    FactorList out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (factor_less(a[i].factor, b[j].factor))
            ++i;
        else if (factor_less(b[j].factor, a[i].factor))
            ++j;
        else {
            out.push_back({a[i].factor, std::min(a[i].mult, b[j].mult)});
            ++i;
            ++j;
        }
    }
    return out;
}

FactorList filter_degree(const FactorList& a, long d) {
    FactorList out;
    for (auto& e : a)
        if (e.factor.total_degree() <= d) out.push_back(e);
    return out;
}

bool same_factors(const FactorList& a, const FactorList& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].factor != b[i].factor || a[i].mult != b[i].mult) return false;
    return true;
}

OracleBudget& OracleBudget::operator+=(const OracleBudget& o) {
    univariate_calls += o.univariate_calls;
    univariate_size += o.univariate_size;
    dense_calls += o.dense_calls;
    dense_degree_sum += o.dense_degree_sum;
    dense_degree_max = std::max(dense_degree_max, o.dense_degree_max);
    gap_checks += o.gap_checks;
    gap_violations += o.gap_violations;
    return *this;
}

std::string poly_key(const LacunaryPoly& f) {
    std::string s = std::to_string(f.nvars()) + ":";
    for (auto& t : f.terms()) {
        s += t.coeff.get_str();
        for (auto& e : t.exps) s += "," + e.get_str();
        s += ";";
    }
    return s;
}

std::uint64_t Oracles::seed_for(const std::string& key) const {
    // FNV-1a, so a backend's randomness depends only on its input
    std::uint64_t h = 1469598103934665603ull ^ cfg_.seed;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

FactorList Oracles::univariate(const LacunaryPoly& f, long d) {
    if (f.nvars() != 1) throw std::invalid_argument("univariate oracle expects one variable");
    if (f.is_zero()) throw std::invalid_argument("univariate oracle on the zero polynomial");
    budget.univariate_calls += 1;
    budget.univariate_size += f.bit_size();
    if (d <= 0) return {};
    std::string key = "u" + std::to_string(d) + "|" + poly_key(f);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    auto [content, g] = monomial_content(f);
    std::vector<FactorEntry> mono;
    if (content.exps[0] > 0)
        mono.push_back({LacunaryPoly::variable(1, 0), to_ulong_checked(content.exps[0], "multiplicity")});

    FactorList res;
    bool expandable = g.total_degree() <= cfg_.dense_cap;
    if (g.is_constant()) {
        res = {};
    } else if (d == 1) {
        try {
            std::mt19937_64 rng(seed_for(key));
            res = rational_root_factors(g, 1, rng, cfg_.primes);
        } catch (const CapacityExceeded&) {
            if (!expandable) throw;
            res = dense_univariate_factors(upoly::from_mpoly(expand_dense(g, cfg_.dense_cap), 0), d);
        }
    } else {
        if (!expandable)
            throw CapacityExceeded("univariate request of degree " + std::to_string(d) + " on input of degree " +
                                   g.total_degree().get_str() + " needs a full lacunary backend");
        res = dense_univariate_factors(upoly::from_mpoly(expand_dense(g, cfg_.dense_cap), 0), d);
    }
    res = union_max(res, make_factor_list(mono));
    cache_[key] = res;
    return res;
}

FactorList Oracles::dense(const LacunaryPoly& f, long d) {
    if (f.is_zero()) throw std::invalid_argument("dense oracle on the zero polynomial");
    BigNat td = f.total_degree();
    budget.dense_calls += 1;
    if (td <= cfg_.dense_cap) {
        std::uint64_t t = td.get_ui();
        budget.dense_degree_sum += t;
        budget.dense_degree_max = std::max(budget.dense_degree_max, t);
    }
    MPoly m = expand_dense(f, cfg_.dense_cap);
    if (d <= 0) return {};
    std::string key = "m" + std::to_string(d) + "|" + poly_key(f);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    FactorList res = dense_multivariate_factors(m, d, seed_for(key));
    cache_[key] = res;
    return res;
}

}  // namespace lacfactor
