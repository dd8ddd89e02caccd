// Acceptance suite: one PASS/FAIL line per criterion.

#include "lacfactor/gap.hpp"
#include "lacfactor/multivar.hpp"
#include "lacfactor/newton.hpp"
#include "lacfactor/probe.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

using namespace lacfactor;
using namespace testsupport;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Gap-report tallies shared by criteria 1, 2 and 7.
std::uint64_t g_gap_checks = 0, g_gap_violations = 0;

struct BudgetMax {
    double univariate_ratio = 0;  // univariate size / ((k/2) size(f))
    double dense_calls_ratio = 0;
    double dense_degree_ratio = 0;
    std::uint64_t dense_calls = 0, dense_degree_sum = 0;
};
BudgetMax g_budget;
bool g_budget_ok = true;
int g_suite1_runs = 0;

LacunaryPoly bivariate_instance(std::mt19937_64& rng, long d) {
    while (true) {
        // far-monomial cofactors only split under the degree-1 threshold
        long shape = d == 1 && uniform(rng, 0, 1) ? 2 : uniform(rng, 0, 1);
        LacunaryPoly f = LacunaryPoly::constant(2, 1);
        int nf = static_cast<int>(uniform(rng, 1, shape == 2 ? 2 : 3));
        for (int i = 0; i < nf; ++i) {
            LacunaryPoly g = random_factor(rng, 2, static_cast<int>(uniform(rng, 1, shape == 2 ? 2 : 3)));
            f = f * g.pow(static_cast<unsigned long>(uniform(rng, 1, 2)));
        }
        LacunaryPoly cof = LacunaryPoly::constant(2, 1);
        if (shape == 0)
            cof = random_sparse(rng, 2, 30, 3);
        else if (shape == 1)
            cof = cof + random_sparse(rng, 2, 30, 1);
        else if (f.total_degree() <= 7) {
            // a far monomial, beyond the degree-1 gap threshold
            long a = uniform(rng, 31, 38 - f.total_degree().get_si());
            long x = uniform(rng, 0, 1) ? a : uniform(rng, 0, 2);
            cof = cof + LacunaryPoly::monomial(Rational(nonzero_coeff(rng, 3)), {BigNat(x), BigNat(a - x)});
        }
        f = f * cof;
        if (uniform(rng, 0, 3) == 0) f = f.shifted({BigNat(uniform(rng, 0, 2)), BigNat(uniform(rng, 0, 2))});
        if (f.is_zero() || f.num_terms() > 25 || f.total_degree() > 40) continue;
        return f;
    }
}

bool inhomogeneous_split(const LacunaryPoly& f, long d) {
    if (f.is_constant()) return false;
    NewtonPolygon P = convex_polygon(support(f, 0, 1));
    for (auto [i, j] : admissible_nonparallel_pairs(P, d))
        if (refine_partition(f, P.edges[i], P.edges[j], d).first.blocks.size() > 1) return true;
    return false;
}

Outcome criterion1() {
    std::mt19937_64 rng(1001);
    Outcome out;
    int mismatches = 0, nontrivial = 0, split = 0;
    auto t0 = Clock::now();
    for (int i = 0; i < 200; ++i) {
        long d = 1 + i % 3;
        LacunaryPoly f = bivariate_instance(rng, d);
        Oracles o;
        FactorList got = factor(f, d, o);
        FactorList ref = dense_reference(f, d);
        nontrivial += got.size() > 0;
        split += inhomogeneous_split(normalize(f), d);
        if (!same_factors(got, ref)) {
            if (++mismatches <= 3)
                std::cerr << "  mismatch d=" << d << " f=" << format(f, {"x", "y"}) << "\n    got " << show(got, {"x", "y"})
                          << "\n    ref " << show(ref, {"x", "y"}) << "\n";
        }
        g_gap_checks += o.budget.gap_checks;
        g_gap_violations += o.budget.gap_violations;

        double k = static_cast<double>(f.num_terms());
        LacunaryPoly fo = normalize(f);
        double uni = static_cast<double>(o.budget.univariate_size) / (k / 2 * static_cast<double>(fo.bit_size()));
        double calls = static_cast<double>(o.budget.dense_calls) / (8 * k * k * k);
        double deg = static_cast<double>(o.budget.dense_degree_sum) / (32.0 * std::pow(d, 4) * std::pow(k, 4));
        g_budget.univariate_ratio = std::max(g_budget.univariate_ratio, uni);
        g_budget.dense_calls_ratio = std::max(g_budget.dense_calls_ratio, calls);
        g_budget.dense_degree_ratio = std::max(g_budget.dense_degree_ratio, deg);
        g_budget.dense_calls = std::max(g_budget.dense_calls, o.budget.dense_calls);
        g_budget.dense_degree_sum = std::max(g_budget.dense_degree_sum, o.budget.dense_degree_sum);
        if (uni > 1 || calls > 1 || deg > 1) g_budget_ok = false;
        ++g_suite1_runs;
    }
    double secs = seconds_since(t0);
    out.pass = mismatches == 0 && secs < 120;
    std::ostringstream ss;
    ss << (200 - mismatches) << "/200 match (" << nontrivial << " with factors, " << split
       << " with a split partition), " << secs << " s";
    out.detail = ss.str();
    return out;
}

Outcome criterion2() {
    Outcome out;
    std::ostringstream ss;
    LacunaryPoly g = P("y - x - 1");
    LacunaryPoly want = canonical_associate(g);
    BigNat n1 = BigNat("1000000000000000000"), n2;
    mpz_ui_pow_ui(n2.get_mpz_t(), 2, 1024);
    double limits[2] = {5, 10};
    BigNat ns[2] = {n1, n2};
    for (int i = 0; i < 2; ++i) {
        LacunaryPoly f = g * (LacunaryPoly::constant(2, 1) + LacunaryPoly::monomial(1, {ns[i], 0}));
        Oracles o;
        auto t0 = Clock::now();
        FactorList got = factor(f, 1, o);
        double secs = seconds_since(t0);
        bool ok = got.size() == 1 && got[0].factor == want && got[0].mult == 1 && secs < limits[i] &&
                  o.budget.dense_degree_max <= 10;
        g_gap_checks += o.budget.gap_checks;
        g_gap_violations += o.budget.gap_violations;
        out.pass = out.pass && ok;
        ss << (i == 0 ? "N=10^18: " : ", N=2^1024: ") << secs << " s, max dense degree " << o.budget.dense_degree_max
           << (ok ? "" : " [wrong]");
    }
    out.detail = ss.str();
    return out;
}

Outcome criterion3() {
    Outcome out;
    BigNat n("1000000000000000000");
    LacunaryPoly f = P("x*y + 1") * (LacunaryPoly::constant(2, 1) + LacunaryPoly::monomial(1, {n, n}));
    Oracles o;
    auto t0 = Clock::now();
    FactorList got = factor(f, 2, o);
    double secs = seconds_since(t0);
    out.pass = got.size() == 1 && got[0].factor == P("x*y + 1") && got[0].mult == 1 && secs < 5 &&
               o.budget.dense_calls == 0 && o.budget.univariate_calls >= 1;
    std::ostringstream ss;
    ss << show(got, {"x", "y"}) << " in " << secs << " s, " << o.budget.univariate_calls << " univariate call(s), "
       << o.budget.dense_calls << " dense";
    out.detail = ss.str();
    return out;
}

// g = Z^m - c X^a plus terms strictly above the line alpha + (a/m) beta = a,
// monic in Z with gcd(m, a) = 1, so g is irreducible with one root valuation.
MPoly single_slope_g(std::mt19937_64& rng, long d, Rational& v) {
    std::vector<std::pair<int, int>> shapes;
    for (int m = 1; m <= d; ++m)
        for (int a = 0; a <= d; ++a)
            if (std::gcd(m, a) == 1) shapes.push_back({m, a});
    auto [m, a] = shapes[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(shapes.size()) - 1))];
    v = Rational(a, m);
    MPoly g(2);
    g.add_term({0, m}, 1);
    g.add_term({a, 0}, Rational(-nonzero_coeff(rng, 4)));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i + j <= d; ++i)
            if (Rational(i) + v * j > a && uniform(rng, 0, 2) == 0) g.add_term({i, j}, Rational(nonzero_coeff(rng, 3)));
    return g;
}

Outcome criterion4() {
    std::mt19937_64 rng(4004);
    Outcome out;
    int violations = 0, trials = 0, skipped = 0, finite = 0;
    while (trials < 100) {
        long d = uniform(rng, 1, 3);
        Rational v;
        MPoly g = single_slope_g(rng, d, v);
        std::vector<std::pair<int, int>> terms;
        MPoly f(2);
        int l = static_cast<int>(uniform(rng, 1, 4));
        while (static_cast<int>(f.t.size()) < l) {
            Mono mono{static_cast<int>(uniform(rng, 0, 20)), static_cast<int>(uniform(rng, 0, 20))};
            if (f.t.count(mono)) continue;
            f.add_term(mono, Rational(nonzero_coeff(rng, 5)));
        }
        for (auto& [mono, c] : f.t) terms.push_back({mono[0], mono[1]});
        if (!independent_mod(terms, g)) {
            ++skipped;
            continue;
        }
        ++trials;
        std::vector<std::pair<BigInt, BigInt>> ab;
        for (auto [a, b] : terms) ab.push_back({BigInt(a), BigInt(b)});
        Rational bound = valuation_gap_bound(ab, v, d);
        ValuationMultiset cv = composed_valuations(f, g);
        if (cv.infinite != 0) ++violations;  // independence forbids f(X, phi) = 0
        for (auto& [val, cnt] : cv.entries) {
            ++finite;
            if (val > bound) ++violations;
        }
    }
    // Series valuation bound: |val h(X, phi)| <= 2 d delta.
    int series_violations = 0, series_trials = 0;
    for (int t = 0; t < 100; ++t) {
        long d = uniform(rng, 1, 3);
        int delta = static_cast<int>(uniform(rng, 1, 4));
        Rational v;
        MPoly g = single_slope_g(rng, d, v);
        MPoly h(2);
        int terms = static_cast<int>(uniform(rng, 1, 5));
        for (int i = 0; i < terms; ++i)
            h.add_term({static_cast<int>(uniform(rng, 0, delta)), static_cast<int>(uniform(rng, 0, delta))},
                       Rational(nonzero_coeff(rng, 5)));
        if (h.is_zero()) continue;
        ++series_trials;
        MPoly r = sylvester_resultant(g, h);
        if (r.degree(0) > 2 * d * delta) ++series_violations;
        for (auto& [val, cnt] : composed_valuations(h, g).entries)
            if (abs(val) > Rational(2 * d * delta)) ++series_violations;
    }
    out.pass = violations == 0 && series_violations == 0;
    std::ostringstream ss;
    ss << trials << " pairs (" << skipped << " dependent skipped), " << finite << " finite valuations, " << violations
       << " violations; series bound " << series_trials << " trials, " << series_violations << " violations";
    out.detail = ss.str();
    return out;
}

QPoly random_upoly(std::mt19937_64& rng, int maxdeg) {
    int deg = static_cast<int>(uniform(rng, 0, maxdeg));
    int shift = static_cast<int>(uniform(rng, 0, deg));
    QPoly p(static_cast<std::size_t>(deg) + 1);
    for (int i = shift; i <= deg; ++i)
        if (i == deg || i == shift || uniform(rng, 0, 1)) p[static_cast<std::size_t>(i)] = nonzero_coeff(rng, 6);
    return p;
}

Outcome criterion5() {
    std::mt19937_64 rng(5005);
    Outcome out;
    int violations = 0, nonzero = 0, zero_random = 0, dependent_nonzero = 0;
    for (int t = 0; t < 200; ++t) {
        int l = static_cast<int>(uniform(rng, 1, 5));
        std::vector<QPoly> fs;
        for (int j = 0; j < l; ++j) fs.push_back(random_upoly(rng, 8));
        QPoly w = wronskian(fs);
        if (w.empty())
            ++zero_random;
        else {
            ++nonzero;
            if (!wronskian_val_check(fs)) ++violations;
        }
        if (l >= 2) {
            // replace the last member by a rational combination of the others
            QPoly comb;
            for (int j = 0; j + 1 < l; ++j) comb = upoly::add(comb, upoly::scale(fs[static_cast<std::size_t>(j)], Rational(nonzero_coeff(rng, 4), uniform(rng, 1, 3))));
            fs.back() = comb;
            if (!wronskian(fs).empty()) ++dependent_nonzero;
        }
    }
    out.pass = violations == 0 && dependent_nonzero == 0;
    std::ostringstream ss;
    ss << nonzero << " nonzero wronskians, " << violations << " valuation violations, " << zero_random
       << " random families with wr = 0, " << dependent_nonzero << " dependent families with wr != 0";
    out.detail = ss.str();
    return out;
}

Outcome criterion6() {
    std::mt19937_64 rng(6006);
    Outcome out;
    int bad_sum = 0, bad_val = 0;
    for (int t = 0; t < 200; ++t) {
        LacunaryPoly f = random_poly(rng, 2, 20, static_cast<int>(uniform(rng, 1, 8)));
        LacunaryPoly g = random_poly(rng, 2, 20, static_cast<int>(uniform(rng, 1, 8)));
        NewtonPolygon prod = convex_polygon(support(f * g, 0, 1));
        NewtonPolygon sum = minkowski_sum(convex_polygon(support(f, 0, 1)), convex_polygon(support(g, 0, 1)));
        if (!prod.same_shape(sum)) ++bad_sum;
    }
    for (int t = 0; t < 50; ++t) {
        MPoly g = MPoly::constant(2, 1);
        std::map<Rational, unsigned long> expect;
        int factors = static_cast<int>(uniform(rng, 1, 4));
        for (int i = 0; i < factors; ++i) {
            MPoly y = MPoly::var(2, 1);
            if (uniform(rng, 0, 3) == 0) {
                int m = 2 * static_cast<int>(uniform(rng, 0, 3)) + 1;  // Y^2 - c X^m, roots of valuation m/2
                MPoly term(2);
                term.add_term({m, 0}, Rational(nonzero_coeff(rng, 5)));
                g = g * (y * y - term);
                expect[Rational(m, 2)] += 2;
            } else {
                int m = static_cast<int>(uniform(rng, 0, 5));
                MPoly term(2);
                term.add_term({m, 0}, Rational(nonzero_coeff(rng, 5), uniform(rng, 1, 4)));
                g = g * (y - term);
                expect[Rational(m)] += 1;
            }
        }
        ValuationMultiset vm = root_valuations(g);
        std::vector<std::pair<Rational, unsigned long>> want(expect.begin(), expect.end());
        if (vm.entries != want || vm.infinite != 0) ++bad_val;
    }
    out.pass = bad_sum == 0 && bad_val == 0;
    out.detail = "Minkowski mismatches " + std::to_string(bad_sum) + "/200, valuation mismatches " +
                 std::to_string(bad_val) + "/50";
    return out;
}

Outcome criterion7() {
    Outcome out;
    out.pass = g_gap_checks > 0 && g_gap_violations == 0;
    out.detail = std::to_string(g_gap_checks) + " block reports, " + std::to_string(g_gap_violations) + " violations";
    return out;
}

Outcome criterion8() {
    Outcome out;
    out.pass = g_budget_ok && g_suite1_runs == 200;
    std::ostringstream ss;
    ss << "max ratios to headroom: univariate size " << g_budget.univariate_ratio << ", dense calls "
       << g_budget.dense_calls_ratio << ", dense degree sum " << g_budget.dense_degree_ratio << "; max dense calls "
       << g_budget.dense_calls << ", max degree sum " << g_budget.dense_degree_sum;
    out.detail = ss.str();
    return out;
}

LacunaryPoly multivariate_instance(std::mt19937_64& rng, std::size_t n) {
    while (true) {
        LacunaryPoly f = LacunaryPoly::constant(n, 1);
        int nf = static_cast<int>(uniform(rng, 1, 2));
        for (int i = 0; i < nf; ++i) {
            LacunaryPoly g = random_factor(rng, n, static_cast<int>(uniform(rng, 1, 2)), 3);
            f = f * g.pow(static_cast<unsigned long>(uniform(rng, 1, 2)));
        }
        long shape = uniform(rng, 0, 2);
        if (shape == 0)
            f = f * random_sparse(rng, n, 12, 2);
        else if (shape == 1)
            f = f * (LacunaryPoly::constant(n, 1) + random_sparse(rng, n, 12, 1));
        else {
            // one far monomial, so the partition has room to split
            std::vector<BigNat> e(n);
            long left = uniform(rng, 15, 21);
            for (std::size_t v = 0; v < n && left > 0; ++v) {
                long x = v + 1 == n ? left : uniform(rng, 0, left);
                e[v] = x;
                left -= x;
            }
            f = f * (LacunaryPoly::constant(n, 1) + LacunaryPoly::monomial(Rational(nonzero_coeff(rng, 3)), e));
        }
        if (f.is_zero() || f.total_degree() > 25 || f.num_terms() > 40) continue;
        return f;
    }
}

Outcome criterion9() {
    std::mt19937_64 rng(9009);
    Outcome out;
    int mismatches = 0, runs = 0, nontrivial = 0, blocks = 0;
    auto t0 = Clock::now();
    for (std::size_t n : {3, 4}) {
        int count = n == 3 ? 50 : 20;
        auto vars = default_vars(n);
        for (int i = 0; i < count; ++i) {
            long d = 1 + i % 3;
            LacunaryPoly f = multivariate_instance(rng, n);
            Oracles o;
            FactorList got = factor(f, d, o);
            FactorList ref = dense_reference(f, d);
            ++runs;
            nontrivial += got.size() > 0;
            blocks += multivariate_partition(normalize(f), d).partition.blocks.size() > 1;
            if (o.budget.gap_violations) ++mismatches;
            if (!same_factors(got, ref) && ++mismatches <= 3)
                std::cerr << "  mismatch d=" << d << " f=" << format(f, vars) << "\n    got " << show(got, vars)
                          << "\n    ref " << show(ref, vars) << "\n";
        }
    }
    double suite = seconds_since(t0);
    BigNat n("1000000000000000000");
    LacunaryPoly f = P("x1 + x2 + x3", {"x1", "x2", "x3"}) *
                     (LacunaryPoly::constant(3, 1) + LacunaryPoly::monomial(1, {n, 0, 0}));
    Oracles o;
    auto t1 = Clock::now();
    FactorList got = factor(f, 1, o);
    double secs = seconds_since(t1);
    bool big = got.size() == 1 && got[0].factor == P("x1 + x2 + x3", {"x1", "x2", "x3"}) && got[0].mult == 1 && secs < 10;
    out.pass = mismatches == 0 && big;
    std::ostringstream ss;
    ss << (runs - mismatches) << "/" << runs << " match in " << suite << " s (" << nontrivial << " with factors, "
       << blocks << " split into several blocks); huge instance " << secs << " s"
       << (big ? "" : " [wrong]");
    out.detail = ss.str();
    return out;
}

Outcome criterion10() {
    Outcome out;
    gmp_randclass r(gmp_randinit_default);
    r.seed(10010);
    std::vector<Term> raw;
    for (int i = 0; i < 10000; ++i) raw.push_back({Rational(1 + i % 7), {r.get_z_bits(1024), r.get_z_bits(1024)}});
    auto t0 = Clock::now();
    LacunaryPoly f = LacunaryPoly::canonicalize(2, raw);
    double canon = seconds_since(t0);
    auto t1 = Clock::now();
    NewtonPolygon P = convex_polygon(support(f, 0, 1));
    double hull = seconds_since(t1);
    out.pass = canon < 1 && hull < 2 && f.num_terms() == 10000 && P.vertices.size() >= 3;
    std::ostringstream ss;
    ss << "canonicalize " << canon << " s, polygon " << hull << " s (" << P.vertices.size() << " vertices)";
    out.detail = ss.str();
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 bivariate oracle equivalence", criterion1},
        {"2 huge-exponent inhomogeneous scaling", criterion2},
        {"3 huge-exponent weighted homogeneous", criterion3},
        {"4 valuation bound and series bound", criterion4},
        {"5 wronskian valuation bound", criterion5},
        {"6 Ostrowski and Newton-Puiseux", criterion6},
        {"7 partition spread bounds", criterion7},
        {"8 oracle budget conformance", criterion8},
        {"9 multivariate equivalence", criterion9},
        {"10 geometry performance", criterion10},
    };
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only && static_cast<int>(i) + 1 != only) continue;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << criteria[i].first << ": " << o.detail << std::endl;
        if (!o.pass) ++failed;
    }
    return failed ? 1 : 0;
}
