#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lacfactor/homogeneous.hpp"
#include "lacfactor/newton.hpp"
#include "support.hpp"

using namespace lacfactor;
using namespace testsupport;

static LacunaryPoly U(const std::string& s) { return P(s, {"x"}); }

static std::vector<BigInt> orders(const std::vector<Component>& cs) {
    std::vector<BigInt> o;
    for (auto& c : cs) o.push_back(c.omega);
    return o;
}

TEST_CASE("components examples") {
    LacunaryPoly f = P("x^2*y^2 + 2*x*y + 1");
    auto a = components(f, -1, 1);
    REQUIRE(a.size() == 1);
    CHECK(a[0].omega == 0);
    CHECK(a[0].poly == f);

    CHECK(orders(components(f, 1, 1)) == std::vector<BigInt>{0, 2, 4});

    auto c = components(P("x*y + x + y + 1"), 0, 1);
    REQUIRE(c.size() == 2);
    CHECK(c[0].omega == 0);
    CHECK(c[0].poly == P("x + 1"));
    CHECK(c[1].omega == 1);
    CHECK(c[1].poly == P("x*y + y"));
}

TEST_CASE("components are homogeneous and sum to f") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        LacunaryPoly f = random_poly(rng, 2, 30, 8);
        long p = uniform(rng, -4, 4), q = uniform(rng, 0, 4);
        if (std::gcd(p, q) != 1) continue;
        LacunaryPoly sum(2);
        BigInt last;
        bool first = true;
        for (auto& comp : components(f, p, q)) {
            CHECK(is_weighted_homogeneous(comp.poly, p, q));
            if (!first) CHECK(last < comp.omega);
            last = comp.omega;
            first = false;
            for (auto& u : comp.poly.terms()) CHECK(BigInt(p * u.exps[0] + q * u.exps[1]) == comp.omega);
            sum = sum + comp.poly;
        }
        CHECK(sum == f);
    }
}

TEST_CASE("homogenize examples") {
    CHECK(homogenize(U("x + 1"), 1, 1) == P("x + y"));
    CHECK(homogenize(U("x^2 + 1"), 1, 2) == P("x^4 + y^2"));
    CHECK(homogenize(U("x + 1"), -1, 1) == P("x*y + 1"));
    CHECK(homogenize(U("x + 1"), 0, 1) == P("x + 1"));
    CHECK(homogenize(U("x + 1"), 1, 0) == P("y + 1"));
    CHECK_THROWS(homogenize(U("x + 1"), 2, 2));
    CHECK_THROWS(homogenize(U("x + 1"), 0, 0));
}

TEST_CASE("homogenize and dehomogenize round trip") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 200; ++t) {
        long p = uniform(rng, -5, 5), q = uniform(rng, 1, 5);
        if (p == 0 || std::gcd(p, q) != 1) continue;
        LacunaryPoly h = random_factor(rng, 1, 10, 4);
        if (h.is_constant()) continue;
        LacunaryPoly g = homogenize(h, p, q);
        CHECK(is_weighted_homogeneous(g, p, q));
        CHECK(to_univariate(g, q) == h);
        CHECK(dehomogenize(g, p, q) == h);
        CHECK(BigNat(g.total_degree()) <= homogenized_weight(p, q) * h.total_degree());
    }
}

TEST_CASE("homogenize is multiplicative") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        long p = uniform(rng, -4, 4), q = uniform(rng, 1, 4);
        if (p == 0 || std::gcd(p, q) != 1) continue;
        LacunaryPoly h1 = random_factor(rng, 1, 6, 3), h2 = random_factor(rng, 1, 6, 3);
        CHECK(homogenize(h1 * h2, p, q) == homogenize(h1, p, q) * homogenize(h2, p, q));
    }
}

TEST_CASE("weighted homogeneous factors examples") {
    Oracles o;
    FactorList a = weighted_homogeneous_factors(P("x^2*y^2 + 2*x*y + 1"), 2, o);
    REQUIRE(a.size() == 1);
    CHECK(a[0].factor == P("x*y + 1"));
    CHECK(a[0].mult == 2);

    FactorList b = weighted_homogeneous_factors(P("x*y + x + y + 1"), 1, o);
    REQUIRE(b.size() == 2);
    CHECK(same_factors(b, make_factor_list({{P("x + 1"), 1}, {P("y + 1"), 1}})));

    // f(X,1) = (X+1)(X^N+1) and -1 is a simple root for even N
    LacunaryPoly f = P("(x*y + 1)*(x^1000000000000000000*y^1000000000000000000 + 1)");
    Oracles big;
    FactorList c = weighted_homogeneous_factors(f, 2, big);
    REQUIRE(c.size() == 1);
    CHECK(c[0].factor == P("x*y + 1"));
    CHECK(c[0].mult == 1);
    CHECK(big.budget.dense_calls == 0);
}

TEST_CASE("weighted homogeneous factors agree with dense factorization") {
    std::mt19937_64 rng(14);
    int checked = 0;
    for (int t = 0; t < 80; ++t) {
        long d = uniform(rng, 1, 3);
        LacunaryPoly f = LacunaryPoly::constant(2, 1);
        int nf = static_cast<int>(uniform(rng, 1, 3));
        for (int i = 0; i < nf; ++i) {
            long p = uniform(rng, -2, 2), q = uniform(rng, 0, 2);
            if (std::gcd(p, q) != 1 || (q == 0 && p != 1)) {
                f = f * random_factor(rng, 2, 3);
                continue;
            }
            LacunaryPoly h = random_factor(rng, 1, 2, 3);
            LacunaryPoly g = homogenize(h, p, q);
            f = f * g.pow(static_cast<unsigned>(uniform(rng, 1, 2)));
        }
        f = normalize(f);
        if (f.is_constant() || f.total_degree() > 24) continue;
        FactorList ref;
        for (auto& e : dense_reference(f, d)) {
            if (e.factor.total_degree() > d) continue;
            auto Q = convex_polygon(support(e.factor, 0, 1));
            if (Q.degeneracy == Degeneracy::Segment) ref.push_back(e);
        }
        Oracles o;
        FactorList got = weighted_homogeneous_factors(f, d, o);
        CHECK_MESSAGE(same_factors(got, make_factor_list(ref)),
                      format(f, {"x", "y"}) << " d=" << d << " got " << show(got, {"x", "y"}) << " want "
                                            << show(ref, {"x", "y"}));
        ++checked;
    }
    CHECK(checked > 40);
}

TEST_CASE("a lone edge slope never carries a homogeneous factor") {
    // Each homogeneous factor's segment appears on both sides of the
    // product's polygon, so its slope always comes as a parallel pair.
    std::mt19937_64 rng(15);
    for (int t = 0; t < 200; ++t) {
        long p = uniform(rng, -3, 3), q = uniform(rng, 0, 3);
        if (std::gcd(p, q) != 1 || (q == 0 && p != 1)) continue;
        LacunaryPoly g = homogenize(random_factor(rng, 1, 3, 3), p, q);
        LacunaryPoly cof = random_poly(rng, 2, 20, static_cast<int>(uniform(rng, 2, 6)));
        if (cof.is_zero()) continue;
        LacunaryPoly f = normalize(g * cof);
        auto Pf = convex_polygon(support(f, 0, 1));
        auto Pg = convex_polygon(support(g, 0, 1));
        if (Pg.degeneracy != Degeneracy::Segment || Pf.degeneracy != Degeneracy::Polygon2D) continue;
        ExactSlope s = Pg.edges[0].slope;
        int count = 0;
        for (auto& e : Pf.edges) count += e.slope == s;
        CHECK(count == 2);
    }
}
