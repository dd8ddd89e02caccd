#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lacfactor/probe.hpp"
#include "support.hpp"

using namespace lacfactor;
using namespace testsupport;

using VM = ValuationMultiset;

static MPoly XY(const std::string& s) { return expand_dense(P(s, {"x", "y"}), 4096); }
static MPoly XZ(const std::string& s) { return expand_dense(P(s, {"x", "z"}), 4096); }
static QPoly Q1(const std::string& s) { return upoly::from_mpoly(expand_dense(P(s, {"x"}), 4096), 0); }

TEST_CASE("wronskian examples") {
    CHECK(wronskian({Q1("1"), Q1("x")}) == Q1("1"));
    CHECK(wronskian({Q1("x"), Q1("x^2")}) == Q1("x^2"));
    CHECK(upoly::deg(wronskian({Q1("x^3 + 1"), Q1("x^3 + 1")})) < 0);
    CHECK(wronskian({Q1("1"), Q1("x"), Q1("x^2")}) == Q1("2"));
}

TEST_CASE("wronskian valuation inequality") {
    CHECK(wronskian_val_check({Q1("x"), Q1("x^2")}));
    CHECK(wronskian_val_check({Q1("1"), Q1("x"), Q1("x^2")}));
    CHECK(wronskian_val_check({Q1("x^5 + x^7")}));
    CHECK(valuation(Q1("x^3 + x^5")) == 3);
    CHECK(valuation(QPoly{}) == -1);
}

TEST_CASE("wronskian detects linear dependence") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 60; ++t) {
        std::size_t l = static_cast<std::size_t>(uniform(rng, 2, 4));
        std::vector<QPoly> fs;
        for (std::size_t i = 0; i < l; ++i) fs.push_back(Q1(format(random_factor(rng, 1, 8, 4), {"x"})));
        QPoly w = wronskian(fs);
        // a random family of degree <= 8 is independent unless it repeats
        if (upoly::deg(w) >= 0) CHECK(wronskian_val_check(fs));
        std::vector<QPoly> dep = fs;
        QPoly combo = upoly::add(upoly::scale(fs[0], Rational(nonzero_coeff(rng, 5))),
                                 upoly::scale(fs[1], Rational(nonzero_coeff(rng, 5))));
        dep.push_back(combo);
        CHECK(upoly::deg(wronskian(dep)) < 0);
    }
}

TEST_CASE("resultant examples") {
    CHECK(sylvester_resultant(XZ("z^2 - x"), XZ("z")) == XY("y^2 - x"));
    CHECK(sylvester_resultant(XZ("z - 1"), XZ("z")) == XY("y - 1"));
    CHECK(sylvester_resultant(XZ("z^2 - x"), XZ("z^2")) == XY("(y - x)^2"));
}

TEST_CASE("resultant vanishes on a common root") {
    // g = z - x^2 and h = z^3 + x: substituting z = x^2 gives y = x^6 + x
    MPoly r = sylvester_resultant(XZ("z - x^2"), XZ("z^3 + x"));
    CHECK(evaluate(r, {Rational(2), Rational(66)}) == 0);
    CHECK(evaluate(r, {Rational(2), Rational(65)}) != 0);
}

TEST_CASE("root valuations") {
    CHECK(root_valuations(XY("y^2 - x")) == VM{{{Rational(1, 2), 2}}, 0});
    CHECK(root_valuations(XY("(y - x)*(y - x^2)")) == VM{{{Rational(1), 1}, {Rational(2), 1}}, 0});
    CHECK(root_valuations(XY("y^2 - x^3")) == VM{{{Rational(3, 2), 2}}, 0});
    CHECK(root_valuations(XY("y^2*(y - 1)")) == VM{{{Rational(0), 1}}, 2});
}

TEST_CASE("root valuations of constructed products") {
    std::mt19937_64 rng(52);
    for (int t = 0; t < 50; ++t) {
        int k = static_cast<int>(uniform(rng, 1, 4));
        std::map<long, unsigned long> want;
        LacunaryPoly g = LacunaryPoly::constant(2, 1);
        for (int i = 0; i < k; ++i) {
            long m = uniform(rng, 0, 6);
            want[m] += 1;
            g = g * LacunaryPoly::canonicalize(2, {{Rational(1), {0, 1}}, {Rational(-nonzero_coeff(rng, 5)), {BigNat(m), 0}}});
        }
        VM expect;
        for (auto& [m, c] : want) expect.entries.push_back({Rational(m), c});
        CHECK(root_valuations(expand_dense(g, 4096)) == expect);
    }
}

TEST_CASE("composed valuations") {
    CHECK(composed_valuations(XZ("z"), XZ("z^2 - x")) == VM{{{Rational(1, 2), 2}}, 0});
    CHECK(composed_valuations(XZ("z^2"), XZ("z^2 - x")) == VM{{{Rational(1), 2}}, 0});
    CHECK(composed_valuations(XZ("z^2 - x"), XZ("z^2 - x")).infinite == 2);
    CHECK(single_slope_valuation(XZ("z^3 - x^2")) == Rational(2, 3));
}

TEST_CASE("gap valuation bound examples") {
    CHECK(valuation_gap_bound({{BigInt(4), BigInt(6)}}, Rational(1, 3), 2) == 6);
    CHECK(valuation_gap_bound({{BigInt(0), BigInt(1)}, {BigInt(3), BigInt(0)}}, Rational(1, 2), 2) == 36);
    CHECK(valuation_gap_bound({{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}}, Rational(1), 1) == 10);
    CHECK_THROWS(valuation_gap_bound({}, Rational(1), 1));
}

TEST_CASE("independence modulo g") {
    CHECK(independent_mod({{0, 0}, {0, 1}}, XZ("z^2 - x")));
    CHECK(!independent_mod({{1, 0}, {0, 2}}, XZ("z^2 - x")));
    CHECK(independent_mod({{0, 0}, {1, 0}, {0, 1}}, XZ("z^2 - x")));
}
