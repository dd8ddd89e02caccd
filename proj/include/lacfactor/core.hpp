#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lacfactor {

// Exponents are BigNat (never negative), signed geometry uses BigInt.
using BigNat = mpz_class;
using BigInt = mpz_class;
using Rational = mpq_class;

struct CapacityExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " at byte " + std::to_string(off)), offset(off) {}
};

struct Term {
    Rational coeff;
    std::vector<BigNat> exps;
};

bool exps_less(const std::vector<BigNat>& a, const std::vector<BigNat>& b);

// Sparse polynomial. Terms are kept sorted lexicographically by exponent
// vector, with nonzero coefficients and no repeated exponents.
class LacunaryPoly {
public:
    LacunaryPoly() = default;
    explicit LacunaryPoly(std::size_t nvars) : nvars_(nvars) {}

    static LacunaryPoly canonicalize(std::size_t nvars, std::vector<Term> raw);
    static LacunaryPoly constant(std::size_t nvars, const Rational& c);
    static LacunaryPoly monomial(const Rational& c, std::vector<BigNat> exps);
    static LacunaryPoly variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return nvars_; }
    std::size_t num_terms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& term(std::size_t i) const { return terms_.at(i); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }

    BigNat degree(std::size_t var) const;
    BigNat total_degree() const;
    // Bit size: coefficient numerators/denominators plus all exponents.
    std::size_t bit_size() const;

    bool operator==(const LacunaryPoly& o) const;
    bool operator!=(const LacunaryPoly& o) const { return !(*this == o); }

    LacunaryPoly operator+(const LacunaryPoly& o) const;
    LacunaryPoly operator-(const LacunaryPoly& o) const;
    LacunaryPoly operator*(const LacunaryPoly& o) const;
    LacunaryPoly operator-() const;
    LacunaryPoly scaled(const Rational& c) const;
    LacunaryPoly pow(unsigned long e) const;
    LacunaryPoly shifted(const std::vector<BigNat>& by) const;

private:
    std::size_t nvars_ = 0;
    std::vector<Term> terms_;
};

struct MonomialContent {
    std::vector<BigNat> exps;
};

std::pair<MonomialContent, LacunaryPoly> monomial_content(const LacunaryPoly& f);
LacunaryPoly normalize(const LacunaryPoly& f);
LacunaryPoly restrict_terms(const LacunaryPoly& f, const std::vector<std::size_t>& idx);
LacunaryPoly reciprocal(const LacunaryPoly& f, std::size_t var);
LacunaryPoly swap_vars(const LacunaryPoly& f, std::size_t i, std::size_t j);
LacunaryPoly to_univariate(const LacunaryPoly& f, const BigNat& q);
// Read a bivariate polynomial with constant X-exponent as a polynomial in Y.
LacunaryPoly read_in_y(const LacunaryPoly& f);
LacunaryPoly embed(const LacunaryPoly& f, std::size_t nvars, const std::vector<std::size_t>& where);

// Canonical factor form: integer coefficients with gcd 1 and a positive
// coefficient on the graded-lex largest monomial.
LacunaryPoly canonical_associate(const LacunaryPoly& f);
// Index of the largest term in graded-lex order (variable 0 most significant).
std::size_t grlex_leading(const LacunaryPoly& f);
bool grlex_less(const std::vector<BigNat>& a, const std::vector<BigNat>& b);
// Support lies on a line (weighted homogeneous in the bivariate case).
bool support_on_line(const LacunaryPoly& f);

unsigned long to_ulong_checked(const BigNat& e, const char* what);

}  // namespace lacfactor
