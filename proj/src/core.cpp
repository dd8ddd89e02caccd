#include "lacfactor/core.hpp"

#include <algorithm>
#include <numeric>

namespace lacfactor {

bool exps_less(const std::vector<BigNat>& a, const std::vector<BigNat>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

static bool exps_equal(const std::vector<BigNat>& a, const std::vector<BigNat>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

LacunaryPoly LacunaryPoly::canonicalize(std::size_t nvars, std::vector<Term> raw) {
    for (auto& t : raw) {
        if (t.exps.size() != nvars)
            throw std::invalid_argument("exponent vector length does not match variable count");
        for (auto& e : t.exps)
            if (sgn(e) < 0) throw std::invalid_argument("negative exponent");
    }
    std::stable_sort(raw.begin(), raw.end(),
                     [](const Term& a, const Term& b) { return exps_less(a.exps, b.exps); });
    LacunaryPoly p(nvars);
    for (auto& t : raw) {
        if (!p.terms_.empty() && exps_equal(p.terms_.back().exps, t.exps)) {
            p.terms_.back().coeff += t.coeff;
            continue;
        }
        if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    for (auto& t : p.terms_) t.coeff.canonicalize();
    return p;
}

LacunaryPoly LacunaryPoly::constant(std::size_t nvars, const Rational& c) {
    LacunaryPoly p(nvars);
    if (c != 0) p.terms_.push_back({c, std::vector<BigNat>(nvars, 0)});
    return p;
}

LacunaryPoly LacunaryPoly::monomial(const Rational& c, std::vector<BigNat> exps) {
    LacunaryPoly p(exps.size());
    if (c != 0) p.terms_.push_back({c, std::move(exps)});
    return p;
}

LacunaryPoly LacunaryPoly::variable(std::size_t nvars, std::size_t i) {
    std::vector<BigNat> e(nvars, 0);
    e.at(i) = 1;
    return monomial(1, std::move(e));
}

bool LacunaryPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (auto& e : terms_[0].exps)
        if (e != 0) return false;
    return true;
}

BigNat LacunaryPoly::degree(std::size_t var) const {
    BigNat m = 0;
    for (auto& t : terms_)
        if (t.exps.at(var) > m) m = t.exps[var];
    return m;
}

BigNat LacunaryPoly::total_degree() const {
    BigNat m = 0;
    for (auto& t : terms_) {
        BigNat s = 0;
        for (auto& e : t.exps) s += e;
        if (s > m) m = s;
    }
    return m;
}

std::size_t LacunaryPoly::bit_size() const {
    std::size_t s = 0;
    for (auto& t : terms_) {
        s += mpz_sizeinbase(t.coeff.get_num_mpz_t(), 2);
        s += mpz_sizeinbase(t.coeff.get_den_mpz_t(), 2);
        for (auto& e : t.exps) s += mpz_sizeinbase(e.get_mpz_t(), 2);
    }
    return s;
}

bool LacunaryPoly::operator==(const LacunaryPoly& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || !exps_equal(terms_[i].exps, o.terms_[i].exps))
            return false;
    return true;
}

LacunaryPoly LacunaryPoly::operator+(const LacunaryPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    std::vector<Term> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return canonicalize(nvars_, std::move(all));
}

LacunaryPoly LacunaryPoly::operator-() const { return scaled(-1); }

LacunaryPoly LacunaryPoly::operator-(const LacunaryPoly& o) const { return *this + (-o); }

LacunaryPoly LacunaryPoly::scaled(const Rational& c) const {
    if (c == 0) return LacunaryPoly(nvars_);
    LacunaryPoly p = *this;
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
}

LacunaryPoly LacunaryPoly::operator*(const LacunaryPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (auto& a : terms_)
        for (auto& b : o.terms_) {
            Term t{a.coeff * b.coeff, a.exps};
            for (std::size_t i = 0; i < nvars_; ++i) t.exps[i] += b.exps[i];
            prod.push_back(std::move(t));
        }
    return canonicalize(nvars_, std::move(prod));
}

LacunaryPoly LacunaryPoly::pow(unsigned long e) const {
    LacunaryPoly r = constant(nvars_, 1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

LacunaryPoly LacunaryPoly::shifted(const std::vector<BigNat>& by) const {
    LacunaryPoly p = *this;
    for (auto& t : p.terms_)
        for (std::size_t i = 0; i < nvars_; ++i) t.exps[i] += by.at(i);
    return p;
}

std::pair<MonomialContent, LacunaryPoly> monomial_content(const LacunaryPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("monomial content of the zero polynomial");
    MonomialContent m{f.term(0).exps};
    for (auto& t : f.terms())
        for (std::size_t i = 0; i < f.nvars(); ++i)
            if (t.exps[i] < m.exps[i]) m.exps[i] = t.exps[i];
    std::vector<Term> raw = f.terms();
    for (auto& t : raw)
        for (std::size_t i = 0; i < f.nvars(); ++i) t.exps[i] -= m.exps[i];
    // subtracting a constant vector keeps lex order
    return {m, LacunaryPoly::canonicalize(f.nvars(), std::move(raw))};
}

LacunaryPoly normalize(const LacunaryPoly& f) { return monomial_content(f).second; }

LacunaryPoly restrict_terms(const LacunaryPoly& f, const std::vector<std::size_t>& idx) {
    std::vector<Term> raw;
    raw.reserve(idx.size());
    for (auto i : idx) {
        if (i >= f.num_terms()) throw std::out_of_range("term index out of range");
        raw.push_back(f.term(i));
    }
    return LacunaryPoly::canonicalize(f.nvars(), std::move(raw));
}

LacunaryPoly reciprocal(const LacunaryPoly& f, std::size_t var) {
    if (f.is_zero()) throw std::invalid_argument("reciprocal of the zero polynomial");
    BigNat D = f.degree(var);
    std::vector<Term> raw = f.terms();
    for (auto& t : raw) t.exps[var] = D - t.exps[var];
    return LacunaryPoly::canonicalize(f.nvars(), std::move(raw));
}

LacunaryPoly swap_vars(const LacunaryPoly& f, std::size_t i, std::size_t j) {
    if (i >= f.nvars() || j >= f.nvars()) throw std::out_of_range("variable index out of range");
    std::vector<Term> raw = f.terms();
    for (auto& t : raw) std::swap(t.exps[i], t.exps[j]);
    return LacunaryPoly::canonicalize(f.nvars(), std::move(raw));
}

LacunaryPoly to_univariate(const LacunaryPoly& f, const BigNat& q) {
    if (f.nvars() != 2) throw std::invalid_argument("to_univariate expects a bivariate polynomial");
    if (q <= 0) throw std::invalid_argument("to_univariate expects q >= 1");
    std::vector<Term> raw;
    for (auto& t : f.terms()) {
        if (!mpz_divisible_p(t.exps[0].get_mpz_t(), q.get_mpz_t()))
            throw std::logic_error("X-exponent not divisible by q: input is not weighted homogeneous");
        raw.push_back({t.coeff, {BigNat(t.exps[0] / q)}});
    }
    std::size_t k = raw.size();
    auto p = LacunaryPoly::canonicalize(1, std::move(raw));
    if (p.num_terms() != k) throw std::logic_error("to_univariate merged terms");
    return p;
}

LacunaryPoly read_in_y(const LacunaryPoly& f) {
    if (f.nvars() != 2) throw std::invalid_argument("read_in_y expects a bivariate polynomial");
    std::vector<Term> raw;
    for (auto& t : f.terms()) {
        if (t.exps[0] != f.term(0).exps[0]) throw std::logic_error("X-exponent is not constant");
        raw.push_back({t.coeff, {t.exps[1]}});
    }
    return LacunaryPoly::canonicalize(1, std::move(raw));
}

LacunaryPoly embed(const LacunaryPoly& f, std::size_t nvars, const std::vector<std::size_t>& where) {
    std::vector<Term> raw;
    for (auto& t : f.terms()) {
        Term u{t.coeff, std::vector<BigNat>(nvars, 0)};
        for (std::size_t i = 0; i < f.nvars(); ++i) u.exps.at(where.at(i)) += t.exps[i];
        raw.push_back(std::move(u));
    }
    return LacunaryPoly::canonicalize(nvars, std::move(raw));
}

bool grlex_less(const std::vector<BigNat>& a, const std::vector<BigNat>& b) {
    BigNat sa = 0, sb = 0;
    for (auto& e : a) sa += e;
    for (auto& e : b) sb += e;
    if (sa != sb) return sa < sb;
    return exps_less(a, b);
}

std::size_t grlex_leading(const LacunaryPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("leading term of the zero polynomial");
    std::size_t best = 0;
    for (std::size_t i = 1; i < f.num_terms(); ++i)
        if (grlex_less(f.term(best).exps, f.term(i).exps)) best = i;
    return best;
}

LacunaryPoly canonical_associate(const LacunaryPoly& f) {
    if (f.is_zero()) return f;
    BigInt den = 1, num = 0;
    for (auto& t : f.terms()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
    }
    Rational s(den, num);
    s.canonicalize();
    if (sgn(f.term(grlex_leading(f)).coeff) < 0) s = -s;
    return f.scaled(s);
}

bool support_on_line(const LacunaryPoly& f) {
    if (f.num_terms() <= 2) return true;
    const auto& e0 = f.term(0).exps;
    std::size_t n = f.nvars();
    std::vector<BigInt> d1(n);
    for (std::size_t i = 0; i < n; ++i) d1[i] = f.term(1).exps[i] - e0[i];
    for (std::size_t j = 2; j < f.num_terms(); ++j) {
        std::vector<BigInt> dj(n);
        for (std::size_t i = 0; i < n; ++i) dj[i] = f.term(j).exps[i] - e0[i];
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (d1[a] * dj[b] != d1[b] * dj[a]) return false;
    }
    return true;
}

unsigned long to_ulong_checked(const BigNat& e, const char* what) {
    if (!e.fits_ulong_p()) throw CapacityExceeded(std::string(what) + " does not fit a machine word");
    return e.get_ui();
}

}  // namespace lacfactor
