#include "lacfactor/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace lacfactor {

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
            std::size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
            while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
            BigNat x(a.substr(i, i2 - i)), y(b.substr(j, j2 - j));
            if (x != y) return x < y;
            if (i2 - i != j2 - j) return i2 - i < j2 - j;
            i = i2;
            j = j2;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

std::vector<std::string> default_vars(std::size_t n) {
    if (n == 1) return {"x"};
    if (n == 2) return {"x", "y"};
    if (n == 3) return {"x", "y", "z"};
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Highest power of a non-monomial subexpression we are willing to expand.
constexpr unsigned long kMaxExpand = 4096;

class Parser {
public:
    Parser(const std::string& s, std::map<std::string, std::size_t> index)
        : s_(s), index_(std::move(index)), n_(index_.size()) {}

    LacunaryPoly run() {
        LacunaryPoly r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    BigNat nat() {
        skip();
        std::size_t st = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (st == pos_) fail("expected a number");
        return BigNat(s_.substr(st, pos_ - st));
    }

    LacunaryPoly expr() {
        skip();
        if (pos_ == s_.size()) fail("empty expression");
        LacunaryPoly acc(n_);
        bool first = true;
        while (true) {
            bool neg = false;
            if (eat('-'))
                neg = true;
            else if (!eat('+') && !first)
                break;
            LacunaryPoly t = product();
            acc = neg ? acc - t : acc + t;
            first = false;
            skip();
            if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
        }
        return acc;
    }

    LacunaryPoly product() {
        LacunaryPoly acc = power();
        while (true) {
            skip();
            if (eat('*'))
                acc = acc * power();
            else if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                std::size_t at = pos_;
                BigNat den = nat();
                if (den == 0) {
                    pos_ = at;
                    fail("division by zero");
                }
                acc = acc.scaled(Rational(BigNat(1), den));
            } else
                break;
        }
        return acc;
    }

    LacunaryPoly power() {
        std::size_t at = pos_;
        LacunaryPoly base = primary();
        if (!eat('^')) return base;
        skip();
        std::size_t eat_at = pos_;
        BigNat e = nat();
        if (base.is_monomial() || base.is_zero()) {
            if (base.is_zero()) return e == 0 ? LacunaryPoly::constant(n_, 1) : base;
            const Term& t = base.term(0);
            if (t.coeff != 1 && t.coeff != -1 && e > kMaxExpand) {
                pos_ = eat_at;
                fail("exponent too large for a non-unit coefficient");
            }
            Rational c = 1;
            if (t.coeff == -1) c = mpz_odd_p(e.get_mpz_t()) ? -1 : 1;
            else if (t.coeff != 1) {
                unsigned long ee = e.get_ui();
                mpz_pow_ui(c.get_num_mpz_t(), t.coeff.get_num_mpz_t(), ee);
                mpz_pow_ui(c.get_den_mpz_t(), t.coeff.get_den_mpz_t(), ee);
            }
            std::vector<BigNat> ex = t.exps;
            for (auto& x : ex) x *= e;
            return LacunaryPoly::monomial(c, ex);
        }
        if (e > kMaxExpand) {
            pos_ = at;
            fail("power of a sum is too large to expand");
        }
        return base.pow(e.get_ui());
    }

    LacunaryPoly primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            LacunaryPoly r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return LacunaryPoly::constant(n_, Rational(nat()));
        if (ident_start(c)) {
            std::size_t st = pos_;
            while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
            auto it = index_.find(s_.substr(st, pos_ - st));
            if (it == index_.end()) {
                pos_ = st;
                fail("unknown variable");
            }
            return LacunaryPoly::variable(n_, it->second);
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::map<std::string, std::size_t> index_;
    std::size_t n_;
    std::size_t pos_ = 0;
};

}  // namespace

NamedPoly parse(const std::string& text, const std::vector<std::string>& vars) {
    NamedPoly out;
    if (vars.empty()) {
        std::set<std::string> seen;
        for (std::size_t i = 0; i < text.size();) {
            if (ident_start(text[i]) && (i == 0 || !ident_char(text[i - 1]))) {
                std::size_t j = i;
                while (j < text.size() && ident_char(text[j])) ++j;
                seen.insert(text.substr(i, j - i));
                i = j;
            } else
                ++i;
        }
        out.vars.assign(seen.begin(), seen.end());
        std::sort(out.vars.begin(), out.vars.end(), natural_less);
        if (out.vars.empty()) out.vars = {"x"};
    } else
        out.vars = vars;
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < out.vars.size(); ++i)
        if (!index.emplace(out.vars[i], i).second) throw std::invalid_argument("repeated variable " + out.vars[i]);
    out.poly = Parser(text, index).run();
    return out;
}

std::string format(const LacunaryPoly& f, const std::vector<std::string>& vars) {
    if (vars.size() != f.nvars()) throw std::invalid_argument("variable names do not match the polynomial");
    if (f.is_zero()) return "0";
    std::vector<std::size_t> order(f.num_terms());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return grlex_less(f.term(b).exps, f.term(a).exps); });
    std::string s;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const Term& t = f.term(order[k]);
        Rational c = t.coeff;
        if (k == 0) {
            if (c < 0) s += "-";
        } else
            s += c < 0 ? " - " : " + ";
        c = abs(c);
        std::string mono;
        for (std::size_t v = 0; v < t.exps.size(); ++v) {
            if (t.exps[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[v];
            if (t.exps[v] != 1) mono += "^" + t.exps[v].get_str();
        }
        if (mono.empty())
            s += c.get_str();
        else if (c == 1)
            s += mono;
        else
            s += c.get_str() + "*" + mono;
    }
    return s;
}

nlohmann::json poly_to_json(const LacunaryPoly& f, const std::vector<std::string>& vars) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& t : f.terms()) {
        nlohmann::json ex = nlohmann::json::array();
        for (auto& e : t.exps) ex.push_back(e.get_str());
        terms.push_back({{"coeff", t.coeff.get_str()}, {"exps", ex}});
    }
    return {{"vars", vars}, {"terms", terms}};
}

static BigNat json_nat(const nlohmann::json& j) {
    if (j.is_number_unsigned()) return BigNat(j.get<unsigned long>());
    if (!j.is_string()) throw ParseError("exponent must be a decimal string", 0);
    const std::string s = j.get<std::string>();
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("bad exponent \"" + s + "\"", 0);
    return BigNat(s);
}

static Rational json_rational(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(BigInt(std::to_string(j.get<long long>())));
    if (!j.is_string()) throw ParseError("coefficient must be a fraction string", 0);
    std::string s = j.get<std::string>();
    std::size_t slash = s.find('/');
    auto ok_int = [](const std::string& x, bool sign) {
        std::size_t st = sign && !x.empty() && x[0] == '-' ? 1 : 0;
        return x.size() > st && std::all_of(x.begin() + static_cast<long>(st), x.end(), [](char c) {
                   return std::isdigit(static_cast<unsigned char>(c));
               });
    };
    std::string num = s.substr(0, slash), den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!ok_int(num, true) || !ok_int(den, false) || BigInt(den) == 0)
        throw ParseError("bad coefficient \"" + s + "\"", 0);
    Rational r{BigInt(num), BigInt(den)};
    r.canonicalize();
    return r;
}

NamedPoly poly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw ParseError("polynomial object needs \"vars\" and \"terms\"", 0);
    NamedPoly out;
    for (auto& v : j.at("vars")) {
        if (!v.is_string()) throw ParseError("variable names must be strings", 0);
        out.vars.push_back(v.get<std::string>());
    }
    std::vector<Term> raw;
    for (auto& t : j.at("terms")) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("exps"))
            throw ParseError("term needs \"coeff\" and \"exps\"", 0);
        Term u{json_rational(t.at("coeff")), {}};
        for (auto& e : t.at("exps")) u.exps.push_back(json_nat(e));
        if (u.exps.size() != out.vars.size()) throw ParseError("term has the wrong number of exponents", 0);
        raw.push_back(std::move(u));
    }
    out.poly = LacunaryPoly::canonicalize(out.vars.size(), std::move(raw));
    return out;
}

NamedPoly read_poly_text(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte ? e.byte - 1 : 0);
        }
        if (j.is_object() && j.contains("expr")) {
            std::vector<std::string> vars;
            if (j.contains("vars"))
                for (auto& v : j.at("vars")) vars.push_back(v.get<std::string>());
            return parse(j.at("expr").get<std::string>(), vars);
        }
        return poly_from_json(j);
    }
    return parse(text);
}

nlohmann::json factors_to_json(const FactorList& fl, const std::vector<std::string>& vars) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& e : fl)
        arr.push_back({{"factor", poly_to_json(e.factor, vars)}, {"text", format(e.factor, vars)}, {"multiplicity", e.mult}});
    return arr;
}

}  // namespace lacfactor
