#include "lacfactor/probe.hpp"

#include "lacfactor/newton.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace lacfactor {

namespace {

Rational determinant(std::vector<std::vector<Rational>> m) {
    std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

std::size_t rank(std::vector<std::vector<Rational>> m) {
    std::size_t r = 0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

// Newton form, then expanded to ascending coefficients.
QPoly interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
    std::size_t n = xs.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    QPoly r;
    for (std::size_t k = n; k-- > 0;) {
        QPoly next(r.size() + 1);
        for (std::size_t i = 0; i < r.size(); ++i) {
            next[i + 1] += r[i];
            next[i] -= xs[k] * r[i];
        }
        next[0] += ys[k];
        r = next;
    }
    upoly::trim(r);
    return r;
}

// Coefficients in Z (variable 1) of f at X = x, padded to length len.
QPoly coeffs_in_z(const MPoly& f, const Rational& x, std::size_t len) {
    QPoly r(len);
    for (auto& [m, c] : f.t) {
        Rational p = c;
        for (int i = 0; i < m[0]; ++i) p *= x;
        r[static_cast<std::size_t>(m[1])] += p;
    }
    return r;
}

}  // namespace

int valuation(const QPoly& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) return static_cast<int>(i);
    return -1;
}

QPoly wronskian(const std::vector<QPoly>& fs) {
    std::size_t l = fs.size();
    if (l == 0) throw std::invalid_argument("wronskian of an empty family");
    std::vector<std::vector<QPoly>> der(l);
    int bound = 0;
    for (std::size_t j = 0; j < l; ++j) {
        der[j].push_back(fs[j]);
        for (std::size_t i = 1; i < l; ++i) der[j].push_back(upoly::deriv(der[j].back()));
        bound += std::max(upoly::deg(fs[j]), 0);
    }
    std::vector<Rational> xs, ys;
    for (int p = 0; p <= bound; ++p) {
        Rational x(p);
        std::vector<std::vector<Rational>> m(l, std::vector<Rational>(l));
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < l; ++j) m[i][j] = upoly::eval(der[j][i], x);
        xs.push_back(x);
        ys.push_back(determinant(std::move(m)));
    }
    return interpolate(xs, ys);
}

bool wronskian_val_check(const std::vector<QPoly>& fs) {
    QPoly w = wronskian(fs);
    if (w.empty()) throw std::invalid_argument("wronskian is zero");
    long sum = 0;
    for (auto& f : fs) sum += valuation(f);
    long l = static_cast<long>(fs.size());
    return valuation(w) >= sum - l * (l - 1) / 2;
}

MPoly sylvester_resultant(const MPoly& g, const MPoly& h) {
    if (g.n != 2 || h.n != 2) throw std::invalid_argument("resultant inputs must be bivariate in (X,Z)");
    int m = g.degree(1);
    if (m < 1) throw std::invalid_argument("g must have positive degree in Z");
    int nb = h.is_zero() ? 0 : h.degree(1);
    int dxh = h.is_zero() ? 0 : h.degree(0);
    int dx = m * dxh + nb * g.degree(0);
    std::size_t size = static_cast<std::size_t>(m + nb);

    std::vector<Rational> xs, ysamp;
    for (int b = 0; b <= m; ++b) ysamp.push_back(Rational(b));
    // one extra X point so the degree bound can be checked
    std::vector<QPoly> in_y;
    for (int a = 0; a <= dx + 1; ++a) {
        Rational x(a);
        xs.push_back(x);
        QPoly A = coeffs_in_z(g, x, static_cast<std::size_t>(m) + 1);
        QPoly H = coeffs_in_z(h, x, static_cast<std::size_t>(nb) + 1);
        std::vector<Rational> vals;
        for (auto& y : ysamp) {
            QPoly B = upoly::scale(H, Rational(-1));
            B[0] += y;
            std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
            for (int i = 0; i < nb; ++i)
                for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = A[static_cast<std::size_t>(m - k)];
            for (int i = 0; i < m; ++i)
                for (int k = 0; k <= nb; ++k)
                    s[static_cast<std::size_t>(nb + i)][static_cast<std::size_t>(i + k)] = B[static_cast<std::size_t>(nb - k)];
            vals.push_back(determinant(std::move(s)));
        }
        in_y.push_back(interpolate(ysamp, vals));
    }
    MPoly r(2);
    for (int k = 0; k <= m; ++k) {
        std::vector<Rational> vals;
        for (auto& p : in_y) vals.push_back(static_cast<std::size_t>(k) < p.size() ? p[static_cast<std::size_t>(k)] : Rational(0));
        QPoly cx = interpolate(xs, vals);
        if (upoly::deg(cx) > dx) throw std::logic_error("resultant exceeds its X-degree bound");
        for (std::size_t i = 0; i < cx.size(); ++i)
            if (cx[i] != 0) r.add_term({static_cast<int>(i), k}, cx[i]);
    }
    return r;
}

ValuationMultiset root_valuations(const MPoly& g) {
    if (g.n != 2 || g.is_zero()) throw std::invalid_argument("root_valuations needs a nonzero bivariate polynomial");
    if (g.degree(1) < 1) throw std::invalid_argument("root_valuations needs positive degree in Y");
    std::vector<SupportPoint> pts;
    for (auto& [mono, c] : g.t) pts.push_back({BigInt(mono[1]), BigInt(mono[0])});
    ValuationMultiset out;
    out.infinite = static_cast<unsigned long>(g.min_degree(1));
    NewtonPolygon P = convex_polygon(pts);
    std::map<Rational, unsigned long> by;
    for (auto& e : P.edges)
        if (e.hull == Hull::Lower) by[-e.slope.value()] += BigInt(e.b.x - e.a.x).get_ui();
    out.entries.assign(by.begin(), by.end());
    return out;
}

Rational single_slope_valuation(const MPoly& g) {
    ValuationMultiset vm = root_valuations(g);
    if (vm.entries.size() != 1 || vm.infinite != 0) throw std::invalid_argument("g must have a single lower-hull slope");
    return vm.entries[0].first;
}

ValuationMultiset composed_valuations(const MPoly& f, const MPoly& g) {
    single_slope_valuation(g);
    MPoly r = sylvester_resultant(g, f);
    return root_valuations(r);
}

Rational valuation_gap_bound(const std::vector<std::pair<BigInt, BigInt>>& terms, const Rational& v, long d) {
    if (terms.empty()) throw std::invalid_argument("valuation_gap_bound needs at least one term");
    Rational best = Rational(terms[0].first) + v * Rational(terms[0].second);
    for (auto& [a, b] : terms) {
        Rational w = Rational(a) + v * Rational(b);
        if (w < best) best = w;
    }
    Rational l(static_cast<unsigned long>(terms.size()));
    return best + (Rational(2 * d * (4 * d + 1)) - v) * l * (l - 1) / 2;
}

bool independent_mod(const std::vector<std::pair<int, int>>& terms, const MPoly& g) {
    int m = g.degree(1);
    MPoly lc(2);
    for (auto& [mono, c] : g.t)
        if (mono[1] == m) lc.add_term(mono, c);
    if (!(lc == MPoly::var(2, 1).pow(static_cast<unsigned>(m))))
        throw std::invalid_argument("g must be monic in Z");
    std::vector<MPoly> rems;
    for (auto [a, b] : terms) {
        MPoly r(2);
        r.add_term({a, b}, 1);
        while (!r.is_zero() && r.degree(1) >= m) {
            Mono top;
            Rational c;
            for (auto& [mono, cc] : r.t)
                if (mono[1] >= m) {
                    top = mono;
                    c = cc;
                    break;
                }
            MPoly shift(2);
            shift.add_term({top[0], top[1] - m}, c);
            r = r - shift * g;
        }
        rems.push_back(r);
    }
    std::set<Mono> monos;
    for (auto& r : rems)
        for (auto& [mono, c] : r.t) monos.insert(mono);
    std::vector<std::vector<Rational>> mat;
    for (auto& r : rems) {
        std::vector<Rational> row;
        for (auto& mono : monos) {
            auto it = r.t.find(mono);
            row.push_back(it == r.t.end() ? Rational(0) : it->second);
        }
        mat.push_back(row);
    }
    return rank(mat) == terms.size();
}

}  // namespace lacfactor
