#include "lacfactor/gap.hpp"
#include "lacfactor/io.hpp"
#include "lacfactor/multivar.hpp"
#include "lacfactor/newton.hpp"
#include "lacfactor/probe.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace lacfactor;
using nlohmann::json;

namespace {

constexpr int kParseError = 2;
constexpr int kCapacity = 3;
constexpr int kInvalid = 4;

struct Options {
    long degree = 1;
    std::string input, expr, vars, format = "json", pair, probe_kind;
    long dense_cap = 4096;
    std::uint64_t seed = 0x5eed;
    int primes = 3;
    bool stats = false;
};

std::vector<std::string> split_vars(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string v;
    while (std::getline(ss, v, ','))
        if (!v.empty()) out.push_back(v);
    return out;
}

std::string read_source(const Options& o) {
    if (!o.input.empty() && !o.expr.empty()) throw std::invalid_argument("give either --input or --expr, not both");
    if (!o.expr.empty()) return o.expr;
    if (o.input.empty()) throw std::invalid_argument("missing --input or --expr");
    std::ifstream in(o.input);
    if (!in) throw std::invalid_argument("cannot read " + o.input);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

NamedPoly read_poly(const Options& o) {
    std::string text = read_source(o);
    auto vars = split_vars(o.vars);
    NamedPoly p = vars.empty() ? read_poly_text(text) : parse(text, vars);
    if (!vars.empty() && p.vars != vars) throw std::invalid_argument("--vars does not match the input variables");
    return p;
}

json slope_json(const ExactSlope& s) { return s.str(); }

json point_json(const SupportPoint& p) { return {{"beta", p.x.get_str()}, {"alpha", p.y.get_str()}}; }

json polygon_json(const NewtonPolygon& P, long d) {
    json verts = json::array(), edges = json::array();
    for (auto& v : P.vertices) verts.push_back(point_json(v));
    for (std::size_t i = 0; i < P.edges.size(); ++i) {
        const Edge& e = P.edges[i];
        PQ pq = slope_to_pq(e.slope);
        json ej = {{"index", i},
                   {"from", point_json(e.a)},
                   {"to", point_json(e.b)},
                   {"slope", slope_json(e.slope)},
                   {"hull", hull_name(e.hull)},
                   {"pq", {pq.p.get_str(), pq.q.get_str()}}};
        if (d > 0) ej["admissible"] = admissible(e.slope, d);
        edges.push_back(ej);
    }
    return {{"degeneracy", degeneracy_name(P.degeneracy)}, {"vertices", verts}, {"edges", edges}};
}

json budget_json(const OracleBudget& b) {
    return {{"univariate_calls", b.univariate_calls}, {"univariate_size", b.univariate_size},
            {"dense_calls", b.dense_calls},           {"dense_degree_sum", b.dense_degree_sum},
            {"dense_degree_max", b.dense_degree_max}, {"gap_checks", b.gap_checks},
            {"gap_violations", b.gap_violations}};
}

void check_degree(const Options& o) {
    if (o.degree < 1) throw std::invalid_argument("--degree must be at least 1");
    if (o.dense_cap < o.degree) throw std::invalid_argument("--dense-cap must be at least --degree");
    if (o.primes < 1) throw std::invalid_argument("--primes must be positive");
}

int run_factor(const Options& o) {
    check_degree(o);
    NamedPoly p = read_poly(o);
    if (p.poly.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    Oracles oracles(OracleConfig{o.dense_cap, o.seed, o.primes});
    FactorList fl = factor(p.poly, o.degree, oracles);
    if (o.format == "text") {
        for (auto& e : fl) std::cout << format(e.factor, p.vars) << " ^ " << e.mult << "\n";
    } else {
        json out = {{"schema", "lacfactor/1"},
                    {"vars", p.vars},
                    {"degree", o.degree},
                    {"factors", factors_to_json(fl, p.vars)}};
        std::cout << out.dump(2) << "\n";
    }
    if (o.stats) std::cerr << json{{"budget", budget_json(oracles.budget)}}.dump() << "\n";
    return 0;
}

NewtonPolygon bivariate_polygon(const NamedPoly& p) {
    if (p.poly.nvars() != 2) throw std::invalid_argument("polygon needs exactly two variables");
    if (p.poly.is_zero()) throw std::invalid_argument("polygon of the zero polynomial");
    return convex_polygon(support(p.poly, 0, 1));
}

int run_polygon(const Options& o, bool degree_given) {
    NamedPoly p = read_poly(o);
    NewtonPolygon P = bivariate_polygon(p);
    json out = {{"schema", "lacfactor/1"}, {"vars", p.vars}};
    out.update(polygon_json(P, degree_given ? o.degree : 0));
    std::cout << out.dump(2) << "\n";
    return 0;
}

json report_json(const GapReport& rep) {
    json blocks = json::array();
    for (auto& b : rep.blocks)
        blocks.push_back({{"terms", b.block},
                          {"spread1", b.spread1.get_str()},
                          {"bound1", b.bound1.get_str()},
                          {"spread2", b.spread2.get_str()},
                          {"bound2", b.bound2.get_str()},
                          {"spread_alpha", b.spread_alpha.get_str()},
                          {"bound_alpha", b.bound_alpha.get_str()},
                          {"spread_beta", b.spread_beta.get_str()},
                          {"bound_beta", b.bound_beta.get_str()},
                          {"ok", b.ok()}});
    return blocks;
}

int run_partition(const Options& o) {
    check_degree(o);
    NamedPoly p = read_poly(o);
    NewtonPolygon P = bivariate_polygon(p);
    std::size_t i = 0, j = 0;
    char comma = 0;
    std::stringstream ss(o.pair);
    if (!(ss >> i >> comma >> j) || comma != ',') throw std::invalid_argument("--pair expects i,j");
    if (i >= P.edges.size() || j >= P.edges.size()) throw std::invalid_argument("--pair index out of range");
    auto [part, rep] = refine_partition(p.poly, P.edges[i], P.edges[j], o.degree);
    json blocks = json::array();
    for (auto& b : part.blocks) {
        json terms = json::array();
        for (auto t : b) terms.push_back(format(LacunaryPoly::canonicalize(p.poly.nvars(), {p.poly.term(t)}), p.vars));
        blocks.push_back({{"indices", b}, {"terms", terms}});
    }
    json out = {{"schema", "lacfactor/1"},
                {"vars", p.vars},
                {"degree", o.degree},
                {"pair", {i, j}},
                {"partition", blocks},
                {"report", report_json(rep)},
                {"ok", rep.ok()}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

QPoly univariate_dense(const std::string& text, long cap) {
    NamedPoly p = parse(text);
    if (p.poly.nvars() != 1) throw std::invalid_argument("wronskian entries must be univariate");
    return upoly::from_mpoly(expand_dense(p.poly, cap), 0);
}

MPoly bivariate_dense(const std::string& text, long cap, const std::vector<std::string>& vars) {
    NamedPoly p = parse(text, vars);
    return expand_dense(p.poly, cap);
}

json valuations_json(const ValuationMultiset& vm) {
    json arr = json::array();
    for (auto& [v, c] : vm.entries) arr.push_back({{"v", v.get_str()}, {"count", c}});
    return {{"valuations", arr}, {"infinite", vm.infinite}};
}

Rational parse_rational(const std::string& s) {
    Rational r(s);
    r.canonicalize();
    return r;
}

int run_probe(const Options& o) {
    std::string text = read_source(o);
    json out = {{"schema", "lacfactor/1"}, {"probe", o.probe_kind}};
    if (o.probe_kind == "wronskian") {
        json in = json::parse(text);
        std::vector<QPoly> fs;
        for (auto& s : in.at("polys")) fs.push_back(univariate_dense(s.get<std::string>(), o.dense_cap));
        QPoly w = wronskian(fs);
        LacunaryPoly wl = to_lacunary(upoly::to_mpoly(w, 1, 0));
        out["wronskian"] = format(wl, {"x"});
        if (!w.empty()) {
            long sum = 0, l = static_cast<long>(fs.size());
            for (auto& f : fs) sum += valuation(f);
            out["valuation"] = valuation(w);
            out["lower_bound"] = sum - l * (l - 1) / 2;
            out["holds"] = wronskian_val_check(fs);
        }
    } else if (o.probe_kind == "valuations") {
        std::size_t i = 0;
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i < text.size() && text[i] == '{') {
            json in = json::parse(text);
            MPoly f = bivariate_dense(in.at("f").get<std::string>(), o.dense_cap, {"x", "z"});
            MPoly g = bivariate_dense(in.at("g").get<std::string>(), o.dense_cap, {"x", "z"});
            out["v"] = single_slope_valuation(g).get_str();
            out.update(valuations_json(composed_valuations(f, g)));
        } else {
            auto vars = split_vars(o.vars);
            out.update(valuations_json(root_valuations(bivariate_dense(text, o.dense_cap, vars.empty() ? std::vector<std::string>{"x", "y"} : vars))));
        }
    } else if (o.probe_kind == "bound") {
        json in = json::parse(text);
        std::vector<std::pair<BigInt, BigInt>> terms;
        for (auto& t : in.at("terms")) terms.push_back({BigInt(t.at(0).get<std::string>()), BigInt(t.at(1).get<std::string>())});
        Rational v = parse_rational(in.at("v").get<std::string>());
        long d = in.at("d").get<long>();
        out["bound"] = valuation_gap_bound(terms, v, d).get_str();
    } else
        throw std::invalid_argument("unknown probe " + o.probe_kind);
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Low-degree factors of lacunary polynomials over the rationals"};
    app.require_subcommand(1);
    Options o;
    auto add_common = [&](CLI::App* c) {
        c->add_option("--input", o.input, "polynomial file (JSON or expression)");
        c->add_option("--expr", o.expr, "polynomial expression");
        c->add_option("--vars", o.vars, "comma separated variable order");
        c->add_option("--dense-cap", o.dense_cap, "largest total degree expanded densely");
    };
    auto* fac = app.add_subcommand("factor", "irreducible factors of degree <= d");
    add_common(fac);
    fac->add_option("--degree,-d", o.degree, "degree bound")->required();
    fac->add_option("--format,--output", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    fac->add_option("--seed", o.seed, "random seed");
    fac->add_option("--primes", o.primes, "primes per rational root test");
    fac->add_flag("--stats", o.stats, "oracle budget on stderr");

    auto* poly = app.add_subcommand("polygon", "Newton polygon of a bivariate polynomial");
    add_common(poly);
    auto* poly_deg = poly->add_option("--degree,-d", o.degree, "mark admissible edges for this degree");

    auto* part = app.add_subcommand("partition", "gap partition for an edge pair");
    add_common(part);
    part->add_option("--degree,-d", o.degree, "degree bound")->required();
    part->add_option("--pair", o.pair, "edge indices i,j")->required();

    auto* probe = app.add_subcommand("probe", "valuation probes");
    add_common(probe);
    probe->add_option("kind", o.probe_kind, "wronskian, valuations or bound")
        ->required()
        ->check(CLI::IsMember({"wronskian", "valuations", "bound"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        if (*fac) return run_factor(o);
        if (*poly) return run_polygon(o, poly_deg->count() > 0);
        if (*part) return run_partition(o);
        return run_probe(o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const json::parse_error& e) {
        std::cerr << "parse error: " << e.what() << " at byte " << e.byte << "\n";
        return kParseError;
    } catch (const CapacityExceeded& e) {
        std::cerr << "capacity exceeded: " << e.what() << "\n";
        return kCapacity;
    } catch (const std::exception& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kInvalid;
    }
}
