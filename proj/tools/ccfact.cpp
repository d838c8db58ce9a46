// Command-line front end. Every command prints a JSON document on stdout and
// a one-line summary on stderr. Exit codes: 0 pass, 1 identity failure,
// 2 input error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "ccfact/graphs.hpp"
#include "ccfact/patterns.hpp"
#include "ccfact/tableaux.hpp"
#include "ccfact/transforms.hpp"
#include "ccfact/verifier.hpp"

using namespace ccfact;

namespace {

int emit(const Json& j, bool ok, const std::string& summary) {
    std::cout << j.dump(2) << "\n";
    std::cerr << (ok ? "PASS " : "FAIL ") << summary << "\n";
    return ok ? 0 : 1;
}

int emit(const Report& r) {
    std::cout << r.to_json().dump(2) << "\n";
    std::cerr << r.summary() << "\n";
    return r.equal ? 0 : 1;
}

int emit_info(const Json& j, const std::string& summary) {
    std::cout << j.dump(2) << "\n";
    std::cerr << summary << "\n";
    return 0;
}

std::vector<Rational> parse_point(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_rational(tok));
    if (out.empty()) throw InputError("empty point");
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw InputError("bad integer: " + tok);
        }
    }
    return out;
}

Partition parse_opt_partition(const std::string& s) { return s.empty() ? Partition() : Partition::parse(s); }

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("bad JSON in ") + path + ": " + e.what());
    }
}

// either a full graph or just the builder parameters
HoneycombGraph load_graph(const Json& j) {
    if (j.contains("vertices")) return HoneycombGraph::from_json(j);
    if (j.contains("builder")) return build_graph(GraphSpec::from_json(j));
    throw InputError("input is neither a graph nor a builder spec");
}

std::string join(const std::vector<Rational>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + rational_str(v[i]);
    return s;
}

// numeric points where x_i = s_i^2, from a seeded generator
std::vector<Rational> sample(int n, std::mt19937_64& rng) {
    if (n == 0) return {};
    return random_point(n, rng);
}

// ---------------------------------------------------------------------------

int cmd_char(const std::string& family, const std::string& lambda, int n, const std::string& point) {
    auto f = parse_char_family(family);
    auto lam = Partition::parse(lambda);
    if (n == 0) n = static_cast<int>(lam.size());
    auto pt = parse_point(point);
    Rational v;
    try {
        v = char_eval_det(f, lam, n, pt);
    } catch (const DegeneratePoint& e) {
        throw InputError(std::string("degenerate point: ") + e.what());
    }
    Json j = {{"family", family}, {"lambda", lam.str()}, {"n", n}, {"point", join(pt)},
              {"roots", uses_roots(f, lam)}, {"value", rational_str(v)}};
    return emit_info(j, family + lam.str() + " = " + rational_str(v));
}

int cmd_patterns(const std::string& family, const std::string& lambda, const std::string& mu, bool list) {
    auto f = parse_char_family(family);
    auto lam = Partition::parse(lambda);
    auto inner = parse_opt_partition(mu);
    if (inner.size() >= lam.size()) throw InputError("mu must have fewer parts than lambda");
    PatternQuery q;
    q.family = pattern_family_of(f);
    q.bottom = lam.increasing();
    if (inner.size()) q.top = inner.increasing();
    LaurentPoly gf(static_cast<int>(lam.size() - inner.size()));
    Json pats = Json::array();
    std::size_t count = 0;
    for_each_pattern(q, [&](const Pattern& p) {
        gf += pattern_weight(p);
        ++count;
        if (list) pats.push_back({{"pattern", p.str()}, {"weight", pattern_weight(p).str()}});
    });
    Json j = {{"family", family}, {"lambda", lam.str()}, {"mu", inner.str()},
              {"count", count}, {"gf", gf.str()}, {"gf_terms", gf.to_json()}};
    if (list) j["patterns"] = pats;
    return emit_info(j, std::to_string(count) + " patterns, gf " + gf.str());
}

int cmd_tableaux(const std::string& family, const std::string& lambda, const std::string& mu, bool list) {
    auto f = parse_tableau_family(family);
    auto lam = Partition::parse(lambda);
    auto inner = parse_opt_partition(mu);
    LaurentPoly gf(static_cast<int>(lam.size() - inner.size()));
    Json tabs = Json::array();
    std::size_t count = 0;
    for_each_tableau(f, lam, inner, [&](const SkewTableau& t) {
        gf += tableau_weight(t);
        ++count;
        if (list) tabs.push_back({{"tableau", t.str()}, {"weight", tableau_weight(t).str()}});
    });
    Json j = {{"family", family}, {"lambda", lam.str()}, {"mu", inner.str()}, {"count", count}, {"gf", gf.str()}};
    if (list) j["tableaux"] = tabs;
    return emit_info(j, std::to_string(count) + " tableaux, gf " + gf.str());
}

struct GraphArgs {
    std::string builder, model, lambda, mu, p, q, vars, sigma, point;
    int lines = 0, k = 0, j = 0;
    bool gf = false, no_graph = false;
};

int cmd_graph(const GraphArgs& a) {
    GraphSpec s;
    if (!a.model.empty()) {
        if (a.lambda.empty()) throw InputError("--model needs --lambda");
        s = model_spec(parse_matching_model(a.model), Partition::parse(a.lambda), parse_opt_partition(a.mu));
    } else {
        if (a.builder.empty()) throw InputError("give --builder or --model");
        s.family = parse_graph_family(a.builder);
        s.lines = a.lines;
        s.k = a.k;
        s.j = a.j;
        s.p = parse_ints(a.p);
        s.q = parse_ints(a.q);
        if (!a.vars.empty()) {
            if (a.vars == "plain") s.vars = VarScheme::Plain;
            else if (a.vars == "paired") s.vars = VarScheme::Paired;
            else throw InputError("--vars must be plain or paired");
        } else if (s.family != GraphFamily::T && s.family != GraphFamily::ST && s.family != GraphFamily::DT &&
                   s.family != GraphFamily::SDT) {
            s.vars = VarScheme::Paired;
        }
    }
    if (!a.sigma.empty()) s.sigma = parse_ints(a.sigma);
    auto g = build_graph(s);
    Json j;
    j["spec"] = s.to_json();
    if (!a.no_graph) j["graph"] = g.to_json();
    j["vertices"] = g.vertices.size();
    j["edges"] = g.edges.size();
    j["matchings"] = rational_str(matching_count(g));
    std::string summary = graph_family_name(s.family) + ": " + std::to_string(g.vertices.size()) + " vertices, " +
                          rational_str(matching_count(g)) + " matchings";
    if (a.gf) {
        if (!g.symbolic()) throw InputError("--gf needs a graph without square-root weights; use --point");
        auto gf = matching_gf(g);
        j["gf"] = gf.str();
        j["gf_terms"] = gf.to_json();
        summary += ", gf " + gf.str();
    }
    if (!a.point.empty()) {
        auto pt = parse_point(a.point);
        bool roots = !g.symbolic();
        auto v = matching_gf_at(g, pt, roots);
        j["point"] = join(pt);
        j["roots"] = roots;
        j["value"] = rational_str(v);
        summary += ", value " + rational_str(v);
    }
    return emit_info(j, summary);
}

// ---------------------------------------------------------------------------

int op_ciucu(const HoneycombGraph& g, const std::string& axis, std::uint64_t seed) {
    std::optional<HalfInt> ax;
    if (!axis.empty()) ax = HalfInt::parse(axis);
    auto r = ciucu_factorize(g, ax);
    Json j;
    j["op"] = "ciucu";
    j["n_axis"] = r.n_axis;
    j["axis_vertices"] = r.axis_vertices;
    j["cut_right"] = r.cut_right;
    j["gplus"] = r.gplus.to_json();
    j["gminus"] = r.gminus.to_json();
    const Rational two_n = rational_pow(Rational(2), r.n_axis);
    bool ok;
    if (g.symbolic() && r.gplus.symbolic() && r.gminus.symbolic()) {
        auto lhs = matching_gf(g);
        auto rhs = (matching_gf(r.gplus) * matching_gf(r.gminus)).scaled(two_n);
        ok = lhs == rhs;
        j["lhs"] = lhs.str();
        j["rhs"] = rhs.str();
    } else {
        std::mt19937_64 rng(seed);
        ok = true;
        Json pts = Json::array();
        for (int k = 0; k < 5; ++k) {
            auto pt = sample(g.nvars, rng);
            auto lhs = matching_gf_at(g, pt, true);
            auto rhs = two_n * matching_gf_at(r.gplus, pt, true) * matching_gf_at(r.gminus, pt, true);
            ok = ok && lhs == rhs;
            pts.push_back({{"roots", join(pt)}, {"lhs", rational_str(lhs)}, {"rhs", rational_str(rhs)}});
        }
        j["points"] = pts;
        j["seed"] = seed;
    }
    j["equal"] = ok;
    return emit(j, ok, "ciucu: M(G) = 2^" + std::to_string(r.n_axis) + " M(G+) M(G-)");
}

int op_symmetrize(const HoneycombGraph& g, const Json& params) {
    if (!g.spec || g.spec->family != GraphFamily::T) throw InputError("symmetrize needs a T graph built from a spec");
    GraphSpec t = *g.spec;
    if (t.vars != VarScheme::Paired || t.lines % 2) throw InputError("symmetrize needs an even T with paired variables");
    const int j_axis = params.value("j", 0);
    Symmetrizer sym(t, j_axis);
    const int n = t.lines / 2;
    Json out;
    out["op"] = "symmetrize";
    out["j"] = j_axis;
    // 2^n M(T) against the sum over sign selectors of M(ST)
    LaurentPoly lhs = matching_gf(build_graph(sym.t_spec(SignSelector(n, 0)))).scaled(rational_pow(Rational(2), n));
    LaurentPoly rhs(n);
    for (int mask = 0; mask < (1 << n); ++mask) {
        SignSelector s(n);
        for (int i = 0; i < n; ++i) s[i] = (mask >> i) & 1;
        rhs += matching_gf(build_graph(sym.st_spec(s)));
    }
    bool ok = lhs == rhs;
    out["lhs"] = lhs.str();
    out["rhs"] = rhs.str();
    if (params.contains("matching")) {
        SymState st;
        st.matching.edges = params.at("matching").get<std::vector<int>>();
        std::sort(st.matching.edges.begin(), st.matching.edges.end());
        st.sigma = params.value("sigma", SignSelector(n, 0));
        st.bits = params.value("bits", std::vector<int>(n, 0));
        const auto& sg = sym.structure();
        if (!is_perfect_matching(sg, st.matching)) throw InputError("not a perfect matching of the T graph");
        auto img = sym.forward(st);
        auto back = sym.inverse(img);
        out["image"] = {{"matching", img.matching.edges}, {"sigma", img.sigma}, {"bits", img.bits}};
        out["round_trip"] = back == st;
        ok = ok && back == st;
    }
    out["equal"] = ok;
    return emit(out, ok, "symmetrize: 2^n M(T) = sum over sigma of M(ST), j=" + std::to_string(j_axis));
}

int op_double(const HoneycombGraph& g, std::uint64_t seed) {
    if (!g.spec || g.spec->family != GraphFamily::T) throw InputError("double needs a T graph built from a spec");
    auto dt = double_odd_rows(*g.spec);
    std::mt19937_64 rng(seed);
    bool ok = true;
    Json pts = Json::array();
    for (int k = 0; k < 5; ++k) {
        auto pt = sample(g.nvars, rng);
        auto a = matching_gf_at(g, pt, true), b = matching_gf_at(dt, pt, true);
        ok = ok && a == b;
        pts.push_back({{"roots", join(pt)}, {"T", rational_str(a)}, {"DT", rational_str(b)}});
    }
    Json out = {{"op", "double"}, {"graph", dt.to_json()}, {"points", pts}, {"seed", seed}, {"equal", ok}};
    return emit(out, ok, "double: M(T) = M(DT) at 5 points");
}

int op_rewrite(const HoneycombGraph& g, const Json& params, std::uint64_t seed) {
    if (!params.contains("edge")) throw InputError("rewrite needs \"edge\" in the parameters");
    const int e = params.at("edge").get<int>();
    auto p = RewriteParams::from_json(params, g.nvars);
    auto r = local_double_rewrite(g, e, p);
    std::mt19937_64 rng(seed);
    bool ok = true;
    Json pts = Json::array();
    for (int k = 0; k < 5; ++k) {
        auto pt = sample(g.nvars, rng);
        if ((p.a1 * p.z1 + p.b2 * p.y2).eval_roots(pt) == 0) {
            --k;
            continue;
        }
        auto viol = local_contract_violations(r, p, pt, true);
        // equal only when the splits multiply back to the old outer weights
        auto a = matching_gf_at(g, pt, true), b = matching_gf_at(r.graph, pt, true);
        ok = ok && viol.empty() && a == b;
        pts.push_back({{"roots", join(pt)}, {"before", rational_str(a)}, {"after", rational_str(b)}, {"violations", viol}});
    }
    Json out = {{"op", "rewrite"}, {"graph", r.graph.to_json()}, {"gadget", r.gadget},
                {"connectors", r.connectors}, {"points", pts}, {"seed", seed}, {"equal", ok}};
    return emit(out, ok, "rewrite of edge " + std::to_string(e));
}

int cmd_transform(const std::string& op, const std::string& in, const std::string& params_path,
                  const std::string& axis, std::uint64_t seed) {
    auto g = load_graph(read_json(in));
    Json params = params_path.empty() ? Json::object() : read_json(params_path);
    if (op == "ciucu") return op_ciucu(g, axis, seed);
    if (op == "symmetrize") return op_symmetrize(g, params);
    if (op == "double") return op_double(g, seed);
    if (op == "rewrite") return op_rewrite(g, params, seed);
    throw InputError("unknown transform: " + op);
}

int cmd_selftest(const std::string& grid) {
    if (grid != "small" && grid != "full") throw InputError("--grid must be small or full");
    auto t0 = std::chrono::steady_clock::now();
    auto reports = selftest(grid == "full");
    Json arr = Json::array();
    std::size_t failed = 0;
    for (const auto& r : reports) {
        arr.push_back(r.to_json());
        if (!r.equal) {
            ++failed;
            std::cerr << r.summary() << "\n";
        }
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    Json j = {{"grid", grid}, {"reports", arr}, {"total", reports.size()}, {"failed", failed}, {"elapsed_ms", ms}};
    return emit(j, failed == 0,
                "selftest " + grid + ": " + std::to_string(reports.size() - failed) + "/" +
                    std::to_string(reports.size()) + " reports equal");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Character factorization verifier"};
    app.require_subcommand(1);

    std::string family, lambda, mu, point, grid = "small", op, in, params, axis;
    int n = 0, m = 0, part = 1, npoints = 5;
    std::uint64_t seed = 17;
    bool list = false;

    auto* c_char = app.add_subcommand("char", "evaluate a character by its determinant formula");
    c_char->add_option("--family", family, "schur, sp, oe or so_odd")->required();
    c_char->add_option("--lambda", lambda, "partition, e.g. 2,1,0 or 3/2,1/2")->required();
    c_char->add_option("--n", n, "number of variables (default: parts of lambda)");
    c_char->add_option("--point", point, "comma separated rationals; roots s_i for half shapes")->required();

    auto* c_pat = app.add_subcommand("patterns", "enumerate patterns and their generating function");
    c_pat->add_option("--family", family)->required();
    c_pat->add_option("--lambda", lambda)->required();
    c_pat->add_option("--mu", mu);
    c_pat->add_flag("--list", list, "list every pattern");

    auto* c_tab = app.add_subcommand("tableaux", "enumerate tableaux and their generating function");
    c_tab->add_option("--family", family, "ordinary, symplectic, even_orth or odd_orth")->required();
    c_tab->add_option("--lambda", lambda)->required();
    c_tab->add_option("--mu", mu);
    c_tab->add_flag("--list", list, "list every tableau");

    GraphArgs ga;
    auto* c_graph = app.add_subcommand("graph", "build a honeycomb graph");
    c_graph->add_option("--builder", ga.builder, "T, ST, HTminus, HHTminus, HTplus, HHTplus, DT, SDT");
    c_graph->add_option("--model", ga.model, "matching model for --lambda");
    c_graph->add_option("--lambda", ga.lambda);
    c_graph->add_option("--mu", ga.mu);
    c_graph->add_option("--lines", ga.lines);
    c_graph->add_option("--k", ga.k);
    c_graph->add_option("--j", ga.j);
    c_graph->add_option("--p", ga.p, "bottom positions, comma separated");
    c_graph->add_option("--q", ga.q, "top positions, comma separated");
    c_graph->add_option("--vars", ga.vars, "plain or paired");
    c_graph->add_option("--sigma", ga.sigma, "sign selector bits, comma separated");
    c_graph->add_option("--point", ga.point, "evaluate the matching generating function here");
    c_graph->add_flag("--gf", ga.gf, "print the symbolic generating function");
    c_graph->add_flag("--no-graph", ga.no_graph, "omit vertices and edges from the output");

    auto* c_tr = app.add_subcommand("transform", "apply a graph transformation and check it");
    c_tr->add_option("--op", op, "ciucu, symmetrize, double or rewrite")->required();
    c_tr->add_option("--in", in, "graph or builder JSON")->required();
    c_tr->add_option("--params", params, "parameter JSON");
    c_tr->add_option("--axis", axis, "mirror axis for ciucu");
    c_tr->add_option("--seed", seed);

    auto* c_ver = app.add_subcommand("verify", "verify a factorization identity");
    c_ver->require_subcommand(1);
    auto* v_thm1 = c_ver->add_subcommand("thm1", "straight shapes");
    v_thm1->add_option("--part", part)->required()->check(CLI::Range(1, 2));
    v_thm1->add_option("--lambda", lambda)->required();
    v_thm1->add_option("--n", n);
    auto* v_skew = c_ver->add_subcommand("skew", "skew shapes");
    v_skew->add_option("--part", part)->required()->check(CLI::Range(1, 2));
    v_skew->add_option("--lambda", lambda)->required();
    v_skew->add_option("--mu", mu)->required();
    v_skew->add_option("--n", n);
    v_skew->add_option("--m", m);

    auto* c_cc = app.add_subcommand("crosscheck", "patterns against tableaux, determinants and matchings");
    c_cc->add_option("--family", family)->required();
    c_cc->add_option("--lambda", lambda)->required();
    c_cc->add_option("--mu", mu);
    c_cc->add_option("--n", n);
    c_cc->add_option("--points", npoints);
    c_cc->add_option("--seed", seed);

    auto* c_self = app.add_subcommand("selftest", "run the verification grid");
    c_self->add_option("--grid", grid, "small or full");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_char->parsed()) return cmd_char(family, lambda, n, point);
        if (c_pat->parsed()) return cmd_patterns(family, lambda, mu, list);
        if (c_tab->parsed()) return cmd_tableaux(family, lambda, mu, list);
        if (c_graph->parsed()) return cmd_graph(ga);
        if (c_tr->parsed()) return cmd_transform(op, in, params, axis, seed);
        if (v_thm1->parsed()) return emit(verify_thm1(part, Partition::parse(lambda), n));
        if (v_skew->parsed()) return emit(verify_skew(part, Partition::parse(lambda), parse_opt_partition(mu), n, m));
        if (c_cc->parsed())
            return emit(cross_check(parse_char_family(family), Partition::parse(lambda), parse_opt_partition(mu), n,
                                    npoints, seed));
        if (c_self->parsed()) return cmd_selftest(grid);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
