// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "ccfact/graphs.hpp"
#include "ccfact/patterns.hpp"
#include "ccfact/tableaux.hpp"
#include "ccfact/transforms.hpp"
#include "ccfact/verifier.hpp"
#include "test_util.hpp"

using namespace ccfact;

namespace {

// counts checks and keeps the first few failures
struct Tally {
    long checks = 0, failures = 0;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        ++failures;
        if (notes.size() < 5) notes.push_back(what);
    }
    void expect(bool ok, const std::function<std::string()>& what) {
        ++checks;
        if (ok) return;
        ++failures;
        if (notes.size() < 5) notes.push_back(what());
    }
};

std::vector<SignSelector> sigmas(int n) {
    std::vector<SignSelector> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        SignSelector s(n);
        for (int i = 0; i < n; ++i) s[i] = (mask >> i) & 1;
        out.push_back(s);
    }
    return out;
}

void subsets(int len, int hi, std::vector<std::vector<int>>& out, std::vector<int> cur = {}, int from = 1) {
    if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    for (int v = from; v <= hi; ++v) {
        cur.push_back(v);
        subsets(len, hi, out, cur, v + 1);
        cur.pop_back();
    }
}

GraphSpec tspec(int lines, int k, std::vector<int> p, VarScheme vars = VarScheme::Paired) {
    GraphSpec s;
    s.family = GraphFamily::T;
    s.lines = lines;
    s.k = k;
    s.p = std::move(p);
    s.vars = vars;
    return s;
}

long long part0(const Partition& lam, int i) { return lam[i].to_int(); }

// T graph whose paired generating function is the hat Schur function
GraphSpec hat_t(int part, const Partition& lam) {
    const int n = static_cast<int>(lam.size());
    const long long l1 = part0(lam, 0);
    GraphSpec s = tspec(2 * n, static_cast<int>(2 * l1 + (part == 1 ? 1 : 0)), {});
    for (int i = 1; i <= n; ++i) s.p.push_back(static_cast<int>(i - part0(lam, i - 1) + l1));
    for (int i = n; i >= 1; --i)
        s.p.push_back(static_cast<int>(2 * n + (part == 1 ? 2 : 1) - i + part0(lam, i - 1) + l1));
    return s;
}

GraphSpec symmetric_st(const Partition& lam, const SignSelector& sigma) {
    GraphSpec s = hat_t(1, lam);
    s.family = GraphFamily::ST;
    s.j = static_cast<int>(part0(lam, 0) + 1);
    s.sigma = sigma;
    return s;
}

Rational rand_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 9), den(1, 7), sg(0, 1);
    Rational r(num(rng) * (sg(rng) ? 1 : -1), den(rng));
    r.canonicalize();
    return r;
}

LaurentPoly sigma_half_prefactor(const SignSelector& s) {
    const int n = static_cast<int>(s.size());
    Exponent e(n);
    for (int i = 0; i < n; ++i) e[i] = s[i] ? -1 : 1;
    return LaurentPoly::monomial(n, e);
}

Pattern pat(PatternFamily f, int n, int m, const std::string& rows) {
    return Pattern::from_rows(f, n, m, parse_rows(rows));
}

SkewTableau tab(TableauFamily f, const std::string& outer, const std::string& inner,
                const std::vector<std::vector<std::string>>& rows) {
    SkewTableau t;
    t.family = f;
    t.outer = Partition::parse(outer);
    t.inner = inner.empty() ? Partition() : Partition::parse(inner);
    for (const auto& r : rows) {
        std::vector<Cell> row;
        for (const auto& s : r) {
            if (s == "_") row.emplace_back();
            else row.emplace_back(Symbol::parse(s));
        }
        t.cells.push_back(row);
    }
    return t;
}

LaurentPoly sum_monos(const std::vector<std::vector<int>>& ms) {
    LaurentPoly p(static_cast<int>(ms[0].size()));
    for (const auto& m : ms) p += mono(m);
    return p;
}

// ---------------------------------------------------------------------------

void golden_values(Tally& t) {
    auto sp = character_gf(CharFamily::Sp, Partition::parse("1,0"));
    t.expect(sp == sum_monos({{-1, 0}, {1, 0}, {0, -1}, {0, 1}}) && sp.size() == 4, "sp_(1,0)");

    PatternQuery q;
    q.family = PatternFamily::EvenOrth;
    q.bottom = Partition::parse("1,1").increasing();
    auto oe_pats = enumerate_patterns(q);
    int constants = 0;
    for (const auto& p : oe_pats) constants += pattern_weight(p) == mono({0, 0});
    t.expect(oe_pats.size() == 6 && constants == 2, "oe_(1,1) has 6 patterns, 2 constant");
    t.expect(character_gf(CharFamily::Oe, Partition::parse("1,1")) ==
                 sum_monos({{-1, -1}, {0, 0}, {1, 1}, {-1, 1}, {0, 0}, {1, -1}}),
             "oe_(1,1)");

    auto so = character_gf(CharFamily::SoOdd, Partition::parse("1,0"));
    t.expect(so == sum_monos({{-1, 0}, {0, 0}, {1, 0}, {0, -1}, {0, 1}}) && so.size() == 5, "so_odd_(1,0)");

    t.expect(character_gf(CharFamily::Oe, Partition::parse("1,1,1"), Partition::parse("1")) ==
                 sum_monos({{0, 0}, {0, 0}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}),
             "oe_(1,1,1)/(1)");
    auto f1 = sum_monos({{0, 0}, {-1, 0}, {1, 0}}), f2 = sum_monos({{0, 0}, {0, -1}, {0, 1}});
    t.expect(character_gf(CharFamily::SoOdd, Partition::parse("1,1,1"), Partition::parse("1")) ==
                 f1 * f2 + mono({0, 0}),
             "so_odd_(1,1,1)/(1)");

    // the two matching figures
    GraphSpec hm = tspec(6, 2, {2, 3, 5});
    hm.family = GraphFamily::HTminus;
    auto gm = build_graph(hm);
    auto pm = pat(PatternFamily::Symplectic, 3, 0, "0;0;0,0;0,1;0,1,1;1,1,2");
    auto mm = pattern_to_matching(MatchingModel::SymplecticHTm, gm, pm);
    t.expect(is_perfect_matching(gm, mm.matching) && matching_weight(gm, mm.matching) == mono({0, 1, 1}),
             "symplectic figure weight");

    GraphSpec hp = hm;
    hp.family = GraphFamily::HTplus;
    auto gp = build_graph(hp);
    auto pp = pat(PatternFamily::EvenOrth, 3, 0, "1;1;0,2;2,3;2,2,3");
    auto mp = pattern_to_matching(MatchingModel::OrthogonalHTp, gp, pp);
    hp.sigma = {1, 0, 1};
    auto gps = build_graph(hp);
    t.expect(matching_weight(gps, mp.matching) == mono({-1, 1, 1}, Rational(1, 2)) &&
                 matching_weight(gp, mp.matching) == mono({1, 1, -1}, Rational(1, 2)),
             "orthogonal figure weight");

    auto spt = tab(TableauFamily::Symplectic, "5,4,4,2,2", "3,2,1",
                   {{"_", "_", "_", "1bar", "1"}, {"_", "_", "1", "1"}, {"_", "1", "2", "2"}, {"1bar", "2bar"},
                    {"2bar", "2"}});
    t.expect(tableau_weight(spt) == mono({2, 1}), "symplectic tableau weight");

    // displayed pattern/tableau pairs
    auto gt = pat(PatternFamily::GT, 6, 0, "3;2,5;1,4,5;0,4,4,5;0,2,4,5,7;0,2,4,4,6,8");
    auto ssyt = tab(TableauFamily::Ordinary, "8,6,4,4,2,0", "",
                    {{"1", "1", "1", "2", "2", "5", "5", "6"},
                     {"2", "2", "3", "3", "5", "6"},
                     {"3", "4", "4", "4"},
                     {"5", "5", "6", "6"},
                     {"6", "6"},
                     {}});
    t.expect(pattern_to_tableau(gt) == ssyt && tableau_to_pattern(ssyt) == gt, "ordinary image");
    auto spp = pat(PatternFamily::Symplectic, 5, 3, "1,2,3;1,1,2,4;1,2,4,5;1,2,2,4,5;2,2,4,4,5");
    t.expect(pattern_to_tableau(spp) == spt && tableau_to_pattern(spt) == spp, "symplectic image");
    auto oet = tab(TableauFamily::EvenOrth, "4,4,2,1,1", "2,1",
                   {{"_", "_", "1", "2"}, {"_", "1bar", "2bar", "3"}, {"1bar", "3"}, {"3hat"}, {"3check"}});
    auto op = pat(PatternFamily::EvenOrth, 5, 2, "1,2;1,3;-1,2,3;1,2,4;0,1,3,4;1,2,4,4;-1,1,2,4,4");
    t.expect(pattern_to_tableau(op) == oet && tableau_to_pattern(oet) == op, "even orthogonal image");
    auto oot = tab(TableauFamily::OddOrth, "4,3,2,2,2", "2,1",
                   {{"_", "_", "1", "2"}, {"_", "1bar", "2bar"}, {"1", "1"}, {"2hat", "2bar"}, {"3bar", "3"}});
    auto sop = pat(PatternFamily::SplitOrth, 5, 2, "1,2;0,2,2;2,2,3;3/2,2,3,3;2,2,3,4;1,2,2,3,4;2,2,2,3,4");
    t.expect(pattern_to_tableau(sop) == oot && tableau_to_pattern(oot) == sop, "odd orthogonal image");
}

void determinants(Tally& t) {
    std::mt19937_64 rng(2024);
    for (auto f : {CharFamily::Schur, CharFamily::Sp, CharFamily::Oe, CharFamily::SoOdd})
        for (int n = 1; n <= 3; ++n)
            for (const auto& lam0 : partitions(n, 3)) {
                std::vector<Partition> shapes{lam0};
                if (f == CharFamily::Oe) shapes.push_back(lam0.shifted(HalfInt::from_doubled(1)));
                for (const auto& lam : shapes) {
                    auto gf = character_gf(f, lam);
                    const bool roots = uses_roots(f, lam);
                    for (int k = 0; k < 5; ++k) {
                        for (;;) {
                            auto pt = random_point(n, rng);
                            Rational det;
                            try {
                                det = char_eval_det(f, lam, n, pt);
                            } catch (const DegeneratePoint&) {
                                continue;
                            }
                            Rational v = roots ? gf.eval_roots(pt) : gf.eval(pt);
                            t.expect(v == det, [&] { return char_family_name(f) + lam.str(); });
                            break;
                        }
                    }
                }
            }
}

void matching_models(Tally& t) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& lam : partitions(n, 2)) {
            auto name = [&](const char* what) { return std::string(what) + " " + lam.str(); };
            t.expect(matching_gf(build_graph(model_spec(MatchingModel::SchurT, lam))) ==
                         character_gf(CharFamily::Schur, lam),
                     name("schur"));
            t.expect(matching_gf(build_graph(model_spec(MatchingModel::SymplecticHTm, lam))) ==
                         character_gf(CharFamily::Sp, lam),
                     name("sp"));
            t.expect(matching_gf(build_graph(model_spec(MatchingModel::OddHHTm, lam))) ==
                         character_gf(CharFamily::SoOdd, lam),
                     name("so_odd"));
            LaurentPoly nonneg(n);
            PatternQuery q;
            q.family = PatternFamily::EvenOrth;
            q.bottom = lam.increasing();
            q.sign_variants = false;
            for_each_pattern(q, [&](const Pattern& p) { nonneg += pattern_weight(p); });
            t.expect(matching_gf(build_graph(model_spec(MatchingModel::OrthogonalHTp, lam))) == nonneg,
                     name("oe non-negative"));
            GraphSpec s = model_spec(MatchingModel::OrthogonalHTp, lam);
            s.family = GraphFamily::HTplus;
            LaurentPoly total(n);
            for (const auto& sg : sigmas(n)) {
                s.sigma = sg;
                total += matching_gf(build_graph(s));
            }
            t.expect(total == character_gf(CharFamily::Oe, lam), name("oe"));
            Partition half = lam.shifted(HalfInt::from_doubled(1));
            GraphSpec h = model_spec(MatchingModel::OrthogonalHTp, half);
            LaurentPoly htotal(n);
            for (const auto& sg : sigmas(n)) {
                h.sigma = sg;
                htotal += sigma_half_prefactor(sg) * matching_gf(build_graph(h));
            }
            t.expect(htotal == character_gf(CharFamily::Oe, half), name("oe half"));
            for (int m = 1; m < n; ++m)
                for (const auto& mu : partitions(m, 2)) {
                    if (!contained(mu, lam)) continue;
                    t.expect(matching_gf(build_graph(model_spec(MatchingModel::SchurT, lam, mu))) ==
                                 character_gf(CharFamily::Schur, lam, mu),
                             name("skew schur"));
                }
        }
}

void first_identity(Tally& t) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& lam : partitions(n, 2))
            for (int part : {1, 2}) {
                auto r = verify_thm1(part, lam, n);
                t.expect(r.equal, [&] { return r.summary(); });
            }
}

void skew_identity(Tally& t) {
    for (int n = 1; n <= 3; ++n)
        for (int m = 0; m < n; ++m)
            for (const auto& lam : partitions(n, 2))
                for (const auto& mu : partitions(m, 2)) {
                    if (!contained(mu, lam)) continue;
                    for (int part : {1, 2}) {
                        auto r = verify_skew(part, lam, mu, n, m);
                        t.expect(r.equal, [&] { return r.summary(); });
                    }
                }
    // shape pairs whose hats do not nest; both sides must vanish
    int zero_cases = 0;
    bool remark = false;
    for (int n = 2; n <= 3; ++n)
        for (int m = 1; m < n; ++m)
            for (const auto& lam : partitions(n, 3))
                for (const auto& mu : partitions(m, 3))
                    for (int part : {1, 2}) {
                        auto r = verify_skew(part, lam, mu, n, m);
                        if (*r.contained) continue;
                        ++zero_cases;
                        t.expect(r.equal && r.lhs.is_zero() && r.rhs.is_zero(), [&] { return r.summary(); });
                        if (part == 1 && lam == Partition::parse("3,2,2") && mu == Partition::parse("1,1")) remark = true;
                    }
    t.expect(remark, "the (3,2,2)/(1,1) case was not reached");
    t.expect(zero_cases >= 3, "fewer than three non-nesting cases");
    std::cout << "  non-nesting cases with both sides zero: " << zero_cases << "\n";
}

void reflective_factorization(Tally& t) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& lam : partitions(n, 2))
            for (const auto& sg : sigmas(n)) {
                auto g = build_graph(symmetric_st(lam, sg));
                auto r = ciucu_factorize(g);
                t.expect(r.n_axis == n && matching_gf(g) == (matching_gf(r.gplus) * matching_gf(r.gminus))
                                                                 .scaled(Rational(1 << n)),
                         [&] { return "ST for " + lam.str(); });
            }
    std::mt19937_64 rng(23);
    // second identity: the doubled graph with its axis in the middle column
    // carries square-root weights, so compare exact values at points
    for (int n = 1; n <= 3; ++n)
        for (const auto& lam : partitions(n, 2))
            for (const auto& sg : sigmas(n)) {
                GraphSpec s = hat_t(2, lam);
                s.family = GraphFamily::SDT;
                s.j = s.k + 1;
                s.sigma = sg;
                auto g = build_graph(s);
                auto r = ciucu_factorize(g, HalfInt::from_doubled(2 * s.j - 1));
                for (int k = 0; k < 2; ++k) {
                    auto pt = random_point(n, rng);
                    Rational rhs = matching_gf_at(r.gplus, pt, true) * matching_gf_at(r.gminus, pt, true) *
                                   Rational(1 << r.n_axis);
                    rhs.canonicalize();
                    t.expect(r.n_axis == n && matching_gf_at(g, pt, true) == rhs,
                             [&] { return "SDT for " + lam.str(); });
                }
            }
    int done = 0;
    for (int trial = 0; done < 20; ++trial) {
        const int L = 2 * (1 + trial % 2), k = 1 + 2 * (trial % 3);
        std::vector<int> pairs;
        for (int p = 1; 2 * p < k + 1 + L; ++p) pairs.push_back(p);
        std::shuffle(pairs.begin(), pairs.end(), rng);
        if (static_cast<int>(pairs.size()) < L / 2) continue;
        std::vector<int> ps;
        for (int i = 0; i < L / 2; ++i) {
            ps.push_back(pairs[i]);
            ps.push_back(k + 1 + L - pairs[i]);
        }
        std::sort(ps.begin(), ps.end());
        auto g = build_graph(tspec(L, k, ps, VarScheme::Plain));
        g.nvars = 0;
        std::map<std::pair<long long, int>, int> at;
        for (std::size_t v = 0; v < g.vertices.size(); ++v) at[{g.vertices[v].x.doubled(), g.vertices[v].y}] = v;
        std::map<std::pair<int, int>, Rational> chosen;
        for (auto& e : g.edges) {
            int mu = at.at({2 * (k + 1) - g.vertices[e.u].x.doubled(), g.vertices[e.u].y});
            int mv = at.at({2 * (k + 1) - g.vertices[e.v].x.doubled(), g.vertices[e.v].y});
            std::pair<int, int> key = std::min(std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v)),
                                               std::make_pair(std::min(mu, mv), std::max(mu, mv)));
            if (!chosen.count(key)) chosen[key] = rand_rat(rng);
            e.weight = LaurentPoly::constant(0, chosen[key]);
            e.den = LaurentPoly::constant(0, 1);
        }
        auto r = ciucu_factorize(g, HalfInt::from_doubled(k + 1));
        Rational rhs = matching_gf_at(r.gplus, {}) * matching_gf_at(r.gminus, {}) * Rational(1 << r.n_axis);
        rhs.canonicalize();
        t.expect(matching_gf_at(g, {}) == rhs, "random symmetric weights");
        ++done;
    }
}

void symmetrization(Tally& t) {
    long states = 0;
    for (int n = 1; n <= 2; ++n)
        for (int k = 1; k <= 5; ++k) {
            std::vector<std::vector<int>> ps;
            subsets(2 * n, 2 * n + k, ps);
            for (const auto& p : ps) {
                auto ts = tspec(2 * n, k, p);
                LaurentPoly lhs = matching_gf(build_graph(ts)).scaled(Rational(1 << n));
                for (int j = 1; j <= k; ++j) {
                    Symmetrizer sym(ts, j);
                    std::vector<HoneycombGraph> tg, sg;
                    LaurentPoly rhs(n);
                    for (const auto& s : sigmas(n)) {
                        tg.push_back(build_graph(sym.t_spec(s)));
                        sg.push_back(build_graph(sym.st_spec(s)));
                        rhs += matching_gf(sg.back());
                    }
                    t.expect(lhs == rhs, [&] { return "sign-selector average k=" + std::to_string(k) + " j=" + std::to_string(j); });
                    auto idx = [](const SignSelector& s) {
                        int v = 0;
                        for (std::size_t i = 0; i < s.size(); ++i) v |= s[i] << i;
                        return v;
                    };
                    std::set<std::tuple<std::vector<int>, SignSelector, std::vector<int>>> images;
                    long count = 0;
                    for_each_matching(sym.structure(), [&](const Matching& m) {
                        for (const auto& s : sigmas(n))
                            for (const auto& bits : sigmas(n)) {
                                SymState st{m, s, bits};
                                auto img = sym.forward(st);
                                bool ok = is_perfect_matching(sym.structure(), img.matching) &&
                                          matching_weight(tg[idx(s)], m) ==
                                              matching_weight(sg[idx(img.sigma)], img.matching) &&
                                          sym.inverse(img) == st;
                                t.expect(ok, "bijection state");
                                images.insert({img.matching.edges, img.sigma, img.bits});
                                ++count;
                            }
                    });
                    t.expect(static_cast<long>(images.size()) == count, "bijection injective");
                    states += count;
                }
            }
        }
    std::cout << "  bijection states checked: " << states << "\n";
}

void doubling(Tally& t) {
    std::mt19937_64 rng(41);
    std::vector<GraphSpec> ambient = {tspec(2, 1, {1, 2}, VarScheme::Plain), tspec(2, 2, {1, 3}, VarScheme::Plain),
                                      tspec(3, 1, {1, 2, 4}, VarScheme::Plain), tspec(3, 2, {1, 3, 5}, VarScheme::Plain)};
    int sets = 0;
    while (sets < 50) {
        auto g = build_graph(ambient[sets % ambient.size()]);
        std::vector<int> verts;
        for (std::size_t e = 0; e < g.edges.size(); ++e)
            if (g.edges[e].kind == EdgeKind::Vertical && g.vertices[g.edges[e].u].y > 1 &&
                g.vertices[g.edges[e].v].y <= 2 * g.spec->lines)
                verts.push_back(static_cast<int>(e));
        const int e = verts[rng() % verts.size()];
        const Edge& ed = g.edges[e];
        const int T = g.vertices[ed.u].y < g.vertices[ed.v].y ? ed.u : ed.v;
        const int B = g.other(e, T);
        auto outer = [&](int v, bool right) -> std::optional<LaurentPoly> {
            for (std::size_t f = 0; f < g.edges.size(); ++f) {
                if (static_cast<int>(f) == e) continue;
                if (g.edges[f].u != v && g.edges[f].v != v) continue;
                int o = g.other(static_cast<int>(f), v);
                if ((g.vertices[o].x > g.vertices[v].x) == right && g.vertices[o].x != g.vertices[v].x)
                    return g.edges[f].weight;
            }
            return std::nullopt;
        };
        const int nv = g.nvars;
        auto split = [&](std::optional<LaurentPoly> w, LaurentPoly& x1, LaurentPoly& x2) {
            Rational c = rand_rat(rng);
            x1 = LaurentPoly::constant(nv, c);
            x2 = w ? w->scaled(1 / c) : LaurentPoly(nv);
        };
        RewriteParams p;
        split(outer(T, true), p.a1, p.a2);
        split(outer(T, false), p.y1, p.y2);
        split(outer(B, false), p.b1, p.b2);
        split(outer(B, true), p.z1, p.z2);
        p.t = ed.weight;
        const LaurentPoly den = p.a1 * p.z1 + p.b2 * p.y2;
        if (den.is_zero()) continue;
        ++sets;
        auto r = local_double_rewrite(g, e, p);
        for (int k = 0; k < 5;) {
            auto x = random_point(nv, rng);
            if (den.eval(x) == 0) continue;
            ++k;
            t.expect(matching_gf_at(g, x) == matching_gf_at(r.graph, x), "gadget invariance");
            auto bad = local_contract_violations(r, p, x);
            t.expect(bad.empty(), [&] { return bad.empty() ? std::string() : bad.front(); });
        }
    }
    // doubled graphs for the second identity
    for (int n = 1; n <= 2; ++n)
        for (const auto& lam : partitions(n, 2)) {
            auto ts = hat_t(2, lam);
            auto tg = build_graph(ts);
            GraphSpec ds = ts;
            ds.family = GraphFamily::DT;
            auto dg = build_graph(ds);
            auto dd = double_odd_rows(ts);
            for (int k = 0; k < 5; ++k) {
                auto s = random_point(n, rng);
                std::vector<Rational> x;
                for (const auto& v : s) x.push_back(v * v);
                Rational mt = matching_gf_at(tg, x);
                t.expect(mt == matching_gf_at(dg, s, true) && mt == matching_gf_at(dd, s, true),
                         [&] { return "M(T) = M(DT) for " + lam.str(); });
                for (int j = 1; j <= 2 * ts.k + 1; ++j) {
                    Rational sum = 0;
                    for (const auto& sg : sigmas(n)) {
                        GraphSpec ss = ds;
                        ss.family = GraphFamily::SDT;
                        ss.j = j;
                        ss.sigma = sg;
                        sum += matching_gf_at(build_graph(ss), s, true);
                    }
                    Rational lhs = mt * Rational(1 << n);
                    sum.canonicalize();
                    lhs.canonicalize();
                    t.expect(lhs == sum, [&] { return "SDT average for " + lam.str() + " j=" + std::to_string(j); });
                }
            }
        }
}

void involution(Tally& t) {
    long hits = 0;
    for (int n = 2; n <= 3; ++n)
        for (const auto& lam : partitions(n, 2)) {
            PatternQuery q;
            q.family = PatternFamily::EvenOrth;
            q.bottom = lam.increasing();
            auto all = enumerate_patterns(q);
            std::set<Pattern> op(all.begin(), all.end());
            for (const auto& p : all)
                for (int i = 2; i <= n; ++i) {
                    if (p.row(2 * i - 3)[0] != HalfInt(0) && p.row(2 * i - 1)[0] != HalfInt(0)) continue;
                    ++hits;
                    auto r = j_involution(p, i);
                    t.expect(validate_pattern(r).empty() && op.count(r) == 1, "J_i leaves OP");
                    t.expect(j_involution(r, i) == p, "J_i squared");
                    auto wp = pattern_weight(p).terms().begin()->first;
                    auto wr = pattern_weight(r).terms().begin()->first;
                    bool ok = wr[i - 1] == -wp[i - 1];
                    for (int v = 0; v < n; ++v)
                        if (v != i - 1) ok = ok && wr[v] == wp[v];
                    t.expect(ok, [&] { return "J_" + std::to_string(i) + " weight on " + p.str(); });
                }
        }
    std::cout << "  patterns with a zero starter: " << hits << "\n";
}

void bijections(Tally& t) {
    // tableaux
    for (auto cf : {CharFamily::Schur, CharFamily::Sp, CharFamily::Oe, CharFamily::SoOdd})
        for (int n = 1; n <= 3; ++n)
            for (const auto& lam : partitions(n, 2))
                for (int m = 0; m < n; ++m)
                    for (const auto& mu : partitions(m, 2)) {
                        if (!contained(mu, lam)) continue;
                        PatternQuery q;
                        q.family = pattern_family_of(cf);
                        q.bottom = lam.increasing();
                        if (m > 0) q.top = mu.increasing();
                        std::set<std::string> images;
                        std::size_t count = 0;
                        for_each_pattern(q, [&](const Pattern& p) {
                            ++count;
                            auto tb = pattern_to_tableau(p);
                            t.expect(validate_tableau(tb).empty() && tableau_weight(tb) == pattern_weight(p) &&
                                         tableau_to_pattern(tb) == p,
                                     "pattern to tableau");
                            images.insert(tb.str());
                        });
                        std::set<std::string> all;
                        for (const auto& tb : enumerate_tableaux(tableau_family_of(cf), lam, mu)) {
                            all.insert(tb.str());
                            t.expect(pattern_to_tableau(tableau_to_pattern(tb)) == tb, "tableau to pattern");
                        }
                        t.expect(images.size() == count && all == images,
                                 [&] { return "tableau images " + char_family_name(cf) + lam.str() + "/" + mu.str(); });
                    }
    // matching models
    for (auto model : {MatchingModel::SchurT, MatchingModel::SymplecticHTm, MatchingModel::OrthogonalHTp,
                       MatchingModel::OddHHTm})
        for (int n = 1; n <= 3; ++n)
            for (const auto& lam : partitions(n, 2)) {
                auto g = build_graph(model_spec(model, lam));
                std::set<std::string> seen;
                std::size_t count = 0;
                for_each_matching(g, [&](const Matching& m) {
                    const int variants = model == MatchingModel::OddHHTm ? (1 << n) : 1;
                    for (int mask = 0; mask < variants; ++mask) {
                        ModelMatching mm{m, {}};
                        bool skip = false;
                        if (model == MatchingModel::OddHHTm)
                            for (int i = 1; i <= n; ++i) {
                                int bit = (mask >> (i - 1)) & 1;
                                int e = g.find_edge(g.find_vertex(0, 4 * i), g.find_vertex(1, 4 * i + 1));
                                if (bit && !std::binary_search(m.edges.begin(), m.edges.end(), e)) skip = true;
                                mm.terms.push_back(bit);
                            }
                        if (skip) continue;
                        ++count;
                        auto p = matching_to_pattern(model, g, mm);
                        auto back = pattern_to_matching(model, g, p);
                        t.expect(validate_pattern(p).empty() && pattern_weight(p) == model_matching_weight(model, g, mm) &&
                                     back.matching == mm.matching &&
                                     (model != MatchingModel::OddHHTm || back.terms == mm.terms),
                                 [&] { return matching_model_name(model) + " " + lam.str(); });
                        seen.insert(p.str());
                    }
                });
                PatternQuery q;
                q.family = model == MatchingModel::SchurT          ? PatternFamily::GT
                           : model == MatchingModel::SymplecticHTm ? PatternFamily::Symplectic
                           : model == MatchingModel::OddHHTm       ? PatternFamily::SplitOrth
                                                                   : PatternFamily::EvenOrth;
                q.bottom = lam.increasing();
                q.sign_variants = false;
                t.expect(seen.size() == count && enumerate_patterns(q).size() == count,
                         [&] { return "matching images " + matching_model_name(model) + lam.str(); });
            }
    // sign assignment
    for (int n = 1; n <= 3; ++n)
        for (const auto& lam : partitions(n, 2)) {
            GraphSpec s = model_spec(MatchingModel::OrthogonalHTp, lam);
            s.family = GraphFamily::HTplus;
            auto g = build_graph(s);
            auto ms = enumerate_matchings(g);
            std::map<std::string, std::set<std::vector<int>>> fibre;
            for (const auto& sg : sigmas(n)) {
                GraphSpec ts = s;
                ts.sigma = sg;
                auto gs = build_graph(ts);
                for (const auto& m : ms) {
                    auto sp = sign_assignment(g, m, sg);
                    auto back = sign_assignment_inverse(g, sp);
                    const int zeros = static_cast<int>(sp.bits.size());
                    t.expect(validate_pattern(sp.pattern).empty() &&
                                 matching_weight(gs, m).scaled(Rational(1 << zeros)) == pattern_weight(sp.pattern) &&
                                 back.first == m && back.second == sg && fibre[sp.pattern.str()].insert(sp.bits).second,
                             [&] { return "sign assignment " + lam.str(); });
                }
            }
            PatternQuery q;
            q.family = PatternFamily::EvenOrth;
            q.bottom = lam.increasing();
            auto all = enumerate_patterns(q);
            t.expect(all.size() == fibre.size(), "sign assignment is onto");
            for (const auto& P : all) {
                int zeros = 0;
                for (int i = 1; i <= n; ++i) zeros += P.row(2 * i - 1)[0] == HalfInt(0);
                t.expect(fibre[P.str()].size() == (std::size_t(1) << zeros), "sign assignment fibre size");
            }
        }
    // round-up from split orthogonal to symplectic patterns
    for (int n = 1; n <= 3; ++n)
        for (const auto& lam : partitions(n, 2)) {
            PatternQuery q;
            q.bottom = lam.increasing();
            q.family = PatternFamily::SplitOrth;
            std::map<std::string, std::pair<int, LaurentPoly>> fibres;
            for (const auto& p : enumerate_patterns(q)) {
                auto r = split_to_symplectic_roundup(p);
                t.expect(validate_pattern(r.pattern).empty(), "round-up leaves SP");
                auto& f = fibres.try_emplace(r.pattern.str(), 0, LaurentPoly(n)).first->second;
                ++f.first;
                f.second += pattern_weight(p);
            }
            q.family = PatternFamily::Symplectic;
            auto sps = enumerate_patterns(q);
            t.expect(sps.size() == fibres.size(), "round-up is onto");
            for (const auto& P : sps) {
                int nonzero = 0;
                LaurentPoly w = pattern_weight(P);
                for (int i = 1; i <= n; ++i)
                    if (P.row(2 * i - 1)[0] != HalfInt(0)) {
                        ++nonzero;
                        Exponent e(n, 0);
                        e[i - 1] = 2;
                        w *= LaurentPoly::constant(n, 1) + LaurentPoly::monomial(n, e);
                    }
                auto it = fibres.find(P.str());
                t.expect(it != fibres.end() && it->second.first == (1 << nonzero) && it->second.second == w,
                         [&] { return "round-up fibre over " + P.str(); });
            }
        }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        double limit_s;  // 0 = no limit
        void (*run)(Tally&);
    };
    const std::vector<Criterion> all = {
        {1, "golden values", 1, golden_values},
        {2, "pattern generating functions against determinants", 120, determinants},
        {3, "matching models", 300, matching_models},
        {4, "first factorization identity", 300, first_identity},
        {5, "skew factorization identity", 600, skew_identity},
        {6, "reflective factorization", 0, reflective_factorization},
        {7, "symmetrization of T", 0, symmetrization},
        {8, "doubling gadget and doubled graphs", 0, doubling},
        {9, "J_i involution", 0, involution},
        {10, "bijections", 0, bijections},
    };
    int failed = 0;
    for (const auto& c : all) {
        Tally t;
        auto t0 = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.run(t);
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool slow = c.limit_s > 0 && secs > c.limit_s;
        bool ok = error.empty() && t.failures == 0 && t.checks > 0 && !slow;
        failed += !ok;
        std::ostringstream os;
        os << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << t.checks << " checks, "
           << t.failures << " failed, ";
        os.setf(std::ios::fixed);
        os.precision(2);
        os << secs << " s";
        if (slow) os << ", over the " << c.limit_s << " s budget";
        os << ")";
        std::cout << os.str() << "\n";
        if (!error.empty()) std::cout << "  error: " << error << "\n";
        for (const auto& n : t.notes) std::cout << "  failed: " << n << "\n";
        std::cout.flush();
    }
    return failed ? 1 : 0;
}
