// Matching <-> pattern bijections of the four graph models, and gluing.
#include <algorithm>
#include <map>

#include "ccfact/graphs.hpp"

namespace ccfact {

namespace {

long long floor_div2(long long v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

// x positions of the vertical matching edges hanging below each line
std::map<int, std::vector<long long>> vertical_positions(const HoneycombGraph& g, const Matching& m) {
    std::map<int, std::vector<long long>> out;
    for (int e : m.edges) {
        const Edge& ed = g.edges[e];
        if (ed.kind != EdgeKind::Vertical) continue;
        const Vertex& a = g.vertices[ed.u];
        const Vertex& b = g.vertices[ed.v];
        const Vertex& up = a.y < b.y ? a : b;
        out[up.y / 2].push_back(up.x.doubled());
    }
    for (auto& [line, xs] : out) std::sort(xs.begin(), xs.end());
    return out;
}

int vertical_edge(const HoneycombGraph& g, int line, long long x2) {
    int a = g.find_vertex(x2, 2 * line + 1);
    if (line == 0) a = g.find_vertex(x2, 1);
    int b = g.find_vertex(x2, 2 * line + 2);
    int e = (a >= 0 && b >= 0) ? g.find_edge(a, b) : -1;
    if (e < 0)
        throw InputError("no vertical edge below line " + std::to_string(line) + " at x = " +
                         HalfInt::from_doubled(x2).str());
    return e;
}

// Completes a set of vertical edges to the unique perfect matching that uses
// exactly these verticals; throws if there is none.
Matching complete_matching(const HoneycombGraph& g, const std::vector<int>& verticals) {
    std::vector<char> covered(g.vertices.size(), 0);
    std::vector<int> chosen;
    for (int e : verticals) {
        const Edge& ed = g.edges[e];
        if (covered[ed.u] || covered[ed.v]) throw InputError("vertical edges overlap");
        covered[ed.u] = covered[ed.v] = 1;
        chosen.push_back(e);
    }
    std::map<int, std::vector<int>> lines;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) lines[g.vertices[v].y / 2].push_back(static_cast<int>(v));
    for (auto& [line, vs] : lines) {
        std::sort(vs.begin(), vs.end(),
                  [&](int a, int b) { return g.vertices[a].x.doubled() < g.vertices[b].x.doubled(); });
        int pending = -1;
        for (int v : vs) {
            if (covered[v]) {
                if (pending >= 0) throw InputError("vertical edges leave an unmatched vertex");
                continue;
            }
            if (pending < 0) {
                pending = v;
                continue;
            }
            int e = g.find_edge(pending, v);
            if (e < 0) throw InputError("vertical edges leave an unmatched vertex");
            covered[pending] = covered[v] = 1;
            chosen.push_back(e);
            pending = -1;
        }
        if (pending >= 0) throw InputError("vertical edges leave an unmatched vertex");
    }
    Matching m{chosen};
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

const GraphSpec& require_spec(const HoneycombGraph& g, std::initializer_list<GraphFamily> fams) {
    if (!g.spec) throw InputError("graph carries no builder spec");
    for (auto f : fams)
        if (g.spec->family == f) return *g.spec;
    throw InputError("graph family " + graph_family_name(g.spec->family) + " does not carry this model");
}

int first_edge_even_line(const HoneycombGraph& g, int i) {
    int a = g.find_vertex(0, 4 * i), b = g.find_vertex(1, 4 * i + 1);
    return (a >= 0 && b >= 0) ? g.find_edge(a, b) : -1;
}

}  // namespace

std::string matching_model_name(MatchingModel m) {
    switch (m) {
        case MatchingModel::SchurT: return "schur_T";
        case MatchingModel::SymplecticHTm: return "symplectic_htm";
        case MatchingModel::OrthogonalHTp: return "orthogonal_htp";
        default: return "odd_hhtm";
    }
}

MatchingModel parse_matching_model(const std::string& s) {
    for (auto m : {MatchingModel::SchurT, MatchingModel::SymplecticHTm, MatchingModel::OrthogonalHTp,
                   MatchingModel::OddHHTm})
        if (matching_model_name(m) == s) return m;
    throw InputError("unknown matching model: " + s);
}

GraphSpec model_spec(MatchingModel model, const Partition& lam_in, const Partition& mu) {
    const int n = static_cast<int>(lam_in.size());
    if (n == 0) throw InputError("empty partition");
    Partition lam = lam_in;
    GraphSpec s;
    if (model == MatchingModel::OrthogonalHTp && !lam.is_integer()) lam = lam.shifted(-HalfInt::from_doubled(1));
    if (!lam.is_integer()) throw InputError("this model needs an integer partition");
    const long long l1 = lam[0].to_int();
    switch (model) {
        case MatchingModel::SchurT: {
            const int m = static_cast<int>(mu.size());
            if (m >= n) throw InputError("inner shape must have fewer parts");
            s.family = GraphFamily::T;
            s.lines = n - m;
            s.k = static_cast<int>(l1) + m;
            for (int j = 1; j <= n; ++j) s.p.push_back(static_cast<int>(lam[n - j].to_int()) + j);
            for (int j = 1; j <= m; ++j) s.q.push_back(static_cast<int>(mu[m - j].to_int()) + j);
            s.vars = VarScheme::Plain;
            break;
        }
        case MatchingModel::SymplecticHTm:
        case MatchingModel::OddHHTm:
            s.family = model == MatchingModel::OddHHTm ? GraphFamily::HHTminus : GraphFamily::HTminus;
            s.lines = 2 * n;
            s.k = static_cast<int>(l1);
            for (int j = 1; j <= n; ++j) s.p.push_back(static_cast<int>(lam[n - j].to_int()) + j);
            s.vars = VarScheme::Paired;
            break;
        case MatchingModel::OrthogonalHTp:
            s.family = GraphFamily::HHTplus;
            s.lines = 2 * n;
            s.k = static_cast<int>(l1) - 1;
            for (int j = 1; j <= n; ++j) s.p.push_back(static_cast<int>(lam[n - j].to_int()) + j - 1);
            s.vars = VarScheme::Paired;
            break;
    }
    return s;
}

Pattern matching_to_pattern(MatchingModel model, const HoneycombGraph& g, const ModelMatching& mm) {
    if (!is_perfect_matching(g, mm.matching)) throw InputError("not a perfect matching of the graph");
    auto pos = vertical_positions(g, mm.matching);
    auto at = [&](int line) {
        auto it = pos.find(line);
        return it == pos.end() ? std::vector<long long>{} : it->second;
    };
    switch (model) {
        case MatchingModel::SchurT: {
            const auto& s = require_spec(g, {GraphFamily::T, GraphFamily::ST});
            const int L = s.lines, m = static_cast<int>(s.q.size()), n = L + m;
            std::vector<std::vector<HalfInt>> rows;
            if (m > 0) {
                std::vector<HalfInt> top;
                for (int j = 1; j <= m; ++j) top.push_back(HalfInt(s.q[j - 1] - j));
                rows.push_back(top);
            }
            for (int i = 1; i <= L; ++i) {
                auto xs = at(i);
                std::vector<HalfInt> row;
                for (std::size_t j = 1; j <= xs.size(); ++j) row.push_back(HalfInt((xs[j - 1] + i) / 2 - (long long)j));
                rows.push_back(row);
            }
            return Pattern::from_rows(PatternFamily::GT, n, m, rows);
        }
        case MatchingModel::SymplecticHTm:
        case MatchingModel::OddHHTm: {
            const auto& s = require_spec(g, {GraphFamily::HTminus, GraphFamily::HHTminus});
            const int L = s.lines, n = L / 2;
            std::vector<std::vector<HalfInt>> rows;
            for (int i = 1; i <= L; ++i) {
                auto xs = at(i);
                std::vector<HalfInt> row;
                for (std::size_t j = 1; j <= xs.size(); ++j)
                    row.push_back(HalfInt((xs[j - 1] + 1) / 2 - (long long)j + (i % 2)));
                rows.push_back(row);
            }
            if (model == MatchingModel::SymplecticHTm) return Pattern::from_rows(PatternFamily::Symplectic, n, 0, rows);
            for (int i = 1; i <= n; ++i) {
                int e = first_edge_even_line(g, i);
                bool used = e >= 0 && std::binary_search(mm.matching.edges.begin(), mm.matching.edges.end(), e);
                bool one = i - 1 < static_cast<int>(mm.terms.size()) && mm.terms[i - 1];
                if (one && !used) throw InputError("term bit set for an edge outside the matching");
                if (one) rows[2 * i - 2][0] -= HalfInt::from_doubled(1);
            }
            return Pattern::from_rows(PatternFamily::SplitOrth, n, 0, rows);
        }
        case MatchingModel::OrthogonalHTp: {
            const auto& s = require_spec(g, {GraphFamily::HTplus, GraphFamily::HHTplus});
            const int L = s.lines, n = L / 2;
            std::vector<std::vector<HalfInt>> rows;
            for (int i = 2; i <= L; ++i) {
                auto xs = at(i);
                std::reverse(xs.begin(), xs.end());
                std::vector<HalfInt> row;
                for (std::size_t j = 1; j <= xs.size(); ++j)
                    row.push_back(HalfInt(-floor_div2(xs[j - 1]) - (long long)(j - 1)));
                rows.push_back(row);
            }
            return Pattern::from_rows(PatternFamily::EvenOrth, n, 0, rows);
        }
    }
    throw InputError("unknown model");
}

ModelMatching pattern_to_matching(MatchingModel model, const HoneycombGraph& g, const Pattern& p) {
    if (!validate_pattern(p).empty()) throw InputError("invalid pattern: " + validate_pattern(p).front());
    std::vector<int> verticals;
    ModelMatching out;
    switch (model) {
        case MatchingModel::SchurT: {
            const auto& s = require_spec(g, {GraphFamily::T, GraphFamily::ST});
            if (p.family != PatternFamily::GT) throw InputError("schur_T needs a Gelfand-Tsetlin pattern");
            const int L = s.lines, m = static_cast<int>(s.q.size());
            if (p.m != m || p.n != L + m) throw InputError("pattern shape does not fit the graph");
            for (int j = 1; j <= m; ++j) {
                if (p.row(m)[j - 1] != HalfInt(s.q[j - 1] - j)) throw InputError("top row does not fit the graph");
                verticals.push_back(vertical_edge(g, 0, 2LL * s.q[j - 1]));
            }
            for (int i = 1; i <= L; ++i) {
                const auto& row = p.row(m + i);
                for (std::size_t j = 1; j <= row.size(); ++j)
                    verticals.push_back(vertical_edge(g, i, 2 * (row[j - 1].to_int() + (long long)j) - i));
            }
            break;
        }
        case MatchingModel::SymplecticHTm:
        case MatchingModel::OddHHTm: {
            const auto& s = require_spec(g, {GraphFamily::HTminus, GraphFamily::HHTminus});
            Pattern q = p;
            if (model == MatchingModel::OddHHTm) {
                if (p.family != PatternFamily::SplitOrth) throw InputError("odd_hhtm needs a split orthogonal pattern");
                auto r = split_to_symplectic_roundup(p);
                q = r.pattern;
                for (int i = 1; i <= p.n; ++i) out.terms.push_back(p.row(2 * i - 1)[0].is_integer() ? 0 : 1);
            } else if (p.family != PatternFamily::Symplectic) {
                throw InputError("symplectic_htm needs a symplectic pattern");
            }
            if (q.m != 0 || 2 * q.n != s.lines) throw InputError("pattern shape does not fit the graph");
            for (int i = 1; i <= s.lines; ++i) {
                const auto& row = q.row(i);
                for (std::size_t j = 1; j <= row.size(); ++j) {
                    long long v = row[j - 1].to_int() + (long long)j;
                    verticals.push_back(vertical_edge(g, i, i % 2 == 1 ? 2 * (v - 1) : 2 * v - 1));
                }
            }
            break;
        }
        case MatchingModel::OrthogonalHTp: {
            const auto& s = require_spec(g, {GraphFamily::HTplus, GraphFamily::HHTplus});
            if (p.family != PatternFamily::EvenOrth || p.m != 0 || 2 * p.n != s.lines)
                throw InputError("orthogonal_htp needs a straight even orthogonal pattern of the graph's size");
            for (int i = 2; i <= s.lines; ++i) {
                const auto& row = p.row(i - 1);
                for (std::size_t j = 1; j <= row.size(); ++j) {
                    if (row[j - 1] < HalfInt(0)) throw InputError("orthogonal_htp needs a non-negative pattern");
                    long long v = row[j - 1].to_int() + (long long)j - 1;
                    verticals.push_back(vertical_edge(g, i, i % 2 == 0 ? 1 - 2 * v : -2 * v));
                }
            }
            break;
        }
    }
    out.matching = complete_matching(g, verticals);
    return out;
}

LaurentPoly model_matching_weight(MatchingModel model, const HoneycombGraph& g, const ModelMatching& mm) {
    if (model != MatchingModel::OddHHTm) return matching_weight(g, mm.matching);
    const int n = g.spec ? g.spec->lines / 2 : 0;
    std::map<int, int> special;
    for (int i = 1; i <= n; ++i) {
        int e = first_edge_even_line(g, i);
        if (e >= 0) special[e] = i;
    }
    LaurentPoly w = LaurentPoly::constant(g.nvars, 1);
    const LaurentPoly one = LaurentPoly::constant(g.nvars, 1);
    for (int e : mm.matching.edges) {
        auto it = special.find(e);
        if (it == special.end()) {
            w *= g.edges[e].weight;
            continue;
        }
        const int i = it->second;
        const bool term_one = i - 1 < static_cast<int>(mm.terms.size()) && mm.terms[i - 1];
        w *= term_one ? one : g.edges[e].weight - one;
    }
    return w;
}

HoneycombGraph glue_plus_minus(const GraphSpec& plus, const GraphSpec& minus) {
    if (plus.family != GraphFamily::HTplus && plus.family != GraphFamily::HHTplus)
        throw InputError("first graph must be HTplus");
    if (minus.family != GraphFamily::HTminus && minus.family != GraphFamily::HHTminus)
        throw InputError("second graph must be HTminus");
    if (plus.lines != minus.lines || plus.k != minus.k) throw InputError("glued graphs need equal lines and k");
    HoneycombGraph a = build_graph(plus), b = build_graph(minus);
    HoneycombGraph g;
    g.nvars = std::max(a.nvars, b.nvars);
    auto lift = [&](const LaurentPoly& w) {
        if (w.nvars() == g.nvars) return w;
        return w.map_exponents(g.nvars, [&](const Exponent& e) {
            Exponent r(g.nvars, 0);
            std::copy(e.begin(), e.end(), r.begin());
            return r;
        });
    };
    for (const auto& v : a.vertices) g.add_vertex(v.x.doubled(), v.y);
    const int off = static_cast<int>(a.vertices.size());
    for (const auto& v : b.vertices) g.add_vertex(v.x.doubled() + 2, v.y);
    for (const auto& e : a.edges) {
        int id = g.add_edge(e.u, e.v, lift(e.weight), e.kind);
        g.edges[id].den = lift(e.den);
    }
    for (const auto& e : b.edges) {
        int id = g.add_edge(e.u + off, e.v + off, lift(e.weight), e.kind);
        g.edges[id].den = lift(e.den);
    }
    const LaurentPoly one = LaurentPoly::constant(g.nvars, 1);
    for (int i = 1; i <= plus.lines; ++i) {
        const bool odd = i % 2 == 1;
        int u = g.find_vertex(1, odd ? 2 * i : 2 * i + 1);
        int v = g.find_vertex(2, odd ? 2 * i + 1 : 2 * i);
        if (u < 0 || v < 0) throw InputError("glued lines have no boundary vertex");
        g.add_edge(u, v, one, odd ? EdgeKind::SlantNW : EdgeKind::SlantNE);
    }
    if (plus.p == minus.p) g.axis = HalfInt::from_doubled(1);
    return g;
}

}  // namespace ccfact
