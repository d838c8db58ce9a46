#include "ccfact/graphs.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ccfact {

namespace {

const std::vector<std::pair<GraphFamily, std::string>> kFamilyNames = {
    {GraphFamily::T, "T"},           {GraphFamily::ST, "ST"},
    {GraphFamily::HTminus, "HTminus"}, {GraphFamily::HHTminus, "HHTminus"},
    {GraphFamily::HTplus, "HTplus"},   {GraphFamily::HHTplus, "HHTplus"},
    {GraphFamily::DT, "DT"},           {GraphFamily::SDT, "SDT"},
};

const char* kind_name(EdgeKind k) {
    switch (k) {
        case EdgeKind::SlantNE: return "slantNE";
        case EdgeKind::SlantNW: return "slantNW";
        default: return "vertical";
    }
}

EdgeKind parse_kind(const std::string& s) {
    if (s == "slantNE") return EdgeKind::SlantNE;
    if (s == "slantNW") return EdgeKind::SlantNW;
    if (s == "vertical") return EdgeKind::Vertical;
    throw InputError("unknown edge kind: " + s);
}

bool is_even(long long v) { return v % 2 == 0; }

void check_positions(const std::vector<int>& v, int lo, int hi, const char* what) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < lo || v[i] > hi)
            throw InputError(std::string(what) + " position " + std::to_string(v[i]) + " outside " +
                             std::to_string(lo) + ".." + std::to_string(hi));
        if (i > 0 && v[i] <= v[i - 1]) throw InputError(std::string(what) + " positions must increase");
    }
}

// The zig-zag line builder shared by the trapezoidal families. Vertices are
// added left to right; consecutive ones are joined.
struct LineBuilder {
    HoneycombGraph& g;
    std::map<std::pair<long long, int>, int> at;  // (x2, line) -> vertex

    int vertex(int line, long long x2, bool upper) {
        int id = g.add_vertex(x2, upper ? 2 * line : 2 * line + 1);
        at[{x2, line}] = id;
        return id;
    }
    int get(int line, long long x2) const {
        auto it = at.find({x2, line});
        return it == at.end() ? -1 : it->second;
    }
    bool upper(int v) const { return is_even(g.vertices[v].y); }
    // kind of the edge between consecutive vertices a (left) and b
    EdgeKind slant(int a, int b) const {
        (void)b;
        return upper(a) ? EdgeKind::SlantNW : EdgeKind::SlantNE;
    }
};

LaurentPoly one(int nv) { return LaurentPoly::constant(nv, 1); }

void apply_sigma(HoneycombGraph& g, const SignSelector& sigma) {
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (!sigma[i]) continue;
        if (static_cast<int>(i) >= g.nvars) throw InputError("sign selector longer than the variable list");
        for (auto& e : g.edges) {
            e.weight = e.weight.invert_var(static_cast<int>(i));
            e.den = e.den.invert_var(static_cast<int>(i));
        }
    }
}

// T and ST. Line i has valleys L_j at x = 2j - i (j = 1..k+i) and peaks U_j
// at x = 2j + 1 - i (j = 1..k+i-1).
HoneycombGraph build_t(const GraphSpec& s) {
    const int n = s.lines, k = s.k, nv = s.nvars();
    if (n < 1 || k < 0) throw InputError("T needs lines >= 1 and k >= 0");
    check_positions(s.p, 1, n + k, "bottom");
    check_positions(s.q, 1, k, "top");
    const bool st = s.family == GraphFamily::ST;
    if (st && (s.j < 1 || s.j > k)) throw InputError("axis column j must lie in 1..k");
    const long long axis = 2LL * s.j;
    HoneycombGraph g;
    g.nvars = nv;
    LineBuilder b{g, {}};
    for (int i = 1; i <= n; ++i) {
        int prev = -1;
        for (long long x = 2 - i; x <= 2LL * k + i; ++x) {
            const bool lower = is_even(x - i);
            int v = b.vertex(i, x, !lower);
            if (prev >= 0) {
                EdgeKind kind = b.slant(prev, v);
                LaurentPoly w = one(nv);
                if (st && x - 1 >= axis) {
                    if (kind == EdgeKind::SlantNW) w = row_variable(s, i);
                } else if (kind == EdgeKind::SlantNE) {
                    w = row_variable(s, i);
                }
                g.add_edge(prev, v, w, kind);
            }
            prev = v;
        }
    }
    for (int i = 1; i < n; ++i)
        for (int j = 1; j <= k + i; ++j) {
            long long x = 2LL * j - i;
            g.add_edge(b.get(i, x), b.get(i + 1, x), one(nv), EdgeKind::Vertical);
        }
    for (int p : s.p) {
        long long x = 2LL * p - n;
        int v = g.add_vertex(x, 2 * n + 2);
        g.add_edge(b.get(n, x), v, one(nv), EdgeKind::Vertical);
    }
    for (int q : s.q) {
        long long x = 2LL * q;
        int v = g.add_vertex(x, 1);
        g.add_edge(v, b.get(1, x), one(nv), EdgeKind::Vertical);
    }
    if (st) g.axis = HalfInt::from_doubled(axis);
    return g;
}

// HTminus/HHTminus: odd line 2t+1 spans x = 0..2(k+t) with valleys at even x;
// even line 2t spans x = 0..2(k+t)-1 with peaks at even x. Pendants at the
// valleys x = 2p-1 of the last line.
HoneycombGraph build_htminus(const GraphSpec& s) {
    const int L = s.lines, k = s.k, nv = s.nvars();
    if (L < 2 || L % 2 != 0 || k < 0) throw InputError("HTminus needs an even number of lines and k >= 0");
    const int n = L / 2;
    check_positions(s.p, 1, n + k, "bottom");
    const bool hat = s.family == GraphFamily::HHTminus;
    HoneycombGraph g;
    g.nvars = nv;
    LineBuilder b{g, {}};
    for (int i = 1; i <= L; ++i) {
        const int t = i / 2;
        const long long hi = (i % 2 == 1) ? 2LL * (k + t) : 2LL * (k + t) - 1;
        int prev = -1;
        for (long long x = 0; x <= hi; ++x) {
            const bool lower = (i % 2 == 1) ? is_even(x) : !is_even(x);
            int v = b.vertex(i, x, !lower);
            if (prev >= 0) {
                EdgeKind kind = b.slant(prev, v);
                LaurentPoly w = one(nv);
                if (kind == EdgeKind::SlantNW) w = row_variable(s, i);
                if (hat && i % 2 == 0 && x == 1) w = row_variable(s, i) + one(nv);
                g.add_edge(prev, v, w, kind);
            }
            prev = v;
        }
    }
    for (int i = 1; i < L; ++i)
        for (const auto& [key, v] : b.at) {
            if (key.second != i || b.upper(v)) continue;
            int u = b.get(i + 1, key.first);
            if (u >= 0) g.add_edge(v, u, one(nv), EdgeKind::Vertical);
        }
    for (int p : s.p) {
        long long x = 2LL * p - 1;
        int v = g.add_vertex(x, 2 * L + 2);
        g.add_edge(b.get(L, x), v, one(nv), EdgeKind::Vertical);
    }
    return g;
}

// HTplus/HHTplus, right-justified at x = 1: odd line 2t+1 spans
// x = -2(k+t)..1 with valleys at even x, even line 2t spans x = 1-2(k+t)..1
// with valleys at odd x. Pendant position p sits at x = 1 - 2p.
HoneycombGraph build_htplus(const GraphSpec& s) {
    const int L = s.lines, k = s.k, nv = s.nvars();
    if (L < 2 || L % 2 != 0 || k < -1) throw InputError("HTplus needs an even number of lines and k >= -1");
    const int n = L / 2;
    check_positions(s.p, 0, n + k, "bottom");
    const bool hat = s.family == GraphFamily::HHTplus;
    const LaurentPoly half = LaurentPoly::constant(nv, Rational(1, 2));
    HoneycombGraph g;
    g.nvars = nv;
    LineBuilder b{g, {}};
    for (int i = 1; i <= L; ++i) {
        const int t = i / 2;
        const long long lo = (i % 2 == 1) ? -2LL * (k + t) : 1 - 2LL * (k + t);
        int prev = -1;
        for (long long x = lo; x <= 1; ++x) {
            const bool lower = (i % 2 == 1) ? is_even(x) : !is_even(x);
            int v = b.vertex(i, x, !lower);
            if (prev >= 0) {
                EdgeKind kind = b.slant(prev, v);
                g.add_edge(prev, v, kind == EdgeKind::SlantNE ? row_variable(s, i) : one(nv), kind);
            }
            prev = v;
        }
    }
    for (int i = 1; i < L; ++i)
        for (const auto& [key, v] : b.at) {
            if (key.second != i || b.upper(v)) continue;
            int u = b.get(i + 1, key.first);
            if (u >= 0) g.add_edge(v, u, (key.first == 1 && !hat) ? half : one(nv), EdgeKind::Vertical);
        }
    for (int p : s.p) {
        long long x = 1 - 2LL * p;
        int v = g.add_vertex(x, 2 * L + 2);
        g.add_edge(b.get(L, x), v, (x == 1 && !hat) ? half : one(nv), EdgeKind::Vertical);
    }
    return g;
}

// DT/SDT: T with every odd-row vertical replaced by the doubling gadget (see
// transforms.hpp for the gadget). The lines of a gadget row become doubled
// zig-zags: "/" edges carry the square root of the row variable, "\" edges 1,
// and both verticals of a gadget carry 1/(x_{2i-1}^{1/2} + x_{2i}^{1/2}).
HoneycombGraph build_dt(const GraphSpec& s) {
    const int n = s.lines, k = s.k, nv = s.nvars();
    if (n < 1 || k < 0) throw InputError("DT needs lines >= 1 and k >= 0");
    check_positions(s.p, 1, n + k, "bottom");
    const bool sdt = s.family == GraphFamily::SDT;
    if (sdt && n % 2 != 0) throw InputError("SDT needs an even number of lines");
    // j-th peak of line 1 sits at x = 2j - 1
    if (sdt && (s.j < 1 || s.j > 2 * k + 1)) throw InputError("axis column j outside the top row");
    const long long axis = 2LL * s.j - 1;

    HoneycombGraph g;
    g.nvars = nv;
    LineBuilder b{g, {}};
    // original valleys of each line, left to right, and gadget verticals
    std::vector<std::vector<int>> valleys(n + 2);
    std::vector<std::vector<std::pair<int, int>>> gadget_top(n + 2), gadget_bottom(n + 2);
    std::vector<std::vector<int>> peaks(n + 2);  // original peaks (undoubled sides)
    auto doubled = [&](int i) { return (i % 2 == 1) ? i < n : true; };

    for (int i = 1; i <= n; ++i) {
        const int K = k + i;  // valleys of line i in T
        std::vector<int> seq;
        if (doubled(i) && i % 2 == 1) {
            // valley L_j -> (T, N, T2), peak U_j kept
            const long long off = -4LL * ((i - 1) / 2);
            for (int j = 1; j <= K; ++j) {
                long long x = off + 4LL * (j - 1);
                int t1 = b.vertex(i, x, false), nn = b.vertex(i, x + 1, true), t2 = b.vertex(i, x + 2, false);
                seq.insert(seq.end(), {t1, nn, t2});
                gadget_top[i].push_back({t1, t2});
                if (j < K) {
                    int u = b.vertex(i, x + 3, true);
                    seq.push_back(u);
                    peaks[i].push_back(u);
                }
            }
        } else if (doubled(i)) {
            // even line: peak U'_j -> (B1, M, B2), valleys kept
            const long long off = -4LL * ((i - 2) / 2) - 1;
            for (int j = 1; j <= K; ++j) {
                long long x = off + 4LL * (j - 1);
                int l = b.vertex(i, x, false);
                seq.push_back(l);
                valleys[i].push_back(l);
                if (j < K) {
                    int b1 = b.vertex(i, x + 1, true), mm = b.vertex(i, x + 2, false), b2 = b.vertex(i, x + 3, true);
                    seq.insert(seq.end(), {b1, mm, b2});
                    gadget_bottom[i].push_back({b1, b2});
                }
            }
        } else {
            // undoubled last odd line; its peaks sit under the valleys above
            const long long base = (n == 1) ? 0 : -4LL * ((i - 3) / 2) - 1 - 2;
            for (int j = 1; j <= K; ++j) {
                long long x = base + 4LL * (j - 1);
                int l = b.vertex(i, x, false);
                seq.push_back(l);
                valleys[i].push_back(l);
                if (j < K) {
                    int u = b.vertex(i, x + 2, true);
                    seq.push_back(u);
                    peaks[i].push_back(u);
                }
            }
        }
        for (std::size_t a = 0; a + 1 < seq.size(); ++a) {
            int u = seq[a], v = seq[a + 1];
            EdgeKind kind = b.slant(u, v);
            const int half = doubled(i) ? 1 : 2;
            LaurentPoly w = one(nv);
            const bool right = sdt && g.vertices[u].x.doubled() >= axis;
            if (right ? kind == EdgeKind::SlantNW : kind == EdgeKind::SlantNE) w = row_variable(s, i, half);
            g.add_edge(u, v, w, kind);
        }
    }
    for (int i = 1; i < n; ++i) {
        if (i % 2 == 1) {
            LaurentPoly den = row_variable(s, i, 1) + row_variable(s, i + 1, 1);
            for (std::size_t j = 0; j < gadget_top[i].size(); ++j) {
                auto [t1, t2] = gadget_top[i][j];
                auto [b1, b2] = gadget_bottom[i + 1][j];
                for (auto [u, v] : {std::pair{t1, b1}, std::pair{t2, b2}}) {
                    int e = g.add_edge(u, v, one(nv), EdgeKind::Vertical);
                    g.edges[e].den = den;
                }
            }
        } else {
            // valleys of line i above the peaks of line i+1
            for (int v : valleys[i]) {
                int u = b.get(i + 1, g.vertices[v].x.doubled());
                if (u < 0) throw std::logic_error("DT layout mismatch");
                g.add_edge(v, u, one(nv), EdgeKind::Vertical);
            }
        }
    }
    // pendants under the original valleys of the last line
    for (int p : s.p) {
        int v = -1;
        if (doubled(n)) {
            v = valleys[n][p - 1];
        } else if (n == 1) {
            v = valleys[1][p - 1];
        } else {
            v = valleys[n][p - 1];
        }
        int pv = g.add_vertex(g.vertices[v].x.doubled(), 2 * n + 2);
        g.add_edge(v, pv, one(nv), EdgeKind::Vertical);
    }
    if (sdt) g.axis = HalfInt::from_doubled(axis);
    return g;
}

}  // namespace

std::string graph_family_name(GraphFamily f) {
    for (const auto& [k, v] : kFamilyNames)
        if (k == f) return v;
    return "?";
}

GraphFamily parse_graph_family(const std::string& s) {
    for (const auto& [k, v] : kFamilyNames)
        if (v == s) return k;
    throw InputError("unknown graph family: " + s);
}

int GraphSpec::nvars() const {
    if (vars == VarScheme::Plain) return lines;
    if (lines % 2 != 0) throw InputError("paired variables need an even number of lines");
    return lines / 2;
}

Json GraphSpec::to_json() const {
    Json j;
    j["builder"] = graph_family_name(family);
    j["lines"] = lines;
    j["k"] = k;
    if (family == GraphFamily::ST || family == GraphFamily::SDT) j["j"] = this->j;
    j["p"] = p;
    if (!q.empty()) j["q"] = q;
    j["vars"] = vars == VarScheme::Plain ? "plain" : "paired";
    if (!sigma.empty()) j["sigma"] = sigma;
    return j;
}

GraphSpec GraphSpec::from_json(const Json& j) {
    GraphSpec s;
    s.family = parse_graph_family(j.at("builder").get<std::string>());
    s.lines = j.at("lines").get<int>();
    s.k = j.at("k").get<int>();
    s.j = j.value("j", 0);
    s.p = j.value("p", std::vector<int>{});
    s.q = j.value("q", std::vector<int>{});
    const bool half = s.family != GraphFamily::T && s.family != GraphFamily::ST && s.family != GraphFamily::DT &&
                      s.family != GraphFamily::SDT;
    std::string vars = j.value("vars", half ? "paired" : "plain");
    if (vars == "plain") s.vars = VarScheme::Plain;
    else if (vars == "paired") s.vars = VarScheme::Paired;
    else throw InputError("vars must be plain or paired");
    s.sigma = j.value("sigma", SignSelector{});
    return s;
}

int HoneycombGraph::add_vertex(long long x2, int y) {
    vertices.push_back({HalfInt::from_doubled(x2), y, y % 2 == 0});
    return static_cast<int>(vertices.size()) - 1;
}

int HoneycombGraph::add_edge(int u, int v, const LaurentPoly& w, EdgeKind kind) {
    if (u < 0 || v < 0) throw std::logic_error("edge to a missing vertex");
    edges.push_back({u, v, w, LaurentPoly::constant(nvars, 1), kind});
    return static_cast<int>(edges.size()) - 1;
}

int HoneycombGraph::find_vertex(long long x2, int y) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].x.doubled() == x2 && vertices[i].y == y) return static_cast<int>(i);
    return -1;
}

int HoneycombGraph::find_edge(int u, int v) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
        if ((edges[i].u == u && edges[i].v == v) || (edges[i].u == v && edges[i].v == u)) return static_cast<int>(i);
    return -1;
}

std::vector<std::vector<int>> HoneycombGraph::incidence() const {
    std::vector<std::vector<int>> inc(vertices.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        inc[edges[e].u].push_back(static_cast<int>(e));
        inc[edges[e].v].push_back(static_cast<int>(e));
    }
    return inc;
}

bool HoneycombGraph::symbolic() const {
    for (const auto& e : edges) {
        if (e.den.size() != 1 || e.den.terms().begin()->first != Exponent(nvars, 0)) return false;
    }
    return true;
}

Json HoneycombGraph::to_json() const {
    Json j;
    j["nvars"] = nvars;
    Json vs = Json::array();
    for (const auto& v : vertices)
        vs.push_back({{"x", v.x.str()}, {"y", v.y}, {"class", v.positive ? "positive" : "negative"}});
    j["vertices"] = vs;
    Json es = Json::array();
    for (const auto& e : edges) {
        Json je = {{"u", e.u}, {"v", e.v}, {"weight", e.weight.to_json()}, {"kind", kind_name(e.kind)}};
        if (e.den != LaurentPoly::constant(nvars, 1)) je["den"] = e.den.to_json();
        es.push_back(je);
    }
    j["edges"] = es;
    Json meta = Json::object();
    if (spec) meta = spec->to_json();
    if (axis) meta["axis"] = axis->str();
    j["meta"] = meta;
    return j;
}

HoneycombGraph HoneycombGraph::from_json(const Json& j) {
    HoneycombGraph g;
    g.nvars = j.at("nvars").get<int>();
    for (const auto& v : j.at("vertices")) {
        Vertex vx;
        vx.x = HalfInt::parse(v.at("x").get<std::string>());
        vx.y = v.at("y").get<int>();
        vx.positive = v.value("class", "positive") == "positive";
        g.vertices.push_back(vx);
    }
    const int nv = static_cast<int>(g.vertices.size());
    for (const auto& e : j.at("edges")) {
        Edge ed;
        ed.u = e.at("u").get<int>();
        ed.v = e.at("v").get<int>();
        if (ed.u < 0 || ed.v < 0 || ed.u >= nv || ed.v >= nv || ed.u == ed.v)
            throw InputError("edge endpoint out of range");
        ed.weight = LaurentPoly::from_json(e.at("weight"));
        ed.den = e.contains("den") ? LaurentPoly::from_json(e.at("den")) : LaurentPoly::constant(g.nvars, 1);
        if (ed.weight.nvars() != g.nvars || ed.den.nvars() != g.nvars)
            throw InputError("edge weight has the wrong number of variables");
        if (ed.weight.is_zero() || ed.den.is_zero()) throw InputError("edge weights must be nonzero");
        ed.kind = parse_kind(e.value("kind", "vertical"));
        if (g.vertices[ed.u].positive == g.vertices[ed.v].positive)
            throw InputError("edge joins two vertices of the same class");
        g.edges.push_back(ed);
    }
    if (j.contains("meta")) {
        const Json& m = j.at("meta");
        if (m.contains("builder")) g.spec = GraphSpec::from_json(m);
        if (m.contains("axis")) g.axis = HalfInt::parse(m.at("axis").get<std::string>());
    }
    return g;
}

LaurentPoly row_variable(const GraphSpec& s, int line, int doubled) {
    const int nv = s.nvars();
    if (s.vars == VarScheme::Plain) return LaurentPoly::var(nv, line - 1, doubled);
    const int t = (line + 1) / 2;
    return LaurentPoly::var(nv, t - 1, line % 2 == 1 ? doubled : -doubled);
}

HoneycombGraph build_graph(const GraphSpec& s) {
    HoneycombGraph g;
    switch (s.family) {
        case GraphFamily::T:
        case GraphFamily::ST: g = build_t(s); break;
        case GraphFamily::HTminus:
        case GraphFamily::HHTminus: g = build_htminus(s); break;
        case GraphFamily::HTplus:
        case GraphFamily::HHTplus: g = build_htplus(s); break;
        case GraphFamily::DT:
        case GraphFamily::SDT: g = build_dt(s); break;
    }
    apply_sigma(g, s.sigma);
    g.spec = s;
    return g;
}

std::string canonical_form(const HoneycombGraph& g, bool with_weights) {
    if (g.vertices.empty()) return "empty";
    long long mx = g.vertices[0].x.doubled();
    int my = g.vertices[0].y;
    for (const auto& v : g.vertices) {
        mx = std::min(mx, v.x.doubled());
        my = std::min(my, v.y);
    }
    auto pt = [&](int v) {
        return "(" + std::to_string(g.vertices[v].x.doubled() - mx) + "," + std::to_string(g.vertices[v].y - my) + ")";
    };
    std::vector<std::string> vs, es;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) vs.push_back(pt(static_cast<int>(i)));
    for (const auto& e : g.edges) {
        std::string a = pt(e.u), b = pt(e.v);
        if (b < a) std::swap(a, b);
        std::string s = a + "-" + b;
        if (with_weights) {
            s += ":" + e.weight.str();
            if (e.den != LaurentPoly::constant(g.nvars, 1)) s += "/(" + e.den.str() + ")";
        }
        es.push_back(s);
    }
    std::sort(vs.begin(), vs.end());
    std::sort(es.begin(), es.end());
    std::ostringstream os;
    for (const auto& v : vs) os << v << ' ';
    os << '|';
    for (const auto& e : es) os << ' ' << e;
    return os.str();
}

}  // namespace ccfact
