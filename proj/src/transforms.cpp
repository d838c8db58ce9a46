#include "ccfact/transforms.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace ccfact {

namespace {

using VKey = std::pair<long long, int>;  // (doubled x, y)

VKey key_of(const HoneycombGraph& g, int v) { return {g.vertices[v].x.doubled(), g.vertices[v].y}; }

std::map<VKey, int> vertex_index(const HoneycombGraph& g) {
    std::map<VKey, int> out;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) out[key_of(g, static_cast<int>(v))] = static_cast<int>(v);
    return out;
}

std::map<std::pair<int, int>, int> edge_index(const HoneycombGraph& g) {
    std::map<std::pair<int, int>, int> out;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        int u = g.edges[e].u, v = g.edges[e].v;
        out[{std::min(u, v), std::max(u, v)}] = static_cast<int>(e);
    }
    return out;
}

// kind from geometry: "/" when the lower endpoint is on the left
EdgeKind kind_between(const HoneycombGraph& g, int u, int v) {
    const auto& a = g.vertices[u];
    const auto& b = g.vertices[v];
    if (a.x == b.x) return EdgeKind::Vertical;
    const auto& left = a.x < b.x ? a : b;
    const auto& right = a.x < b.x ? b : a;
    return left.y > right.y ? EdgeKind::SlantNE : EdgeKind::SlantNW;
}

// 2-colouring; throws if the graph is not bipartite
std::vector<int> two_colour(const HoneycombGraph& g) {
    const int n = static_cast<int>(g.vertices.size());
    auto inc = g.incidence();
    std::vector<int> col(n, -1);
    for (int s = 0; s < n; ++s) {
        if (col[s] >= 0) continue;
        col[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int e : inc[v]) {
                int u = g.other(e, v);
                if (col[u] < 0) {
                    col[u] = 1 - col[v];
                    q.push_back(u);
                } else if (col[u] == col[v]) {
                    throw InputError("graph is not bipartite");
                }
            }
        }
    }
    return col;
}

// connected components over the edges flagged alive
std::vector<int> components(const HoneycombGraph& g, const std::vector<char>& alive, int& count) {
    const int n = static_cast<int>(g.vertices.size());
    std::vector<std::vector<int>> adj(n);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (!alive[e]) continue;
        adj[g.edges[e].u].push_back(g.edges[e].v);
        adj[g.edges[e].v].push_back(g.edges[e].u);
    }
    std::vector<int> comp(n, -1);
    count = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = count;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int u : adj[v])
                if (comp[u] < 0) {
                    comp[u] = count;
                    q.push_back(u);
                }
        }
        ++count;
    }
    return comp;
}

HoneycombGraph induced(const HoneycombGraph& g, const std::vector<char>& keep_v, const std::vector<LaurentPoly>& weights,
                       const std::vector<char>& keep_e) {
    HoneycombGraph out;
    out.nvars = g.nvars;
    std::vector<int> id(g.vertices.size(), -1);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        if (!keep_v[v]) continue;
        id[v] = static_cast<int>(out.vertices.size());
        out.vertices.push_back(g.vertices[v]);
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (!keep_e[e]) continue;
        const auto& ed = g.edges[e];
        if (id[ed.u] < 0 || id[ed.v] < 0) continue;
        out.edges.push_back({id[ed.u], id[ed.v], weights[e], ed.den, ed.kind});
    }
    return out;
}

bool poly_times_equals(const LaurentPoly& lhs, const LaurentPoly& den, const LaurentPoly& num) {
    return lhs * den == num;
}

}  // namespace

// ---------------------------------------------------------------- Ciucu

bool is_mirror_symmetric(const HoneycombGraph& g, HalfInt axis, bool weights) {
    const auto idx = vertex_index(g);
    const auto eidx = edge_index(g);
    const long long a2 = axis.doubled();
    std::vector<int> mirror(g.vertices.size());
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        auto it = idx.find({2 * a2 - g.vertices[v].x.doubled(), g.vertices[v].y});
        if (it == idx.end()) return false;
        mirror[v] = it->second;
    }
    for (const auto& e : g.edges) {
        int u = mirror[e.u], v = mirror[e.v];
        auto it = eidx.find({std::min(u, v), std::max(u, v)});
        if (it == eidx.end()) return false;
        if (!weights) continue;
        const auto& f = g.edges[it->second];
        // compare as fractions
        if (!(e.weight * f.den == f.weight * e.den)) return false;
    }
    return true;
}

CiucuResult ciucu_factorize(const HoneycombGraph& g, std::optional<HalfInt> axis) {
    if (!axis) axis = g.axis;
    if (!axis) throw InputError("no symmetry axis given");
    if (g.vertices.empty()) throw InputError("empty graph");
    const long long a2 = axis->doubled();
    if (!is_mirror_symmetric(g, *axis, true)) throw InputError("graph is not weight-symmetric about the axis");
    const auto col = two_colour(g);
    {
        int c = 0;
        components(g, std::vector<char>(g.edges.size(), 1), c);
        if (c != 1) throw InputError("graph is not connected");
    }
    CiucuResult res;
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        if (g.vertices[v].x.doubled() == a2) res.axis_vertices.push_back(static_cast<int>(v));
    std::sort(res.axis_vertices.begin(), res.axis_vertices.end(),
              [&](int a, int b) { return g.vertices[a].y < g.vertices[b].y; });
    if (res.axis_vertices.size() % 2 != 0) throw InputError("odd number of vertices on the axis");
    res.n_axis = static_cast<int>(res.axis_vertices.size()) / 2;

    std::vector<char> alive(g.edges.size(), 1);
    std::vector<LaurentPoly> w;
    for (const auto& e : g.edges) w.push_back(e.weight);
    auto inc = g.incidence();
    const int top_colour = res.axis_vertices.empty() ? 0 : col[res.axis_vertices.front()];
    for (std::size_t t = 0; t < res.axis_vertices.size(); ++t) {
        const int v = res.axis_vertices[t];
        const bool is_a = t % 2 == 0;
        const bool positive = col[v] == top_colour;
        const bool right = (is_a && positive) || (!is_a && !positive);
        res.cut_right.push_back(right);
        for (int e : inc[v]) {
            long long ox = g.vertices[g.other(e, v)].x.doubled();
            if ((right && ox > a2) || (!right && ox < a2)) alive[e] = 0;
        }
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (g.vertices[g.edges[e].u].x.doubled() == a2 && g.vertices[g.edges[e].v].x.doubled() == a2)
            w[e] = w[e].scaled(Rational(1, 2));

    int count = 0;
    auto comp = components(g, alive, count);
    std::vector<int> side(count, 0);  // bit 1 left, bit 2 right
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        long long x = g.vertices[v].x.doubled();
        if (x < a2) side[comp[v]] |= 1;
        if (x > a2) side[comp[v]] |= 2;
    }
    for (int s : side) {
        if (s == 3) throw InputError("cutting along the axis does not separate the two halves");
        if (s == 0) throw InputError("a piece of the graph lies entirely on the axis");
    }
    std::vector<char> left(g.vertices.size()), rightv(g.vertices.size());
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        left[v] = side[comp[v]] == 1;
        rightv[v] = side[comp[v]] == 2;
    }
    res.gplus = induced(g, left, w, alive);
    res.gminus = induced(g, rightv, w, alive);
    return res;
}

// ---------------------------------------------------------------- symmetrization

Symmetrizer::Symmetrizer(const GraphSpec& t_spec, int j) : spec_(t_spec), j_(j) {
    if (spec_.family != GraphFamily::T) throw InputError("symmetrization starts from a T graph");
    if (spec_.vars != VarScheme::Paired) throw InputError("symmetrization needs paired variables");
    if (spec_.lines % 2 != 0) throw InputError("symmetrization needs an even number of lines");
    if (j < 1 || j > spec_.k) throw InputError("axis column j must lie in 1..k");
    n_ = spec_.lines / 2;
    GraphSpec plain = spec_;
    plain.sigma.clear();
    g_ = build_graph(plain);
    eidx_ = edge_index(g_);
    const auto vidx = vertex_index(g_);
    auto at = [&](long long x, int y) {
        auto it = vidx.find({x, y});
        return it == vidx.end() ? -1 : it->second;
    };
    for (int i = 1; i <= n_; ++i) {
        const int A = 2 * i - 1, B = 2 * i;
        Row r;
        const int t = spec_.k + A;
        for (int v = 0; v < t; ++v) {
            const long long x = 2LL * (v + 1) - A;
            const int a = at(x, 2 * A + 1), b = at(x, 2 * B);
            r.aval.push_back(a);
            r.bpeak.push_back(b);
            r.vedge.push_back(eidx_.at({std::min(a, b), std::max(a, b)}));
        }
        for (int sp = 0; sp <= t; ++sp) {
            const long long x = sp == 0 ? 1 - A : 2LL * sp - A + 1;
            r.apeak.push_back(sp == 0 || sp == t ? -1 : at(x, 2 * A));
            r.bval.push_back(at(x, 2 * B + 1));
            if (x == 2LL * j_) r.axis = sp;
        }
        if (r.axis < 0) throw std::logic_error("axis not found in row");
        rows_.push_back(std::move(r));
    }
}

GraphSpec Symmetrizer::t_spec(const SignSelector& sigma) const {
    GraphSpec s = spec_;
    s.sigma = sigma;
    return s;
}

GraphSpec Symmetrizer::st_spec(const SignSelector& sigma) const {
    GraphSpec s = spec_;
    s.family = GraphFamily::ST;
    s.j = j_;
    s.sigma = sigma;
    return s;
}

std::vector<int> Symmetrizer::mates(const Matching& m) const {
    if (!is_perfect_matching(g_, m)) throw InputError("state does not hold a perfect matching of the graph");
    std::vector<int> mate(g_.vertices.size(), -1);
    for (int e : m.edges) mate[g_.edges[e].u] = mate[g_.edges[e].v] = e;
    return mate;
}

int Symmetrizer::side_of(const std::vector<int>& mate, int row, int bit) const {
    const Row& r = rows_[row - 1];
    const long long ax = 2LL * j_;
    const int pa = r.apeak[r.axis], pb = r.bval[r.axis];
    if (g_.edges[mate[pa]].kind != EdgeKind::Vertical && g_.edges[mate[pb]].kind != EdgeKind::Vertical) {
        const bool la = g_.vertices[g_.other(mate[pa], pa)].x.doubled() < ax;
        const bool lb = g_.vertices[g_.other(mate[pb], pb)].x.doubled() < ax;
        // both matched within the row to one side: take the other side
        if (la == lb) return la ? 1 : 0;
    }
    return bit ? 1 : 0;
}

std::pair<int, bool> Symmetrizer::side(const Matching& m, int row, int bit) const {
    if (row < 1 || row > n_) throw InputError("row out of range");
    auto mate = mates(m);
    const int a = side_of(mate, row, 0), b = side_of(mate, row, 1);
    return {bit ? b : a, a == b};
}

int Symmetrizer::split_rows(const Matching& m) const {
    auto mate = mates(m);
    const long long ax = 2LL * j_;
    int count = 0;
    for (const Row& r : rows_) {
        auto where = [&](int v) {
            long long x = g_.vertices[g_.other(mate[v], v)].x.doubled();
            return x < ax ? -1 : (x > ax ? 1 : 0);
        };
        if (where(r.apeak[r.axis]) * where(r.bval[r.axis]) == -1) ++count;
    }
    return count;
}

SymState Symmetrizer::apply(const SymState& s) const {
    if (static_cast<int>(s.bits.size()) != n_) throw InputError("state needs one bit per odd row");
    SignSelector sigma = s.sigma;
    sigma.resize(n_, 0);
    for (int v : sigma)
        if (v != 0 && v != 1) throw InputError("sign selector entries must be 0 or 1");
    auto mate = mates(s.matching);
    auto edge = [&](int u, int v) { return eidx_.at({std::min(u, v), std::max(u, v)}); };

    std::set<int> matched(s.matching.edges.begin(), s.matching.edges.end());
    SymState out;
    out.bits = s.bits;
    out.sigma = sigma;
    for (int i = 1; i <= n_; ++i) {
        const Row& r = rows_[i - 1];
        const int sd = side_of(mate, i, s.bits[i - 1]);
        if (sd == 0) out.sigma[i - 1] ^= 1;
        const int t = static_cast<int>(r.aval.size());
        auto ext = [&](int v) { return v >= 0 && g_.edges[mate[v]].kind == EdgeKind::Vertical; };
        std::vector<int> div;
        for (int sp = 0; sp <= t; ++sp)
            if (sp == 0 || sp == t || sp == r.axis || ext(r.apeak[sp]) || ext(r.bval[sp])) div.push_back(sp);
        for (std::size_t d = 0; d + 1 < div.size(); ++d) {
            const int s0 = div[d], s1 = div[d + 1];
            const bool on_side = sd == 0 ? s1 <= r.axis : s0 >= r.axis;
            if (!on_side) continue;
            int used = -1, nused = 0;
            for (int v = s0; v < s1; ++v)
                if (mate[r.aval[v]] == r.vedge[v]) {
                    used = v - s0;
                    ++nused;
                }
            if (nused != 1) continue;
            const int len = s1 - s0, flip = len - 1 - used;
            if (flip == used) continue;
            auto drop = [&](int v) {
                if (v >= 0 && mate[v] >= 0) matched.erase(mate[v]);
            };
            for (int v = s0; v < s1; ++v) {
                drop(r.aval[v]);
                drop(r.bpeak[v]);
            }
            for (int sp = s0 + 1; sp < s1; ++sp) {
                drop(r.apeak[sp]);
                drop(r.bval[sp]);
            }
            const int vert = s0 + flip;
            for (int v = s0; v < s1; ++v) {
                if (v == vert) {
                    matched.insert(r.vedge[v]);
                } else if (v < vert) {
                    matched.insert(edge(r.aval[v], r.apeak[v + 1]));
                    matched.insert(edge(r.bpeak[v], r.bval[v + 1]));
                } else {
                    matched.insert(edge(r.aval[v], r.apeak[v]));
                    matched.insert(edge(r.bpeak[v], r.bval[v]));
                }
            }
        }
    }
    out.matching.edges.assign(matched.begin(), matched.end());
    return out;
}

SymState Symmetrizer::forward(const SymState& s) const { return apply(s); }
SymState Symmetrizer::inverse(const SymState& s) const { return apply(s); }

SymState symmetrize_bijection(const GraphSpec& t_spec, int j, const SymState& s) {
    return Symmetrizer(t_spec, j).forward(s);
}

SymState symmetrize_inverse(const GraphSpec& t_spec, int j, const SymState& s) {
    return Symmetrizer(t_spec, j).inverse(s);
}

// ---------------------------------------------------------------- signs

namespace {

HalfInt& starter(Pattern& p, int row) { return p.row(row)[0]; }

void sort_row(Pattern& p, int row) { std::sort(p.row(row).begin(), p.row(row).end()); }

}  // namespace

SignedPattern sign_assignment(const HoneycombGraph& g, const Matching& m, const SignSelector& sigma) {
    if (!is_perfect_matching(g, m)) throw InputError("not a perfect matching of the graph");
    Pattern p = matching_to_pattern(MatchingModel::OrthogonalHTp, g, {m, {}});
    const int n = p.n;
    if (static_cast<int>(sigma.size()) != n) throw InputError("sign selector must have one entry per variable");
    SignedPattern out;
    for (int i = 1; i <= n; ++i) {
        const int eps = sigma[i - 1];
        HalfInt& s = starter(p, 2 * i - 1);
        const HalfInt zero(0);
        if (i == 1) {
            if (s > zero) {
                if (eps) s = -s;
            } else {
                out.bits.push_back(eps);
            }
            sort_row(p, 1);
            continue;
        }
        const bool prev_neg = starter(p, 2 * i - 3) < zero;
        if (s > zero) {
            const bool neg = eps ? !prev_neg : prev_neg;
            if (neg) s = -s;
            sort_row(p, 2 * i - 1);
        } else {
            const bool apply = (eps == 1 && !prev_neg) || (eps == 0 && prev_neg);
            if (apply) p = j_involution(p, i);
            out.bits.push_back(apply ? 1 : 0);
        }
    }
    out.pattern = p;
    return out;
}

std::pair<Matching, SignSelector> sign_assignment_inverse(const HoneycombGraph& g, const SignedPattern& sp) {
    Pattern p = sp.pattern;
    if (p.family != PatternFamily::EvenOrth || p.m != 0) throw InputError("expected a straight orthogonal pattern");
    if (!validate_pattern(p).empty()) throw InputError("invalid orthogonal pattern");
    const int n = p.n;
    const HalfInt zero(0);
    int zeros = 0;
    for (int i = 1; i <= n; ++i)
        if (starter(p, 2 * i - 1) == zero) ++zeros;
    if (static_cast<int>(sp.bits.size()) != zeros) throw InputError("need one bit per zero odd starter");
    SignSelector sigma(n, 0);
    int b = zeros;
    for (int i = n; i >= 1; --i) {
        HalfInt& s = starter(p, 2 * i - 1);
        const bool prev_neg = i > 1 && starter(p, 2 * i - 3) < zero;
        if (s == zero) {
            const int bit = sp.bits[--b];
            if (bit != 0 && bit != 1) throw InputError("bits must be 0 or 1");
            if (i == 1) {
                sigma[0] = bit;
            } else {
                sigma[i - 1] = bit ^ (prev_neg ? 1 : 0);
                if (bit) p = j_involution(p, i);
            }
        } else {
            const bool neg = s < zero;
            sigma[i - 1] = (neg != prev_neg) ? 1 : 0;
            if (neg) s = -s;
            sort_row(p, 2 * i - 1);
        }
    }
    auto mm = pattern_to_matching(MatchingModel::OrthogonalHTp, g, p);
    return {mm.matching, sigma};
}

// ---------------------------------------------------------------- gadget

RewriteParams RewriteParams::from_rationals(int nvars, const std::array<Rational, 9>& v) {
    auto c = [&](int i) { return v[i] == 0 ? LaurentPoly(nvars) : LaurentPoly::constant(nvars, v[i]); };
    return {c(0), c(1), c(2), c(3), c(4), c(5), c(6), c(7), c(8)};
}

namespace {
const char* kParamNames[9] = {"a1", "a2", "b1", "b2", "y1", "y2", "z1", "z2", "t"};

std::array<const LaurentPoly*, 9> fields(const RewriteParams& p) {
    return {&p.a1, &p.a2, &p.b1, &p.b2, &p.y1, &p.y2, &p.z1, &p.z2, &p.t};
}
}  // namespace

Json RewriteParams::to_json() const {
    Json j = Json::object();
    auto f = fields(*this);
    for (int i = 0; i < 9; ++i) j[kParamNames[i]] = f[i]->to_json();
    return j;
}

RewriteParams RewriteParams::from_json(const Json& j, int nvars) {
    RewriteParams p;
    std::array<LaurentPoly*, 9> f = {&p.a1, &p.a2, &p.b1, &p.b2, &p.y1, &p.y2, &p.z1, &p.z2, &p.t};
    for (int i = 0; i < 9; ++i) {
        if (!j.contains(kParamNames[i])) throw InputError(std::string("missing rewrite parameter ") + kParamNames[i]);
        const auto& v = j.at(kParamNames[i]);
        if (v.is_number_integer()) {
            *f[i] = v.get<long long>() == 0 ? LaurentPoly(nvars) : LaurentPoly::constant(nvars, Rational(v.get<long>()));
        } else if (v.is_string()) {
            Rational r(v.get<std::string>());
            r.canonicalize();
            *f[i] = r == 0 ? LaurentPoly(nvars) : LaurentPoly::constant(nvars, r);
        } else {
            *f[i] = LaurentPoly::from_json(v);
        }
        if (f[i]->nvars() != nvars && !f[i]->is_zero()) throw InputError("rewrite parameter has the wrong variable count");
        if (f[i]->is_zero()) *f[i] = LaurentPoly(nvars);
    }
    return p;
}

RewriteResult local_double_rewrite(const HoneycombGraph& g, int edge, const RewriteParams& p) {
    if (edge < 0 || edge >= static_cast<int>(g.edges.size())) throw InputError("edge id out of range");
    const Edge& e = g.edges[edge];
    if (e.kind != EdgeKind::Vertical) throw InputError("the doubling rule applies to vertical edges only");
    for (const LaurentPoly* f : fields(p))
        if (!f->is_zero() && f->nvars() != g.nvars) throw InputError("rewrite parameter has the wrong variable count");
    const int T = g.vertices[e.u].y < g.vertices[e.v].y ? e.u : e.v;
    const int B = g.other(edge, T);
    const long long x0 = g.vertices[T].x.doubled();
    const auto inc = g.incidence();
    int ea = -1, ey = -1, eb = -1, ez = -1;
    for (int f : inc[T]) {
        if (f == edge) continue;
        long long x = g.vertices[g.other(f, T)].x.doubled();
        if (x > x0 && ea < 0) ea = f;
        else if (x < x0 && ey < 0) ey = f;
        else throw InputError("top endpoint must have at most one outer edge on each side");
    }
    for (int f : inc[B]) {
        if (f == edge) continue;
        long long x = g.vertices[g.other(f, B)].x.doubled();
        if (x < x0 && eb < 0) eb = f;
        else if (x > x0 && ez < 0) ez = f;
        else throw InputError("bottom endpoint must have at most one outer edge on each side");
    }
    const int nv = g.nvars;
    const LaurentPoly zero(nv), one = LaurentPoly::constant(nv, 1);
    auto check = [&](int f, const LaurentPoly& x1, const LaurentPoly& x2, const char* what) {
        if (f < 0) {
            if (!(x1 * x2).is_zero()) throw InputError(std::string("split of the absent weight ") + what + " must vanish");
            return;
        }
        if (!poly_times_equals(x1 * x2, g.edges[f].den, g.edges[f].weight))
            throw InputError(std::string("split weights do not multiply to ") + what);
    };
    check(ea, p.a1, p.a2, "a");
    check(ey, p.y1, p.y2, "y");
    check(eb, p.b1, p.b2, "b");
    check(ez, p.z1, p.z2, "z");
    if (!poly_times_equals(p.t, e.den, e.weight)) throw InputError("t must equal the weight of the vertical edge");
    const LaurentPoly den = p.a1 * p.z1 + p.b2 * p.y2;
    if (den.is_zero()) throw InputError("a1*z1 + b2*y2 vanishes");

    RewriteResult r;
    HoneycombGraph& h = r.graph;
    h.nvars = nv;
    h.vertices = g.vertices;
    for (auto& v : h.vertices)
        if (v.x.doubled() > x0) v.x = HalfInt::from_doubled(v.x.doubled() + 2);
    const Vertex& tv = g.vertices[T];
    const Vertex& bv = g.vertices[B];
    auto add = [&](long long x2, int y, bool positive) {
        h.vertices.push_back({HalfInt::from_doubled(x2), y, positive});
        return static_cast<int>(h.vertices.size()) - 1;
    };
    const int yN = tv.y % 2 != 0 ? tv.y - 1 : tv.y + 1;
    const int yM = bv.y % 2 == 0 ? bv.y + 1 : bv.y - 1;
    const int N = add(x0 + 1, yN, !tv.positive);
    const int T2 = add(x0 + 2, tv.y, tv.positive);
    const int M = add(x0 + 1, yM, !bv.positive);
    const int B2 = add(x0 + 2, bv.y, bv.positive);
    const int ra = ea >= 0 ? g.other(ea, T) : -1, ry = ey >= 0 ? g.other(ey, T) : -1;
    const int rb = eb >= 0 ? g.other(eb, B) : -1, rz = ez >= 0 ? g.other(ez, B) : -1;
    r.gadget = {T, N, T2, B, M, B2};
    r.connectors = {ra, ry, rb, rz};

    for (std::size_t f = 0; f < g.edges.size(); ++f) {
        const int fi = static_cast<int>(f);
        if (fi == edge || fi == ea || fi == ey || fi == eb || fi == ez) continue;
        h.edges.push_back(g.edges[f]);
    }
    auto link = [&](int u, int v, const LaurentPoly& w, const LaurentPoly& d) {
        if (u < 0 || v < 0 || w.is_zero()) return;
        h.edges.push_back({u, v, w, d, kind_between(h, u, v)});
    };
    link(T, ry, p.y1, one);
    link(T, N, p.a1, one);
    link(N, T2, p.y2, one);
    link(T2, ra, p.a2, one);
    link(T, B, p.t, den);
    link(T2, B2, p.t, den);
    link(B, rb, p.b1, one);
    link(B, M, p.z1, one);
    link(M, B2, p.b2, one);
    link(B2, rz, p.z2, one);
    return r;
}

std::vector<std::string> local_contract_violations(const RewriteResult& r, const RewriteParams& p,
                                                   const std::vector<Rational>& point, bool roots) {
    const HoneycombGraph& g = r.graph;
    auto ev = [&](const LaurentPoly& f) { return f.is_zero() ? Rational(0) : (roots ? f.eval_roots(point) : f.eval(point)); };
    const Rational a = ev(p.a1) * ev(p.a2), b = ev(p.b1) * ev(p.b2), y = ev(p.y1) * ev(p.y2), z = ev(p.z1) * ev(p.z2);
    const Rational t = ev(p.t);
    const char* names[4] = {"a", "y", "b", "z"};
    std::vector<std::string> out;
    std::set<int> gad(r.gadget.begin(), r.gadget.end());
    for (int mask = 0; mask < 16; ++mask) {
        bool skip = false;
        std::set<int> conn;
        std::string label = "{";
        for (int c = 0; c < 4; ++c)
            if (mask & (1 << c)) {
                if (r.connectors[c] < 0) skip = true;
                conn.insert(r.connectors[c]);
                label += names[c];
            }
        label += "}";
        if (skip) continue;
        std::vector<char> keep_v(g.vertices.size(), 0), keep_e(g.edges.size(), 0);
        for (int v : gad) keep_v[v] = 1;
        for (int v : conn) keep_v[v] = 1;
        std::vector<LaurentPoly> w;
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            w.push_back(g.edges[e].weight);
            const int u = g.edges[e].u, v = g.edges[e].v;
            keep_e[e] = (gad.count(u) && (gad.count(v) || conn.count(v))) || (gad.count(v) && conn.count(u));
        }
        HoneycombGraph sub = induced(g, keep_v, w, keep_e);
        Rational got = matching_gf_at(sub, point, roots);
        Rational want = 0;
        if (mask == 0) want = t;
        else if (mask == (1 | 4)) want = a * b;
        else if (mask == (1 | 8)) want = a * z;
        else if (mask == (2 | 4)) want = y * b;
        else if (mask == (2 | 8)) want = y * z;
        want.canonicalize();
        got.canonicalize();
        if (got != want)
            out.push_back("class " + label + ": gadget gives " + got.get_str() + ", expected " + want.get_str());
    }
    return out;
}

HoneycombGraph double_odd_rows(const GraphSpec& t_spec) {
    if (t_spec.family != GraphFamily::T) throw InputError("doubling starts from a T graph");
    if (!t_spec.q.empty()) throw InputError("doubling is defined for straight shapes only");
    HoneycombGraph g = build_graph(t_spec);
    const int n = t_spec.lines, k = t_spec.k, nv = g.nvars;
    auto root = [&](int line) {
        LaurentPoly v = row_variable(t_spec, line, 1);
        for (std::size_t i = 0; i < t_spec.sigma.size(); ++i)
            if (t_spec.sigma[i]) v = v.invert_var(static_cast<int>(i));
        return v;
    };
    // (x of T, line A); right to left so untouched verticals keep their place
    std::vector<std::pair<long long, int>> todo;
    for (int A = 1; A + 1 <= n; A += 2)
        for (int jj = 1; jj <= k + A; ++jj) todo.push_back({2LL * jj - A, A});
    std::sort(todo.begin(), todo.end(), [](auto a, auto b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
    const LaurentPoly one = LaurentPoly::constant(nv, 1), zero(nv);
    for (auto [x, A] : todo) {
        int T = g.find_vertex(x, 2 * A + 1);
        int B = g.find_vertex(x, 2 * (A + 1));
        int e = g.find_edge(T, B);
        if (e < 0) throw std::logic_error("odd-row vertical not found");
        const bool left_end = x == 2 - A, right_end = x == 2LL * k + A;
        RewriteParams p{root(A), right_end ? zero : root(A), root(A + 1), root(A + 1),
                        left_end ? zero : one, one, one, one, one};
        g = local_double_rewrite(g, e, p).graph;
    }
    g.spec.reset();
    return g;
}

}  // namespace ccfact
