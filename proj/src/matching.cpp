// Perfect matching generating functions and enumeration.
#include <algorithm>
#include <map>
#include <tuple>

#include "ccfact/graphs.hpp"

namespace ccfact {

namespace {

// Vertices are processed line by line, left to right. The state is the set of
// later vertices already covered by an edge from an earlier one; on thin
// honeycombs it stays within about one zig-zag line.
template <class R>
class MatchingDP {
  public:
    MatchingDP(const HoneycombGraph& g, std::vector<R> weights, R one) : w_(std::move(weights)), one_(one) {
        const int n = static_cast<int>(g.vertices.size());
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        auto key = [&](int v) {
            const auto& x = g.vertices[v];
            return std::make_tuple(x.y / 2, x.x.doubled(), x.y);
        };
        std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
        std::vector<int> rank(n);
        for (int i = 0; i < n; ++i) rank[order[i]] = i;
        nbr_.assign(n, {});
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            int a = rank[g.edges[e].u], b = rank[g.edges[e].v];
            if (a > b) std::swap(a, b);
            nbr_[a].push_back({b, static_cast<int>(e)});
        }
        memo_.resize(n + 1);
        n_ = n;
    }

    R run() { return go(0, {}); }

  private:
    R go(int idx, std::vector<int> covered) {
        while (idx < n_ && !covered.empty() && covered.front() == idx) {
            covered.erase(covered.begin());
            ++idx;
        }
        if (idx == n_) return one_;
        auto it = memo_[idx].find(covered);
        if (it != memo_[idx].end()) return it->second;
        R sum = one_ - one_;
        for (auto [u, e] : nbr_[idx]) {
            if (std::binary_search(covered.begin(), covered.end(), u)) continue;
            std::vector<int> next = covered;
            next.insert(std::lower_bound(next.begin(), next.end(), u), u);
            R sub = go(idx + 1, std::move(next));
            if (!is_zero(sub)) sum += w_[e] * sub;
        }
        memo_[idx].emplace(std::move(covered), sum);
        return sum;
    }
    static bool is_zero(const R& r) {
        if constexpr (std::is_same_v<R, Rational>) return r == 0;
        else return r.is_zero();
    }

    int n_ = 0;
    std::vector<R> w_;
    R one_;
    std::vector<std::vector<std::pair<int, int>>> nbr_;
    std::vector<std::map<std::vector<int>, R>> memo_;
};

}  // namespace

bool is_perfect_matching(const HoneycombGraph& g, const Matching& m) {
    std::vector<int> cover(g.vertices.size(), 0);
    for (int e : m.edges) {
        if (e < 0 || e >= static_cast<int>(g.edges.size())) return false;
        ++cover[g.edges[e].u];
        ++cover[g.edges[e].v];
    }
    return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

LaurentPoly matching_weight(const HoneycombGraph& g, const Matching& m) {
    if (!g.symbolic()) throw InputError("matching_weight needs Laurent weights");
    LaurentPoly w = LaurentPoly::constant(g.nvars, 1);
    for (int e : m.edges) {
        w *= g.edges[e].weight;
        w = w.scaled(1 / g.edges[e].den.terms().begin()->second);
    }
    return w;
}

LaurentPoly matching_gf(const HoneycombGraph& g) {
    if (!g.symbolic())
        throw InputError("symbolic matching generating function needs Laurent weights; use numeric mode");
    std::vector<LaurentPoly> w;
    for (const auto& e : g.edges) w.push_back(e.weight.scaled(1 / e.den.terms().begin()->second));
    MatchingDP<LaurentPoly> dp(g, std::move(w), LaurentPoly::constant(g.nvars, 1));
    return dp.run();
}

Rational matching_gf_at(const HoneycombGraph& g, const std::vector<Rational>& point, bool roots) {
    if (static_cast<int>(point.size()) != g.nvars) throw InputError("point has the wrong number of coordinates");
    std::vector<Rational> w;
    for (const auto& e : g.edges) {
        Rational num = roots ? e.weight.eval_roots(point) : e.weight.eval(point);
        Rational den = roots ? e.den.eval_roots(point) : e.den.eval(point);
        if (den == 0) throw InputError("edge weight has a vanishing denominator at this point");
        Rational q = num / den;
        q.canonicalize();
        w.push_back(q);
    }
    MatchingDP<Rational> dp(g, std::move(w), Rational(1));
    return dp.run();
}

Rational matching_count(const HoneycombGraph& g) {
    std::vector<Rational> w(g.edges.size(), Rational(1));
    MatchingDP<Rational> dp(g, std::move(w), Rational(1));
    return dp.run();
}

void for_each_matching(const HoneycombGraph& g, const std::function<void(const Matching&)>& fn) {
    const int n = static_cast<int>(g.vertices.size());
    const auto inc = g.incidence();
    std::vector<char> alive(n, 1);
    std::vector<int> chosen;
    int remaining = n;
    std::function<void()> rec = [&]() {
        if (remaining == 0) {
            Matching m{chosen};
            std::sort(m.edges.begin(), m.edges.end());
            fn(m);
            return;
        }
        // uncovered vertex with the fewest available edges; degree 1 is forced
        int best = -1, bestdeg = 1 << 30;
        for (int v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            int d = 0;
            for (int e : inc[v])
                if (alive[g.other(e, v)]) ++d;
            if (d < bestdeg) {
                bestdeg = d;
                best = v;
                if (d <= 1) break;
            }
        }
        if (bestdeg == 0) return;
        for (int e : inc[best]) {
            int u = g.other(e, best);
            if (!alive[u]) continue;
            alive[best] = alive[u] = 0;
            remaining -= 2;
            chosen.push_back(e);
            rec();
            chosen.pop_back();
            remaining += 2;
            alive[best] = alive[u] = 1;
        }
    };
    rec();
}

std::vector<Matching> enumerate_matchings(const HoneycombGraph& g) {
    std::vector<Matching> out;
    for_each_matching(g, [&](const Matching& m) { out.push_back(m); });
    return out;
}

}  // namespace ccfact
