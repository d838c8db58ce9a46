// Weighted honeycomb graphs, perfect matchings and their generating functions.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ccfact/algebra.hpp"
#include "ccfact/patterns.hpp"

namespace ccfact {

enum class GraphFamily { T, ST, HTminus, HHTminus, HTplus, HHTplus, DT, SDT };

std::string graph_family_name(GraphFamily f);
GraphFamily parse_graph_family(const std::string& s);

// plain: zig-zag line i carries x_i. paired: lines 2i-1, 2i carry x_i, xbar_i.
enum class VarScheme { Plain, Paired };

// Bit i set means the transposition (x_i, xbar_i) is applied.
using SignSelector = std::vector<int>;

// Builder parameters. `lines` is the number of zig-zag lines: n for T_{n,k},
// 2n for the half-trapezoidal graphs. Bottom positions p are 1..lines+k left
// to right (HTplus: 0..lines/2+k right to left); top positions q are 1..k.
struct GraphSpec {
    GraphFamily family = GraphFamily::T;
    int lines = 1;
    int k = 1;
    int j = 0;  // ST / SDT axis column
    std::vector<int> p;
    std::vector<int> q;
    VarScheme vars = VarScheme::Plain;
    SignSelector sigma;

    int nvars() const;
    Json to_json() const;
    static GraphSpec from_json(const Json& j);
};

enum class EdgeKind { SlantNE, SlantNW, Vertical };  // "/", "\", "|"

struct Vertex {
    HalfInt x;  // in hexagon widths; zig-zag neighbours differ by 1/2
    int y = 0;  // zig-zag line i has peaks at 2i and valleys at 2i+1
    bool positive = true;
};

struct Edge {
    int u = 0, v = 0;
    LaurentPoly weight;
    LaurentPoly den;  // constant 1 except for the doubled graphs
    EdgeKind kind = EdgeKind::Vertical;
};

struct HoneycombGraph {
    int nvars = 0;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::optional<GraphSpec> spec;
    std::optional<HalfInt> axis;

    int add_vertex(long long x2, int y);
    int add_edge(int u, int v, const LaurentPoly& w, EdgeKind kind);
    // -1 if absent
    int find_vertex(long long x2, int y) const;
    int find_edge(int u, int v) const;
    std::vector<std::vector<int>> incidence() const;  // vertex -> edge ids
    int other(int e, int v) const { return edges[e].u == v ? edges[e].v : edges[e].u; }
    bool symbolic() const;  // every denominator is 1

    Json to_json() const;
    static HoneycombGraph from_json(const Json& j);
};

// Positions x_i/xbar_i of a row under the scheme; doubled exponent 1 for the
// square-root weights of the doubled graphs.
LaurentPoly row_variable(const GraphSpec& s, int line, int doubled = 2);

HoneycombGraph build_graph(const GraphSpec& s);

// Coordinate normal form: vertices translated so the minimum x is 0, listed
// with edges in sorted order. Equal strings mean equal embedded graphs.
std::string canonical_form(const HoneycombGraph& g, bool with_weights = false);

struct Matching {
    std::vector<int> edges;  // sorted edge ids
    bool operator==(const Matching&) const = default;
};

bool is_perfect_matching(const HoneycombGraph& g, const Matching& m);
// product of edge weights; symbolic graphs only
LaurentPoly matching_weight(const HoneycombGraph& g, const Matching& m);

LaurentPoly matching_gf(const HoneycombGraph& g);
// exact value at a point; with roots=true the point lists s_i where x_i = s_i^2
Rational matching_gf_at(const HoneycombGraph& g, const std::vector<Rational>& point, bool roots = false);
// number of perfect matchings
Rational matching_count(const HoneycombGraph& g);

void for_each_matching(const HoneycombGraph& g, const std::function<void(const Matching&)>& fn);
std::vector<Matching> enumerate_matchings(const HoneycombGraph& g);

// Matching <-> pattern models.
enum class MatchingModel { SchurT, SymplecticHTm, OrthogonalHTp, OddHHTm };
std::string matching_model_name(MatchingModel m);
MatchingModel parse_matching_model(const std::string& s);

// Graph carrying the model for outer shape lam (and inner shape mu for SchurT).
// lam is integral except for OrthogonalHTp, where lam - 1/2 is used when
// lam is half-odd.
GraphSpec model_spec(MatchingModel m, const Partition& lam, const Partition& mu = Partition());

// For OddHHTm, `terms` has one bit per i: 1 when the first edge of line 2i is
// in the matching and contributes its constant term 1.
struct ModelMatching {
    Matching matching;
    std::vector<int> terms;
};

Pattern matching_to_pattern(MatchingModel model, const HoneycombGraph& g, const ModelMatching& m);
ModelMatching pattern_to_matching(MatchingModel model, const HoneycombGraph& g, const Pattern& p);
// matching weight, resolving the x+1 edges through `terms`
LaurentPoly model_matching_weight(MatchingModel model, const HoneycombGraph& g, const ModelMatching& m);

// HTplus^p_{2n,k} next to HTminus^q_{2n,k}, joined line by line.
HoneycombGraph glue_plus_minus(const GraphSpec& plus, const GraphSpec& minus);

}  // namespace ccfact
