// Graph transformations: reflective factorization, weight symmetrization,
// sign assignment for orthogonal patterns, and the doubling gadget.
#pragma once

#include <array>
#include <map>

#include "ccfact/graphs.hpp"

namespace ccfact {

// ---- factorization for graphs with a vertical mirror axis ----

struct CiucuResult {
    HoneycombGraph gplus;   // left part
    HoneycombGraph gminus;  // right part
    int n_axis = 0;         // half the number of axis vertices
    std::vector<int> axis_vertices;  // top to bottom, ids in the input graph
    std::vector<int> cut_right;      // 1 where the cut went right of that vertex
};

// Throws InputError unless the graph is connected, bipartite, mirror symmetric
// with weights about `axis`, has an even number of axis vertices and falls
// apart into a left and a right piece after the cuts. The top axis vertex is
// taken to be positive. Uses g.axis when `axis` is empty.
CiucuResult ciucu_factorize(const HoneycombGraph& g, std::optional<HalfInt> axis = std::nullopt);

// coordinate reflection is a graph automorphism (optionally weight preserving)
bool is_mirror_symmetric(const HoneycombGraph& g, HalfInt axis, bool weights = true);

// ---- symmetrization of T into ST ----

struct SymState {
    Matching matching;
    SignSelector sigma;
    std::vector<int> bits;  // one per odd row; 0 picks the left side, 1 the right
    bool operator==(const SymState&) const = default;
};

// Works on T_{2n,k}^p with paired variables; the axis is the line through the
// j-th peak of the top zig-zag. Forward and inverse maps only differ in which
// graph the state refers to.
class Symmetrizer {
  public:
    Symmetrizer(const GraphSpec& t_spec, int j);

    const HoneycombGraph& structure() const { return g_; }
    GraphSpec t_spec(const SignSelector& sigma) const;
    GraphSpec st_spec(const SignSelector& sigma) const;

    // state on sigma*T -> state on sigma'*ST
    SymState forward(const SymState& s) const;
    // state on sigma'*ST -> state on sigma*T
    SymState inverse(const SymState& s) const;
    // odd rows whose two axis vertices are matched to opposite sides
    int split_rows(const Matching& m) const;
    // side used for row i (0 left, 1 right) and whether it was forced
    std::pair<int, bool> side(const Matching& m, int row, int bit) const;

  private:
    // one odd row of hexagons: verticals left to right, and the "spine"
    // lines between them (index s sits left of vertical s; ends included)
    struct Row {
        std::vector<int> vedge, aval, bpeak;
        std::vector<int> apeak, bval;  // -1 where absent
        int axis = -1;
    };

    SymState apply(const SymState& s) const;
    std::vector<int> mates(const Matching& m) const;
    int side_of(const std::vector<int>& mate, int row, int bit) const;

    GraphSpec spec_;
    int j_ = 0;
    int n_ = 0;
    HoneycombGraph g_;
    std::vector<Row> rows_;
    std::map<std::pair<int, int>, int> eidx_;
};

SymState symmetrize_bijection(const GraphSpec& t_spec, int j, const SymState& s);
SymState symmetrize_inverse(const GraphSpec& t_spec, int j, const SymState& s);

// ---- sign assignment on the HTplus model ----

struct SignedPattern {
    Pattern pattern;
    std::vector<int> bits;  // one per odd starter equal to 0, bottom-up order of i
};

// m is a matching of the HTplus model graph (the sign selector only changes
// weights, not the edge set).
SignedPattern sign_assignment(const HoneycombGraph& g, const Matching& m, const SignSelector& sigma);
std::pair<Matching, SignSelector> sign_assignment_inverse(const HoneycombGraph& g, const SignedPattern& sp);

// ---- doubling gadget ----

// Outer weights around a vertical edge T-B: a on T's right, y on T's left,
// b on B's left, z on B's right. A zero split weight drops that edge.
struct RewriteParams {
    LaurentPoly a1, a2, b1, b2, y1, y2, z1, z2, t;

    static RewriteParams from_rationals(int nvars, const std::array<Rational, 9>& v);
    Json to_json() const;
    static RewriteParams from_json(const Json& j, int nvars);
};

struct RewriteResult {
    HoneycombGraph graph;
    // T, N, T2, B, M, B2
    std::array<int, 6> gadget{};
    // r_a, r_y, r_b, r_z; -1 when absent
    std::array<int, 4> connectors{};
};

// Replaces the vertical edge and its four outer edges by a hexagon. New
// vertices sit one and two grid units right of T and B; everything else
// right of T moves right by 2.
RewriteResult local_double_rewrite(const HoneycombGraph& g, int edge, const RewriteParams& p);

// Checks the five-class behaviour of the gadget at a point; empty when fine.
std::vector<std::string> local_contract_violations(const RewriteResult& r, const RewriteParams& p,
                                                   const std::vector<Rational>& point, bool roots = false);

// T_{n,k}^p with every odd-row vertical replaced through local_double_rewrite.
HoneycombGraph double_odd_rows(const GraphSpec& t_spec);

}  // namespace ccfact
