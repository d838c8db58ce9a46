#include "ccfact/tableaux.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace ccfact {

std::string tableau_family_name(TableauFamily f) {
    switch (f) {
        case TableauFamily::Ordinary: return "ordinary";
        case TableauFamily::Symplectic: return "symplectic";
        case TableauFamily::EvenOrth: return "even_orthogonal";
        case TableauFamily::OddOrth: return "odd_orthogonal";
    }
    return "?";
}

TableauFamily parse_tableau_family(const std::string& s) {
    if (s == "ordinary" || s == "schur") return TableauFamily::Ordinary;
    if (s == "symplectic" || s == "sp") return TableauFamily::Symplectic;
    if (s == "even_orthogonal" || s == "oe") return TableauFamily::EvenOrth;
    if (s == "odd_orthogonal" || s == "so_odd") return TableauFamily::OddOrth;
    throw InputError("unknown tableau family: " + s);
}

TableauFamily tableau_family_of(CharFamily f) {
    switch (f) {
        case CharFamily::Schur: return TableauFamily::Ordinary;
        case CharFamily::Sp: return TableauFamily::Symplectic;
        case CharFamily::Oe: return TableauFamily::EvenOrth;
        case CharFamily::SoOdd: return TableauFamily::OddOrth;
    }
    return TableauFamily::Ordinary;
}

PatternFamily pattern_family_of(TableauFamily f) {
    switch (f) {
        case TableauFamily::Ordinary: return PatternFamily::GT;
        case TableauFamily::Symplectic: return PatternFamily::Symplectic;
        case TableauFamily::EvenOrth: return PatternFamily::EvenOrth;
        case TableauFamily::OddOrth: return PatternFamily::SplitOrth;
    }
    return PatternFamily::GT;
}

namespace {

TableauFamily tableau_family_of(PatternFamily f) {
    switch (f) {
        case PatternFamily::GT: return TableauFamily::Ordinary;
        case PatternFamily::Symplectic: return TableauFamily::Symplectic;
        case PatternFamily::EvenOrth: return TableauFamily::EvenOrth;
        case PatternFamily::SplitOrth: return TableauFamily::OddOrth;
    }
    return TableauFamily::Ordinary;
}

// decorations in increasing order within a level
const std::vector<Deco>& decos(TableauFamily f) {
    static const std::vector<Deco> ord{Deco::Plain};
    static const std::vector<Deco> sp{Deco::Bar, Deco::Plain};
    static const std::vector<Deco> oe{Deco::Hat, Deco::Check, Deco::Bar, Deco::Plain};
    static const std::vector<Deco> oo{Deco::Hat, Deco::Bar, Deco::Plain};
    switch (f) {
        case TableauFamily::Ordinary: return ord;
        case TableauFamily::Symplectic: return sp;
        case TableauFamily::EvenOrth: return oe;
        case TableauFamily::OddOrth: return oo;
    }
    return ord;
}

}  // namespace

Symbol Symbol::parse(const std::string& s) {
    std::size_t k = 0;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    if (k == 0) throw InputError("bad tableau symbol: " + s);
    Symbol sym;
    sym.level = std::stoi(s.substr(0, k));
    std::string tag = s.substr(k);
    if (tag.empty()) sym.deco = Deco::Plain;
    else if (tag == "bar") sym.deco = Deco::Bar;
    else if (tag == "hat") sym.deco = Deco::Hat;
    else if (tag == "check") sym.deco = Deco::Check;
    else throw InputError("bad tableau symbol: " + s);
    if (sym.level < 1) throw InputError("bad tableau symbol: " + s);
    return sym;
}

std::string Symbol::str() const {
    std::string s = std::to_string(level);
    switch (deco) {
        case Deco::Plain: break;
        case Deco::Bar: s += "bar"; break;
        case Deco::Hat: s += "hat"; break;
        case Deco::Check: s += "check"; break;
    }
    return s;
}

int symbol_key(TableauFamily f, Symbol s) {
    const auto& d = decos(f);
    auto it = std::find(d.begin(), d.end(), s.deco);
    if (it == d.end()) throw InputError("symbol " + s.str() + " not in the " + tableau_family_name(f) + " alphabet");
    return static_cast<int>(d.size()) * s.level + static_cast<int>(it - d.begin());
}

Json SkewTableau::to_json() const {
    Json rows = Json::array();
    for (const auto& r : cells) {
        Json a = Json::array();
        for (const auto& c : r) a.push_back(c ? c->str() : "empty");
        rows.push_back(a);
    }
    return {{"family", tableau_family_name(family)}, {"outer", outer.to_json()}, {"inner", inner.to_json()},
            {"rows", rows}};
}

namespace {

Partition partition_from_json(const Json& j) {
    std::vector<HalfInt> v;
    for (const auto& e : j) v.push_back(HalfInt::parse(e.is_string() ? e.get<std::string>() : e.dump()));
    return Partition(v);
}

}  // namespace

SkewTableau SkewTableau::from_json(const Json& j) {
    SkewTableau t;
    t.family = parse_tableau_family(j.at("family"));
    t.outer = partition_from_json(j.at("outer"));
    t.inner = j.contains("inner") ? partition_from_json(j.at("inner")) : Partition();
    for (const auto& r : j.at("rows")) {
        std::vector<Cell> row;
        for (const auto& c : r) {
            std::string s = c.get<std::string>();
            if (s == "empty") row.emplace_back();
            else row.emplace_back(Symbol::parse(s));
        }
        t.cells.push_back(row);
    }
    return t;
}

std::string SkewTableau::str() const {
    std::string s;
    for (std::size_t r = 0; r < cells.size(); ++r) {
        if (r) s += "/";
        for (std::size_t c = 0; c < cells[r].size(); ++c) {
            if (c) s += ",";
            s += cells[r][c] ? cells[r][c]->str() : "_";
        }
    }
    return s;
}

// ---------------------------------------------------------------------------

namespace {

std::string pos(int r, int c) { return "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")"; }

// shape problems only; empty result means the cell grid matches outer/inner
std::vector<std::string> shape_violations(const SkewTableau& t) {
    std::vector<std::string> bad;
    if (!t.outer.is_integer() || !t.inner.is_integer()) {
        bad.push_back("tableau shapes need integer partitions");
        return bad;
    }
    if (t.m() > t.n()) {
        bad.push_back("inner shape has more rows than outer");
        return bad;
    }
    if (static_cast<int>(t.cells.size()) != t.n()) {
        bad.push_back("wrong number of rows");
        return bad;
    }
    for (int r = 0; r < t.n(); ++r) {
        if (t.inner_part(r) > t.outer[r].to_int()) bad.push_back("inner shape not contained in outer");
        if (static_cast<long long>(t.cells[r].size()) != t.outer[r].to_int())
            bad.push_back("row " + std::to_string(r + 1) + " has the wrong length");
    }
    if (!bad.empty()) return bad;
    for (int r = 0; r < t.n(); ++r)
        for (int c = 0; c < static_cast<int>(t.cells[r].size()); ++c) {
            bool inside = c < t.inner_part(r);
            if (inside && t.cells[r][c]) bad.push_back("inner cell " + pos(r, c) + " is filled");
            if (!inside && !t.cells[r][c]) bad.push_back("cell " + pos(r, c) + " is empty");
        }
    return bad;
}

// the conditions that only involve one cell and its left/upper neighbours
void local_violations(const SkewTableau& t, int r, int c, std::vector<std::string>& bad) {
    const Symbol s = *t.cells[r][c];
    const int nv = t.nvars();
    const TableauFamily f = t.family;
    const auto& ds = decos(f);
    if (s.level < 1 || s.level > nv || std::find(ds.begin(), ds.end(), s.deco) == ds.end()) {
        bad.push_back("symbol " + s.str() + " at " + pos(r, c) + " outside the alphabet");
        return;
    }
    const int key = symbol_key(f, s);
    if (c > 0 && t.cells[r][c - 1] && symbol_key(f, *t.cells[r][c - 1]) > key)
        bad.push_back("row decrease at " + pos(r, c));
    if (r > 0 && c < static_cast<int>(t.cells[r - 1].size()) && t.cells[r - 1][c] &&
        symbol_key(f, *t.cells[r - 1][c]) >= key)
        bad.push_back("column not strict at " + pos(r, c));
    const int i = r + 1 - t.m();  // row i+m holds entries of level >= i
    if (i >= 1) {
        Deco th = Deco::Plain;
        bool has = true;
        switch (f) {
            case TableauFamily::Ordinary: has = false; break;
            case TableauFamily::Symplectic: th = Deco::Bar; break;
            case TableauFamily::EvenOrth: th = Deco::Check; break;
            case TableauFamily::OddOrth: th = Deco::Hat; break;
        }
        if (has && key < symbol_key(f, Symbol{i, th}))
            bad.push_back("entry at " + pos(r, c) + " below the row threshold");
    }
    // first-column symbols
    if (s.deco == Deco::Hat) {
        int want = f == TableauFamily::EvenOrth ? s.level + t.m() - 1 : s.level + t.m();
        if (c != 0 || r + 1 != want) bad.push_back("hat symbol misplaced at " + pos(r, c));
    }
    if (s.deco == Deco::Check && (c != 0 || r + 1 != s.level + t.m()))
        bad.push_back("check symbol misplaced at " + pos(r, c));
}

// pairing of hat/check and the bar-above rule, even orthogonal only
void global_violations(const SkewTableau& t, std::vector<std::string>& bad) {
    if (t.family != TableauFamily::EvenOrth) return;
    const int nv = t.nvars();
    std::vector<int> hats(nv + 1, 0), checks(nv + 1, 0);
    for (const auto& row : t.cells)
        for (const auto& c : row)
            if (c && c->level >= 1 && c->level <= nv) {
                if (c->deco == Deco::Hat) ++hats[c->level];
                if (c->deco == Deco::Check) ++checks[c->level];
            }
    for (int i = 1; i <= nv; ++i)
        if ((hats[i] > 0) != (checks[i] > 0)) bad.push_back("hat/check of level " + std::to_string(i) + " unpaired");
    for (int i = 1; i <= nv; ++i) {
        const int r = i + t.m() - 1;
        if (r >= t.n() || t.cells[r].empty() || !t.cells[r][0]) continue;
        if (*t.cells[r][0] != Symbol{i, Deco::Bar}) continue;
        for (int c = 1; c < static_cast<int>(t.cells[r].size()); ++c) {
            if (t.cells[r][c] != Cell(Symbol{i, Deco::Plain})) continue;
            bool ok = r > 0 && c < static_cast<int>(t.cells[r - 1].size()) &&
                      t.cells[r - 1][c] == Cell(Symbol{i, Deco::Bar});
            if (!ok) bad.push_back("entry " + std::to_string(i) + " at " + pos(r, c) + " lacks a barred entry above");
        }
    }
}

}  // namespace

std::vector<std::string> validate_tableau(const SkewTableau& t) {
    auto bad = shape_violations(t);
    if (!bad.empty()) return bad;
    for (int r = 0; r < t.n(); ++r)
        for (int c = 0; c < static_cast<int>(t.cells[r].size()); ++c)
            if (t.cells[r][c]) local_violations(t, r, c, bad);
    if (bad.empty()) global_violations(t, bad);
    return bad;
}

LaurentPoly tableau_weight(const SkewTableau& t) {
    auto bad = validate_tableau(t);
    if (!bad.empty()) throw InputError("invalid tableau: " + bad.front());
    Exponent e(t.nvars(), 0);
    for (const auto& row : t.cells)
        for (const auto& c : row) {
            if (!c) continue;
            if (c->deco == Deco::Plain) e[c->level - 1] += 2;
            if (c->deco == Deco::Bar) e[c->level - 1] -= 2;
        }
    return LaurentPoly::monomial(t.nvars(), e);
}

// ---------------------------------------------------------------------------

void for_each_tableau(TableauFamily f, const Partition& outer, const Partition& inner,
                      const std::function<void(const SkewTableau&)>& fn) {
    SkewTableau t;
    t.family = f;
    t.outer = outer;
    t.inner = inner;
    if (!outer.is_integer() || !inner.is_integer()) throw InputError("tableau shapes need integer partitions");
    if (inner.size() > outer.size()) throw InputError("inner shape has more parts than outer");
    for (int r = 0; r < t.n(); ++r) {
        if (t.inner_part(r) > outer[r].to_int()) return;  // not contained: empty set
        t.cells.emplace_back(outer[r].to_int());
    }
    std::vector<Symbol> alphabet;
    for (int i = 1; i <= t.nvars(); ++i)
        for (Deco d : decos(f)) alphabet.push_back(Symbol{i, d});

    std::vector<std::pair<int, int>> order;
    for (int r = 0; r < t.n(); ++r)
        for (int c = static_cast<int>(t.inner_part(r)); c < static_cast<int>(t.cells[r].size()); ++c)
            order.emplace_back(r, c);

    std::vector<std::string> scratch;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == order.size()) {
            scratch.clear();
            global_violations(t, scratch);
            if (scratch.empty()) fn(t);
            return;
        }
        auto [r, c] = order[k];
        for (const Symbol& s : alphabet) {
            t.cells[r][c] = s;
            scratch.clear();
            local_violations(t, r, c, scratch);
            if (scratch.empty()) rec(k + 1);
        }
        t.cells[r][c].reset();
    };
    rec(0);
}

std::vector<SkewTableau> enumerate_tableaux(TableauFamily f, const Partition& outer, const Partition& inner) {
    std::vector<SkewTableau> out;
    for_each_tableau(f, outer, inner, [&](const SkewTableau& t) { out.push_back(t); });
    return out;
}

LaurentPoly tableau_gf(TableauFamily f, const Partition& outer, const Partition& inner) {
    LaurentPoly gf(static_cast<int>(outer.size() - inner.size()));
    for_each_tableau(f, outer, inner, [&](const SkewTableau& t) { gf += tableau_weight(t); });
    return gf;
}

// ---------------------------------------------------------------------------

namespace {

using Shape = std::vector<long long>;  // decreasing, n parts

// full row index of relative row k
int row_offset(const Pattern& p) { return p.family == PatternFamily::GT ? p.m : 2 * p.m; }

// relative row k of p as a decreasing partition padded to n parts; absolute
// values for even orthogonal, half-odd starters rounded up for split
Shape shape_of_row(const Pattern& p, int k) {
    Shape s(p.n, 0);
    const int full = k + row_offset(p);
    if (full < p.first_row()) return s;
    const auto& row = p.row(full);
    std::vector<HalfInt> v;
    for (std::size_t j = 0; j < row.size(); ++j) {
        HalfInt x = p.family == PatternFamily::EvenOrth ? row[j].abs() : row[j];
        if (p.family == PatternFamily::SplitOrth && j == 0 && full % 2 == 1 && !x.is_integer())
            x += HalfInt::from_doubled(1);
        if (!x.is_integer() || x < HalfInt(0)) throw InputError("pattern has no tableau: entries must be non-negative integers");
        v.push_back(x);
    }
    std::sort(v.rbegin(), v.rend());
    for (std::size_t j = 0; j < v.size(); ++j) s[j] = v[j].to_int();
    return s;
}

void fill_strip(SkewTableau& t, const Shape& lo, const Shape& hi, Symbol sym) {
    for (int r = 0; r < t.n(); ++r)
        for (long long c = lo[r]; c < hi[r]; ++c) t.cells[r][c] = sym;
}

int starter_sign_rel(const Pattern& p, int k) {
    const int full = k + row_offset(p);
    if (full < p.first_row()) return 1;
    return p.row(full)[0].sign();
}

}  // namespace

SkewTableau pattern_to_tableau(const Pattern& p) {
    auto bad = validate_pattern(p);
    if (!bad.empty()) throw InputError("invalid pattern: " + bad.front());
    SkewTableau t;
    t.family = tableau_family_of(p.family);
    const int nv = p.nvars();
    const int kmin = p.family == PatternFamily::EvenOrth ? -1 : 0;
    const int kmax = p.family == PatternFamily::GT ? nv : p.family == PatternFamily::EvenOrth ? 2 * nv - 1 : 2 * nv;
    std::map<int, Shape> sh;
    for (int k = kmin; k <= kmax; ++k) sh[k] = shape_of_row(p, k);
    std::vector<HalfInt> outer, inner;
    for (auto v : sh[kmax]) outer.push_back(HalfInt(v));
    for (int j = 0; j < p.m; ++j) inner.push_back(HalfInt(sh[kmin][j]));
    t.outer = Partition(outer);
    t.inner = Partition(inner);
    for (int r = 0; r < p.n; ++r) t.cells.emplace_back(sh[kmax][r]);

    switch (p.family) {
        case PatternFamily::GT:
            for (int k = 1; k <= nv; ++k) fill_strip(t, sh[k - 1], sh[k], Symbol{k, Deco::Plain});
            break;
        case PatternFamily::Symplectic:
            for (int i = 1; i <= nv; ++i) {
                fill_strip(t, sh[2 * i - 2], sh[2 * i - 1], Symbol{i, Deco::Bar});
                fill_strip(t, sh[2 * i - 1], sh[2 * i], Symbol{i, Deco::Plain});
            }
            break;
        case PatternFamily::SplitOrth:
            for (int i = 1; i <= nv; ++i) {
                fill_strip(t, sh[2 * i - 2], sh[2 * i - 1], Symbol{i, Deco::Bar});
                if (!p.row(2 * p.m + 2 * i - 1)[0].is_integer()) t.cells[p.m + i - 1][0] = Symbol{i, Deco::Hat};
                fill_strip(t, sh[2 * i - 1], sh[2 * i], Symbol{i, Deco::Plain});
            }
            break;
        case PatternFamily::EvenOrth:
            for (int i = 1; i <= nv; ++i) {
                const int eps = starter_sign_rel(p, 2 * i - 3) * starter_sign_rel(p, 2 * i - 1);
                const Shape& a = sh[2 * i - 3];
                const Shape& b = sh[2 * i - 2];
                const Shape& c = sh[2 * i - 1];
                if (eps > 0) {
                    fill_strip(t, a, b, Symbol{i, Deco::Bar});
                    fill_strip(t, b, c, Symbol{i, Deco::Plain});
                    continue;
                }
                fill_strip(t, a, b, Symbol{i, Deco::Plain});
                fill_strip(t, b, c, Symbol{i, Deco::Bar});
                // barred entries of the second strip sitting directly below an i
                for (int r = 1; r < p.n; ++r)
                    for (long long col = b[r]; col < c[r]; ++col) {
                        if (col >= static_cast<long long>(t.cells[r - 1].size())) continue;
                        if (t.cells[r - 1][col] != Cell(Symbol{i, Deco::Plain})) continue;
                        if (col == 0) {
                            t.cells[r - 1][col] = Symbol{i, Deco::Hat};
                            t.cells[r][col] = Symbol{i, Deco::Check};
                        } else {
                            t.cells[r - 1][col] = Symbol{i, Deco::Bar};
                            t.cells[r][col] = Symbol{i, Deco::Plain};
                        }
                    }
            }
            break;
    }
    return t;
}

namespace {

// adds the cells satisfying pred to the shape, row by row
Shape grow(const SkewTableau& t, Shape s, const std::function<bool(int, int)>& pred) {
    for (int r = 0; r < t.n(); ++r)
        for (int c = 0; c < static_cast<int>(t.cells[r].size()); ++c)
            if (t.cells[r][c] && pred(r, c)) ++s[r];
    return s;
}

bool is_sym(const SkewTableau& t, int r, int c, Symbol s) {
    return r >= 0 && r < t.n() && c >= 0 && c < static_cast<int>(t.cells[r].size()) && t.cells[r][c] == Cell(s);
}

Pattern build_pattern(const SkewTableau& t, const std::map<int, Shape>& sh) {
    Pattern p;
    p.family = pattern_family_of(t.family);
    p.n = t.n();
    p.m = t.m();
    const int off = row_offset(p);
    for (int full = p.first_row(); full <= p.last_row(); ++full) {
        const Shape& s = sh.at(full - off);
        const int len = p.row_length(full);
        for (int j = len; j < p.n; ++j)
            if (s[j] != 0) throw InputError("tableau has no pattern: row too long");
        std::vector<HalfInt> row;
        for (int j = len - 1; j >= 0; --j) row.push_back(HalfInt(s[j]));
        p.rows.push_back(row);
    }
    return p;
}

}  // namespace

Pattern tableau_to_pattern(const SkewTableau& t) {
    auto bad = validate_tableau(t);
    if (!bad.empty()) throw InputError("invalid tableau: " + bad.front());
    const int nv = t.nvars();
    Shape mu(t.n(), 0);
    for (int r = 0; r < t.m(); ++r) mu[r] = t.inner_part(r);
    auto level_is = [&](int i, std::initializer_list<Deco> ds) {
        return [&t, i, ds = std::vector<Deco>(ds)](int r, int c) {
            const Symbol s = *t.cells[r][c];
            return s.level == i && std::find(ds.begin(), ds.end(), s.deco) != ds.end();
        };
    };
    std::map<int, Shape> sh;
    Pattern out;

    if (t.family != TableauFamily::EvenOrth) {
        sh[0] = mu;
        for (int i = 1; i <= nv; ++i) {
            if (t.family == TableauFamily::Ordinary) {
                sh[i] = grow(t, sh[i - 1], level_is(i, {Deco::Plain}));
                continue;
            }
            sh[2 * i - 1] = grow(t, sh[2 * i - 2], level_is(i, {Deco::Bar, Deco::Hat}));
            sh[2 * i] = grow(t, sh[2 * i - 1], level_is(i, {Deco::Plain}));
        }
        out = build_pattern(t, sh);
        if (t.family == TableauFamily::OddOrth)
            for (int i = 1; i <= nv; ++i)
                if (is_sym(t, t.m() + i - 1, 0, Symbol{i, Deco::Hat}))
                    out.row(2 * t.m() + 2 * i - 1)[0] -= HalfInt::from_doubled(1);
        if (!validate_pattern(out).empty() || pattern_to_tableau(out) != t)
            throw InputError("tableau does not come from a pattern");
        return out;
    }

    // even orthogonal: try both sign products at each level and keep the
    // combination whose forward image is t
    std::vector<Pattern> found;
    std::vector<int> eps(nv + 1, 1);
    std::function<void(int)> rec = [&](int i) {
        if (i > nv) {
            std::map<int, Shape> s;
            s[-1] = mu;
            for (int l = 1; l <= nv; ++l) {
                const Shape& a = s[2 * l - 3];
                if (eps[l] > 0) {
                    s[2 * l - 2] = grow(t, a, level_is(l, {Deco::Bar}));
                } else {
                    s[2 * l - 2] = grow(t, a, [&](int r, int c) {
                        const Symbol x = *t.cells[r][c];
                        if (x.level != l) return false;
                        if (x.deco == Deco::Hat) return true;
                        if (x.deco == Deco::Plain) return !is_sym(t, r - 1, c, Symbol{l, Deco::Bar});
                        if (x.deco == Deco::Bar) return is_sym(t, r + 1, c, Symbol{l, Deco::Plain});
                        return false;
                    });
                }
                s[2 * l - 1] = grow(t, a, [&](int r, int c) { return t.cells[r][c]->level == l; });
            }
            Pattern p;
            try {
                p = build_pattern(t, s);
            } catch (const InputError&) {
                return;
            }
            int sign = 1;
            for (int l = 1; l <= nv; ++l) {
                sign *= eps[l];
                auto& st = p.row(2 * t.m() + 2 * l - 1)[0];
                if (sign < 0) {
                    if (st == HalfInt(0)) return;
                    st = -st;
                }
            }
            if (!validate_pattern(p).empty()) return;
            if (pattern_to_tableau(p) == t) found.push_back(p);
            return;
        }
        for (int e : {1, -1}) {
            eps[i] = e;
            rec(i + 1);
        }
    };
    rec(1);
    if (found.size() != 1)
        throw InputError("tableau has " + std::to_string(found.size()) + " preimages");
    return found.front();
}

}  // namespace ccfact
