#include "ccfact/patterns.hpp"

#include <algorithm>
#include <sstream>

namespace ccfact {

std::string pattern_family_name(PatternFamily f) {
    switch (f) {
        case PatternFamily::GT: return "gt";
        case PatternFamily::Symplectic: return "symplectic";
        case PatternFamily::EvenOrth: return "even_orthogonal";
        case PatternFamily::SplitOrth: return "split_orthogonal";
    }
    return "?";
}

PatternFamily parse_pattern_family(const std::string& s) {
    if (s == "gt") return PatternFamily::GT;
    if (s == "symplectic") return PatternFamily::Symplectic;
    if (s == "even_orthogonal") return PatternFamily::EvenOrth;
    if (s == "split_orthogonal") return PatternFamily::SplitOrth;
    throw InputError("unknown pattern family: " + s);
}

PatternFamily pattern_family_of(CharFamily f) {
    switch (f) {
        case CharFamily::Schur: return PatternFamily::GT;
        case CharFamily::Sp: return PatternFamily::Symplectic;
        case CharFamily::Oe: return PatternFamily::EvenOrth;
        case CharFamily::SoOdd: return PatternFamily::SplitOrth;
    }
    return PatternFamily::GT;
}

int Pattern::first_row() const {
    switch (family) {
        case PatternFamily::GT: return std::max(m, 1);
        case PatternFamily::EvenOrth: return std::max(2 * m - 1, 1);
        default: return std::max(2 * m, 1);
    }
}

int Pattern::last_row() const {
    switch (family) {
        case PatternFamily::GT: return n;
        case PatternFamily::EvenOrth: return 2 * n - 1;
        default: return 2 * n;
    }
}

int Pattern::row_length(int full) const {
    if (full <= 0) return 0;
    return family == PatternFamily::GT ? full : (full + 1) / 2;
}

const std::vector<HalfInt>& Pattern::row(int full) const {
    static const std::vector<HalfInt> empty;
    if (full < first_row()) return empty;
    return rows.at(full - first_row());
}

std::vector<HalfInt>& Pattern::row(int full) { return rows.at(full - first_row()); }

std::string Pattern::str() const {
    std::string s;
    for (std::size_t i = 0; i < rows.size(); ++i) s += (i ? ";" : "") + halfint_row_str(rows[i]);
    return s;
}

Json Pattern::to_json() const {
    Json r = Json::array();
    for (const auto& row : rows) {
        Json a = Json::array();
        for (auto v : row) a.push_back(v.str());
        r.push_back(a);
    }
    return {{"family", pattern_family_name(family)}, {"n", n}, {"m", m}, {"rows", r}};
}

Pattern Pattern::from_rows(PatternFamily f, int n, int m, const std::vector<std::vector<HalfInt>>& rows) {
    Pattern p;
    p.family = f;
    p.n = n;
    p.m = m;
    p.rows = rows;
    if (static_cast<int>(rows.size()) != p.last_row() - p.first_row() + 1)
        throw InputError("pattern has the wrong number of rows");
    for (int k = p.first_row(); k <= p.last_row(); ++k)
        if (static_cast<int>(p.row(k).size()) != p.row_length(k))
            throw InputError("pattern row " + std::to_string(k) + " has the wrong length");
    return p;
}

Pattern Pattern::from_json(const Json& j) {
    std::vector<std::vector<HalfInt>> rows;
    for (const auto& r : j.at("rows")) {
        std::vector<HalfInt> row;
        for (const auto& v : r) row.push_back(HalfInt::parse(v.is_string() ? v.get<std::string>() : v.dump()));
        rows.push_back(row);
    }
    return from_rows(parse_pattern_family(j.at("family")), j.at("n"), j.value("m", 0), rows);
}

std::vector<std::vector<HalfInt>> parse_rows(const std::string& s) {
    std::vector<std::vector<HalfInt>> rows;
    std::stringstream ss(s);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::vector<HalfInt> r;
        std::stringstream rs(row);
        std::string tok;
        while (std::getline(rs, tok, ','))
            if (!tok.empty()) r.push_back(HalfInt::parse(tok));
        rows.push_back(r);
    }
    return rows;
}

// ---------------------------------------------------------------------------

namespace {

std::string at(int i, int j) { return "P[" + std::to_string(i) + "," + std::to_string(j) + "]"; }

bool is_starter(const Pattern& p, int full, int j) {
    return p.is_half() && full % 2 == 1 && j == 1;
}

}  // namespace

std::vector<std::string> validate_pattern(const Pattern& p) {
    std::vector<std::string> bad;
    if (static_cast<int>(p.rows.size()) != p.last_row() - p.first_row() + 1) {
        bad.push_back("wrong number of rows");
        return bad;
    }
    for (int k = p.first_row(); k <= p.last_row(); ++k)
        if (static_cast<int>(p.row(k).size()) != p.row_length(k)) {
            bad.push_back("row " + std::to_string(k) + " has the wrong length");
            return bad;
        }
    const bool absval = p.family == PatternFamily::EvenOrth;
    auto val = [&](int i, int j) {
        HalfInt v = p.row(i)[j - 1];
        return absval ? v.abs() : v;
    };
    auto le = [&](int i1, int j1, int i2, int j2) {
        if (i1 < p.first_row() || i2 < p.first_row() || i1 > p.last_row() || i2 > p.last_row()) return;
        if (j1 < 1 || j2 < 1 || j1 > p.row_length(i1) || j2 > p.row_length(i2)) return;
        if (val(i1, j1) > val(i2, j2))
            bad.push_back(at(i1, j1) + " <= " + at(i2, j2) + " fails");
    };

    // entry domains
    bool have_grid = false, grid_int = true;
    for (int k = p.first_row(); k <= p.last_row(); ++k)
        for (int j = 1; j <= p.row_length(k); ++j) {
            HalfInt v = p.row(k)[j - 1];
            bool starter = is_starter(p, k, j);
            switch (p.family) {
                case PatternFamily::GT:
                case PatternFamily::Symplectic:
                    if (!v.is_integer()) bad.push_back(at(k, j) + " not an integer");
                    if (p.family == PatternFamily::Symplectic && v < HalfInt(0))
                        bad.push_back(at(k, j) + " negative");
                    break;
                case PatternFamily::EvenOrth:
                    if (!have_grid) have_grid = true, grid_int = v.is_integer();
                    if (v.is_integer() != grid_int) bad.push_back(at(k, j) + " off the common grid");
                    if (!starter && v < HalfInt(0)) bad.push_back(at(k, j) + " negative non-starter");
                    break;
                case PatternFamily::SplitOrth:
                    if (v < HalfInt(0)) bad.push_back(at(k, j) + " negative");
                    if (!starter) {
                        if (!have_grid) have_grid = true, grid_int = v.is_integer();
                        if (v.is_integer() != grid_int) bad.push_back(at(k, j) + " off the common grid");
                    }
                    break;
            }
        }

    if (p.family == PatternFamily::GT) {
        for (int k = p.first_row(); k < p.last_row(); ++k)
            for (int j = 1; j <= p.row_length(k); ++j) {
                le(k + 1, j, k, j);
                le(k, j, k + 1, j + 1);
            }
        const auto& b = p.row(p.last_row());
        for (std::size_t j = 1; j < b.size(); ++j)
            if (b[j - 1] > b[j]) bad.push_back("bottom row not increasing");
        return bad;
    }
    // half patterns: compare each even row 2t with its neighbours 2t-1 and 2t+1
    for (int k = p.first_row(); k <= p.last_row(); ++k) {
        if (k % 2 != 0) continue;
        for (int j = 1; j <= p.row_length(k); ++j) {
            le(k - 1, j, k, j);
            le(k, j, k - 1, j + 1);
            le(k + 1, j, k, j);
            le(k, j, k + 1, j + 1);
        }
    }
    for (int k = p.first_row(); k <= p.last_row(); ++k)
        for (int j = 2; j <= p.row_length(k); ++j)
            if (val(k, j - 1) > val(k, j)) bad.push_back("row " + std::to_string(k) + " not increasing");
    return bad;
}

// ---------------------------------------------------------------------------

namespace {

HalfInt row_sum(const std::vector<HalfInt>& r, bool absval) {
    HalfInt s = 0;
    for (auto v : r) s += absval ? v.abs() : v;
    return s;
}

int starter_sign(const Pattern& p, int full) {
    const auto& r = p.row(full);
    return r.empty() ? 1 : r[0].sign();
}

}  // namespace

LaurentPoly pattern_weight(const Pattern& p) {
    auto bad = validate_pattern(p);
    if (!bad.empty()) throw InputError("invalid pattern: " + bad.front());
    const int nv = p.nvars();
    Exponent e(nv, 0);
    const int m = p.m;
    auto r = [&](int full, bool absval) { return row_sum(p.row(full), absval); };
    for (int i = 1; i <= nv; ++i) {
        HalfInt x;
        switch (p.family) {
            case PatternFamily::GT: x = r(m + i, false) - r(m + i - 1, false); break;
            case PatternFamily::Symplectic:
            case PatternFamily::SplitOrth:
                x = r(2 * m + 2 * i, false) - r(2 * m + 2 * i - 1, false) * 2 + r(2 * m + 2 * i - 2, false);
                break;
            case PatternFamily::EvenOrth: {
                int a = 2 * m + 2 * i - 1;
                x = r(a, true) - r(a - 1, true) * 2 + r(a - 2, true);
                x = x * (starter_sign(p, a) * starter_sign(p, a - 2));
                break;
            }
        }
        e[i - 1] = static_cast<int>(x.doubled());
    }
    return LaurentPoly::monomial(nv, e);
}

// ---------------------------------------------------------------------------

namespace {

struct Enumerator {
    Pattern p;
    const PatternQuery& q;
    const std::function<void(const Pattern&)>& fn;
    bool grid_int = true;  // grid of non-starters

    HalfInt get(int full, int j, bool absval) const {
        HalfInt v = p.row(full)[j - 1];
        return absval ? v.abs() : v;
    }

    // align lo upwards / hi downwards to the grid (step 1/2 when any)
    static HalfInt up(HalfInt v, bool integral, bool any) {
        if (any || v.is_integer() == integral) return v;
        return v + HalfInt::from_doubled(1);
    }
    static HalfInt down(HalfInt v, bool integral, bool any) {
        if (any || v.is_integer() == integral) return v;
        return v - HalfInt::from_doubled(1);
    }

    void bounds(int k, std::vector<HalfInt>& lo, std::vector<HalfInt>& hi, std::vector<bool>& any) {
        const int len = p.row_length(k);
        lo.assign(len, HalfInt(0));
        hi.assign(len, HalfInt(0));
        any.assign(len, false);
        const bool absval = p.family == PatternFamily::EvenOrth;
        for (int j = 1; j <= len; ++j) {
            HalfInt l, h;
            if (p.family == PatternFamily::GT) {
                l = get(k + 1, j, false);
                h = get(k + 1, j + 1, false);
                if (q.top) {
                    const int mm = p.m;
                    const auto& t = *q.top;
                    if (j <= mm) h = std::min(h, t[j - 1]);
                    if (j > k - mm && k > mm) l = std::max(l, t[j - (k - mm) - 1]);
                }
            } else if (k % 2 == 0) {
                l = get(k + 1, j, absval);
                h = get(k + 1, j + 1, absval);
            } else {
                h = get(k + 1, j, absval);
                if (j >= 2) {
                    l = get(k + 1, j - 1, absval);
                } else if (p.family == PatternFamily::EvenOrth && q.sign_variants) {
                    l = -h;
                } else {
                    l = 0;
                }
                if (j == 1 && p.family == PatternFamily::SplitOrth) any[0] = true;
            }
            lo[j - 1] = up(l, grid_int, any[j - 1]);
            hi[j - 1] = down(h, grid_int, any[j - 1]);
        }
    }

    void choose(int k, int j, const std::vector<HalfInt>& lo, const std::vector<HalfInt>& hi,
                const std::vector<bool>& any) {
        auto& row = p.row(k);
        if (j > static_cast<int>(row.size())) {
            fill(k - 1);
            return;
        }
        HalfInt step = any[j - 1] ? HalfInt::from_doubled(1) : HalfInt(1);
        for (HalfInt v = lo[j - 1]; v <= hi[j - 1]; v += step) {
            row[j - 1] = v;
            choose(k, j + 1, lo, hi, any);
        }
    }

    void fill(int k) {
        if (k < p.first_row()) {
            fn(p);
            return;
        }
        std::vector<HalfInt> lo, hi;
        std::vector<bool> any;
        bounds(k, lo, hi, any);
        if (q.top && k == p.first_row()) {
            const auto& t = *q.top;
            for (std::size_t j = 0; j < t.size(); ++j)
                if (t[j] < lo[j] || t[j] > hi[j]) return;
            p.row(k) = t;
            fn(p);
            return;
        }
        choose(k, 1, lo, hi, any);
    }
};

}  // namespace

void for_each_pattern(const PatternQuery& q, const std::function<void(const Pattern&)>& fn) {
    Pattern base;
    base.family = q.family;
    base.n = static_cast<int>(q.bottom.size());
    base.m = q.top ? static_cast<int>(q.top->size()) : 0;
    if (base.n == 0) {
        if (base.m == 0) fn(base);
        return;
    }
    if (base.m >= base.n) throw InputError("top row must be shorter than the bottom row");
    for (std::size_t j = 1; j < q.bottom.size(); ++j)
        if (q.bottom[j - 1] > q.bottom[j]) throw InputError("bottom row must be increasing");
    const bool grid_int = q.bottom[0].is_integer();
    if (q.family == PatternFamily::GT || q.family == PatternFamily::Symplectic)
        for (auto v : q.bottom)
            if (!v.is_integer()) throw InputError("family needs integer rows");
    if (q.top)
        for (auto v : *q.top)
            if (v.is_integer() != grid_int) throw InputError("top and bottom rows on different grids");
    for (int k = base.first_row(); k <= base.last_row(); ++k)
        base.rows.emplace_back(base.row_length(k));

    std::vector<std::vector<HalfInt>> bottoms{q.bottom};
    if (q.family == PatternFamily::EvenOrth && q.sign_variants && q.bottom[0] != HalfInt(0)) {
        auto b = q.bottom;
        b[0] = -b[0];
        bottoms.push_back(b);
    }
    for (const auto& b : bottoms) {
        Enumerator e{base, q, fn, grid_int};
        e.p.row(e.p.last_row()) = b;
        e.fill(e.p.last_row() - 1);
    }
}

std::vector<Pattern> enumerate_patterns(const PatternQuery& q) {
    std::vector<Pattern> out;
    for_each_pattern(q, [&](const Pattern& p) { out.push_back(p); });
    return out;
}

LaurentPoly character_gf_rows(CharFamily f, const std::vector<HalfInt>& bottom,
                              const std::vector<HalfInt>& top) {
    PatternQuery q;
    q.family = pattern_family_of(f);
    q.bottom = bottom;
    if (!top.empty()) q.top = top;
    const int nv = static_cast<int>(bottom.size() - top.size());
    LaurentPoly gf(nv);
    for_each_pattern(q, [&](const Pattern& p) { gf += pattern_weight(p); });
    return gf;
}

LaurentPoly character_gf(CharFamily f, const Partition& lam, const Partition& mu) {
    if (mu.size() > 0 && mu.is_integer() != lam.is_integer())
        throw InputError("lambda and mu on different grids");
    if (mu.size() >= lam.size() && lam.size() > 0) throw InputError("mu must have fewer parts than lambda");
    return character_gf_rows(f, lam.increasing(), mu.increasing());
}

// ---------------------------------------------------------------------------

Pattern j_involution(const Pattern& p, int i) {
    if (p.family != PatternFamily::EvenOrth || p.m != 0)
        throw InputError("J_i acts on straight even orthogonal patterns");
    if (i < 2 || i > p.n) throw InputError("J_i needs 2 <= i <= n");
    Pattern r = p;
    const auto& a = p.row(2 * i - 3);
    const auto& b = p.row(2 * i - 1);
    auto& mid = r.row(2 * i - 2);
    for (int j = 1; j <= i - 1; ++j) {
        HalfInt mx = std::max(a[j - 1].abs(), b[j - 1].abs());
        HalfInt mn = b[j];
        if (j + 1 <= i - 1) mn = std::min(mn, a[j]);
        mid[j - 1] = mx + mn - p.row(2 * i - 2)[j - 1];
    }
    return r;
}

RoundUp split_to_symplectic_roundup(const Pattern& p) {
    if (p.family != PatternFamily::SplitOrth) throw InputError("round-up needs a split orthogonal pattern");
    auto bad = validate_pattern(p);
    if (!bad.empty()) throw InputError("invalid pattern: " + bad.front());
    RoundUp out{p, 0};
    out.pattern.family = PatternFamily::Symplectic;
    for (int k = p.first_row(); k <= p.last_row(); ++k) {
        if (k % 2 == 0 || k < 1) continue;
        auto& s = out.pattern.row(k)[0];
        if (!s.is_integer()) {
            s += HalfInt::from_doubled(1);
            ++out.halfcount;
        }
    }
    return out;
}

}  // namespace ccfact
