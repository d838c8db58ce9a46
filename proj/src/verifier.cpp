#include "ccfact/verifier.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "ccfact/graphs.hpp"
#include "ccfact/patterns.hpp"
#include "ccfact/tableaux.hpp"

namespace ccfact {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<HalfInt> increasing_of(const std::vector<long long>& dec) {
    std::vector<HalfInt> out(dec.rbegin(), dec.rend());
    return out;
}

std::string vec_str(const std::vector<long long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

// character_gf_rows with a pattern counter
LaurentPoly counted_gf(CharFamily f, const std::vector<HalfInt>& bottom, const std::vector<HalfInt>& top,
                       Counters& c) {
    PatternQuery q;
    q.family = pattern_family_of(f);
    q.bottom = bottom;
    if (!top.empty()) q.top = top;
    LaurentPoly gf(static_cast<int>(bottom.size() - top.size()));
    for_each_pattern(q, [&](const Pattern& p) {
        gf += pattern_weight(p);
        ++c.patterns;
    });
    return gf;
}

LaurentPoly counted_gf(CharFamily f, const Partition& lam, const Partition& mu, Counters& c) {
    return counted_gf(f, lam.increasing(), mu.increasing(), c);
}

std::uint64_t as_u64(const Rational& q) { return q.get_num().get_ui(); }

Partition pad_checked(const Partition& p, int n, const char* what) {
    if (n < static_cast<int>(p.size())) {
        for (std::size_t i = n; i < p.size(); ++i)
            if (p[i] != HalfInt(0)) throw InputError(std::string(what) + " has more than n non-zero parts");
        return Partition(std::vector<HalfInt>(p.parts.begin(), p.parts.begin() + n));
    }
    return p.padded(n);
}

Check poly_check(const std::string& name, const LaurentPoly& a, const LaurentPoly& b) {
    return Check{name, a == b, a.str(), b.str()};
}

}  // namespace

// ---------------------------------------------------------------------------

Json Report::to_json(bool timing) const {
    Json j;
    j["identity"] = identity;
    if (part) j["part"] = part;
    if (!family.empty()) j["family"] = family;
    j["n"] = n;
    j["m"] = m;
    j["lambda"] = lam.str();
    j["mu"] = mu.str();
    j["lhs"] = {{"str", lhs.str()}, {"poly", lhs.to_json()}};
    j["rhs"] = {{"str", rhs.str()}, {"poly", rhs.to_json()}};
    j["equal"] = equal;
    if (contained) j["contained"] = *contained;
    Json cs = Json::array();
    for (const auto& c : checks) cs.push_back({{"name", c.name}, {"equal", c.equal}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    j["checks"] = cs;
    j["counters"] = {{"patterns", counters.patterns},
                     {"tableaux", counters.tableaux},
                     {"matchings", counters.matchings},
                     {"points", counters.points},
                     {"resampled", counters.resampled}};
    if (timing) j["elapsed_ms"] = elapsed_ms;
    j["seed"] = seed ? Json(*seed) : Json(nullptr);
    return j;
}

std::string Report::summary() const {
    std::ostringstream os;
    os << (equal ? "PASS " : "FAIL ") << identity;
    if (part) os << " part " << part;
    if (!family.empty()) os << " " << family;
    os << " n=" << n;
    if (m) os << " m=" << m;
    os << " lambda=" << lam.str();
    if (mu.size()) os << " mu=" << mu.str();
    if (contained && !*contained) os << " (inner hat not contained)";
    int failed = 0;
    for (const auto& c : checks) failed += !c.equal;
    os << " checks=" << checks.size() - failed << "/" << checks.size();
    os << " patterns=" << counters.patterns;
    if (counters.tableaux) os << " tableaux=" << counters.tableaux;
    if (counters.matchings) os << " matchings=" << counters.matchings;
    if (counters.points) os << " points=" << counters.points;
    if (counters.resampled) os << " resampled=" << counters.resampled;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << " " << elapsed_ms << " ms";
    return os.str();
}

// ---------------------------------------------------------------------------

std::vector<long long> hat_outer(int part, const Partition& lam, long long shift) {
    std::vector<long long> out;
    const long long bump = part == 1 ? 1 : 0;
    for (std::size_t i = 0; i < lam.size(); ++i) out.push_back(lam[i].to_int() + bump + shift);
    for (std::size_t i = lam.size(); i-- > 0;) out.push_back(-lam[i].to_int() + shift);
    return out;
}

std::vector<long long> hat_inner(int part, const Partition& mu, long long shift) {
    return hat_outer(part, mu, shift);
}

LaurentPoly specialize_pairs(const LaurentPoly& p) {
    if (p.nvars() % 2) throw InputError("pair specialization needs an even number of variables");
    const int nv = p.nvars() / 2;
    return p.map_exponents(nv, [nv](const Exponent& e) {
        Exponent r(nv);
        for (int i = 0; i < nv; ++i) r[i] = e[2 * i] - e[2 * i + 1];
        return r;
    });
}

LaurentPoly half_root_factor(int nvars) {
    LaurentPoly out = LaurentPoly::constant(nvars, 1);
    for (int i = 0; i < nvars; ++i)
        out *= LaurentPoly::var(nvars, i, 1) + LaurentPoly::var(nvars, i, -1);
    return out;
}

Report verify_skew(int part, const Partition& lam_in, const Partition& mu_in, int n, int m) {
    auto t0 = Clock::now();
    if (part != 1 && part != 2) throw InputError("part must be 1 or 2");
    if (!lam_in.is_integer() || !mu_in.is_integer())
        throw InputError("the factorization identities take integer partitions");
    if (n == 0) n = static_cast<int>(lam_in.size());
    if (m == 0) m = static_cast<int>(mu_in.size());
    if (n < 1) throw InputError("n must be positive");
    if (m < 0 || m >= n) throw InputError("need 0 <= m < n");

    Report r;
    r.identity = "skew";
    r.part = part;
    r.n = n;
    r.m = m;
    r.lam = pad_checked(lam_in, n, "lambda");
    r.mu = pad_checked(mu_in, m, "mu");
    const long long shift = r.lam[0].to_int();
    const auto outer = hat_outer(part, r.lam, shift);
    const auto inner = hat_inner(part, r.mu, shift);
    bool inside = true;
    for (std::size_t i = 0; i < inner.size(); ++i) inside = inside && inner[i] <= outer[i];
    r.contained = inside;

    LaurentPoly schur = counted_gf(CharFamily::Schur, increasing_of(outer), increasing_of(inner), r.counters);
    LaurentPoly lhs = specialize_pairs(schur);
    r.checks.push_back(Check{"hat shapes", true, vec_str(outer), vec_str(inner)});

    const HalfInt bump = part == 1 ? HalfInt(1) : HalfInt::from_doubled(1);
    Partition lam_b = r.lam.shifted(bump), mu_b = r.mu.shifted(bump);
    LaurentPoly first = counted_gf(part == 1 ? CharFamily::Sp : CharFamily::SoOdd, r.lam, r.mu, r.counters);
    LaurentPoly second = counted_gf(CharFamily::Oe, lam_b, mu_b, r.counters);
    if (part == 2) lhs *= half_root_factor(n - m);
    r.lhs = lhs;
    r.rhs = first * second;
    r.checks.push_back(poly_check("lhs = rhs", r.lhs, r.rhs));
    if (!inside) {
        // zero convention for shapes that do not nest
        const LaurentPoly zero(n - m);
        r.checks.push_back(poly_check("lhs vanishes", r.lhs, zero));
        r.checks.push_back(poly_check("rhs vanishes", r.rhs, zero));
    }
    r.equal = true;
    for (const auto& c : r.checks) r.equal = r.equal && c.equal;
    r.elapsed_ms = ms_since(t0);
    return r;
}

Report verify_thm1(int part, const Partition& lam, int n) {
    if (!lam.is_integer()) throw InputError("the factorization identities take integer partitions");
    if (n == 0) n = static_cast<int>(lam.size());
    Report r = verify_skew(part, lam, Partition(), n, 0);
    r.identity = "thm1";
    r.contained.reset();
    return r;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<SignSelector> sign_selectors(int n) {
    std::vector<SignSelector> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        SignSelector s(n);
        for (int i = 0; i < n; ++i) s[i] = (mask >> i) & 1;
        out.push_back(s);
    }
    return out;
}

LaurentPoly counted_matching_gf(const GraphSpec& s, Counters& c) {
    auto g = build_graph(s);
    c.matchings += as_u64(matching_count(g));
    return matching_gf(g);
}

// matching-side generating function, or nullopt when no model applies
std::optional<LaurentPoly> model_gf(CharFamily f, const Partition& lam, const Partition& mu, Counters& c) {
    const bool straight = mu.size() == 0;
    switch (f) {
        case CharFamily::Schur:
            if (!lam.is_integer()) return std::nullopt;
            return counted_matching_gf(model_spec(MatchingModel::SchurT, lam, mu), c);
        case CharFamily::Sp:
            if (!straight) return std::nullopt;
            return counted_matching_gf(model_spec(MatchingModel::SymplecticHTm, lam), c);
        case CharFamily::SoOdd:
            if (!straight) return std::nullopt;
            return counted_matching_gf(model_spec(MatchingModel::OddHHTm, lam), c);
        case CharFamily::Oe: {
            if (!straight) return std::nullopt;
            const int n = static_cast<int>(lam.size());
            // integer shapes use the 1/2-weighted graph, half shapes keep HHTplus
            GraphSpec s = model_spec(MatchingModel::OrthogonalHTp, lam);
            if (lam.is_integer()) s.family = GraphFamily::HTplus;
            LaurentPoly total(n);
            for (const auto& sg : sign_selectors(n)) {
                s.sigma = sg;
                LaurentPoly term = counted_matching_gf(s, c);
                if (!lam.is_integer()) {
                    Exponent e(n);
                    for (int i = 0; i < n; ++i) e[i] = sg[i] ? -1 : 1;
                    term *= LaurentPoly::monomial(n, e);
                }
                total += term;
            }
            return total;
        }
    }
    return std::nullopt;
}

}  // namespace

Report cross_check(CharFamily f, const Partition& lam_in, const Partition& mu_in, int n, int npoints,
                   std::uint64_t seed) {
    auto t0 = Clock::now();
    if (npoints < 1) throw InputError("need at least one point");
    if (n == 0) n = static_cast<int>(lam_in.size());
    if (n < 1) throw InputError("n must be positive");
    const int m = static_cast<int>(mu_in.size());
    if (m >= n) throw InputError("mu must have fewer parts than n");
    if (m > 0 && mu_in.is_integer() != lam_in.is_integer()) throw InputError("lambda and mu on different grids");
    if (!lam_in.is_integer() && f != CharFamily::Oe) throw InputError("half-integer shapes only for oe");

    Report r;
    r.identity = "crosscheck";
    r.family = char_family_name(f);
    r.n = n;
    r.m = m;
    r.lam = pad_checked(lam_in, n, "lambda");
    r.mu = mu_in;
    r.seed = seed;

    LaurentPoly gf = counted_gf(f, r.lam, r.mu, r.counters);
    r.lhs = gf;
    std::optional<LaurentPoly> reference;

    if (r.lam.is_integer()) {
        LaurentPoly tgf(n - m);
        for_each_tableau(tableau_family_of(f), r.lam, r.mu, [&](const SkewTableau& t) {
            tgf += tableau_weight(t);
            ++r.counters.tableaux;
        });
        r.checks.push_back(poly_check("pattern gf = tableau gf", gf, tgf));
        reference = tgf;
    }

    if (auto mgf = model_gf(f, r.lam, r.mu, r.counters)) {
        r.checks.push_back(poly_check("pattern gf = matching gf", gf, *mgf));
        if (!reference) reference = *mgf;
    }

    if (m == 0) {
        std::mt19937_64 rng(seed);
        const bool roots = uses_roots(f, r.lam);
        for (int k = 0; k < npoints; ++k) {
            for (int attempt = 0;; ++attempt) {
                if (attempt > 1000) throw std::runtime_error("could not find a non-degenerate point");
                auto pt = random_point(n, rng);
                Rational det;
                try {
                    det = char_eval_det(f, r.lam, n, pt);
                } catch (const DegeneratePoint&) {
                    ++r.counters.resampled;
                    continue;
                }
                Rational val = roots ? gf.eval_roots(pt) : gf.eval(pt);
                std::string where;
                for (std::size_t i = 0; i < pt.size(); ++i) where += (i ? "," : "") + rational_str(pt[i]);
                r.checks.push_back(Check{std::string(roots ? "roots " : "point ") + "(" + where + ")", val == det,
                                         rational_str(val), rational_str(det)});
                ++r.counters.points;
                break;
            }
        }
    }

    if (!reference) throw InputError("no symbolic reference for this family and shape");
    r.rhs = *reference;
    r.equal = r.lhs == r.rhs;
    for (const auto& c : r.checks) r.equal = r.equal && c.equal;
    r.elapsed_ms = ms_since(t0);
    return r;
}

// ---------------------------------------------------------------------------

std::vector<Partition> partitions_in_box(int parts, int maxpart) {
    std::vector<Partition> out;
    std::vector<long long> cur;
    auto rec = [&](auto&& self, long long hi) -> void {
        if (static_cast<int>(cur.size()) == parts) {
            out.push_back(Partition::from_ints(cur));
            return;
        }
        for (long long v = hi; v >= 0; --v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, maxpart);
    return out;
}

std::vector<Report> selftest(bool full, std::uint64_t seed) {
    const int nmax = full ? 3 : 2;
    const int lmax = full ? 2 : 1;
    std::vector<Report> out;
    for (int n = 1; n <= nmax; ++n)
        for (const auto& lam : partitions_in_box(n, lmax))
            for (int part : {1, 2}) out.push_back(verify_thm1(part, lam, n));
    for (int n = 1; n <= nmax; ++n)
        for (int m = 1; m < n; ++m)
            for (const auto& lam : partitions_in_box(n, lmax))
                for (const auto& mu : partitions_in_box(m, lmax))
                    for (int part : {1, 2}) out.push_back(verify_skew(part, lam, mu, n, m));
    // the shape pair whose hats do not nest
    if (full) out.push_back(verify_skew(1, Partition::parse("3,2,2"), Partition::parse("1,1"), 3, 2));

    const int cmax = full ? 3 : 2;
    const int points = full ? 5 : 3;
    std::uint64_t s = seed;
    for (auto f : {CharFamily::Schur, CharFamily::Sp, CharFamily::Oe, CharFamily::SoOdd})
        for (int n = 1; n <= nmax; ++n)
            for (const auto& lam : partitions_in_box(n, cmax)) {
                out.push_back(cross_check(f, lam, Partition(), n, points, s++));
                if (f == CharFamily::Oe)
                    out.push_back(cross_check(f, lam.shifted(HalfInt::from_doubled(1)), Partition(), n, points, s++));
            }
    return out;
}

}  // namespace ccfact
