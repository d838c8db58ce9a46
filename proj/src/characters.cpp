#include "ccfact/characters.hpp"

#include <set>

namespace ccfact {

CharFamily parse_char_family(const std::string& s) {
    if (s == "schur") return CharFamily::Schur;
    if (s == "sp") return CharFamily::Sp;
    if (s == "oe") return CharFamily::Oe;
    if (s == "so_odd") return CharFamily::SoOdd;
    throw InputError("unknown family: " + s);
}

std::string char_family_name(CharFamily f) {
    switch (f) {
        case CharFamily::Schur: return "schur";
        case CharFamily::Sp: return "sp";
        case CharFamily::Oe: return "oe";
        case CharFamily::SoOdd: return "so_odd";
    }
    return "?";
}

bool uses_roots(CharFamily f, const Partition& lam) {
    return f == CharFamily::SoOdd || !lam.is_integer();
}

namespace {

// x^a at the point; a on the half grid
Rational power(const Rational& v, HalfInt a, bool roots) {
    if (roots) return rational_pow(v, a.doubled());
    return rational_pow(v, a.to_int());
}

}  // namespace

Rational char_eval_det(CharFamily f, const Partition& lam0, int n, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != n) throw InputError("point length must equal n");
    Partition lam = lam0.is_integer() ? lam0.padded(n) : lam0;
    if (static_cast<int>(lam.size()) != n) throw InputError("half-integer partition needs n parts");
    if ((f == CharFamily::Schur || f == CharFamily::Sp) && !lam.is_integer())
        throw InputError("family needs an integer partition");
    const bool roots = uses_roots(f, lam);
    for (const auto& v : point)
        if (v == 0) throw InputError("zero coordinate");

    auto entry = [&](const Rational& x, HalfInt e) -> Rational {
        switch (f) {
            case CharFamily::Schur: return power(x, e, roots);
            case CharFamily::Sp:
            case CharFamily::SoOdd: return power(x, e, roots) - power(x, -e, roots);
            case CharFamily::Oe: return power(x, e, roots) + power(x, -e, roots);
        }
        return 0;
    };
    HalfInt extra = 0;
    if (f == CharFamily::Sp) extra = 1;
    if (f == CharFamily::SoOdd) extra = HalfInt::from_doubled(1);

    Matrix num(n, std::vector<Rational>(n)), den(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            HalfInt base = HalfInt(n - 1 - j) + extra;
            num[i][j] = entry(point[i], lam[j] + base);
            den[i][j] = entry(point[i], base);
        }
    Rational d = det_exact(den);
    if (d == 0) throw DegeneratePoint("degenerate point");
    Rational v = det_exact(num) / d;
    if (f == CharFamily::Oe && n > 0 && lam[n - 1] != HalfInt(0)) v *= 2;
    return v;
}

std::vector<Rational> random_point(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(1, 50);
    std::vector<Rational> pt;
    std::set<Rational> seen;
    while (static_cast<int>(pt.size()) < n) {
        Rational q(d(rng), d(rng));
        q.canonicalize();
        // 1 and reciprocal pairs make the orthogonal and symplectic denominators vanish
        if (q == 1 || seen.count(1 / q)) continue;
        if (seen.insert(q).second) pt.push_back(q);
    }
    return pt;
}

}  // namespace ccfact
