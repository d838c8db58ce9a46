#include "ccfact/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace ccfact {

Rational parse_rational(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw InputError("empty rational");
    Rational q;
    if (q.set_str(t, 10) != 0) throw InputError("bad rational: " + s);
    if (q.get_den() == 0) throw InputError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

Rational rational_pow(const Rational& q, long e) {
    if (e == 0) return 1;
    if (q == 0) {
        if (e < 0) throw InputError("zero to a negative power");
        return 0;
    }
    unsigned long k = e < 0 ? -e : e;
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), k);
    Rational r = e < 0 ? Rational(den, num) : Rational(num, den);
    r.canonicalize();
    return r;
}

Rational rational_sqrt(const Rational& q) {
    if (q < 0 || !mpz_perfect_square_p(q.get_num_mpz_t()) ||
        !mpz_perfect_square_p(q.get_den_mpz_t()))
        throw InputError("not a rational square: " + q.get_str());
    mpz_class a, b;
    mpz_sqrt(a.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(b.get_mpz_t(), q.get_den_mpz_t());
    return Rational(a, b);
}

HalfInt HalfInt::parse(const std::string& s) {
    Rational q = parse_rational(s);
    Rational d = q * 2;
    if (d.get_den() != 1) throw InputError("not on the half grid: " + s);
    if (!d.get_num().fits_slong_p()) throw InputError("too large: " + s);
    return from_doubled(d.get_num().get_si());
}

long long HalfInt::to_int() const {
    if (d_ % 2 != 0) throw InputError("half-odd value where an integer is required");
    return d_ / 2;
}

std::string HalfInt::str() const {
    if (d_ % 2 == 0) return std::to_string(d_ / 2);
    return std::to_string(d_) + "/2";
}

// ---------------------------------------------------------------------------

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
    LaurentPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, const Exponent& doubled, const Rational& c) {
    if (static_cast<int>(doubled.size()) != nvars) throw InputError("exponent length mismatch");
    LaurentPoly p(nvars);
    p.add_term(doubled, c);
    return p;
}

LaurentPoly LaurentPoly::var(int nvars, int i, int doubled) {
    Exponent e(nvars, 0);
    e.at(i) = doubled;
    return monomial(nvars, e);
}

Rational LaurentPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw InputError("exponent length mismatch");
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

static void check_dims(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars() != b.nvars()) throw InputError("dimension mismatch");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_dims(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_dims(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_dims(*this, o);
    LaurentPoly r(nvars_);
    Exponent e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::invert_var(int i) const {
    LaurentPoly r(nvars_);
    for (const auto& [e0, c] : terms_) {
        Exponent e = e0;
        e.at(i) = -e.at(i);
        r.terms_.emplace(std::move(e), c);
    }
    return r;
}

LaurentPoly LaurentPoly::map_exponents(int nv,
                                       const std::function<Exponent(const Exponent&)>& f) const {
    LaurentPoly r(nv);
    for (const auto& [e, c] : terms_) r.add_term(f(e), c);
    return r;
}

Rational LaurentPoly::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw InputError("point length mismatch");
    std::vector<Rational> root(nvars_);
    bool need_root = false;
    for (const auto& [e, c] : terms_)
        for (int d : e)
            if (d % 2 != 0) need_root = true;
    for (int i = 0; i < nvars_; ++i) {
        if (point[i] == 0) throw InputError("zero substitution");
        root[i] = point[i];
    }
    if (!need_root) {
        Rational s = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < nvars_; ++i) t *= rational_pow(point[i], e[i] / 2);
            s += t;
        }
        return s;
    }
    for (int i = 0; i < nvars_; ++i) {
        bool half = false;
        for (const auto& [e, c] : terms_)
            if (e[i] % 2 != 0) half = true;
        root[i] = half ? rational_sqrt(point[i]) : Rational(0);
    }
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i)
            t *= root[i] != 0 ? rational_pow(root[i], e[i]) : rational_pow(point[i], e[i] / 2);
        s += t;
    }
    return s;
}

Rational LaurentPoly::eval_roots(const std::vector<Rational>& root) const {
    if (static_cast<int>(root.size()) != nvars_) throw InputError("point length mismatch");
    for (const auto& r : root)
        if (r == 0) throw InputError("zero substitution");
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i) t *= rational_pow(root[i], e[i]);
        s += t;
    }
    return s;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        bool constant = std::all_of(e.begin(), e.end(), [](int d) { return d == 0; });
        if (a != 1 || constant) os << a.get_str();
        bool star = a != 1;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (star) os << "*";
            star = true;
            os << "x" << (i + 1);
            if (e[i] != 2) os << "^" << HalfInt::from_doubled(e[i]).str();
        }
        first = false;
    }
    return os.str();
}

Json LaurentPoly::to_json() const {
    Json terms = Json::array();
    for (const auto& [e, c] : terms_) terms.push_back({{"coeff", rational_str(c)}, {"exp", e}});
    return {{"nvars", nvars_}, {"terms", terms}};
}

LaurentPoly LaurentPoly::from_json(const Json& j) {
    LaurentPoly p(j.at("nvars").get<int>());
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("exp").get<Exponent>(), parse_rational(t.at("coeff").get<std::string>()));
    return p;
}

LaurentPoly laurent_combine(CombineOp op, const LaurentPoly& a, const LaurentPoly& b) {
    switch (op) {
        case CombineOp::Add: return a + b;
        case CombineOp::Mul: return a * b;
        case CombineOp::Scale:
            if (b.size() > 1 || (b.size() == 1 && b.terms().begin()->first != Exponent(b.nvars(), 0)))
                throw InputError("scale expects a constant");
            return a.scaled(b.is_zero() ? Rational(0) : b.terms().begin()->second);
    }
    return a;
}

LaurentPoly laurent_combine(CombineOp op, const LaurentPoly& a, const Rational& c) {
    if (op != CombineOp::Scale) return laurent_combine(op, a, LaurentPoly::constant(a.nvars(), c));
    return a.scaled(c);
}

// Bareiss elimination; exact division at each step, row swaps on zero pivots.
Rational det_exact(Matrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw InputError("matrix not square");
    if (n == 0) return 1;
    for (auto& row : m)
        for (auto& v : row) v.canonicalize();
    Rational prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// ---------------------------------------------------------------------------

Partition::Partition(std::vector<HalfInt> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < HalfInt(0)) throw InputError("negative part in partition");
        if (i > 0 && parts[i] > parts[i - 1]) throw InputError("partition not weakly decreasing");
        if (parts[i].is_integer() != parts[0].is_integer())
            throw InputError("partition mixes integer and half-odd parts");
    }
}

Partition Partition::parse(const std::string& s) {
    std::vector<HalfInt> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) v.push_back(HalfInt::parse(tok));
    return Partition(v);
}

Partition Partition::from_ints(const std::vector<long long>& v) {
    std::vector<HalfInt> p(v.begin(), v.end());
    return Partition(p);
}

bool Partition::is_integer() const { return parts.empty() || parts[0].is_integer(); }

Partition Partition::padded(std::size_t n) const {
    if (parts.size() > n) throw InputError("partition longer than n");
    if (!is_integer() && n > parts.size()) throw InputError("cannot pad a half-integer partition");
    Partition r = *this;
    r.parts.resize(n, HalfInt(0));
    return r;
}

Partition Partition::shifted(HalfInt by) const {
    std::vector<HalfInt> v;
    for (auto p : parts) v.push_back(p + by);
    return Partition(v);
}

std::vector<HalfInt> Partition::increasing() const {
    return std::vector<HalfInt>(parts.rbegin(), parts.rend());
}

std::string halfint_row_str(const std::vector<HalfInt>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + r[i].str();
    return s;
}

std::string Partition::str() const { return "(" + halfint_row_str(parts) + ")"; }

Json Partition::to_json() const {
    Json a = Json::array();
    for (auto p : parts) a.push_back(p.str());
    return a;
}

}  // namespace ccfact
