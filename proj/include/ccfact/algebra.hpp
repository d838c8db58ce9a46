// Exact rationals, half-integers and Laurent polynomials on the half grid.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace ccfact {

using Rational = mpq_class;
using Json = nlohmann::json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& q);
// q^e for integer e (q != 0 when e < 0)
Rational rational_pow(const Rational& q, long e);
// exact square root; throws InputError if q is not a square
Rational rational_sqrt(const Rational& q);

// k/2 stored as the integer k.
class HalfInt {
  public:
    HalfInt() = default;
    HalfInt(long long integer) : d_(2 * integer) {}
    static HalfInt from_doubled(long long d) {
        HalfInt h;
        h.d_ = d;
        return h;
    }
    static HalfInt parse(const std::string& s);

    long long doubled() const { return d_; }
    bool is_integer() const { return d_ % 2 == 0; }
    // integer value; throws if half-odd
    long long to_int() const;
    HalfInt abs() const { return from_doubled(d_ < 0 ? -d_ : d_); }
    int sign() const { return d_ >= 0 ? 1 : -1; }  // sgn(0) = +1
    Rational to_rational() const {
        Rational q(static_cast<long>(d_), 2L);
        q.canonicalize();
        return q;
    }
    std::string str() const;

    HalfInt operator-() const { return from_doubled(-d_); }
    HalfInt operator+(HalfInt o) const { return from_doubled(d_ + o.d_); }
    HalfInt operator-(HalfInt o) const { return from_doubled(d_ - o.d_); }
    HalfInt& operator+=(HalfInt o) {
        d_ += o.d_;
        return *this;
    }
    HalfInt& operator-=(HalfInt o) {
        d_ -= o.d_;
        return *this;
    }
    HalfInt operator*(long long k) const { return from_doubled(d_ * k); }
    auto operator<=>(const HalfInt&) const = default;

  private:
    long long d_ = 0;
};

// Doubled exponents: entry 2 means x_i^1, entry 1 means x_i^{1/2}.
using Exponent = std::vector<int>;

class LaurentPoly {
  public:
    using TermMap = std::map<Exponent, Rational>;

    explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}
    static LaurentPoly constant(int nvars, const Rational& c);
    static LaurentPoly monomial(int nvars, const Exponent& doubled, const Rational& c = 1);
    // x_i^{doubled/2}, i is 0-based
    static LaurentPoly var(int nvars, int i, int doubled = 2);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool is_monomial() const { return terms_.size() == 1; }
    Rational coeff(const Exponent& e) const;

    void add_term(const Exponent& e, const Rational& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly scaled(const Rational& c) const;
    bool operator==(const LaurentPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    // x_i -> 1/x_i
    LaurentPoly invert_var(int i) const;
    // replace each exponent vector e by f(e); result has nv variables
    LaurentPoly map_exponents(int nv, const std::function<Exponent(const Exponent&)>& f) const;

    // point[i] is the value of x_i; a half exponent needs a square value
    Rational eval(const std::vector<Rational>& point) const;
    // root[i] = s_i with x_i = s_i^2
    Rational eval_roots(const std::vector<Rational>& root) const;

    std::string str() const;
    Json to_json() const;
    static LaurentPoly from_json(const Json& j);

  private:
    int nvars_;
    TermMap terms_;
};

enum class CombineOp { Add, Mul, Scale };
// scale takes b as a constant polynomial or uses c
LaurentPoly laurent_combine(CombineOp op, const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_combine(CombineOp op, const LaurentPoly& a, const Rational& c);

using Matrix = std::vector<std::vector<Rational>>;
Rational det_exact(Matrix m);

// Weakly decreasing parts on the half grid, all integral or all half-odd.
struct Partition {
    std::vector<HalfInt> parts;

    Partition() = default;
    explicit Partition(std::vector<HalfInt> p);
    static Partition parse(const std::string& s);  // "2,1,0" or "3/2,1/2"
    static Partition from_ints(const std::vector<long long>& v);

    std::size_t size() const { return parts.size(); }
    HalfInt operator[](std::size_t i) const { return parts[i]; }
    bool is_integer() const;
    // padded with zeros to length n
    Partition padded(std::size_t n) const;
    Partition shifted(HalfInt by) const;
    // parts in increasing order (pattern rows)
    std::vector<HalfInt> increasing() const;
    std::string str() const;
    Json to_json() const;
    bool operator==(const Partition&) const = default;
};

std::string halfint_row_str(const std::vector<HalfInt>& r);

}  // namespace ccfact
