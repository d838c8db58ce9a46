#include <doctest.h>

#include <random>

#include "ccfact/algebra.hpp"
#include "ccfact/characters.hpp"
#include "test_util.hpp"

using namespace ccfact;

TEST_CASE("laurent add and mul") {
    auto x = LaurentPoly::var(1, 0);
    auto xb = LaurentPoly::var(1, 0, -2);
    auto s = x + xb;
    CHECK(s.size() == 2);
    auto h = LaurentPoly::var(1, 0, 1);
    CHECK(h * h == x);
    auto x2 = LaurentPoly::var(1, 0, 4) + LaurentPoly::var(1, 0, -4);
    auto prod = s * x2;
    CHECK(prod == poly1({{6, 1}, {2, 1}, {-2, 1}, {-6, 1}}));
    CHECK(laurent_combine(CombineOp::Scale, s, Rational(3)).coeff({2}) == 3);
    CHECK_THROWS_AS(x + LaurentPoly::var(2, 0), InputError);
}

TEST_CASE("laurent eval") {
    auto s = LaurentPoly::var(1, 0) + LaurentPoly::var(1, 0, -2);
    CHECK(s.eval({2}) == Rational(5, 2));
    CHECK(LaurentPoly::var(1, 0, 1).eval({4}) == 2);
    CHECK_THROWS_AS(LaurentPoly::var(1, 0, 1).eval({2}), InputError);
    CHECK_THROWS_AS(s.eval({0}), InputError);
    // the six oe_(1,1) monomials
    LaurentPoly oe(2);
    for (auto e : std::vector<Exponent>{{-2, -2}, {0, 0}, {2, 2}, {-2, 2}, {0, 0}, {2, -2}}) oe.add_term(e, 1);
    CHECK(oe.eval({2, 3}) == Rational(31, 3));
    CHECK(oe.eval_roots({Rational(2), Rational(3)}) == oe.eval({4, 9}));
}

TEST_CASE("laurent json round trip") {
    auto p = LaurentPoly::var(2, 0, 3).scaled(Rational(-2, 7)) + LaurentPoly::constant(2, 5);
    auto j = p.to_json();
    CHECK(j["nvars"] == 2);
    CHECK(j["terms"][1]["coeff"] == "-2/7");
    CHECK(LaurentPoly::from_json(j) == p);
}

TEST_CASE("ring axioms and evaluation homomorphism on random samples") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        auto a = random_poly(2, rng), b = random_poly(2, rng), c = random_poly(2, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        std::vector<Rational> pt{Rational(4, 9), Rational(25)};
        CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
    }
}

namespace {
Rational cofactor_det(const Matrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Rational s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        Matrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Rational> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        Rational t = m[0][j] * cofactor_det(minor);
        s += (j % 2 ? -t : t);
    }
    return s;
}
}  // namespace

TEST_CASE("determinant") {
    CHECK(det_exact({{1}}) == 1);
    CHECK(det_exact({{1, 2}, {3, 4}}) == -2);
    CHECK(det_exact({{4, 1}, {9, 1}}) == -5);
    CHECK(det_exact({{0, 1}, {1, 0}}) == -1);
    CHECK(det_exact({{1, 2}, {2, 4}}) == 0);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 1 + t % 4;
        Matrix m(n, std::vector<Rational>(n));
        for (auto& row : m)
            for (auto& v : row) {
                int den = d(rng);
                v = Rational(d(rng), den == 0 ? 1 : std::abs(den));
                v.canonicalize();
            }
        CHECK(det_exact(m) == cofactor_det(m));
    }
}

TEST_CASE("half integers and partitions") {
    CHECK(HalfInt::parse("3/2").doubled() == 3);
    CHECK(HalfInt::parse("-2").str() == "-2");
    CHECK(HalfInt(0).sign() == 1);
    CHECK_THROWS_AS(HalfInt::parse("1/3"), InputError);
    auto p = Partition::parse("3/2,1/2");
    CHECK(!p.is_integer());
    CHECK(p.to_json() == Json::array({"3/2", "1/2"}));
    CHECK_THROWS_AS(Partition::parse("1,2"), InputError);
    CHECK_THROWS_AS(Partition::parse("1,1/2"), InputError);
    CHECK(Partition::parse("2,1").padded(3).str() == "(2,1,0)");
}

TEST_CASE("determinant characters") {
    CHECK(char_eval_det(CharFamily::Schur, Partition::parse("1"), 1, {2}) == 2);
    CHECK(char_eval_det(CharFamily::Sp, Partition::parse("1,0"), 2, {2, 3}) == Rational(35, 6));
    CHECK(char_eval_det(CharFamily::Oe, Partition::parse("1,1"), 2, {2, 3}) == Rational(31, 3));
    CHECK(char_eval_det(CharFamily::SoOdd, Partition::parse("1,0"), 2, {2, 3}) == Rational(517, 36));
    CHECK_THROWS_AS(char_eval_det(CharFamily::Schur, Partition::parse("1"), 2, {2, 2}), DegeneratePoint);
    CHECK_THROWS_AS(char_eval_det(CharFamily::Sp, Partition::parse("1/2"), 1, {2}), InputError);
}

TEST_CASE("character symmetries at random points") {
    std::mt19937_64 rng(3);
    auto lam = Partition::parse("2,1,0");
    for (auto f : {CharFamily::Sp, CharFamily::Oe, CharFamily::SoOdd}) {
        auto pt = random_point(3, rng);
        auto inv = pt;
        inv[1] = 1 / inv[1];
        CHECK(char_eval_det(f, lam, 3, pt) == char_eval_det(f, lam, 3, inv));
    }
    auto pt = random_point(3, rng);
    auto sw = pt;
    std::swap(sw[0], sw[2]);
    CHECK(char_eval_det(CharFamily::Schur, lam, 3, pt) == char_eval_det(CharFamily::Schur, lam, 3, sw));
    // Iverson factor: oe with nonzero last part is twice the plain ratio
    auto pt2 = random_point(2, rng);
    Rational x = pt2[0], y = pt2[1];
    Rational num = det_exact({{x * x + 1 / (x * x), x + 1 / x}, {y * y + 1 / (y * y), y + 1 / y}});
    Rational den = det_exact({{x + 1 / x, 2}, {y + 1 / y, 2}});
    CHECK(char_eval_det(CharFamily::Oe, Partition::parse("1,1"), 2, pt2) == 2 * num / den);
}

TEST_CASE("random points are distinct and in range") {
    std::mt19937_64 a(17), b(17);
    auto p = random_point(6, a);
    CHECK(p == random_point(6, b));
    for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK(p[i] > 0);
        CHECK(p[i].get_num() <= 50);
        CHECK(p[i].get_den() <= 50);
        for (std::size_t j = 0; j < i; ++j) CHECK(p[i] != p[j]);
    }
}
