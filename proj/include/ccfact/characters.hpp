// Determinant formulas for the four character families.
#pragma once

#include <random>

#include "ccfact/algebra.hpp"

namespace ccfact {

enum class CharFamily { Schur, Sp, Oe, SoOdd };

CharFamily parse_char_family(const std::string& s);
std::string char_family_name(CharFamily f);

struct DegeneratePoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// True when the family/shape carries half exponents; the point is then read
// as roots s_i with x_i = s_i^2.
bool uses_roots(CharFamily f, const Partition& lam);

// Exact character value. lam is padded to n parts.
Rational char_eval_det(CharFamily f, const Partition& lam, int n, const std::vector<Rational>& point);

// Pairwise distinct p/q with 1 <= p,q <= 50, no 1 and no reciprocal pairs.
std::vector<Rational> random_point(int n, std::mt19937_64& rng);

}  // namespace ccfact
