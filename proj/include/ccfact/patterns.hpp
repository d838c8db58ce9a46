// Gelfand-Tsetlin patterns and half patterns, straight and trapezoidal.
#pragma once

#include <optional>

#include "ccfact/algebra.hpp"
#include "ccfact/characters.hpp"

namespace ccfact {

enum class PatternFamily { GT, Symplectic, EvenOrth, SplitOrth };

std::string pattern_family_name(PatternFamily f);
PatternFamily parse_pattern_family(const std::string& s);

// Rows use the full numbering of the untruncated pattern. A GT pattern with
// bottom length n and top length m keeps rows m..n; a half pattern keeps rows
// 2m..2n (symplectic, split) or 2m-1..2n-1 (even orthogonal). Rows with index
// below 1 are empty. Every row is stored in increasing order.
struct Pattern {
    PatternFamily family = PatternFamily::GT;
    int n = 0;
    int m = 0;
    std::vector<std::vector<HalfInt>> rows;

    int first_row() const;
    int last_row() const;
    int row_length(int full) const;
    const std::vector<HalfInt>& row(int full) const;
    std::vector<HalfInt>& row(int full);
    int nvars() const { return n - m; }
    bool is_half() const { return family != PatternFamily::GT; }

    std::string str() const;  // rows top to bottom, "a,b;c,d"
    Json to_json() const;
    static Pattern from_json(const Json& j);
    static Pattern from_rows(PatternFamily f, int n, int m, const std::vector<std::vector<HalfInt>>& rows);
    auto operator<=>(const Pattern&) const = default;
};

// Parse "0;1;0,1;0,1" into rows (top to bottom).
std::vector<std::vector<HalfInt>> parse_rows(const std::string& s);

std::vector<std::string> validate_pattern(const Pattern& p);

// Monomial in n-m variables.
LaurentPoly pattern_weight(const Pattern& p);

struct PatternQuery {
    PatternFamily family = PatternFamily::GT;
    std::vector<HalfInt> bottom;             // increasing, length n
    std::optional<std::vector<HalfInt>> top;  // increasing, length m
    // even orthogonal: allow negative starters and union the bottom row
    // with its sign variant
    bool sign_variants = true;
};

void for_each_pattern(const PatternQuery& q, const std::function<void(const Pattern&)>& fn);
std::vector<Pattern> enumerate_patterns(const PatternQuery& q);

// Sum of pattern weights for the family. mu may be empty (straight).
LaurentPoly character_gf(CharFamily f, const Partition& lam, const Partition& mu = Partition());
// Same with raw increasing rows (entries may be negative for GT).
LaurentPoly character_gf_rows(CharFamily f, const std::vector<HalfInt>& bottom,
                              const std::vector<HalfInt>& top);

PatternFamily pattern_family_of(CharFamily f);

// J_i on a straight even orthogonal pattern, 2 <= i <= n.
Pattern j_involution(const Pattern& p, int i);

struct RoundUp {
    Pattern pattern;
    int halfcount = 0;
};
RoundUp split_to_symplectic_roundup(const Pattern& p);

}  // namespace ccfact
