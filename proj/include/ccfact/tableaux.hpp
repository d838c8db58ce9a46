// Skew tableaux for the four families and the maps to trapezoidal patterns.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ccfact/algebra.hpp"
#include "ccfact/characters.hpp"
#include "ccfact/patterns.hpp"

namespace ccfact {

enum class TableauFamily { Ordinary, Symplectic, EvenOrth, OddOrth };

std::string tableau_family_name(TableauFamily f);
TableauFamily parse_tableau_family(const std::string& s);
TableauFamily tableau_family_of(CharFamily f);
PatternFamily pattern_family_of(TableauFamily f);

enum class Deco { Plain, Bar, Hat, Check };

struct Symbol {
    int level = 1;
    Deco deco = Deco::Plain;

    static Symbol parse(const std::string& s);  // "2", "2bar", "2hat", "2check"
    std::string str() const;
    bool operator==(const Symbol&) const = default;
};

// position in the family alphabet; throws if the decoration is not allowed
int symbol_key(TableauFamily f, Symbol s);

using Cell = std::optional<Symbol>;

// Shape outer/inner with n = len(outer) rows and m = len(inner); inner is
// padded with zeros. Inner cells are empty.
struct SkewTableau {
    TableauFamily family = TableauFamily::Ordinary;
    Partition outer, inner;
    std::vector<std::vector<Cell>> cells;

    int n() const { return static_cast<int>(outer.size()); }
    int m() const { return static_cast<int>(inner.size()); }
    int nvars() const { return n() - m(); }
    long long inner_part(int r) const { return r < m() ? inner[r].to_int() : 0; }

    Json to_json() const;
    static SkewTableau from_json(const Json& j);
    std::string str() const;  // rows separated by '/', cells by ','
    bool operator==(const SkewTableau& o) const {
        return family == o.family && outer == o.outer && inner == o.inner && cells == o.cells;
    }
};

std::vector<std::string> validate_tableau(const SkewTableau& t);
LaurentPoly tableau_weight(const SkewTableau& t);

// every valid tableau of the shape; none when inner is not contained in outer
void for_each_tableau(TableauFamily f, const Partition& outer, const Partition& inner,
                      const std::function<void(const SkewTableau&)>& fn);
std::vector<SkewTableau> enumerate_tableaux(TableauFamily f, const Partition& outer, const Partition& inner);
LaurentPoly tableau_gf(TableauFamily f, const Partition& outer, const Partition& inner);

// pattern -> tableau; the family follows the pattern family
SkewTableau pattern_to_tableau(const Pattern& p);
// tableau -> pattern
Pattern tableau_to_pattern(const SkewTableau& t);

}  // namespace ccfact
