// End-to-end checks of the factorization identities and the cross-model
// equalities, packaged as JSON reports.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccfact/algebra.hpp"
#include "ccfact/characters.hpp"

namespace ccfact {

// One sub-comparison inside a report.
struct Check {
    std::string name;
    bool equal = false;
    std::string lhs, rhs;  // printed values
};

struct Counters {
    std::uint64_t patterns = 0;
    std::uint64_t tableaux = 0;
    std::uint64_t matchings = 0;
    std::uint64_t points = 0;
    std::uint64_t resampled = 0;  // degenerate random points thrown away
    bool operator==(const Counters&) const = default;
};

struct Report {
    std::string identity;  // "thm1", "skew" or "crosscheck"
    int part = 0;          // 0 when not applicable
    std::string family;    // crosscheck only
    int n = 0, m = 0;
    Partition lam, mu;
    LaurentPoly lhs, rhs;
    bool equal = false;  // lhs == rhs and every check holds
    std::optional<bool> contained;  // skew: inner hat shape inside the outer one
    std::vector<Check> checks;
    Counters counters;
    double elapsed_ms = 0;
    std::optional<std::uint64_t> seed;

    // timing=false drops elapsed_ms so reports can be compared
    Json to_json(bool timing = true) const;
    std::string summary() const;
};

// The hat shapes, as weakly decreasing integer vectors (entries may be
// negative when mu_1 > lam_1).
std::vector<long long> hat_outer(int part, const Partition& lam, long long shift);
std::vector<long long> hat_inner(int part, const Partition& mu, long long shift);

// (x_1..x_{2N}) -> (x_1, 1/x_1, ..., x_N, 1/x_N)
LaurentPoly specialize_pairs(const LaurentPoly& p);
// prod_i (x_i^{1/2} + x_i^{-1/2})
LaurentPoly half_root_factor(int nvars);

// Part 1: s_hat(x, xbar) = sp_lam * oe_{lam+1}. Part 2 in cleared form:
// s_hat(x, xbar) * prod(x^{1/2} + xbar^{1/2}) = so_odd_lam * oe_{lam+1/2}.
// n = 0 means len(lam).
Report verify_thm1(int part, const Partition& lam, int n = 0);

// Skew version with m inner rows; m = 0 and n = 0 mean len(mu) and len(lam).
Report verify_skew(int part, const Partition& lam, const Partition& mu, int n = 0, int m = 0);

// Pattern GF against the tableau GF, the determinant at random points
// (straight shapes) and the matching models where one exists.
Report cross_check(CharFamily f, const Partition& lam, const Partition& mu, int n, int npoints,
                   std::uint64_t seed);

// every partition with exactly `parts` parts and largest part <= maxpart
std::vector<Partition> partitions_in_box(int parts, int maxpart);

// Grid of reports; full covers n <= 3 and lam_1 <= 2 (3 for crosscheck).
std::vector<Report> selftest(bool full, std::uint64_t seed = 17);

}  // namespace ccfact
