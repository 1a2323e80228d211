#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "plateau/bigint.hpp"
#include "plateau/polynomial.hpp"

namespace plateau {

enum class Family { stirling, matching, permutation, my, invseq };

Family parse_family(std::string_view name);
std::string family_name(Family f);

// Exact multivariate counting table: statistic tuples -> counts. Produced
// by a full enumeration, so the total equals the family size.
struct StatisticDistribution {
    int arity = 1;
    std::map<std::vector<long long>, BigInt> table;
    BigInt total = 0;

    friend bool operator==(const StatisticDistribution&, const StatisticDistribution&) = default;
};

// Statistics available per family:
//   stirling: ap, asc, plat        matching: so, oo, oe, eo, ee
//   permutation: exc, cyc, cdes    my: pos, neg, star
//   invseq: asc
// Throws std::invalid_argument for a statistic the family does not have.
StatisticDistribution family_distribution(Family family, int n,
                                          const std::vector<std::string>& selector, int k = 1);

std::vector<std::string> default_selector(Family f);

// Deterministic key order (lexicographic tuples); counts as decimal strings.
std::string distribution_to_json(const StatisticDistribution& dist);
std::string distribution_to_csv(const StatisticDistribution& dist);

// Arity-1 distribution over non-negative statistic values as a polynomial.
Polynomial distribution_to_polynomial(const StatisticDistribution& dist);

}  // namespace plateau
