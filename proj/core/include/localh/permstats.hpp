#pragma once

#include <cstddef>
#include <map>

#include "localh/polynomial.hpp"

namespace localh {

/// Histogram of a permutation statistic over a family of permutations of [n].
struct PermTable {
    std::size_t n = 0;
    std::map<std::size_t, Integer> histogram;

    Integer total() const;
    Polynomial polynomial() const;
};

/// Largest n accepted by the enumerators. Default 9; the environment variable
/// LOCALH_MAX_ENUM overrides it up to the hard limit of 12.
std::size_t enumeration_bound();
inline constexpr std::size_t kHardEnumerationLimit = 12;

/// Descents of all permutations of [d].
PermTable descent_table(std::size_t d, std::size_t bound = enumeration_bound());
/// Excedances of all fixed-point-free permutations of [d].
PermTable excedance_table(std::size_t d, std::size_t bound = enumeration_bound());

/// Sum of A(d,i) x^i, by enumeration.
Polynomial eulerian_polynomial(std::size_t d, std::size_t bound = enumeration_bound());
/// Derangement polynomial by enumeration, with d_0 = 1.
Polynomial derangement_enum(std::size_t d, std::size_t bound = enumeration_bound());
/// Derangement polynomial by the recurrence over k = 0..d-2 from d_0 = 1.
Polynomial derangement_recurrence(std::size_t d);

}  // namespace localh
