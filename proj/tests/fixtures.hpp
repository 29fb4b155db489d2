#ifndef LATPATH_TEST_FIXTURES_HPP
#define LATPATH_TEST_FIXTURES_HPP

#include <vector>

// Sequence prefixes embedded for offline checks.
namespace fixtures {

// A000108, Catalan numbers.
inline const std::vector<long> catalan{1,       1,        2,         5,         14,        42,       132,
                                       429,     1430,     4862,      16796,     58786,     208012,   742900,
                                       2674440, 9694845, 35357670, 129644790, 477638700, 1767263190};

// A001006, Motzkin numbers.
inline const std::vector<long> motzkin{1,     1,     2,      4,      9,      21,      51,      127,     323,
                                       835,   2188,  5798,   15511,  41835,  113634,  310572,  853467,  2356779,
                                       6536382, 18199284, 50852019};

// A001764, binom(3n,n)/(2n+1).
inline const std::vector<long> ternary{1, 1, 3, 12, 55, 273, 1428, 7752, 43263, 246675, 1430715, 8414640};

}  // namespace fixtures

#endif  // LATPATH_TEST_FIXTURES_HPP
