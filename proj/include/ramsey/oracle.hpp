#pragma once

#include "ramsey/coloring.hpp"

namespace ramsey {
namespace oracle {

/// Exhaustive subset enumeration, independent of the clique search.
/// Same tie-breaking as max_monochrome (size desc, color 0 first, lex
/// least). Limited to 20 points.
MonochromeResult brute_max_monochrome(const FiniteMetricSpace& s,
                                      const PairColoring& chi);

/// Whether every symmetric {1,2}-valued distance assignment on n points
/// (always a metric) contains an equidistance subset of size k.
/// Enumerates all 2^C(n,2) assignments; n is capped at 6.
bool equidistance_guarantee(int n, int k);

} // namespace oracle
} // namespace ramsey
