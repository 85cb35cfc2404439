#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ramsey/coloring.hpp"
#include "ramsey/profile_tree.hpp"

namespace ramsey {

/// Elements of the length-L truncation of the Boolean group are the
/// values 0..2^L-1; bit j of the value is coordinate j. Bit strings read
/// coordinate 0 first ("0110" has coordinate 1 and 2 set), so the
/// distance is 1 + the highest differing coordinate index.
std::uint32_t b_parse(const std::string& bits);
std::string b_format(std::uint32_t value, int len);

/// d(x,y) = least m with all coordinates >= m equal; 0 iff x = y.
int b_distance(std::uint32_t x, std::uint32_t y, int len);

/// All 2^L elements with the group ultrametric. L capped at 10 (the
/// explicit matrix grows as 4^L).
FiniteMetricSpace b_space(int len);

/// Chain-of-binary-splits presentation of the same space: materialized in
/// full it is point-for-point isometric to b_space(len).
ProfileTree b_profile_tree(int len);

struct PsViolation {
    std::array<int, 2> pair1, pair2; // element values
    std::uint32_t sum;
};

/// nullopt iff chi factors through the pair-sum x XOR y. Pair colorings
/// over b_space index points by element value.
std::optional<PsViolation> is_ps_coloring(int len, const PairColoring& chi);

struct InvarianceViolation {
    std::array<int, 2> pair;
    std::uint32_t g;
};

/// nullopt iff chi({x,y}) = chi({x+g, y+g}) for every translation g.
std::optional<InvarianceViolation> is_invariant_coloring(int len,
                                                         const PairColoring& chi);

} // namespace ramsey
