#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/coloring.hpp"

namespace ramsey {

/// Tabulated f on the window {1..n_max} with f(x) > x everywhere.
struct StepFunction {
    int n_max = 0;
    std::vector<std::int64_t> table; // table[x-1] = f(x)

    std::int64_t operator()(std::int64_t x) const { return table[x - 1]; }

    static StepFunction from_table(std::vector<std::int64_t> t);
    static StepFunction doubling(int n_max);      // f(x) = 2x
    static StepFunction successor(int n_max);     // f(x) = x+1
    static StepFunction plus_k(int n_max, int k); // f(x) = x+k
    static StepFunction square_plus1(int n_max);  // f(x) = x^2+1
};

/// The 2-coloring of the window induced by the forest of x -> f(x) edges.
/// depth is the undirected tree distance from each component's least
/// element; a1 holds the even depths, so x and f(x) never share a cell.
struct ForestPartition {
    std::vector<int> depth; // depth[x-1]
    std::vector<std::int64_t> a1, a2;

    bool in_a1(std::int64_t x) const { return depth[x - 1] % 2 == 0; }
};

ForestPartition forest_partition(const StepFunction& f);

struct PatternViolation {
    std::int64_t a = 0, x = 0; // {a, a+x, a+f(x)} all inside the set
};

/// nullopt when no {a, a+x, a+f(x)} pattern is contained in u; otherwise
/// the lexicographically first (a, x) violation.
std::optional<PatternViolation>
verify_pattern_free(const std::vector<std::int64_t>& u, const StepFunction& f);

/// Maximum monochrome subset under the difference coloring chi({x,y}) = 0
/// iff |x-y| lands in a1. The output always passes verify_pattern_free.
/// The window is capped by the search limit.
std::vector<std::int64_t> pattern_free_member(const StepFunction& f);

/// Finite thinness policy: consecutive gaps nondecreasing and the final
/// gap strictly above the floor; singletons and pairs are thin.
bool is_thin(const std::vector<std::int64_t>& t, std::int64_t floor = 2);

struct BlockSequence {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs; // (a_n, b_n)
    bool partial = false; // t exhausted before the requested count
};

/// Greedy minimal block choices: a_{n+1} is the least t > 2 b_n whose tail
/// gaps all exceed 2 a_n; b_{n+1} the least t > 2 a_{n+1} with tail gaps
/// above 2 b_n.
BlockSequence construct_blocks(const std::vector<std::int64_t>& t, int count);

/// Exact report on the five separation conditions of the block intervals.
struct BlockConditionReport {
    struct Failure {
        int condition; // 1..5
        std::vector<int> indices;
        std::int64_t distance; // shared distance value (0 for condition 1)
    };
    std::array<bool, 5> pass{true, true, true, true, true};
    std::vector<Failure> failures;
    bool all_pass() const {
        for (bool p : pass)
            if (!p) return false;
        return true;
    }
};

BlockConditionReport verify_block_conditions(const std::vector<std::int64_t>& t,
                                             const BlockSequence& blocks,
                                             std::int64_t window);

enum class BlockSide { A, B };

struct QuotientResult {
    FiniteMetricSpace space; // the window space the family lives in
    SeparatedFamily family;  // interval-trace cells, strong separation
    std::vector<int> phi;    // phi[x-1]: cell index, 0 off the union
};

/// Interval-trace cells for the chosen side plus the index map phi.
/// Requires the side's conditions to hold (throws precondition_error).
QuotientResult blocks_to_quotient(const std::vector<std::int64_t>& t,
                                  const BlockSequence& blocks, BlockSide side,
                                  std::int64_t window);

/// All pairwise differences distinct.
bool is_sidon(const std::vector<std::int64_t>& u);

/// Extends a pair coloring of a Sidon set to a scale map on the window
/// scale {1..n_max-1}: f(|x-y|) = chi for pairs of u, 0 elsewhere.
/// chi_on_u is indexed by position in u (sorted ascending).
ScaleMap extend_to_isometric(const std::vector<std::int64_t>& u,
                             const PairColoring& chi_on_u, int n_max);

} // namespace ramsey
