#pragma once

#include <bitset>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

/// Hard cap for the exact-search graphs. Adjacency is kept as fixed bitsets.
inline constexpr int kMaxSearchPoints = 256;

using PointMask = std::bitset<kMaxSearchPoints>;

/// Undirected graph over vertices 0..n-1 as adjacency bitsets.
struct BitGraph {
    explicit BitGraph(int n_) : n(n_), adj(n_) {
        if (n_ < 0 || n_ > kMaxSearchPoints)
            throw input_error("search graph limited to " +
                              std::to_string(kMaxSearchPoints) + " points");
    }
    void add_edge(int u, int v) {
        adj[u].set(v);
        adj[v].set(u);
    }
    int n;
    std::vector<PointMask> adj;
};

/// Exact maximum clique size within `allowed` (branch and bound with a
/// greedy-coloring bound; deterministic).
int max_clique_size(const BitGraph& g, const PointMask& allowed);
int max_clique_size(const BitGraph& g);

/// Whether `allowed` contains a clique of size >= target.
bool has_clique(const BitGraph& g, const PointMask& allowed, int target);

/// The lexicographically least maximum clique, comparing vertex sets as
/// ascending index sequences. Deterministic.
std::vector<int> lex_least_max_clique(const BitGraph& g);

/// Lexicographically least clique of exactly `size` inside `allowed`;
/// empty vector when none exists.
std::vector<int> lex_least_clique(const BitGraph& g, const PointMask& allowed,
                                  int size);

} // namespace ramsey
