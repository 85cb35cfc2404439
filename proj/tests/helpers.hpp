#pragma once

#include <random>
#include <vector>

#include "ramsey/boolean_group.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/metric_space.hpp"
#include "ramsey/profile_tree.hpp"

namespace testutil {

using namespace ramsey;

inline FiniteMetricSpace space_from(std::vector<std::vector<long long>> m) {
    std::vector<std::vector<Rat>> d(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (long long v : m[i]) d[i].push_back(Rat(v));
    return FiniteMetricSpace::create({}, d);
}

// k classes of m points: within 1, across 2.
inline FiniteMetricSpace class_space(int k, int m) {
    int n = k * m;
    std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) d[i][j] = (i / m == j / m) ? Rat(1) : Rat(2);
    return FiniteMetricSpace::create({}, d);
}

// 5-cycle: adjacent pairs at 1, the rest at 2.
inline FiniteMetricSpace c5_space() {
    std::vector<std::vector<Rat>> d(5, std::vector<Rat>(5, Rat(0)));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            if (i == j) continue;
            int diff = std::min((i - j + 5) % 5, (j - i + 5) % 5);
            d[i][j] = Rat(diff == 1 ? 1 : 2);
        }
    return FiniteMetricSpace::create({}, d);
}

// points on a line at the given coordinates, metric |x-y|
inline FiniteMetricSpace line_space(std::vector<long long> pts) {
    std::vector<std::vector<Rat>> d(pts.size(),
                                    std::vector<Rat>(pts.size(), Rat(0)));
    std::vector<std::string> ids;
    for (long long p : pts) ids.push_back(std::to_string(p));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            d[i][j] = Rat(pts[i] > pts[j] ? pts[i] - pts[j] : pts[j] - pts[i]);
    return FiniteMetricSpace::create(std::move(ids), d);
}

// Entries sampled from {base..2*base} stay a metric automatically.
inline FiniteMetricSpace random_metric(std::mt19937_64& rng, int n,
                                       long long base = 4) {
    std::uniform_int_distribution<long long> pick(base, 2 * base);
    std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat v(pick(rng));
            d[i][j] = v;
            d[j][i] = v;
        }
    return FiniteMetricSpace::create({}, d);
}

inline PairColoring random_coloring(std::mt19937_64& rng, int n) {
    PairColoring chi(n);
    std::bernoulli_distribution flip(0.5);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) chi.set(i, j, flip(rng) ? 1 : 0);
    return chi;
}

inline ScaleMap random_scale_map(std::mt19937_64& rng, const Scale& scale) {
    ScaleMap f;
    f.scale = scale;
    std::bernoulli_distribution flip(0.5);
    for (std::size_t i = 0; i < scale.size(); ++i)
        f.colors.push_back(flip(rng) ? 1 : 0);
    return f;
}

// Random profile tree: mixed finite/omega/unbounded multiplicities over
// 1..4 levels. Shared by property tests and the acceptance corpus.
inline ProfileTree random_tree(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> depth_pick(1, 4);
    int depth = depth_pick(rng);
    ProfileTree t;
    for (int v = depth; v >= 1; --v)
        t.levels.push_back(rng() % 3 == 0 ? Rat(2 * v, 2) : Rat(v));

    std::uniform_int_distribution<int> group_count(1, 3);
    std::uniform_int_distribution<int> leaf_size(1, 3);
    std::uniform_int_distribution<int> mult_kind(0, 9);

    struct Gen {
        std::mt19937_64& rng;
        std::uniform_int_distribution<int>& group_count;
        std::uniform_int_distribution<int>& leaf_size;
        std::uniform_int_distribution<int>& mult_kind;
        int max_depth;

        TreeNode node(int d) {
            TreeNode out;
            int gs = group_count(rng);
            for (int g = 0; g < gs; ++g) {
                TreeGroup grp;
                int mk = mult_kind(rng);
                if (mk < 6)
                    grp.mult = Mult::fin(1 + (int)(rng() % 3));
                else if (mk < 8)
                    grp.mult = Mult::omega();
                else
                    grp.mult = Mult::unbounded();
                bool want_leaf = grp.mult.kind == Mult::Kind::unbounded ||
                                 d + 1 >= max_depth || rng() % 2 == 0;
                if (want_leaf) {
                    if (grp.mult.kind == Mult::Kind::unbounded)
                        grp.leaf = LeafSpec{false, 1};
                    else if (rng() % 4 == 0)
                        grp.leaf = LeafSpec{true, 0};
                    else
                        grp.leaf = LeafSpec{false, leaf_size(rng)};
                } else {
                    grp.node = std::make_shared<TreeNode>(node(d + 1));
                }
                out.groups.push_back(std::move(grp));
            }
            return out;
        }
    };
    Gen gen{rng, group_count, leaf_size, mult_kind, depth};
    t.root = gen.node(0);
    return t;
}

} // namespace testutil
