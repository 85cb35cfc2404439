#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/metric_space.hpp"

namespace ramsey {

/// Group or leaf multiplicity: a finite count, omega (one copy per natural
/// number), or unbounded (one copy of size n per natural number; only valid
/// on groups whose shape is a leaf).
struct Mult {
    enum class Kind { finite, omega, unbounded };
    Kind kind = Kind::finite;
    std::int64_t count = 1;

    static Mult fin(std::int64_t k) { return {Kind::finite, k}; }
    static Mult omega() { return {Kind::omega, 0}; }
    static Mult unbounded() { return {Kind::unbounded, 0}; }
    bool is_finite() const { return kind == Kind::finite; }
};

/// Leaf cluster: `count` points (or omega), pairwise at the tree's
/// smallest level value.
struct LeafSpec {
    bool omega = false;
    std::int64_t count = 1;
};

struct TreeNode;

/// One child group of an internal node: `mult` copies of a common shape.
/// Exactly one of `node` / `leaf` is set.
struct TreeGroup {
    Mult mult;
    std::shared_ptr<const TreeNode> node;
    std::optional<LeafSpec> leaf;
};

struct TreeNode {
    std::vector<TreeGroup> groups;
};

/// Finite presentation of a (possibly infinite) ultrametric space with
/// finite scale. `levels` lists the scale top-down (strictly decreasing,
/// positive); an internal node at depth d splits its children at
/// levels[d]; points sharing a leaf sit at the smallest level.
struct ProfileTree {
    std::vector<Rat> levels;
    TreeNode root;

    int num_levels() const { return (int)levels.size(); }
    /// Level value for the 1-based ascending index used in verdicts
    /// (index 1 = smallest value).
    const Rat& level_value(int ascending_index) const {
        return levels[levels.size() - ascending_index];
    }
};

/// Structural validation; throws input_error on any malformed piece.
void validate_tree(const ProfileTree& t);

enum class ObstructionClause {
    infinitely_many_infinite_classes,
    unbounded_finite_classes
};
std::string to_string(ObstructionClause c);

struct RamseyVerdict {
    bool universal = true;
    struct Obstruction {
        int level_index; // 1-based, ascending (1 = smallest level)
        ObstructionClause clause;
    };
    std::optional<Obstruction> obstruction;
    std::optional<ScaleMap> witness_coloring; // on the full tree scale
};

/// Decides whether every free ultrafilter on the presented space is
/// metrically Ramsey: at each level the equivalence classes must comprise
/// finitely many infinite ones and uniformly bounded finite ones.
RamseyVerdict decide_universal_ramsey(const ProfileTree& t);

struct Materialized {
    FiniteMetricSpace space;
    bool truncated = false; // budget ran out below the finite mandatory part
};

/// Deterministic finite sample with at most `budget` points. Infinite
/// features grow in synchronized rounds (round r tops every omega leaf up
/// to r points, every omega/unbounded group up to r copies), so small
/// budgets still realize structural diversity.
Materialized materialize(const ProfileTree& t, int budget);

/// Two-level tree (scale {1,2}) whose classes are the partition blocks:
/// within a block distance 1, across blocks distance 2. Blocks are
/// canonicalized by least point index.
ProfileTree from_partition(const std::vector<std::string>& points,
                           const std::vector<std::vector<std::string>>& blocks);

/// Two-level tree with the given class sizes (finite, omega, or an
/// unbounded run of sizes 1,2,3,...).
ProfileTree two_level_tree(const std::vector<Mult>& class_sizes);

struct WitnessSetResult {
    FiniteMetricSpace space; // the sample the witness lives in
    int anchor = 0;
    std::vector<int> y; // k points, excluding the anchor
    SequenceKind kind = SequenceKind::increasing;
    std::vector<Rat> h; // h(y[j]) per the kind
    bool guarantee_verified = false;
    int maps_checked = 0;
};

/// Anchor plus k points extracted from the tree (a level-descending chain
/// gives kind increasing, an equidistance class gives constant-tail),
/// with the guarantee checked over every scale map: the majority color
/// class of f∘h within Y is monochrome of size >= ceil(k/2).
WitnessSetResult witness_set(const ProfileTree& t, int k, int budget = 0);

struct ObstructionColoring {
    ScaleMap coloring; // on the full tree scale: 0 up to the level, 1 above
    int level_index;   // 1-based ascending
    ObstructionClause clause;
};

/// The within/across coloring at the failing level. Requires a
/// non-universal tree (throws precondition_error otherwise).
ObstructionColoring obstruction_coloring(const ProfileTree& t);

struct ObstructionBound {
    int num_classes = 0;
    int max_class = 0;
    int bound = 0;          // max(num_classes, max_class)
    int max_monochrome = 0; // under the obstruction coloring
    bool holds = false;
};

/// Evaluates the monochrome bound on a concrete sample at the failing
/// level value.
ObstructionBound check_obstruction_bound(const FiniteMetricSpace& sample,
                                         const Rat& level_value,
                                         const ScaleMap& full_coloring);

/// Scale map restricted to a sub-scale (every value must be present).
ScaleMap restrict_scale_map(const ScaleMap& f, const Scale& sub);

} // namespace ramsey
