#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "ramsey/metric_space.hpp"

namespace ramsey {

/// Total {0,1}-map on a scale. `colors[i]` is the color of `scale[i]`.
struct ScaleMap {
    Scale scale;
    std::vector<std::uint8_t> colors;

    std::uint8_t at(const Rat& r) const;
    bool same_domain(const Scale& other) const { return scale == other; }
};

/// Total {0,1}-coloring of unordered point pairs, stored for i < j.
class PairColoring {
public:
    explicit PairColoring(int n, std::uint8_t fill = 0)
        : n_(n), c_((std::size_t)n * (n - 1) / 2, fill) {}

    int points() const { return n_; }
    std::uint8_t at(int i, int j) const { return c_[pos(i, j)]; }
    void set(int i, int j, std::uint8_t v) { c_[pos(i, j)] = v; }

private:
    std::size_t pos(int i, int j) const {
        if (i > j) std::swap(i, j);
        return (std::size_t)i * (2 * n_ - i - 1) / 2 + (j - i - 1);
    }
    int n_;
    std::vector<std::uint8_t> c_;
};

/// chi({x,y}) = f(d(x,y)). The scale map's domain must equal the space's
/// scale exactly.
PairColoring induce_coloring(const FiniteMetricSpace& s, const ScaleMap& f);

/// Two pairs at the same distance with different colors.
struct IsometricViolation {
    std::array<int, 2> pair1;
    std::array<int, 2> pair2;
    Rat distance;
};

/// The unique scale map chi factors through, or a violation.
std::variant<ScaleMap, IsometricViolation>
recognize_isometric(const FiniteMetricSpace& s, const PairColoring& chi);

struct MonochromeResult {
    std::vector<int> subset; // ascending indices
    std::uint8_t color = 0;
};

/// Exact maximum chi-monochrome subset. Ties broken by color 0 first,
/// then the lexicographically least subset in point order.
MonochromeResult max_monochrome(const FiniteMetricSpace& s,
                                const PairColoring& chi);

struct EquidistanceResult {
    std::vector<int> subset;
    std::optional<Rat> r; // absent only for single-point results
};

/// Largest subset whose pairwise distances all equal one value. Exact:
/// inductive descent through equivalence levels on ultrametric input,
/// per-distance clique search otherwise. Ties prefer smaller r, then the
/// lexicographically least subset.
EquidistanceResult find_max_equidistance(const FiniteMetricSpace& s);

enum class SequenceKind { increasing, decreasing, constant_tail };
std::string to_string(SequenceKind k);

struct CanonicalSequence {
    SequenceKind kind = SequenceKind::increasing;
    std::vector<int> seq;
    bool exact = true; // false when the constant-tail search hit the budget
};

/// Longest injective sequence of one of the three kinds:
///   increasing      d(x0,xn) strictly increasing in n
///   decreasing      d(x0,xn) strictly decreasing in n
///   constant_tail   d(xn,xi) = d(xn,xj) for all i,j > n
/// Ties broken by kind order, then lexicographically.
CanonicalSequence canonical_sequence(const FiniteMetricSpace& s,
                                     int budget = 12);

/// Re-verifies a sequence against its claimed kind.
bool satisfies_kind(const FiniteMetricSpace& s, SequenceKind kind,
                    const std::vector<int>& seq);

enum class SeparationLevel { none, weak, strong };
std::string to_string(SeparationLevel l);

/// A within-cell distance meets a cross-cell distance (breaks weak), or
/// two distinct cross pairs share a distance (breaks strong).
struct SeparationViolation {
    std::vector<int> cells; // {n, i, j} for weak; {i, j, k, l} for strong
    Rat distance;
};

struct SeparatedFamily {
    std::vector<std::vector<int>> cells;
    SeparationLevel level = SeparationLevel::none;
    std::optional<SeparationViolation> weak_violation;
    std::optional<SeparationViolation> strong_violation;
};

/// Computes the separation level of disjoint nonempty cells by exact
/// distance-set comparisons.
SeparatedFamily check_separation(const FiniteMetricSpace& s,
                                 const std::vector<std::vector<int>>& cells);

/// Scale map behind family_coloring: within-cell distances -> 0, all
/// other scale values (cross-cell or unused) -> 1.
ScaleMap family_scale_map(const FiniteMetricSpace& s,
                          const SeparatedFamily& fam);

/// Requires at least weak separation (throws separation_error). Every
/// 0-monochrome subset of the union lies in one cell; every 1-monochrome
/// subset meets each cell at most once.
PairColoring family_coloring(const FiniteMetricSpace& s,
                             const SeparatedFamily& fam);

/// Scale map behind lift_coloring: within-cell distances and unused scale
/// values -> 0, each cross-cell distance -> idx({i,j}).
ScaleMap lift_scale_map(const FiniteMetricSpace& s, const SeparatedFamily& fam,
                        const PairColoring& idx_coloring);

/// Requires strong separation. idx_coloring lives on the cell indices.
PairColoring lift_coloring(const FiniteMetricSpace& s,
                           const SeparatedFamily& fam,
                           const PairColoring& idx_coloring);

} // namespace ramsey
