#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ramsey/rational.hpp"

namespace ramsey {

enum class MetricClass { not_a_metric, metric, ultrametric };

std::string to_string(MetricClass c);

/// Witness for a failed (or merely-metric) classification: the offending
/// points and a short reason. `points` holds a pair for symmetry/diagonal/
/// zero-distance failures and a triple (i,j,k) with dist(i,j) > bound for
/// triangle failures.
struct MetricViolation {
    std::string reason;
    std::vector<int> points;
};

struct ValidationResult {
    MetricClass cls = MetricClass::not_a_metric;
    // Set when cls != ultrametric: the metric violation, or the strong
    // triangle counterexample for a plain metric.
    std::optional<MetricViolation> witness;
};

/// Classifies a square rational matrix. Shape problems and negative
/// entries throw input_error; everything else is reported as a verdict.
ValidationResult classify_matrix(const std::vector<std::vector<Rat>>& dist);

/// Immutable finite metric space: point identifiers plus an exact
/// rational distance matrix. Construction validates the metric axioms.
class FiniteMetricSpace {
public:
    /// Throws input_error on shape problems; a matrix failing the metric
    /// axioms throws precondition_error with the witness in the message.
    static FiniteMetricSpace create(std::vector<std::string> points,
                                    const std::vector<std::vector<Rat>>& dist);

    int size() const { return n_; }
    const std::string& point(int i) const { return points_[i]; }
    const std::vector<std::string>& points() const { return points_; }
    const Rat& dist(int i, int j) const { return dist_[(std::size_t)i * n_ + j]; }
    MetricClass classification() const { return cls_; }
    bool is_ultrametric() const { return cls_ == MetricClass::ultrametric; }
    /// Strong-triangle counterexample when the space is metric only.
    const std::optional<MetricViolation>& ultrametric_defect() const {
        return defect_;
    }
    int index_of(const std::string& id) const;

    /// Trusted constructor for generated spaces whose classification is
    /// known by construction (integer windows, materialized trees, ...).
    /// Skips the O(n^3) validation.
    static FiniteMetricSpace trusted(std::vector<std::string> points,
                                     std::vector<Rat> flat_dist,
                                     MetricClass cls);

private:
    FiniteMetricSpace() = default;
    std::vector<std::string> points_;
    std::vector<Rat> dist_; // row-major n x n
    int n_ = 0;
    MetricClass cls_ = MetricClass::not_a_metric;
    std::optional<MetricViolation> defect_;
};

/// The window {1,...,n_max} with the |x-y| metric. Point ids are "1".."n".
FiniteMetricSpace window_space(int n_max);

/// Sorted distinct nonzero distances (zero is implicit and never stored).
using Scale = std::vector<Rat>;
Scale scale_of(const FiniteMetricSpace& s);

/// Disjoint nonempty blocks covering all point indices, each block sorted,
/// blocks ordered by least element.
struct Partition {
    std::vector<std::vector<int>> blocks;
};

/// Classes of x ~ y iff d(x,y) <= r. Requires an ultrametric space;
/// throws not_ultrametric_error carrying a triple where transitivity of
/// the relation fails.
Partition r_equivalence(const FiniteMetricSpace& s, const Rat& r);

/// {d(a,b) : a in A, b in B, a != b}. Distinct-pair semantics, so the
/// result never contains 0. Throws input_error on an empty input set.
std::set<Rat> distance_set(const FiniteMetricSpace& s,
                           const std::vector<int>& a,
                           const std::vector<int>& b);

/// Induced subspace on a nonempty subset (indices into s, any order;
/// duplicates rejected). Classification is recomputed.
FiniteMetricSpace restrict(const FiniteMetricSpace& s,
                           const std::vector<int>& subset);

} // namespace ramsey
