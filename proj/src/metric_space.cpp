#include "ramsey/metric_space.hpp"

#include <algorithm>
#include <unordered_set>

namespace ramsey {

std::string to_string(MetricClass c) {
    switch (c) {
    case MetricClass::not_a_metric: return "not-a-metric";
    case MetricClass::metric: return "metric";
    case MetricClass::ultrametric: return "ultrametric";
    }
    return "?";
}

ValidationResult classify_matrix(const std::vector<std::vector<Rat>>& dist) {
    const int n = (int)dist.size();
    for (const auto& row : dist)
        if ((int)row.size() != n)
            throw input_error("distance matrix is not square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dist[i][j].is_negative())
                throw input_error("negative distance entry at (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");

    ValidationResult r;
    for (int i = 0; i < n; ++i) {
        if (!dist[i][i].is_zero()) {
            r.witness = MetricViolation{"nonzero diagonal entry", {i, i}};
            return r;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (dist[i][j] != dist[j][i]) {
                r.witness = MetricViolation{"asymmetric entries", {i, j}};
                return r;
            }
            if (dist[i][j].is_zero()) {
                r.witness =
                    MetricViolation{"zero distance between distinct points", {i, j}};
                return r;
            }
        }
    // Triangle: d(i,j) <= d(i,k) + d(k,j) for every triple.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (dist[i][j] > dist[i][k] + dist[k][j]) {
                    r.witness = MetricViolation{"triangle inequality fails",
                                                {i, j, k}};
                    return r;
                }
            }
        }
    // Strong triangle: d(i,j) <= max(d(i,k), d(k,j)).
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                const Rat& m =
                    dist[i][k] > dist[k][j] ? dist[i][k] : dist[k][j];
                if (dist[i][j] > m) {
                    r.cls = MetricClass::metric;
                    r.witness = MetricViolation{"strong triangle inequality fails",
                                                {i, j, k}};
                    return r;
                }
            }
        }
    r.cls = MetricClass::ultrametric;
    return r;
}

FiniteMetricSpace
FiniteMetricSpace::create(std::vector<std::string> points,
                          const std::vector<std::vector<Rat>>& dist) {
    const int n = (int)dist.size();
    if (n == 0) throw input_error("empty distance matrix");
    if (points.empty()) {
        points.reserve(n);
        for (int i = 0; i < n; ++i) points.push_back("p" + std::to_string(i));
    }
    if ((int)points.size() != n)
        throw input_error("point list and matrix size disagree");
    {
        std::unordered_set<std::string> seen;
        for (const auto& p : points)
            if (!seen.insert(p).second)
                throw input_error("duplicate point identifier: " + p);
    }
    ValidationResult v = classify_matrix(dist);
    if (v.cls == MetricClass::not_a_metric) {
        std::string msg = "matrix is not a metric: " + v.witness->reason + " (";
        for (std::size_t i = 0; i < v.witness->points.size(); ++i)
            msg += (i ? "," : "") + points[v.witness->points[i]];
        msg += ")";
        throw precondition_error(msg);
    }
    FiniteMetricSpace s;
    s.points_ = std::move(points);
    s.n_ = n;
    s.cls_ = v.cls;
    if (v.cls == MetricClass::metric) s.defect_ = v.witness;
    s.dist_.reserve((std::size_t)n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s.dist_.push_back(dist[i][j]);
    return s;
}

FiniteMetricSpace FiniteMetricSpace::trusted(std::vector<std::string> points,
                                             std::vector<Rat> flat_dist,
                                             MetricClass cls) {
    FiniteMetricSpace s;
    s.n_ = (int)points.size();
    if (flat_dist.size() != (std::size_t)s.n_ * s.n_)
        throw input_error("flat distance matrix size mismatch");
    s.points_ = std::move(points);
    s.dist_ = std::move(flat_dist);
    s.cls_ = cls;
    return s;
}

int FiniteMetricSpace::index_of(const std::string& id) const {
    for (int i = 0; i < n_; ++i)
        if (points_[i] == id) return i;
    return -1;
}

FiniteMetricSpace window_space(int n_max) {
    if (n_max < 1) throw input_error("window requires n_max >= 1");
    std::vector<std::string> ids;
    ids.reserve(n_max);
    for (int i = 1; i <= n_max; ++i) ids.push_back(std::to_string(i));
    std::vector<Rat> d;
    d.reserve((std::size_t)n_max * n_max);
    for (int i = 1; i <= n_max; ++i)
        for (int j = 1; j <= n_max; ++j) d.push_back(Rat(i > j ? i - j : j - i));
    // |x-y| on {1..n} is ultrametric only for n <= 2.
    MetricClass cls = n_max <= 2 ? MetricClass::ultrametric : MetricClass::metric;
    return FiniteMetricSpace::trusted(std::move(ids), std::move(d), cls);
}

Scale scale_of(const FiniteMetricSpace& s) {
    std::set<Rat> vals;
    for (int i = 0; i < s.size(); ++i)
        for (int j = i + 1; j < s.size(); ++j) vals.insert(s.dist(i, j));
    return Scale(vals.begin(), vals.end());
}

Partition r_equivalence(const FiniteMetricSpace& s, const Rat& r) {
    if (r.is_negative()) throw input_error("r_equivalence requires r >= 0");
    if (!s.is_ultrametric()) {
        // The stored defect triple (i,j,k) has d(i,j) > max(d(i,k), d(k,j)),
        // so ~t fails transitivity at t = max(d(i,k), d(k,j)).
        std::array<int, 3> t{0, 0, 0};
        if (s.ultrametric_defect()) {
            const auto& p = s.ultrametric_defect()->points;
            t = {p[0], p[2], p[1]}; // i ~ k, k ~ j, but not i ~ j
        }
        throw not_ultrametric_error(
            "r_equivalence requires an ultrametric space", t);
    }
    Partition p;
    std::vector<char> assigned(s.size(), 0);
    for (int i = 0; i < s.size(); ++i) {
        if (assigned[i]) continue;
        std::vector<int> block{i};
        assigned[i] = 1;
        for (int j = i + 1; j < s.size(); ++j)
            if (!assigned[j] && s.dist(i, j) <= r) {
                block.push_back(j);
                assigned[j] = 1;
            }
        p.blocks.push_back(std::move(block));
    }
    return p;
}

std::set<Rat> distance_set(const FiniteMetricSpace& s,
                           const std::vector<int>& a,
                           const std::vector<int>& b) {
    if (a.empty() || b.empty())
        throw input_error("distance_set requires nonempty sets");
    std::set<Rat> out;
    for (int x : a)
        for (int y : b) {
            if (x == y) continue;
            out.insert(s.dist(x, y));
        }
    return out;
}

FiniteMetricSpace restrict(const FiniteMetricSpace& s,
                           const std::vector<int>& subset) {
    if (subset.empty()) throw input_error("restrict requires a nonempty subset");
    {
        std::unordered_set<int> seen;
        for (int i : subset) {
            if (i < 0 || i >= s.size())
                throw input_error("restrict: index out of range");
            if (!seen.insert(i).second)
                throw input_error("restrict: duplicate index");
        }
    }
    std::vector<std::string> pts;
    pts.reserve(subset.size());
    for (int i : subset) pts.push_back(s.point(i));
    std::vector<std::vector<Rat>> d(subset.size(),
                                    std::vector<Rat>(subset.size()));
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = 0; j < subset.size(); ++j)
            d[i][j] = s.dist(subset[i], subset[j]);
    return FiniteMetricSpace::create(std::move(pts), d);
}

} // namespace ramsey
