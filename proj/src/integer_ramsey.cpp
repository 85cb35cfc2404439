#include "ramsey/integer_ramsey.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "ramsey/max_clique.hpp"

namespace ramsey {

StepFunction StepFunction::from_table(std::vector<std::int64_t> t) {
    StepFunction f;
    f.n_max = (int)t.size();
    if (f.n_max < 1) throw input_error("step function table is empty");
    for (int x = 1; x <= f.n_max; ++x)
        if (t[x - 1] <= x)
            throw input_error("step function requires f(x) > x; f(" +
                              std::to_string(x) + ") = " +
                              std::to_string(t[x - 1]));
    f.table = std::move(t);
    return f;
}

StepFunction StepFunction::doubling(int n_max) {
    std::vector<std::int64_t> t(n_max);
    for (int x = 1; x <= n_max; ++x) t[x - 1] = 2ll * x;
    return from_table(std::move(t));
}

StepFunction StepFunction::successor(int n_max) {
    std::vector<std::int64_t> t(n_max);
    for (int x = 1; x <= n_max; ++x) t[x - 1] = x + 1ll;
    return from_table(std::move(t));
}

StepFunction StepFunction::plus_k(int n_max, int k) {
    if (k < 1) throw input_error("plus_k requires k >= 1");
    std::vector<std::int64_t> t(n_max);
    for (int x = 1; x <= n_max; ++x) t[x - 1] = x + (std::int64_t)k;
    return from_table(std::move(t));
}

StepFunction StepFunction::square_plus1(int n_max) {
    std::vector<std::int64_t> t(n_max);
    for (int x = 1; x <= n_max; ++x) t[x - 1] = (std::int64_t)x * x + 1;
    return from_table(std::move(t));
}

ForestPartition forest_partition(const StepFunction& f) {
    const int n = f.n_max;
    // Undirected forest on {1..n} with edges x -- f(x) (when f(x) <= n).
    // Proper 2-coloring by BFS depth from each component's least element.
    std::vector<std::vector<int>> nbr(n + 1);
    for (int x = 1; x <= n; ++x) {
        std::int64_t y = f(x);
        if (y <= n) {
            nbr[x].push_back((int)y);
            nbr[(int)y].push_back(x);
        }
    }
    ForestPartition p;
    p.depth.assign(n, -1);
    for (int root = 1; root <= n; ++root) {
        if (p.depth[root - 1] >= 0) continue;
        p.depth[root - 1] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : nbr[v])
                if (p.depth[w - 1] < 0) {
                    p.depth[w - 1] = p.depth[v - 1] + 1;
                    q.push(w);
                }
        }
    }
    for (int x = 1; x <= n; ++x)
        (p.depth[x - 1] % 2 == 0 ? p.a1 : p.a2).push_back(x);
    return p;
}

std::optional<PatternViolation>
verify_pattern_free(const std::vector<std::int64_t>& u, const StepFunction& f) {
    std::unordered_set<std::int64_t> members(u.begin(), u.end());
    std::vector<std::int64_t> sorted(u.begin(), u.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::int64_t a : sorted)
        for (std::int64_t x = 1; x <= f.n_max; ++x) {
            if (!members.count(a + x)) continue;
            if (members.count(a + f(x))) return PatternViolation{a, x};
        }
    return std::nullopt;
}

std::vector<std::int64_t> pattern_free_member(const StepFunction& f) {
    if (f.n_max > kMaxSearchPoints)
        throw input_error("pattern_free_member window capped at " +
                          std::to_string(kMaxSearchPoints));
    ForestPartition p = forest_partition(f);
    FiniteMetricSpace w = window_space(f.n_max);
    PairColoring chi(f.n_max);
    for (int i = 0; i < f.n_max; ++i)
        for (int j = i + 1; j < f.n_max; ++j)
            chi.set(i, j, p.in_a1(j - i) ? 0 : 1); // distance j-i
    MonochromeResult m = max_monochrome(w, chi);
    std::vector<std::int64_t> out;
    for (int idx : m.subset) out.push_back(idx + 1);
    return out;
}

bool is_thin(const std::vector<std::int64_t>& t, std::int64_t floor) {
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] <= t[i - 1])
            throw input_error("thin set must be strictly increasing");
    if (t.size() <= 2) return true;
    for (std::size_t i = 2; i < t.size(); ++i)
        if (t[i] - t[i - 1] < t[i - 1] - t[i - 2]) return false;
    return t.back() - t[t.size() - 2] > floor;
}

namespace {

// Smallest element of t at position >= from whose tail gaps all exceed g.
// tail_ok[i] = min gap among consecutive pairs from position i on.
int first_with_tail_gaps(const std::vector<std::int64_t>& t,
                         const std::vector<std::int64_t>& min_tail_gap,
                         std::int64_t above, std::int64_t g) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] <= above) continue;
        if (min_tail_gap[i] > g) return (int)i;
    }
    return -1;
}

} // namespace

BlockSequence construct_blocks(const std::vector<std::int64_t>& t, int count) {
    if (count < 1) throw input_error("construct_blocks requires count >= 1");
    if (t.size() < 2)
        throw input_error("construct_blocks requires at least two elements");
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] <= t[i - 1])
            throw input_error("construct_blocks requires a strictly increasing set");

    std::vector<std::int64_t> min_tail_gap(t.size(), INT64_MAX);
    for (int i = (int)t.size() - 2; i >= 0; --i)
        min_tail_gap[i] = std::min(min_tail_gap[i + 1], t[i + 1] - t[i]);

    BlockSequence out;
    out.pairs.emplace_back(t[0], t[1]);
    while ((int)out.pairs.size() < count) {
        auto [an, bn] = out.pairs.back();
        int ai = first_with_tail_gaps(t, min_tail_gap, 2 * bn, 2 * an);
        if (ai < 0) {
            out.partial = true;
            return out;
        }
        std::int64_t a_next = t[ai];
        int bi = first_with_tail_gaps(t, min_tail_gap, 2 * a_next, 2 * bn);
        if (bi < 0) {
            out.partial = true;
            return out;
        }
        out.pairs.emplace_back(a_next, t[bi]);
    }
    return out;
}

namespace {

using IntSet = std::vector<std::int64_t>; // sorted

IntSet interval_trace(const std::vector<std::int64_t>& t, std::int64_t lo,
                      std::int64_t hi) { // [lo, hi) intersect t
    IntSet out;
    for (std::int64_t v : t)
        if (v >= lo && v < hi) out.push_back(v);
    return out;
}

std::set<std::int64_t> diff_set(const IntSet& a, const IntSet& b) {
    std::set<std::int64_t> out;
    for (std::int64_t x : a)
        for (std::int64_t y : b) {
            if (x == y) continue;
            out.insert(x > y ? x - y : y - x);
        }
    return out;
}

std::optional<std::int64_t> first_common(const std::set<std::int64_t>& a,
                                         const std::set<std::int64_t>& b) {
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& big = a.size() <= b.size() ? b : a;
    for (std::int64_t v : small)
        if (big.count(v)) return v;
    return std::nullopt;
}

// Cells for one side of a block sequence, truncated to the window.
std::vector<IntSet> side_cells(const std::vector<std::int64_t>& t,
                               const BlockSequence& blocks, BlockSide side,
                               std::int64_t window) {
    std::vector<IntSet> cells;
    const auto& ps = blocks.pairs;
    if (side == BlockSide::A) {
        for (const auto& [a, b] : ps) {
            if (b > window + 1) break;
            cells.push_back(interval_trace(t, a, b));
        }
    } else {
        for (std::size_t n = 0; n + 1 < ps.size(); ++n) {
            if (ps[n + 1].first > window + 1) break;
            cells.push_back(interval_trace(t, ps[n].second, ps[n + 1].first));
        }
    }
    return cells;
}

// Within/cross and pairwise-cross disjointness over a list of cells,
// reported as block conditions `within_cond` and `cross_cond`.
void check_side(const std::vector<IntSet>& cells, int within_cond,
                int cross_cond, BlockConditionReport& rep) {
    const int k = (int)cells.size();
    std::vector<std::set<std::int64_t>> within(k);
    for (int n = 0; n < k; ++n)
        if (cells[n].size() > 1) within[n] = diff_set(cells[n], cells[n]);
    std::map<std::pair<int, int>, std::set<std::int64_t>> cross;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            cross[{i, j}] = diff_set(cells[i], cells[j]);
    for (int n = 0; n < k; ++n)
        for (const auto& [ij, cs] : cross)
            if (auto d = first_common(within[n], cs)) {
                rep.pass[within_cond - 1] = false;
                rep.failures.push_back(
                    {within_cond, {n, ij.first, ij.second}, *d});
            }
    for (auto it = cross.begin(); it != cross.end(); ++it)
        for (auto jt = std::next(it); jt != cross.end(); ++jt)
            if (auto d = first_common(it->second, jt->second)) {
                rep.pass[cross_cond - 1] = false;
                rep.failures.push_back({cross_cond,
                                        {it->first.first, it->first.second,
                                         jt->first.first, jt->first.second},
                                        *d});
            }
}

} // namespace

BlockConditionReport verify_block_conditions(const std::vector<std::int64_t>& t,
                                             const BlockSequence& blocks,
                                             std::int64_t window) {
    BlockConditionReport rep;
    std::set<std::int64_t> members(t.begin(), t.end());
    const auto& ps = blocks.pairs;
    if (ps.empty()) throw input_error("verify_block_conditions: no blocks");
    for (std::size_t n = 0; n < ps.size(); ++n) {
        if (!members.count(ps[n].first) || !members.count(ps[n].second))
            throw input_error("block endpoints must belong to the set");
        if (ps[n].second > window || ps[n].first > window)
            throw input_error("blocks must lie within the window");
        bool ok = ps[n].first < ps[n].second &&
                  (n + 1 == ps.size() || ps[n].second < ps[n + 1].first);
        if (!ok) {
            rep.pass[0] = false;
            rep.failures.push_back({1, {(int)n}, 0});
        }
    }
    check_side(side_cells(t, blocks, BlockSide::A, window), 2, 3, rep);
    check_side(side_cells(t, blocks, BlockSide::B, window), 4, 5, rep);
    return rep;
}

QuotientResult blocks_to_quotient(const std::vector<std::int64_t>& t,
                                  const BlockSequence& blocks, BlockSide side,
                                  std::int64_t window) {
    if (window < 1 || window > 2048)
        throw input_error("quotient window must be in [1, 2048]");
    BlockConditionReport rep = verify_block_conditions(t, blocks, window);
    bool side_ok = side == BlockSide::A ? rep.pass[0] && rep.pass[1] && rep.pass[2]
                                        : rep.pass[0] && rep.pass[3] && rep.pass[4];
    if (!side_ok)
        throw precondition_error(
            "block conditions fail on the requested side");

    std::vector<IntSet> cells = side_cells(t, blocks, side, window);
    if (cells.empty())
        throw precondition_error("no cells on the requested side");
    FiniteMetricSpace w = window_space((int)window);
    std::vector<std::vector<int>> idx_cells;
    for (const auto& c : cells) {
        std::vector<int> cell;
        for (std::int64_t v : c) cell.push_back((int)v - 1);
        idx_cells.push_back(std::move(cell));
    }
    SeparatedFamily fam = check_separation(w, idx_cells);
    if (fam.level != SeparationLevel::strong)
        throw precondition_error(
            "quotient family failed to reach strong separation");

    QuotientResult q{std::move(w), std::move(fam), {}};
    q.phi.assign((std::size_t)window, 0);
    for (std::size_t n = 0; n < cells.size(); ++n)
        for (std::int64_t v : cells[n]) q.phi[v - 1] = (int)n;
    return q;
}

bool is_sidon(const std::vector<std::int64_t>& u) {
    std::unordered_set<std::int64_t> diffs;
    std::vector<std::int64_t> s(u.begin(), u.end());
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (s[i] == s[j]) throw input_error("Sidon check: duplicate element");
            if (!diffs.insert(s[j] - s[i]).second) return false;
        }
    return true;
}

ScaleMap extend_to_isometric(const std::vector<std::int64_t>& u,
                             const PairColoring& chi_on_u, int n_max) {
    std::vector<std::int64_t> s(u.begin(), u.end());
    std::sort(s.begin(), s.end());
    if (chi_on_u.points() != (int)s.size())
        throw input_error("pair coloring size does not match the set");
    if (!s.empty() && (s.front() < 1 || s.back() > n_max))
        throw input_error("set must lie within the window");
    // Locate the offending pairs when not Sidon.
    std::map<std::int64_t, std::array<std::int64_t, 2>> by_diff;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            auto [it, fresh] = by_diff.emplace(
                s[j] - s[i], std::array<std::int64_t, 2>{s[i], s[j]});
            if (!fresh)
                throw not_sidon_error("set is not Sidon", it->second,
                                      {s[i], s[j]});
        }
    ScaleMap f;
    for (int d = 1; d < n_max; ++d) {
        f.scale.push_back(Rat(d));
        f.colors.push_back(0);
    }
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            f.colors[(std::size_t)(s[j] - s[i]) - 1] =
                chi_on_u.at((int)i, (int)j);
    return f;
}

} // namespace ramsey
