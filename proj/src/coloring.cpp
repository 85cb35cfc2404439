#include "ramsey/coloring.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "ramsey/max_clique.hpp"

namespace ramsey {

std::string to_string(SequenceKind k) {
    switch (k) {
    case SequenceKind::increasing: return "increasing";
    case SequenceKind::decreasing: return "decreasing";
    case SequenceKind::constant_tail: return "constant-tail";
    }
    return "?";
}

std::string to_string(SeparationLevel l) {
    switch (l) {
    case SeparationLevel::none: return "none";
    case SeparationLevel::weak: return "weak";
    case SeparationLevel::strong: return "strong";
    }
    return "?";
}

std::uint8_t ScaleMap::at(const Rat& r) const {
    auto it = std::lower_bound(scale.begin(), scale.end(), r);
    if (it == scale.end() || *it != r)
        throw input_error("scale map has no value for distance " + r.str());
    return colors[(std::size_t)(it - scale.begin())];
}

PairColoring induce_coloring(const FiniteMetricSpace& s, const ScaleMap& f) {
    if (!f.same_domain(scale_of(s)))
        throw input_error("scale map domain does not match the space's scale");
    PairColoring chi(s.size());
    for (int i = 0; i < s.size(); ++i)
        for (int j = i + 1; j < s.size(); ++j)
            chi.set(i, j, f.at(s.dist(i, j)));
    return chi;
}

std::variant<ScaleMap, IsometricViolation>
recognize_isometric(const FiniteMetricSpace& s, const PairColoring& chi) {
    std::map<Rat, std::pair<std::array<int, 2>, std::uint8_t>> seen;
    for (int i = 0; i < s.size(); ++i)
        for (int j = i + 1; j < s.size(); ++j) {
            const Rat& d = s.dist(i, j);
            std::uint8_t c = chi.at(i, j);
            auto it = seen.find(d);
            if (it == seen.end()) {
                seen.emplace(d, std::make_pair(std::array<int, 2>{i, j}, c));
            } else if (it->second.second != c) {
                return IsometricViolation{it->second.first, {i, j}, d};
            }
        }
    ScaleMap f;
    for (const auto& [d, pc] : seen) {
        f.scale.push_back(d);
        f.colors.push_back(pc.second);
    }
    return f;
}

namespace {

BitGraph color_graph(const FiniteMetricSpace& s, const PairColoring& chi,
                     std::uint8_t color) {
    BitGraph g(s.size());
    for (int i = 0; i < s.size(); ++i)
        for (int j = i + 1; j < s.size(); ++j)
            if (chi.at(i, j) == color) g.add_edge(i, j);
    return g;
}

// Lex order on ascending index sequences.
bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

MonochromeResult max_monochrome(const FiniteMetricSpace& s,
                                const PairColoring& chi) {
    BitGraph g0 = color_graph(s, chi, 0);
    BitGraph g1 = color_graph(s, chi, 1);
    int s0 = max_clique_size(g0);
    int s1 = max_clique_size(g1);
    MonochromeResult r;
    if (s0 >= s1) {
        r.color = 0;
        r.subset = lex_least_max_clique(g0);
    } else {
        r.color = 1;
        r.subset = lex_least_max_clique(g1);
    }
    return r;
}

namespace {

// Inductive descent for ultrametric spaces: the best equidistance set at
// the top distance is a transversal of the next-lower equivalence classes;
// anything better lives inside one class.
EquidistanceResult equi_descent(const FiniteMetricSpace& s,
                                std::vector<int> idx) {
    EquidistanceResult best;
    if (idx.size() == 1) {
        best.subset = idx;
        return best;
    }
    std::set<Rat> vals;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j)
            vals.insert(s.dist(idx[i], idx[j]));
    if (vals.size() == 1) {
        best.subset = idx;
        best.r = *vals.begin();
        return best;
    }
    Rat top = *vals.rbegin();
    // Classes of "d < top" (transitive on ultrametric subsets).
    std::vector<std::vector<int>> classes;
    std::vector<char> used(idx.size(), 0);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (used[i]) continue;
        std::vector<int> cls{idx[i]};
        used[i] = 1;
        for (std::size_t j = i + 1; j < idx.size(); ++j)
            if (!used[j] && s.dist(idx[i], idx[j]) < top) {
                cls.push_back(idx[j]);
                used[j] = 1;
            }
        classes.push_back(std::move(cls));
    }
    // Transversal of per-class minima: all pairwise distances equal top.
    EquidistanceResult trans;
    for (const auto& cls : classes) trans.subset.push_back(cls.front());
    std::sort(trans.subset.begin(), trans.subset.end());
    trans.r = top;

    best = trans;
    for (const auto& cls : classes) {
        EquidistanceResult sub = equi_descent(s, cls);
        bool better = sub.subset.size() > best.subset.size();
        if (!better && sub.subset.size() == best.subset.size() && sub.r &&
            best.r) {
            if (*sub.r < *best.r ||
                (*sub.r == *best.r && lex_less(sub.subset, best.subset)))
                better = true;
        }
        if (better) best = sub;
    }
    return best;
}

} // namespace

EquidistanceResult find_max_equidistance(const FiniteMetricSpace& s) {
    if (s.size() == 1) return {{0}, std::nullopt};
    if (s.is_ultrametric()) {
        std::vector<int> all(s.size());
        for (int i = 0; i < s.size(); ++i) all[i] = i;
        return equi_descent(s, std::move(all));
    }
    Scale sc = scale_of(s);
    EquidistanceResult best;
    int best_size = 0;
    Rat best_r;
    for (const Rat& r : sc) { // ascending, so ties keep the smallest r
        BitGraph g(s.size());
        for (int i = 0; i < s.size(); ++i)
            for (int j = i + 1; j < s.size(); ++j)
                if (s.dist(i, j) == r) g.add_edge(i, j);
        int w = max_clique_size(g);
        if (w > best_size) {
            best_size = w;
            best_r = r;
            best.subset = lex_least_max_clique(g);
            best.r = r;
        }
    }
    return best;
}

namespace {

struct TailSearch {
    const FiniteMetricSpace& s;
    std::unordered_map<std::uint64_t, int> memo;

    int len(std::uint64_t pool) {
        if (pool == 0) return 0;
        auto it = memo.find(pool);
        if (it != memo.end()) return it->second;
        int best = 1; // any single element
        for (int v = 0; v < s.size(); ++v) {
            if (!(pool >> v & 1)) continue;
            // group the rest of the pool by distance from v
            std::map<Rat, std::uint64_t> groups;
            for (int w = 0; w < s.size(); ++w)
                if (w != v && (pool >> w & 1)) groups[s.dist(v, w)] |= 1ull << w;
            for (const auto& [r, sub] : groups)
                best = std::max(best, 1 + len(sub));
        }
        memo.emplace(pool, best);
        return best;
    }

    // Rebuild the lexicographically least optimal sequence. The first
    // element is the smallest feasible index; the continuation compares
    // all feasible distance groups.
    std::vector<int> rebuild(std::uint64_t pool, int want) {
        if (want == 0) return {};
        for (int v = 0; v < s.size(); ++v) {
            if (!(pool >> v & 1)) continue;
            if (want == 1) return {v};
            std::map<Rat, std::uint64_t> groups;
            for (int w = 0; w < s.size(); ++w)
                if (w != v && (pool >> w & 1)) groups[s.dist(v, w)] |= 1ull << w;
            std::vector<int> best_rest;
            for (const auto& [r, sub] : groups) {
                if (1 + len(sub) != want) continue;
                std::vector<int> rest = rebuild(sub, want - 1);
                if (best_rest.empty() ||
                    std::lexicographical_compare(rest.begin(), rest.end(),
                                                 best_rest.begin(),
                                                 best_rest.end()))
                    best_rest = std::move(rest);
            }
            if (!best_rest.empty()) {
                std::vector<int> out{v};
                out.insert(out.end(), best_rest.begin(), best_rest.end());
                return out;
            }
        }
        return {};
    }
};

// Greedy fallback above the exactness budget: always extend with the
// (point, distance) giving the largest next pool.
std::vector<int> greedy_tail(const FiniteMetricSpace& s) {
    std::vector<int> pool(s.size());
    for (int i = 0; i < s.size(); ++i) pool[i] = i;
    std::vector<int> seq;
    while (!pool.empty()) {
        int best_v = pool[0];
        std::vector<int> best_sub;
        for (int v : pool) {
            std::map<Rat, std::vector<int>> groups;
            for (int w : pool)
                if (w != v) groups[s.dist(v, w)].push_back(w);
            for (const auto& [r, sub] : groups)
                if (sub.size() > best_sub.size()) {
                    best_sub = sub;
                    best_v = v;
                }
        }
        seq.push_back(best_v);
        pool = best_sub;
    }
    return seq;
}

} // namespace

CanonicalSequence canonical_sequence(const FiniteMetricSpace& s, int budget) {
    if (s.size() < 2)
        throw input_error("canonical_sequence requires at least 2 points");

    // Kinds (i)/(ii): 1 + the largest number of distinct distances from an
    // anchor. Exact at any size. Finite spaces always admit both orders, so
    // kind (i) wins the tie with (ii) and (ii) is only reachable as a
    // verification target.
    int best_anchor = 0;
    std::size_t best_distinct = 0;
    for (int a = 0; a < s.size(); ++a) {
        std::set<Rat> vals;
        for (int b = 0; b < s.size(); ++b)
            if (b != a) vals.insert(s.dist(a, b));
        if (vals.size() > best_distinct) {
            best_distinct = vals.size();
            best_anchor = a;
        }
    }
    std::vector<int> inc{best_anchor};
    {
        std::map<Rat, int> rep; // smallest index per distance
        for (int b = 0; b < s.size(); ++b) {
            if (b == best_anchor) continue;
            const Rat& d = s.dist(best_anchor, b);
            if (!rep.count(d)) rep[d] = b;
        }
        for (const auto& [d, b] : rep) inc.push_back(b);
    }

    // Kind (iii).
    std::vector<int> tail;
    bool tail_exact = true;
    if (s.size() <= budget && s.size() <= 20) {
        TailSearch ts{s, {}};
        std::uint64_t full = (1ull << s.size()) - 1;
        tail = ts.rebuild(full, ts.len(full));
    } else {
        tail = greedy_tail(s);
        tail_exact = false;
    }

    CanonicalSequence out;
    if (inc.size() >= tail.size()) {
        out.kind = SequenceKind::increasing;
        out.seq = inc;
        out.exact = true;
    } else {
        out.kind = SequenceKind::constant_tail;
        out.seq = tail;
        out.exact = tail_exact;
    }
    return out;
}

bool satisfies_kind(const FiniteMetricSpace& s, SequenceKind kind,
                    const std::vector<int>& seq) {
    if (seq.size() < 2) return false;
    std::vector<char> seen(s.size(), 0);
    for (int v : seq) {
        if (v < 0 || v >= s.size() || seen[v]) return false;
        seen[v] = 1;
    }
    switch (kind) {
    case SequenceKind::increasing:
        for (std::size_t n = 2; n < seq.size(); ++n)
            if (!(s.dist(seq[0], seq[n - 1]) < s.dist(seq[0], seq[n])))
                return false;
        return true;
    case SequenceKind::decreasing:
        for (std::size_t n = 2; n < seq.size(); ++n)
            if (!(s.dist(seq[0], seq[n - 1]) > s.dist(seq[0], seq[n])))
                return false;
        return true;
    case SequenceKind::constant_tail:
        for (std::size_t n = 0; n < seq.size(); ++n)
            for (std::size_t i = n + 1; i < seq.size(); ++i)
                for (std::size_t j = i + 1; j < seq.size(); ++j)
                    if (s.dist(seq[n], seq[i]) != s.dist(seq[n], seq[j]))
                        return false;
        return true;
    }
    return false;
}

SeparatedFamily check_separation(const FiniteMetricSpace& s,
                                 const std::vector<std::vector<int>>& cells) {
    if (cells.empty()) throw input_error("separation check requires cells");
    std::vector<char> seen(s.size(), 0);
    for (const auto& c : cells) {
        if (c.empty()) throw input_error("separation check: empty cell");
        for (int v : c) {
            if (v < 0 || v >= s.size())
                throw input_error("separation check: index out of range");
            if (seen[v]) throw input_error("separation check: overlapping cells");
            seen[v] = 1;
        }
    }
    const int k = (int)cells.size();
    std::vector<std::set<Rat>> within(k);
    for (int n = 0; n < k; ++n)
        if (cells[n].size() > 1) within[n] = distance_set(s, cells[n], cells[n]);
    std::map<std::pair<int, int>, std::set<Rat>> cross;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            cross[{i, j}] = distance_set(s, cells[i], cells[j]);

    SeparatedFamily fam;
    fam.cells = cells;
    fam.level = SeparationLevel::strong;

    auto common = [](const std::set<Rat>& a,
                     const std::set<Rat>& b) -> std::optional<Rat> {
        for (const Rat& x : a)
            if (b.count(x)) return x;
        return std::nullopt;
    };

    for (int n = 0; n < k && !fam.weak_violation; ++n)
        for (const auto& [ij, cs] : cross) {
            if (auto d = common(within[n], cs)) {
                fam.weak_violation =
                    SeparationViolation{{n, ij.first, ij.second}, *d};
                break;
            }
        }
    if (fam.weak_violation) {
        fam.level = SeparationLevel::none;
        return fam;
    }
    for (auto it = cross.begin(); it != cross.end() && !fam.strong_violation;
         ++it)
        for (auto jt = std::next(it); jt != cross.end(); ++jt) {
            if (auto d = common(it->second, jt->second)) {
                fam.strong_violation = SeparationViolation{
                    {it->first.first, it->first.second, jt->first.first,
                     jt->first.second},
                    *d};
                break;
            }
        }
    if (fam.strong_violation) fam.level = SeparationLevel::weak;
    return fam;
}

ScaleMap family_scale_map(const FiniteMetricSpace& s,
                          const SeparatedFamily& fam) {
    std::set<Rat> within;
    for (const auto& c : fam.cells)
        if (c.size() > 1)
            for (const Rat& d : distance_set(s, c, c)) within.insert(d);
    ScaleMap f;
    f.scale = scale_of(s);
    f.colors.assign(f.scale.size(), 1);
    for (std::size_t i = 0; i < f.scale.size(); ++i)
        if (within.count(f.scale[i])) f.colors[i] = 0;
    return f;
}

PairColoring family_coloring(const FiniteMetricSpace& s,
                             const SeparatedFamily& fam) {
    if (fam.level == SeparationLevel::none)
        throw separation_error("family_coloring requires weak separation",
                               "weak", to_string(fam.level));
    return induce_coloring(s, family_scale_map(s, fam));
}

ScaleMap lift_scale_map(const FiniteMetricSpace& s, const SeparatedFamily& fam,
                        const PairColoring& idx_coloring) {
    if (idx_coloring.points() != (int)fam.cells.size())
        throw input_error("index coloring size does not match cell count");
    ScaleMap f;
    f.scale = scale_of(s);
    f.colors.assign(f.scale.size(), 0);
    auto color_value = [&](const Rat& d, std::uint8_t c) {
        auto it = std::lower_bound(f.scale.begin(), f.scale.end(), d);
        f.colors[(std::size_t)(it - f.scale.begin())] = c;
    };
    for (std::size_t i = 0; i < fam.cells.size(); ++i)
        for (std::size_t j = i + 1; j < fam.cells.size(); ++j) {
            std::uint8_t c = idx_coloring.at((int)i, (int)j);
            for (const Rat& d : distance_set(s, fam.cells[i], fam.cells[j]))
                color_value(d, c);
        }
    return f;
}

PairColoring lift_coloring(const FiniteMetricSpace& s,
                           const SeparatedFamily& fam,
                           const PairColoring& idx_coloring) {
    if (fam.level != SeparationLevel::strong)
        throw separation_error("lift_coloring requires strong separation",
                               "strong", to_string(fam.level));
    return induce_coloring(s, lift_scale_map(s, fam, idx_coloring));
}

} // namespace ramsey
