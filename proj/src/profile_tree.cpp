#include "ramsey/profile_tree.hpp"

#include <algorithm>
#include <map>

namespace ramsey {

std::string to_string(ObstructionClause c) {
    switch (c) {
    case ObstructionClause::infinitely_many_infinite_classes:
        return "infinitely-many-infinite-classes";
    case ObstructionClause::unbounded_finite_classes:
        return "unbounded-finite-classes";
    }
    return "?";
}

namespace {

void walk_validate(const ProfileTree& t, const TreeNode& node, int depth) {
    if (depth >= (int)t.levels.size())
        throw input_error("internal node below the last level");
    if (node.groups.empty())
        throw input_error("internal node with no child groups");
    for (const auto& g : node.groups) {
        if ((g.node != nullptr) == g.leaf.has_value())
            throw input_error("group must hold exactly one of node or leaf");
        if (g.mult.is_finite() && g.mult.count < 1)
            throw input_error("group multiplicity must be positive");
        if (g.mult.kind == Mult::Kind::unbounded) {
            if (!g.leaf)
                throw input_error(
                    "unbounded multiplicity requires a leaf shape template");
            if (g.leaf->omega)
                throw input_error(
                    "unbounded group template must have finite size");
        }
        if (g.leaf) {
            if (!g.leaf->omega && g.leaf->count < 1)
                throw input_error("leaf multiplicity must be positive");
        } else {
            walk_validate(t, *g.node, depth + 1);
        }
    }
}

} // namespace

void validate_tree(const ProfileTree& t) {
    if (t.levels.empty()) throw input_error("tree requires at least one level");
    for (const Rat& r : t.levels)
        if (!(Rat(0) < r)) throw input_error("tree levels must be positive");
    for (std::size_t i = 1; i < t.levels.size(); ++i)
        if (!(t.levels[i] < t.levels[i - 1]))
            throw input_error("tree levels must be strictly decreasing");
    walk_validate(t, t.root, 0);
}

namespace {

constexpr std::int64_t kInfinite = -1;

// Total point count of a subtree: finite value or kInfinite.
std::int64_t subtree_card(const TreeGroup& g);

std::int64_t subtree_card(const TreeNode& node) {
    std::int64_t total = 0;
    for (const auto& g : node.groups) {
        std::int64_t c = subtree_card(g);
        if (c == kInfinite) return kInfinite;
        total += c;
    }
    return total;
}

std::int64_t subtree_card(const TreeGroup& g) {
    if (g.mult.kind != Mult::Kind::finite) return kInfinite;
    std::int64_t per;
    if (g.leaf) {
        if (g.leaf->omega) return kInfinite;
        per = g.leaf->count;
    } else {
        per = subtree_card(*g.node);
        if (per == kInfinite) return kInfinite;
    }
    return per * g.mult.count;
}

// Symbolic multiset of equivalence-class cardinalities at one cut.
struct ClassSummary {
    std::int64_t inf_count = 0; // finite number of infinite classes
    bool inf_omega = false;     // infinitely many infinite classes
    std::int64_t finite_max = 0;
    bool finite_unbounded = false;

    void add_class(std::int64_t card) {
        if (card == kInfinite)
            ++inf_count;
        else
            finite_max = std::max(finite_max, card);
    }
    void merge_scaled(const ClassSummary& s, const Mult& m) {
        switch (m.kind) {
        case Mult::Kind::finite:
            inf_count += s.inf_count * m.count;
            inf_omega |= s.inf_omega;
            finite_max = std::max(finite_max, s.finite_max);
            finite_unbounded |= s.finite_unbounded;
            break;
        case Mult::Kind::omega:
            // omega copies of identical class sizes: finite sizes stay
            // bounded, but any infinite class repeats infinitely often
            if (s.inf_count > 0 || s.inf_omega) inf_omega = true;
            finite_max = std::max(finite_max, s.finite_max);
            finite_unbounded |= s.finite_unbounded;
            break;
        case Mult::Kind::unbounded:
            finite_unbounded = true; // classes of sizes 1,2,3,...
            break;
        }
    }
};

ClassSummary classes_at(const ProfileTree& t, const TreeNode& node, int depth,
                        const Rat& r) {
    ClassSummary out;
    if (t.levels[depth] <= r) {
        out.add_class(subtree_card(node));
        return out;
    }
    for (const auto& g : node.groups) {
        if (g.mult.kind == Mult::Kind::unbounded) {
            out.merge_scaled(ClassSummary{}, g.mult);
            continue;
        }
        ClassSummary s;
        if (g.leaf) {
            s.add_class(g.leaf->omega ? kInfinite : g.leaf->count);
        } else {
            s = classes_at(t, *g.node, depth + 1, r);
        }
        out.merge_scaled(s, g.mult);
    }
    return out;
}

ScaleMap within_across_map(const ProfileTree& t, int ascending_index) {
    ScaleMap f;
    f.scale.assign(t.levels.rbegin(), t.levels.rend());
    const Rat& cut = t.level_value(ascending_index);
    f.colors.clear();
    for (const Rat& v : f.scale) f.colors.push_back(v <= cut ? 0 : 1);
    return f;
}

} // namespace

RamseyVerdict decide_universal_ramsey(const ProfileTree& t) {
    validate_tree(t);
    RamseyVerdict v;
    for (int i = 1; i <= t.num_levels(); ++i) {
        ClassSummary s = classes_at(t, t.root, 0, t.level_value(i));
        std::optional<ObstructionClause> clause;
        if (s.inf_omega)
            clause = ObstructionClause::infinitely_many_infinite_classes;
        else if (s.finite_unbounded)
            clause = ObstructionClause::unbounded_finite_classes;
        if (clause) {
            v.universal = false;
            v.obstruction = RamseyVerdict::Obstruction{i, *clause};
            v.witness_coloring = within_across_map(t, i);
            return v;
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// materialize

namespace {

struct RChild {
    const LeafSpec* leaf = nullptr;
    std::int64_t fixed_size = -1; // for copies spawned by unbounded groups
    int points = 0;
    const TreeNode* node = nullptr;
    struct RGroup {
        const TreeGroup* spec;
        std::vector<std::unique_ptr<RChild>> copies;
    };
    std::vector<RGroup> groups;
};

std::unique_ptr<RChild> new_copy(const TreeGroup& g, std::int64_t copy_index) {
    auto c = std::make_unique<RChild>();
    if (g.mult.kind == Mult::Kind::unbounded) {
        c->leaf = &*g.leaf;
        c->fixed_size = copy_index; // sizes 1,2,3,...
    } else if (g.leaf) {
        c->leaf = &*g.leaf;
    } else {
        c->node = g.node.get();
        for (const auto& sub : g.node->groups)
            c->groups.push_back({&sub, {}});
    }
    return c;
}

void grow_round(RChild& c, int round, int& budget, int& added) {
    if (budget == 0) return;
    if (c.leaf) {
        std::int64_t quota;
        if (c.fixed_size >= 0)
            quota = c.fixed_size;
        else if (c.leaf->omega)
            quota = round;
        else
            quota = std::min<std::int64_t>(round, c.leaf->count);
        while (c.points < quota && budget > 0) {
            ++c.points;
            --budget;
            ++added;
        }
        return;
    }
    for (auto& g : c.groups) {
        std::int64_t target;
        if (g.spec->mult.is_finite())
            target = std::min<std::int64_t>(round, g.spec->mult.count);
        else
            target = round;
        while ((std::int64_t)g.copies.size() < target)
            g.copies.push_back(
                new_copy(*g.spec, (std::int64_t)g.copies.size() + 1));
        for (auto& copy : g.copies) {
            grow_round(*copy, round, budget, added);
            if (budget == 0) return;
        }
    }
}

bool mandatory_unmet(const RChild& c) {
    if (c.leaf) {
        if (c.fixed_size >= 0) return c.points < c.fixed_size;
        return !c.leaf->omega && c.points < c.leaf->count;
    }
    for (const auto& g : c.groups) {
        if (g.spec->mult.is_finite() &&
            (std::int64_t)g.copies.size() < g.spec->mult.count)
            return true;
        for (const auto& copy : g.copies)
            if (mandatory_unmet(*copy)) return true;
    }
    return false;
}

} // namespace

Materialized materialize(const ProfileTree& t, int budget) {
    validate_tree(t);
    if (budget < 1) throw input_error("materialize requires budget >= 1");

    RChild root;
    root.node = &t.root;
    for (const auto& g : t.root.groups) root.groups.push_back({&g, {}});

    int remaining = budget;
    for (int round = 1; remaining > 0; ++round) {
        int added = 0;
        grow_round(root, round, remaining, added);
        if (added == 0) break;
    }

    // Number points in tree (DFS) order and compute distances recursively.
    struct Builder {
        const ProfileTree& t;
        std::vector<Rat> flat;
        int n = 0;

        std::vector<int> build(const RChild& c, int depth) {
            std::vector<int> pts;
            if (c.leaf) {
                for (int i = 0; i < c.points; ++i) pts.push_back(n + i);
                n += c.points;
                const Rat& within = t.levels.back();
                for (std::size_t a = 0; a < pts.size(); ++a)
                    for (std::size_t b = a + 1; b < pts.size(); ++b)
                        set(pts[a], pts[b], within);
                return pts;
            }
            std::vector<std::vector<int>> children;
            for (const auto& g : c.groups)
                for (const auto& copy : g.copies)
                    children.push_back(build(*copy, depth + 1));
            const Rat& split = t.levels[depth];
            for (std::size_t a = 0; a < children.size(); ++a)
                for (std::size_t b = a + 1; b < children.size(); ++b)
                    for (int p : children[a])
                        for (int q : children[b]) set(p, q, split);
            for (auto& ch : children)
                pts.insert(pts.end(), ch.begin(), ch.end());
            return pts;
        }
        void set(int i, int j, const Rat& v) {
            flat[(std::size_t)i * n_total + j] = v;
            flat[(std::size_t)j * n_total + i] = v;
        }
        int n_total = 0;
    };

    int total = budget - remaining;
    if (total == 0)
        throw input_error("tree materializes to no points"); // unreachable

    Builder b{t, {}, 0};
    b.n_total = total;
    b.flat.assign((std::size_t)total * total, Rat(0));
    b.build(root, 0);

    std::vector<std::string> ids;
    ids.reserve(total);
    for (int i = 0; i < total; ++i) ids.push_back("x" + std::to_string(i));

    Materialized m{FiniteMetricSpace::trusted(std::move(ids), std::move(b.flat),
                                              MetricClass::ultrametric),
                   mandatory_unmet(root)};
    return m;
}

// ---------------------------------------------------------------------------

ProfileTree from_partition(const std::vector<std::string>& points,
                           const std::vector<std::vector<std::string>>& blocks) {
    if (points.empty()) throw input_error("from_partition: empty point set");
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!index.emplace(points[i], (int)i).second)
            throw input_error("from_partition: duplicate point " + points[i]);
    }
    std::vector<char> covered(points.size(), 0);
    std::vector<std::pair<int, std::size_t>> order; // (min index, block)
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw input_error("from_partition: empty block");
        int least = (int)points.size();
        for (const auto& p : blocks[b]) {
            auto it = index.find(p);
            if (it == index.end())
                throw input_error("from_partition: unknown point " + p);
            if (covered[it->second])
                throw input_error("from_partition: overlapping blocks at " + p);
            covered[it->second] = 1;
            least = std::min(least, it->second);
        }
        order.emplace_back(least, b);
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        if (!covered[i])
            throw input_error("from_partition: point not covered: " + points[i]);
    std::sort(order.begin(), order.end());

    ProfileTree t;
    t.levels = {Rat(2), Rat(1)};
    for (const auto& [least, b] : order) {
        TreeGroup g;
        g.mult = Mult::fin(1);
        g.leaf = LeafSpec{false, (std::int64_t)blocks[b].size()};
        t.root.groups.push_back(std::move(g));
    }
    return t;
}

ProfileTree two_level_tree(const std::vector<Mult>& class_sizes) {
    if (class_sizes.empty())
        throw input_error("two_level_tree: empty class size list");
    ProfileTree t;
    t.levels = {Rat(2), Rat(1)};
    for (const Mult& m : class_sizes) {
        TreeGroup g;
        switch (m.kind) {
        case Mult::Kind::finite:
            if (m.count < 1)
                throw input_error("two_level_tree: class size must be positive");
            g.mult = Mult::fin(1);
            g.leaf = LeafSpec{false, m.count};
            break;
        case Mult::Kind::omega:
            g.mult = Mult::fin(1);
            g.leaf = LeafSpec{true, 0};
            break;
        case Mult::Kind::unbounded:
            g.mult = Mult::unbounded();
            g.leaf = LeafSpec{false, 1};
            break;
        }
        t.root.groups.push_back(std::move(g));
    }
    return t;
}

ScaleMap restrict_scale_map(const ScaleMap& f, const Scale& sub) {
    ScaleMap out;
    out.scale = sub;
    for (const Rat& v : sub) out.colors.push_back(f.at(v));
    return out;
}

WitnessSetResult witness_set(const ProfileTree& t, int k, int budget) {
    if (k < 1) throw input_error("witness_set requires k >= 1");
    std::vector<int> ladder;
    if (budget > 0)
        ladder = {budget};
    else
        ladder = {64, 128, 256, 512};

    int last_size = -1;
    for (int b : ladder) {
        Materialized m = materialize(t, b);
        const FiniteMetricSpace& s = m.space;
        if (s.size() == last_size && budget == 0) break; // budget not binding
        last_size = s.size();
        if (s.size() < k + 1) continue;

        WitnessSetResult r{s, 0, {}, SequenceKind::increasing, {}, false, 0};

        // Level-descending chain: anchor with >= k distinct distances.
        int anchor = -1;
        std::map<Rat, int> reps;
        for (int a = 0; a < s.size() && anchor < 0; ++a) {
            std::map<Rat, int> cand;
            for (int x = 0; x < s.size(); ++x)
                if (x != a && !cand.count(s.dist(a, x))) cand[s.dist(a, x)] = x;
            if ((int)cand.size() >= k) {
                anchor = a;
                reps = cand;
            }
        }
        if (anchor >= 0) {
            r.anchor = anchor;
            r.kind = SequenceKind::increasing;
            int taken = 0;
            for (const auto& [d, x] : reps) {
                if (taken == k) break;
                r.y.push_back(x);
                r.h.push_back(d);
                ++taken;
            }
        } else {
            EquidistanceResult e = find_max_equidistance(s);
            if ((int)e.subset.size() < k + 1) continue;
            r.anchor = e.subset[0];
            r.kind = SequenceKind::constant_tail;
            for (int i = 1; i <= k; ++i) {
                r.y.push_back(e.subset[i]);
                r.h.push_back(*e.r);
            }
        }

        // Check the guarantee over every scale map of the sample.
        Scale sc = scale_of(s);
        if (sc.size() > 20) throw input_error("sample scale too large");
        bool all_ok = true;
        int maps = 0;
        for (std::uint32_t bits = 0; bits < (1u << sc.size()); ++bits) {
            ScaleMap f;
            f.scale = sc;
            for (std::size_t i = 0; i < sc.size(); ++i)
                f.colors.push_back((bits >> i) & 1);
            ++maps;
            std::vector<int> majority;
            int ones = 0;
            for (const Rat& hv : r.h) ones += f.at(hv);
            std::uint8_t m_color = ones * 2 > (int)r.h.size() ? 1 : 0;
            for (std::size_t i = 0; i < r.y.size(); ++i)
                if (f.at(r.h[i]) == m_color) majority.push_back(r.y[i]);
            if ((int)majority.size() < (k + 1) / 2) {
                all_ok = false;
                break;
            }
            bool mono = true;
            for (std::size_t a = 0; a < majority.size() && mono; ++a)
                for (std::size_t c = a + 1; c < majority.size(); ++c)
                    if (f.at(s.dist(majority[a], majority[c])) != m_color) {
                        mono = false;
                        break;
                    }
            if (!mono) {
                all_ok = false;
                break;
            }
        }
        r.guarantee_verified = all_ok;
        r.maps_checked = maps;
        return r;
    }
    throw input_error("tree too small for witness_set with k=" +
                      std::to_string(k));
}

ObstructionColoring obstruction_coloring(const ProfileTree& t) {
    RamseyVerdict v = decide_universal_ramsey(t);
    if (v.universal)
        throw precondition_error(
            "obstruction_coloring called on a universal tree");
    return ObstructionColoring{*v.witness_coloring, v.obstruction->level_index,
                               v.obstruction->clause};
}

ObstructionBound check_obstruction_bound(const FiniteMetricSpace& sample,
                                         const Rat& level_value,
                                         const ScaleMap& full_coloring) {
    ObstructionBound b;
    Partition p = r_equivalence(sample, level_value);
    b.num_classes = (int)p.blocks.size();
    for (const auto& blk : p.blocks)
        b.max_class = std::max(b.max_class, (int)blk.size());
    b.bound = std::max(b.num_classes, b.max_class);
    ScaleMap f = restrict_scale_map(full_coloring, scale_of(sample));
    MonochromeResult m = max_monochrome(sample, induce_coloring(sample, f));
    b.max_monochrome = (int)m.subset.size();
    b.holds = b.max_monochrome <= b.bound;
    return b;
}

} // namespace ramsey
