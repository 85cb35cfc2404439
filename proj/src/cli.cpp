#include "ramsey/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ramsey/json_io.hpp"
#include "ramsey/max_clique.hpp"
#include "ramsey/oracle.hpp"

namespace ramsey {

namespace {

constexpr const char* kVersion = "0.1.0";

struct Ctx {
    std::string op;
    std::string input_path;
    bool recheck = false;
    int budget = 0;
    std::int64_t thin_floor = 2;
    std::uint64_t seed = 0;
    bool has_seed = false;
    std::string r_text;
    int k = 0;
    int count = 0;
    int n = 0;
    int len = 0;
    int plus = 2;
    std::int64_t window = 1024;
    std::string f_name, t_name, side, x_bits, y_bits;

    json input;
    bool has_input = false;
    std::string raw_input;
};

struct OpResult {
    json payload;
    json verification = json::array();
    int exit_code = 0;
    std::string status = "ok";
};

std::string fnv_digest(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return std::string("fnv1a:") + buf;
}

json conventions(const Ctx& ctx) {
    return json{
        {"colors", "{0,1}; within-cell and A-side distances take color 0"},
        {"distance_set", "distinct pairs only; 0 is never a member"},
        {"tie_breaking",
         "size descending, color 0 first, lexicographically least subset in "
         "point order"},
        {"thin_policy",
         json{{"rule", "consecutive gaps nondecreasing, final gap > floor"},
              {"floor", ctx.thin_floor}}},
        {"coordinate_order",
         "coordinate 0 is the first summand; distance = 1 + highest differing "
         "index"},
        {"pattern_reading", "3-term patterns {a, a+x, a+f(x)}"},
        {"block_intervals", "half-open [a_n, b_n) and [b_n, a_{n+1})"},
        {"forest_depth", "BFS depth from each component's least element"},
        {"tree_leaves", "points sharing a leaf sit at the smallest level"},
        {"level_index", "1-based ascending; index 1 is the smallest level"},
    };
}

void require_input(const Ctx& ctx) {
    if (!ctx.has_input)
        throw input_error("this operation requires --input <file|->");
}

json check(const std::string& name, bool pass) {
    return json{{"check", name}, {"pass", pass}};
}

json check(const std::string& name, bool pass, const json& details) {
    json c = check(name, pass);
    c["details"] = details;
    return c;
}

json subset_to_json(const std::vector<int>& subset,
                    const FiniteMetricSpace& s) {
    json out = json::array();
    for (int i : subset) out.push_back(s.point(i));
    return out;
}

bool subset_monochrome(const FiniteMetricSpace&, const PairColoring& chi,
                       const std::vector<int>& subset, std::uint8_t color) {
    for (std::size_t a = 0; a < subset.size(); ++a)
        for (std::size_t b = a + 1; b < subset.size(); ++b)
            if (chi.at(subset[a], subset[b]) != color) return false;
    return true;
}

// Exhaustive best equidistance size for small spaces.
int brute_best_equidistance_size(const FiniteMetricSpace& s) {
    const int n = s.size();
    int best = 1;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        std::vector<int> pts;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) pts.push_back(i);
        bool ok = true;
        const Rat* r = nullptr;
        for (std::size_t a = 0; a < pts.size() && ok; ++a)
            for (std::size_t b = a + 1; b < pts.size(); ++b) {
                const Rat& d = s.dist(pts[a], pts[b]);
                if (!r)
                    r = &d;
                else if (*r != d) {
                    ok = false;
                    break;
                }
            }
        if (ok) best = size;
    }
    return best;
}

// ---------------------------------------------------------------------------
// metric-core operations

OpResult op_metric(const Ctx& ctx) {
    OpResult res;
    require_input(ctx);

    if (ctx.op == "validate") {
        // Classify without constructing (construction rejects non-metrics).
        const json& j = ctx.input;
        if (!j.is_object() || !j.contains("dist"))
            throw input_error("space JSON requires a \"dist\" matrix");
        std::vector<std::vector<Rat>> dist;
        for (const auto& row : j.at("dist")) {
            std::vector<Rat> r;
            for (const auto& v : row) r.push_back(rat_from_json(v));
            dist.push_back(std::move(r));
        }
        ValidationResult v = classify_matrix(dist);
        res.payload["classification"] = to_string(v.cls);
        if (v.witness) {
            res.payload["witness"] =
                json{{"reason", v.witness->reason}, {"points", v.witness->points}};
        }
        if (v.cls == MetricClass::not_a_metric) {
            res.exit_code = 1;
            res.status = "negative";
        }
        // Re-check the reported witness against the matrix.
        if (v.witness && v.witness->points.size() == 3) {
            auto& p = v.witness->points;
            bool violates =
                v.cls == MetricClass::not_a_metric
                    ? dist[p[0]][p[1]] > dist[p[0]][p[2]] + dist[p[2]][p[1]]
                    : dist[p[0]][p[1]] >
                          std::max(dist[p[0]][p[2]], dist[p[2]][p[1]]);
            res.verification.push_back(
                check("witness triple violates the stated inequality", violates));
        }
        return res;
    }

    FiniteMetricSpace s = space_from_json(ctx.input);

    if (ctx.op == "scale") {
        Scale sc = scale_of(s);
        json vals = json::array();
        for (const Rat& r : sc) vals.push_back(rat_to_json(r));
        res.payload["scale"] = vals;
        bool increasing = true;
        for (std::size_t i = 1; i < sc.size(); ++i)
            if (!(sc[i - 1] < sc[i])) increasing = false;
        bool realized = true;
        for (const Rat& r : sc) {
            bool found = false;
            for (int i = 0; i < s.size() && !found; ++i)
                for (int j = i + 1; j < s.size(); ++j)
                    if (s.dist(i, j) == r) {
                        found = true;
                        break;
                    }
            realized &= found;
        }
        res.verification.push_back(check("strictly increasing", increasing));
        res.verification.push_back(check("every value realized by a pair", realized));
        return res;
    }

    if (ctx.op == "partition") {
        if (ctx.r_text.empty()) throw input_error("partition requires --r");
        Rat r = Rat::parse(ctx.r_text);
        Partition p = r_equivalence(s, r);
        res.payload["r"] = rat_to_json(r);
        res.payload["blocks"] = partition_to_json(p, s);
        bool within_ok = true, cross_ok = true;
        for (std::size_t b = 0; b < p.blocks.size(); ++b) {
            for (std::size_t c = 0; c < p.blocks[b].size(); ++c)
                for (std::size_t d = c + 1; d < p.blocks[b].size(); ++d)
                    if (s.dist(p.blocks[b][c], p.blocks[b][d]) > r)
                        within_ok = false;
            for (std::size_t b2 = b + 1; b2 < p.blocks.size(); ++b2)
                for (int x : p.blocks[b])
                    for (int y : p.blocks[b2])
                        if (s.dist(x, y) <= r) cross_ok = false;
        }
        res.verification.push_back(check("within-block distances <= r", within_ok));
        res.verification.push_back(check("cross-block distances > r", cross_ok));
        return res;
    }

    if (ctx.op == "equidist") {
        EquidistanceResult e = find_max_equidistance(s);
        res.payload["subset"] = subset_to_json(e.subset, s);
        if (e.r) res.payload["r"] = rat_to_json(*e.r);
        bool equi = true;
        for (std::size_t a = 0; a < e.subset.size(); ++a)
            for (std::size_t b = a + 1; b < e.subset.size(); ++b)
                if (s.dist(e.subset[a], e.subset[b]) != *e.r) equi = false;
        res.verification.push_back(
            check("subset pairwise at the common distance", equi));
        if (s.size() <= 14)
            res.verification.push_back(
                check("matches exhaustive maximum",
                      (int)e.subset.size() == brute_best_equidistance_size(s)));
        return res;
    }

    if (ctx.op == "canon-seq") {
        int budget = ctx.budget > 0 ? ctx.budget : 12;
        CanonicalSequence c = canonical_sequence(s, budget);
        res.payload["kind"] = to_string(c.kind);
        res.payload["sequence"] = subset_to_json(c.seq, s);
        res.payload["exact"] = c.exact;
        res.verification.push_back(check("sequence satisfies the claimed kind",
                                         satisfies_kind(s, c.kind, c.seq)));
        return res;
    }

    throw input_error("unknown operation " + ctx.op);
}

// ---------------------------------------------------------------------------
// coloring-engine operations

FiniteMetricSpace space_field(const Ctx& ctx) {
    require_input(ctx);
    if (ctx.input.is_object() && ctx.input.contains("space"))
        return space_from_json(ctx.input.at("space"));
    return space_from_json(ctx.input);
}

OpResult op_color(const Ctx& ctx) {
    OpResult res;
    FiniteMetricSpace s = space_field(ctx);

    if (ctx.op == "color.induce") {
        ScaleMap f = scale_map_from_json(ctx.input.at("scale_map"));
        PairColoring chi = induce_coloring(s, f);
        res.payload["coloring"] = pair_coloring_to_json(chi);
        auto back = recognize_isometric(s, chi);
        res.verification.push_back(
            check("coloring factors through distance",
                  std::holds_alternative<ScaleMap>(back)));
        return res;
    }

    if (ctx.op == "color.recognize") {
        PairColoring chi =
            pair_coloring_from_json(ctx.input.at("coloring"), s.size());
        auto r = recognize_isometric(s, chi);
        if (auto* f = std::get_if<ScaleMap>(&r)) {
            res.payload["scale_map"] = scale_map_to_json(*f);
            PairColoring again = induce_coloring(s, *f);
            bool same = true;
            for (int i = 0; i < s.size(); ++i)
                for (int j = i + 1; j < s.size(); ++j)
                    if (again.at(i, j) != chi.at(i, j)) same = false;
            res.verification.push_back(
                check("induced coloring reproduces the input", same));
        } else {
            auto& v = std::get<IsometricViolation>(r);
            res.payload["violation"] =
                json{{"pair1", {s.point(v.pair1[0]), s.point(v.pair1[1])}},
                     {"pair2", {s.point(v.pair2[0]), s.point(v.pair2[1])}},
                     {"distance", rat_to_json(v.distance)}};
            res.exit_code = 1;
            res.status = "negative";
            res.verification.push_back(check(
                "witness pairs share a distance with different colors",
                s.dist(v.pair1[0], v.pair1[1]) == s.dist(v.pair2[0], v.pair2[1]) &&
                    chi.at(v.pair1[0], v.pair1[1]) !=
                        chi.at(v.pair2[0], v.pair2[1])));
        }
        return res;
    }

    if (ctx.op == "color.max-mono" || ctx.op == "oracle.max-mono") {
        PairColoring chi =
            pair_coloring_from_json(ctx.input.at("coloring"), s.size());
        MonochromeResult m = ctx.op == "oracle.max-mono"
                                 ? oracle::brute_max_monochrome(s, chi)
                                 : max_monochrome(s, chi);
        res.payload["subset"] = subset_to_json(m.subset, s);
        res.payload["color"] = (int)m.color;
        res.payload["size"] = m.subset.size();
        res.verification.push_back(
            check("subset is monochrome in the reported color",
                  subset_monochrome(s, chi, m.subset, m.color)));
        if (s.size() <= 14) {
            MonochromeResult other = ctx.op == "oracle.max-mono"
                                         ? max_monochrome(s, chi)
                                         : oracle::brute_max_monochrome(s, chi);
            res.verification.push_back(check(
                "search and exhaustive oracle agree",
                other.subset == m.subset && other.color == m.color));
        }
        return res;
    }

    throw input_error("unknown operation " + ctx.op);
}

// ---------------------------------------------------------------------------
// family operations

json separation_violation_json(const SeparationViolation& v) {
    return json{{"cells", v.cells}, {"distance", rat_to_json(v.distance)}};
}

OpResult op_family(const Ctx& ctx) {
    OpResult res;
    FiniteMetricSpace s = space_field(ctx);
    auto cells = cells_from_json(ctx.input, s);
    SeparatedFamily fam = check_separation(s, cells);

    json fam_json{{"cells", cells_to_json(fam.cells, s)},
                  {"level", to_string(fam.level)}};
    if (fam.weak_violation)
        fam_json["weak_violation"] =
            separation_violation_json(*fam.weak_violation);
    if (fam.strong_violation)
        fam_json["strong_violation"] =
            separation_violation_json(*fam.strong_violation);

    if (ctx.op == "family.check") {
        res.payload = fam_json;
        if (fam.level == SeparationLevel::none) {
            res.exit_code = 1;
            res.status = "negative";
        }
        SeparatedFamily again = check_separation(s, cells);
        res.verification.push_back(
            check("level stable under recomputation", again.level == fam.level));
        return res;
    }

    // Exhaustive monochrome guarantees over the union, for small unions.
    auto union_points = [&]() {
        std::vector<int> u;
        for (const auto& c : fam.cells) u.insert(u.end(), c.begin(), c.end());
        std::sort(u.begin(), u.end());
        return u;
    };
    auto cell_of = [&](int p) {
        for (std::size_t c = 0; c < fam.cells.size(); ++c)
            for (int q : fam.cells[c])
                if (q == p) return (int)c;
        return -1;
    };

    if (ctx.op == "family.color") {
        PairColoring chi = family_coloring(s, fam);
        res.payload["family"] = fam_json;
        res.payload["scale_map"] = scale_map_to_json(family_scale_map(s, fam));
        res.payload["coloring"] = pair_coloring_to_json(chi);
        res.verification.push_back(
            check("coloring is isometric",
                  std::holds_alternative<ScaleMap>(recognize_isometric(s, chi))));
        std::vector<int> u = union_points();
        if (u.size() <= 14) {
            bool ok0 = true, ok1 = true;
            for (std::uint32_t mask = 1; mask < (1u << u.size()); ++mask) {
                std::vector<int> sub;
                for (std::size_t i = 0; i < u.size(); ++i)
                    if (mask >> i & 1) sub.push_back(u[i]);
                if (subset_monochrome(s, chi, sub, 0)) {
                    for (std::size_t a = 1; a < sub.size(); ++a)
                        if (cell_of(sub[a]) != cell_of(sub[0])) ok0 = false;
                }
                if (sub.size() >= 2 && subset_monochrome(s, chi, sub, 1)) {
                    std::vector<int> cnt(fam.cells.size(), 0);
                    for (int p : sub)
                        if (++cnt[cell_of(p)] > 1) ok1 = false;
                }
            }
            res.verification.push_back(
                check("0-monochrome subsets lie in a single cell", ok0));
            res.verification.push_back(
                check("1-monochrome subsets meet each cell at most once", ok1));
        }
        return res;
    }

    if (ctx.op == "family.lift") {
        PairColoring idx = pair_coloring_from_json(ctx.input.at("idx_coloring"),
                                                   (int)fam.cells.size());
        PairColoring chi = lift_coloring(s, fam, idx);
        res.payload["family"] = fam_json;
        res.payload["scale_map"] = scale_map_to_json(lift_scale_map(s, fam, idx));
        res.payload["coloring"] = pair_coloring_to_json(chi);
        res.verification.push_back(
            check("lifted coloring is isometric",
                  std::holds_alternative<ScaleMap>(recognize_isometric(s, chi))));
        // Pushforward: monochrome transversals map to idx-monochrome sets.
        std::vector<int> u = union_points();
        if (u.size() <= 14) {
            bool push_ok = true;
            for (std::uint32_t mask = 1; mask < (1u << u.size()); ++mask) {
                std::vector<int> sub;
                for (std::size_t i = 0; i < u.size(); ++i)
                    if (mask >> i & 1) sub.push_back(u[i]);
                if (sub.size() < 2) continue;
                std::vector<int> cnt(fam.cells.size(), 0);
                bool transversal = true;
                for (int p : sub)
                    if (++cnt[cell_of(p)] > 1) transversal = false;
                if (!transversal) continue;
                for (std::uint8_t color : {0, 1}) {
                    if (!subset_monochrome(s, chi, sub, color)) continue;
                    for (std::size_t a = 0; a < sub.size(); ++a)
                        for (std::size_t b = a + 1; b < sub.size(); ++b)
                            if (idx.at(cell_of(sub[a]), cell_of(sub[b])) != color)
                                push_ok = false;
                }
            }
            res.verification.push_back(check(
                "monochrome transversal images are idx-monochrome", push_ok));
        }
        return res;
    }

    throw input_error("unknown operation " + ctx.op);
}

// ---------------------------------------------------------------------------
// profile-tree operations

json verdict_to_json(const RamseyVerdict& v) {
    json j{{"universal", v.universal}};
    if (v.obstruction) {
        j["obstruction"] = json{{"level_index", v.obstruction->level_index},
                                {"clause", to_string(v.obstruction->clause)}};
        j["witness_coloring"] = scale_map_to_json(*v.witness_coloring);
    }
    return j;
}

// Every scale map on the sample admits a monochrome set that is a full
// class or a full transversal at some level (witness of size >= 2 on
// multi-point samples).
bool class_or_transversal_guarantee(const FiniteMetricSpace& sample) {
    Scale sc = scale_of(sample);
    if (sc.size() > 20) return false;
    int need = std::min(2, sample.size());
    for (std::uint32_t bits = 0; bits < (1u << sc.size()); ++bits) {
        ScaleMap f;
        f.scale = sc;
        for (std::size_t i = 0; i < sc.size(); ++i)
            f.colors.push_back((bits >> i) & 1);
        PairColoring chi = induce_coloring(sample, f);
        bool found = false;
        for (const Rat& r : sc) {
            Partition p = r_equivalence(sample, r);
            for (const auto& blk : p.blocks) {
                if ((int)blk.size() < need) continue;
                std::uint8_t c = blk.size() >= 2 ? chi.at(blk[0], blk[1]) : 0;
                if (subset_monochrome(sample, chi, blk, c)) {
                    found = true;
                    break;
                }
            }
            if (found) break;
            if ((int)p.blocks.size() >= need) {
                std::vector<int> reps;
                for (const auto& blk : p.blocks) reps.push_back(blk[0]);
                std::uint8_t c = reps.size() >= 2 ? chi.at(reps[0], reps[1]) : 0;
                if (subset_monochrome(sample, chi, reps, c)) {
                    found = true;
                    break;
                }
            }
        }
        if (!found) return false;
    }
    return true;
}

OpResult op_tree(const Ctx& ctx) {
    OpResult res;

    if (ctx.op == "tree.from-partition") {
        require_input(ctx);
        std::vector<std::string> points;
        for (const auto& p : ctx.input.at("points"))
            points.push_back(p.is_string() ? p.get<std::string>()
                                           : std::to_string(p.get<std::int64_t>()));
        std::vector<std::vector<std::string>> blocks;
        for (const auto& b : ctx.input.at("partition")) {
            std::vector<std::string> blk;
            for (const auto& p : b)
                blk.push_back(p.is_string() ? p.get<std::string>()
                                            : std::to_string(p.get<std::int64_t>()));
            blocks.push_back(std::move(blk));
        }
        ProfileTree t = from_partition(points, blocks);
        res.payload["tree"] = tree_to_json(t);
        Materialized m = materialize(t, (int)points.size());
        bool metric_ok = m.space.size() == (int)points.size();
        for (int i = 0; i < m.space.size() && metric_ok; ++i)
            for (int j = i + 1; j < m.space.size(); ++j) {
                const Rat& d = m.space.dist(i, j);
                if (d != Rat(1) && d != Rat(2)) metric_ok = false;
            }
        res.verification.push_back(
            check("materialization uses distances {1,2} only", metric_ok));
        return res;
    }

    require_input(ctx);
    ProfileTree t = tree_from_json(ctx.input);

    if (ctx.op == "tree.decide") {
        RamseyVerdict v = decide_universal_ramsey(t);
        res.payload = verdict_to_json(v);
        int budget = ctx.budget > 0 ? ctx.budget : 12;
        Materialized m = materialize(t, budget);
        if (v.universal) {
            res.verification.push_back(
                check("class-or-transversal monochrome guarantee on a budget-" +
                          std::to_string(budget) + " sample",
                      class_or_transversal_guarantee(m.space)));
        } else {
            ObstructionBound b = check_obstruction_bound(
                m.space, t.level_value(v.obstruction->level_index),
                *v.witness_coloring);
            res.verification.push_back(check(
                "obstruction bound holds on a budget-" + std::to_string(budget) +
                    " sample",
                b.holds,
                json{{"num_classes", b.num_classes},
                     {"max_class", b.max_class},
                     {"bound", b.bound},
                     {"max_monochrome", b.max_monochrome}}));
        }
        return res;
    }

    if (ctx.op == "tree.materialize") {
        int budget = ctx.budget > 0 ? ctx.budget : 24;
        Materialized m = materialize(t, budget);
        res.payload["space"] = space_to_json(m.space);
        res.payload["truncated"] = m.truncated;
        bool ultra = true;
        if (m.space.size() <= 64) {
            std::vector<std::vector<Rat>> d(m.space.size(),
                                            std::vector<Rat>(m.space.size()));
            for (int i = 0; i < m.space.size(); ++i)
                for (int j = 0; j < m.space.size(); ++j)
                    d[i][j] = m.space.dist(i, j);
            ultra = classify_matrix(d).cls == MetricClass::ultrametric;
        }
        res.verification.push_back(check("sample is ultrametric", ultra));
        Scale sc = scale_of(m.space);
        bool in_levels = true;
        for (const Rat& v : sc)
            if (std::find(t.levels.begin(), t.levels.end(), v) == t.levels.end())
                in_levels = false;
        res.verification.push_back(check("sample scale within tree levels",
                                         in_levels));
        res.verification.push_back(
            check("point count within budget", m.space.size() <= budget));
        return res;
    }

    if (ctx.op == "tree.witness") {
        if (ctx.k < 1) throw input_error("tree witness requires --k >= 1");
        WitnessSetResult w = witness_set(t, ctx.k, ctx.budget);
        res.payload["anchor"] = w.space.point(w.anchor);
        res.payload["y"] = subset_to_json(w.y, w.space);
        res.payload["kind"] = to_string(w.kind);
        json h = json::array();
        for (const Rat& v : w.h) h.push_back(rat_to_json(v));
        res.payload["h"] = h;
        res.payload["sample_size"] = w.space.size();
        res.verification.push_back(
            check("majority class monochrome of size >= ceil(k/2) for all " +
                      std::to_string(w.maps_checked) + " scale maps",
                  w.guarantee_verified));
        return res;
    }

    if (ctx.op == "tree.obstruct") {
        ObstructionColoring oc = obstruction_coloring(t);
        res.payload["scale_map"] = scale_map_to_json(oc.coloring);
        res.payload["level_index"] = oc.level_index;
        res.payload["clause"] = to_string(oc.clause);
        int budget = ctx.budget > 0 ? ctx.budget : 12;
        Materialized m = materialize(t, budget);
        ObstructionBound b = check_obstruction_bound(
            m.space, t.level_value(oc.level_index), oc.coloring);
        res.payload["sample_bound"] = json{{"num_classes", b.num_classes},
                                           {"max_class", b.max_class},
                                           {"bound", b.bound},
                                           {"max_monochrome", b.max_monochrome}};
        res.verification.push_back(
            check("monochrome bound holds on the sample", b.holds));
        return res;
    }

    throw input_error("unknown operation " + ctx.op);
}

// ---------------------------------------------------------------------------
// integer operations

StepFunction step_function(const Ctx& ctx) {
    if (!ctx.f_name.empty()) {
        if (ctx.n < 1) throw input_error("builtin f requires --n");
        if (ctx.f_name == "double") return StepFunction::doubling(ctx.n);
        if (ctx.f_name == "successor") return StepFunction::successor(ctx.n);
        if (ctx.f_name == "plus-k") return StepFunction::plus_k(ctx.n, ctx.plus);
        if (ctx.f_name == "square-plus1")
            return StepFunction::square_plus1(ctx.n);
        throw input_error("unknown f: " + ctx.f_name +
                          " (expected double, successor, plus-k, square-plus1)");
    }
    if (ctx.has_input && ctx.input.is_object() && ctx.input.contains("f")) {
        std::vector<std::int64_t> table;
        for (const auto& v : ctx.input.at("f"))
            table.push_back(v.get<std::int64_t>());
        return StepFunction::from_table(std::move(table));
    }
    throw input_error("provide --f <name> or --input {\"f\": [...]}");
}

std::vector<std::int64_t> thin_candidate(const Ctx& ctx) {
    if (!ctx.t_name.empty()) {
        std::vector<std::int64_t> t;
        if (ctx.t_name == "powers2") {
            for (std::int64_t v = 1; v <= ctx.window; v *= 2) t.push_back(v);
        } else if (ctx.t_name == "squares") {
            for (std::int64_t k = 1; k * k <= ctx.window; ++k) t.push_back(k * k);
        } else if (ctx.t_name == "factorials") {
            std::int64_t v = 1;
            for (std::int64_t k = 1; v <= ctx.window; v *= ++k) t.push_back(v);
        } else {
            throw input_error("unknown t: " + ctx.t_name +
                              " (expected powers2, squares, factorials)");
        }
        return t;
    }
    if (ctx.has_input && ctx.input.is_object() && ctx.input.contains("set")) {
        std::vector<std::int64_t> t;
        for (const auto& v : ctx.input.at("set"))
            t.push_back(v.get<std::int64_t>());
        return t;
    }
    throw input_error("provide --t <name> or --input {\"set\": [...]}");
}

json blocks_to_json(const BlockSequence& b) {
    json pairs = json::array();
    for (const auto& [a, v] : b.pairs) pairs.push_back(json::array({a, v}));
    return pairs;
}

BlockSequence blocks_from_ctx(const Ctx& ctx,
                              const std::vector<std::int64_t>& t) {
    if (ctx.count > 0) return construct_blocks(t, ctx.count);
    if (ctx.has_input && ctx.input.is_object() && ctx.input.contains("blocks")) {
        BlockSequence b;
        for (const auto& p : ctx.input.at("blocks")) {
            if (!p.is_array() || p.size() != 2)
                throw input_error("blocks entries must be [a, b]");
            b.pairs.emplace_back(p[0].get<std::int64_t>(),
                                 p[1].get<std::int64_t>());
        }
        if (b.pairs.empty()) throw input_error("empty block list");
        return b;
    }
    throw input_error("provide --count or --input {\"blocks\": [...]}");
}

OpResult op_int(const Ctx& ctx) {
    OpResult res;

    if (ctx.op == "int.forest") {
        StepFunction f = step_function(ctx);
        ForestPartition p = forest_partition(f);
        res.payload["n_max"] = f.n_max;
        res.payload["a1"] = p.a1;
        res.payload["a2"] = p.a2;
        bool crossing_ok = true;
        for (int x = 1; x <= f.n_max; ++x)
            if (f(x) <= f.n_max && p.in_a1(x) == p.in_a1(f(x)))
                crossing_ok = false;
        bool parity_ok = true;
        for (std::int64_t x : p.a1)
            if (p.depth[x - 1] % 2 != 0) parity_ok = false;
        for (std::int64_t x : p.a2)
            if (p.depth[x - 1] % 2 == 0) parity_ok = false;
        bool covers = p.a1.size() + p.a2.size() == (std::size_t)f.n_max;
        res.verification.push_back(
            check("x and f(x) never share a cell", crossing_ok));
        res.verification.push_back(check("cells follow depth parity", parity_ok));
        res.verification.push_back(check("cells partition the window", covers));
        return res;
    }

    if (ctx.op == "int.pattern-check") {
        StepFunction f = step_function(ctx);
        require_input(ctx);
        std::vector<std::int64_t> u;
        for (const auto& v : ctx.input.at("set")) u.push_back(v.get<std::int64_t>());
        auto violation = verify_pattern_free(u, f);
        if (violation) {
            res.payload["violation"] = json{{"a", violation->a},
                                            {"x", violation->x}};
            res.exit_code = 1;
            res.status = "negative";
            std::set<std::int64_t> members(u.begin(), u.end());
            res.verification.push_back(check(
                "witness pattern {a, a+x, a+f(x)} inside the set",
                members.count(violation->a) &&
                    members.count(violation->a + violation->x) &&
                    members.count(violation->a + f(violation->x))));
        } else {
            res.payload["pattern_free"] = true;
        }
        return res;
    }

    if (ctx.op == "int.pattern-member") {
        StepFunction f = step_function(ctx);
        std::vector<std::int64_t> u = pattern_free_member(f);
        res.payload["member"] = u;
        res.payload["size"] = u.size();
        res.verification.push_back(
            check("member passes the pattern-free verifier",
                  !verify_pattern_free(u, f).has_value()));
        ForestPartition p = forest_partition(f);
        bool mono = true;
        std::optional<bool> color;
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = i + 1; j < u.size(); ++j) {
                bool c = p.in_a1(u[j] - u[i]);
                if (!color)
                    color = c;
                else if (*color != c)
                    mono = false;
            }
        res.verification.push_back(
            check("member monochrome under the difference coloring", mono));
        return res;
    }

    if (ctx.op == "int.thin") {
        std::vector<std::int64_t> t = thin_candidate(ctx);
        bool thin = is_thin(t, ctx.thin_floor);
        res.payload["set_size"] = t.size();
        res.payload["thin"] = thin;
        json gaps = json::array();
        for (std::size_t i = 1; i < t.size(); ++i) gaps.push_back(t[i] - t[i - 1]);
        res.payload["gaps"] = gaps;
        if (!thin) {
            res.exit_code = 1;
            res.status = "negative";
        }
        res.verification.push_back(check("policy recomputation agrees",
                                         is_thin(t, ctx.thin_floor) == thin));
        return res;
    }

    if (ctx.op == "int.blocks") {
        std::vector<std::int64_t> t = thin_candidate(ctx);
        if (!is_thin(t, ctx.thin_floor))
            throw precondition_error("set fails the thinness policy");
        if (ctx.count < 1) throw input_error("int blocks requires --count");
        BlockSequence b = construct_blocks(t, ctx.count);
        res.payload["blocks"] = blocks_to_json(b);
        res.payload["partial"] = b.partial;
        if (b.partial) {
            res.exit_code = 1;
            res.status = "negative";
        }
        bool ordering = true;
        for (std::size_t i = 0; i < b.pairs.size(); ++i) {
            if (b.pairs[i].first >= b.pairs[i].second) ordering = false;
            if (i + 1 < b.pairs.size() &&
                b.pairs[i].second >= b.pairs[i + 1].first)
                ordering = false;
        }
        res.verification.push_back(check("blocks strictly ordered", ordering));
        BlockSequence again = construct_blocks(t, ctx.count);
        res.verification.push_back(
            check("greedy construction deterministic", again.pairs == b.pairs));
        return res;
    }

    if (ctx.op == "int.verify-blocks") {
        std::vector<std::int64_t> t = thin_candidate(ctx);
        BlockSequence b = blocks_from_ctx(ctx, t);
        BlockConditionReport rep = verify_block_conditions(t, b, ctx.window);
        json conditions = json::array();
        for (int c = 1; c <= 5; ++c)
            conditions.push_back(json{{"condition", c}, {"pass", rep.pass[c - 1]}});
        res.payload["conditions"] = conditions;
        res.payload["blocks"] = blocks_to_json(b);
        res.payload["window"] = ctx.window;
        json fails = json::array();
        for (const auto& f : rep.failures)
            fails.push_back(json{{"condition", f.condition},
                                 {"indices", f.indices},
                                 {"distance", f.distance}});
        res.payload["failures"] = fails;
        if (!rep.all_pass()) {
            res.exit_code = 1;
            res.status = "negative";
        }
        for (int c = 1; c <= 5; ++c)
            res.verification.push_back(
                check("condition (" + std::to_string(c) + ")", rep.pass[c - 1]));
        return res;
    }

    if (ctx.op == "int.quotient") {
        std::vector<std::int64_t> t = thin_candidate(ctx);
        BlockSequence b = blocks_from_ctx(ctx, t);
        if (ctx.side != "A" && ctx.side != "B")
            throw input_error("int quotient requires --side A|B");
        BlockSide side = ctx.side == "A" ? BlockSide::A : BlockSide::B;
        QuotientResult q = blocks_to_quotient(t, b, side, ctx.window);
        res.payload["side"] = ctx.side;
        res.payload["cells"] = cells_to_json(q.family.cells, q.space);
        res.payload["level"] = to_string(q.family.level);
        json phi = json::object();
        for (std::size_t i = 0; i < q.phi.size(); ++i)
            if (q.phi[i] != 0) phi[std::to_string(i + 1)] = q.phi[i];
        res.payload["phi_nonzero"] = phi;
        res.verification.push_back(check(
            "family strongly separated", q.family.level == SeparationLevel::strong));
        bool phi_ok = true;
        for (std::size_t c = 0; c < q.family.cells.size(); ++c)
            for (int p : q.family.cells[c])
                if (q.phi[(std::size_t)p] != (int)c) phi_ok = false;
        res.verification.push_back(check("phi matches the cells", phi_ok));
        return res;
    }

    if (ctx.op == "int.sidon") {
        require_input(ctx);
        std::vector<std::int64_t> u;
        for (const auto& v : ctx.input.at("set")) u.push_back(v.get<std::int64_t>());
        bool sidon = is_sidon(u);
        res.payload["sidon"] = sidon;
        json diffs = json::array();
        std::vector<std::int64_t> s(u.begin(), u.end());
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                diffs.push_back(s[j] - s[i]);
        res.payload["differences"] = diffs;
        if (!sidon) {
            res.exit_code = 1;
            res.status = "negative";
        }
        res.verification.push_back(
            check("recomputation agrees", is_sidon(u) == sidon));
        return res;
    }

    if (ctx.op == "int.extend") {
        require_input(ctx);
        std::vector<std::int64_t> u;
        for (const auto& v : ctx.input.at("set")) u.push_back(v.get<std::int64_t>());
        std::sort(u.begin(), u.end());
        int n_max = ctx.n > 0 ? ctx.n : (u.empty() ? 1 : (int)u.back());
        PairColoring chi =
            pair_coloring_from_json(ctx.input.at("coloring"), (int)u.size());
        ScaleMap f = extend_to_isometric(u, chi, n_max);
        res.payload["scale_map"] = scale_map_to_json(f);
        res.payload["n_max"] = n_max;
        bool round_trip = true;
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = i + 1; j < u.size(); ++j)
                if (f.at(Rat(u[j] - u[i])) != chi.at((int)i, (int)j))
                    round_trip = false;
        res.verification.push_back(
            check("extension restricted to the set equals the input", round_trip));
        return res;
    }

    throw input_error("unknown operation " + ctx.op);
}

// ---------------------------------------------------------------------------
// boolean-group operations

OpResult op_bgroup(const Ctx& ctx) {
    OpResult res;

    if (ctx.op == "bgroup.dist") {
        if (ctx.x_bits.empty() || ctx.y_bits.empty())
            throw input_error("bgroup dist requires --x and --y bit strings");
        if (ctx.x_bits.size() != ctx.y_bits.size())
            throw input_error("elements must have equal length");
        int len = (int)ctx.x_bits.size();
        std::uint32_t x = b_parse(ctx.x_bits), y = b_parse(ctx.y_bits);
        int d = b_distance(x, y, len);
        res.payload["distance"] = d;
        res.verification.push_back(
            check("symmetric", b_distance(y, x, len) == d));
        bool agree_from_d = true;
        for (int i = d; i < len; ++i)
            if (((x >> i) & 1) != ((y >> i) & 1)) agree_from_d = false;
        res.verification.push_back(
            check("coordinates agree from the reported index on", agree_from_d));
        return res;
    }

    if (ctx.op == "bgroup.space") {
        if (ctx.len < 1) throw input_error("bgroup space requires --L");
        FiniteMetricSpace s = b_space(ctx.len);
        res.payload["space"] = space_to_json(s);
        bool ultra = true;
        if (ctx.len <= 6) {
            std::vector<std::vector<Rat>> d(s.size(), std::vector<Rat>(s.size()));
            for (int i = 0; i < s.size(); ++i)
                for (int j = 0; j < s.size(); ++j) d[i][j] = s.dist(i, j);
            ultra = classify_matrix(d).cls == MetricClass::ultrametric;
            res.verification.push_back(
                check("ultrametric (exhaustive triples)", ultra));
        }
        Scale sc = scale_of(s);
        bool in_range = sc.front() >= Rat(1) && sc.back() <= Rat(ctx.len);
        res.verification.push_back(check("scale within 1..L", in_range));
        return res;
    }

    if (ctx.op == "bgroup.ps-check" || ctx.op == "bgroup.inv-check") {
        if (ctx.len < 1) throw input_error("this check requires --L");
        require_input(ctx);
        const int n = 1 << ctx.len;
        // triples keyed by bit strings
        json triples = json::array();
        for (const auto& t : ctx.input) {
            if (!t.is_array() || t.size() != 3)
                throw input_error("coloring entries must be [bits, bits, color]");
            triples.push_back(json::array(
                {(std::int64_t)b_parse(t[0].get<std::string>()),
                 (std::int64_t)b_parse(t[1].get<std::string>()), t[2]}));
        }
        PairColoring chi = pair_coloring_from_json(triples, n);
        auto ps = is_ps_coloring(ctx.len, chi);
        auto inv = is_invariant_coloring(ctx.len, chi);
        bool primary_ok = ctx.op == "bgroup.ps-check" ? !ps : !inv;
        res.payload[ctx.op == "bgroup.ps-check" ? "ps" : "invariant"] = primary_ok;
        if (ps && ctx.op == "bgroup.ps-check")
            res.payload["violation"] =
                json{{"pair1",
                      {b_format(ps->pair1[0], ctx.len), b_format(ps->pair1[1], ctx.len)}},
                     {"pair2",
                      {b_format(ps->pair2[0], ctx.len), b_format(ps->pair2[1], ctx.len)}},
                     {"sum", b_format(ps->sum, ctx.len)}};
        if (inv && ctx.op == "bgroup.inv-check")
            res.payload["violation"] =
                json{{"pair",
                      {b_format(inv->pair[0], ctx.len), b_format(inv->pair[1], ctx.len)}},
                     {"g", b_format(inv->g, ctx.len)}};
        if (!primary_ok) {
            res.exit_code = 1;
            res.status = "negative";
        }
        res.verification.push_back(check(
            "PS and invariance checks agree", ps.has_value() == inv.has_value()));
        return res;
    }

    throw input_error("unknown operation " + ctx.op);
}

// ---------------------------------------------------------------------------
// oracle operations

OpResult op_oracle(const Ctx& ctx) {
    OpResult res;
    if (ctx.op == "oracle.max-mono") return op_color(ctx);
    if (ctx.op == "oracle.equi-guarantee") {
        if (ctx.n < 1 || ctx.k < 1)
            throw input_error("oracle equi-guarantee requires --n and --k");
        bool g = oracle::equidistance_guarantee(ctx.n, ctx.k);
        res.payload["n"] = ctx.n;
        res.payload["k"] = ctx.k;
        res.payload["guaranteed"] = g;
        res.payload["assignments_checked"] = 1u << (ctx.n * (ctx.n - 1) / 2);
        if (!g) {
            res.exit_code = 1;
            res.status = "negative";
        }
        res.verification.push_back(check(
            "recomputation agrees", oracle::equidistance_guarantee(ctx.n, ctx.k) == g));
        return res;
    }
    throw input_error("unknown operation " + ctx.op);
}

OpResult run_op(const Ctx& ctx) {
    const std::string& op = ctx.op;
    if (op == "validate" || op == "scale" || op == "partition" ||
        op == "equidist" || op == "canon-seq")
        return op_metric(ctx);
    if (op.rfind("color.", 0) == 0) return op_color(ctx);
    if (op.rfind("family.", 0) == 0) return op_family(ctx);
    if (op.rfind("tree.", 0) == 0) return op_tree(ctx);
    if (op.rfind("int.", 0) == 0) return op_int(ctx);
    if (op.rfind("bgroup.", 0) == 0) return op_bgroup(ctx);
    if (op.rfind("oracle.", 0) == 0) return op_oracle(ctx);
    throw input_error("unknown operation " + op);
}

json negative_certificate(const Ctx& ctx, const std::string& kind,
                          const json& witness) {
    json cert;
    cert["operation"] = ctx.op;
    cert["artifact_version"] = kVersion;
    cert["status"] = "negative";
    cert["reason"] = kind;
    if (!witness.is_null()) cert["witness"] = witness;
    cert["conventions"] = conventions(ctx);
    cert["input_digest"] = fnv_digest(ctx.op + "\n" + ctx.raw_input);
    if (ctx.has_seed) cert["seed"] = ctx.seed;
    return cert;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    Ctx ctx;

    CLI::App app{"finite-instance toolkit for isometric colorings, ultrametric "
                 "profile trees and integer Ramsey constructions"};
    app.require_subcommand(1);

    app.add_option("--input", ctx.input_path, "JSON input file, or - for stdin");
    app.add_flag("--recheck", ctx.recheck,
                 "run the operation twice and require identical certificates");
    app.add_option("--budget", ctx.budget, "materialization / search budget");
    app.add_option("--thin-floor", ctx.thin_floor, "thinness policy floor");
    auto* seed_opt =
        app.add_option("--seed", ctx.seed, "seed recorded in the certificate");
    app.add_option("--r", ctx.r_text, "equivalence threshold (rational)");
    app.add_option("--k", ctx.k, "subset size / guarantee parameter");
    app.add_option("--count", ctx.count, "number of blocks");
    app.add_option("--n", ctx.n, "window size / point count");
    app.add_option("--L", ctx.len, "boolean group length");
    app.add_option("--plus", ctx.plus, "offset for --f plus-k");
    app.add_option("--window", ctx.window, "integer window bound");
    app.add_option("--f", ctx.f_name,
                   "step function: double, successor, plus-k, square-plus1");
    app.add_option("--t", ctx.t_name, "set generator: powers2, squares, factorials");
    app.add_option("--side", ctx.side, "block side: A or B");
    app.add_option("--x", ctx.x_bits, "group element (bit string)");
    app.add_option("--y", ctx.y_bits, "group element (bit string)");

    auto leaf = [&](CLI::App* parent, const std::string& name,
                    const std::string& op, const std::string& desc) {
        CLI::App* sub = parent->add_subcommand(name, desc);
        sub->fallthrough();
        sub->callback([&ctx, op] { ctx.op = op; });
        return sub;
    };

    leaf(&app, "validate", "validate", "classify a distance matrix");
    leaf(&app, "scale", "scale", "distinct nonzero distances of a space");
    leaf(&app, "partition", "partition", "classes of d(x,y) <= r");
    leaf(&app, "equidist", "equidist", "largest equidistance subset");
    leaf(&app, "canon-seq", "canon-seq", "longest canonical sequence");

    CLI::App* color = app.add_subcommand("color", "isometric colorings");
    color->require_subcommand(1);
    color->fallthrough();
    leaf(color, "induce", "color.induce", "pair coloring from a scale map");
    leaf(color, "recognize", "color.recognize", "recover the scale map");
    leaf(color, "max-mono", "color.max-mono", "maximum monochrome subset");

    CLI::App* family = app.add_subcommand("family", "separated families");
    family->require_subcommand(1);
    family->fallthrough();
    leaf(family, "check", "family.check", "separation level of cells");
    leaf(family, "color", "family.color", "within/cross coloring");
    leaf(family, "lift", "family.lift", "lift an index coloring");

    CLI::App* tree = app.add_subcommand("tree", "ultrametric profile trees");
    tree->require_subcommand(1);
    tree->fallthrough();
    leaf(tree, "decide", "tree.decide", "universal Ramsey verdict");
    leaf(tree, "materialize", "tree.materialize", "finite sample of a tree");
    leaf(tree, "witness", "tree.witness", "witness set with guarantee");
    leaf(tree, "obstruct", "tree.obstruct", "obstruction coloring and bound");
    leaf(tree, "from-partition", "tree.from-partition",
         "two-level tree from a partition");

    CLI::App* integers = app.add_subcommand("int", "integer window operations");
    integers->require_subcommand(1);
    integers->fallthrough();
    leaf(integers, "forest", "int.forest", "forest 2-coloring of a window");
    leaf(integers, "pattern-check", "int.pattern-check",
         "verify a set avoids {a, a+x, a+f(x)}");
    leaf(integers, "pattern-member", "int.pattern-member",
         "monochrome pattern-avoiding member");
    leaf(integers, "thin", "int.thin", "finite thinness policy");
    leaf(integers, "blocks", "int.blocks", "greedy block construction");
    leaf(integers, "verify-blocks", "int.verify-blocks",
         "check block conditions (1)-(5)");
    leaf(integers, "quotient", "int.quotient", "interval-trace family and phi");
    leaf(integers, "sidon", "int.sidon", "all pairwise differences distinct");
    leaf(integers, "extend", "int.extend",
         "extend a Sidon-set coloring to a scale map");

    CLI::App* bgroup = app.add_subcommand("bgroup", "boolean group");
    bgroup->require_subcommand(1);
    bgroup->fallthrough();
    leaf(bgroup, "dist", "bgroup.dist", "group ultrametric distance");
    leaf(bgroup, "space", "bgroup.space", "the 2^L-point space");
    leaf(bgroup, "ps-check", "bgroup.ps-check", "does chi factor through sums");
    leaf(bgroup, "inv-check", "bgroup.inv-check", "is chi translation invariant");

    CLI::App* orc = app.add_subcommand("oracle", "exhaustive oracles");
    orc->require_subcommand(1);
    orc->fallthrough();
    leaf(orc, "max-mono", "oracle.max-mono", "exhaustive monochrome search");
    leaf(orc, "equi-guarantee", "oracle.equi-guarantee",
         "finite Ramsey guarantee for two distances");

    std::vector<const char*> argv;
    argv.push_back("ramseykit");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    ctx.has_seed = seed_opt->count() > 0;

    try {
        if (!ctx.input_path.empty()) {
            std::stringstream buffer;
            if (ctx.input_path == "-") {
                buffer << std::cin.rdbuf();
            } else {
                std::ifstream in(ctx.input_path);
                if (!in) throw input_error("cannot open input: " + ctx.input_path);
                buffer << in.rdbuf();
            }
            ctx.raw_input = buffer.str();
            try {
                ctx.input = json::parse(ctx.raw_input);
            } catch (const json::parse_error& e) {
                throw input_error(std::string("bad JSON input: ") + e.what());
            }
            ctx.has_input = true;
        }

        OpResult r = run_op(ctx);
        json cert;
        cert["operation"] = ctx.op;
        cert["artifact_version"] = kVersion;
        cert["status"] = r.status;
        cert["payload"] = r.payload;
        cert["verification"] = r.verification;
        cert["conventions"] = conventions(ctx);
        cert["input_digest"] = fnv_digest(ctx.op + "\n" + ctx.raw_input);
        if (ctx.has_seed) cert["seed"] = ctx.seed;
        if (ctx.recheck) {
            OpResult again = run_op(ctx);
            bool identical = again.payload == r.payload &&
                             again.verification == r.verification &&
                             again.exit_code == r.exit_code;
            cert["recheck"] = identical ? "identical" : "mismatch";
            if (!identical) {
                err << "recheck mismatch\n";
                out << cert.dump(2) << "\n";
                return 2;
            }
        }
        out << cert.dump(2) << "\n";
        for (const auto& v : r.verification)
            if (v.contains("pass") && !v.at("pass").get<bool>()) {
                err << "verification failure: " << v.at("check") << "\n";
                return 1;
            }
        return r.exit_code;
    } catch (const not_ultrametric_error& e) {
        out << negative_certificate(ctx, e.what(), json{{"triple", e.triple}}).dump(2)
            << "\n";
        return 1;
    } catch (const not_sidon_error& e) {
        out << negative_certificate(ctx, e.what(),
                                    json{{"pair1", e.pair1}, {"pair2", e.pair2}})
                   .dump(2)
            << "\n";
        return 1;
    } catch (const separation_error& e) {
        out << negative_certificate(
                   ctx, e.what(),
                   json{{"required", e.required}, {"actual", e.actual}})
                   .dump(2)
            << "\n";
        return 1;
    } catch (const precondition_error& e) {
        out << negative_certificate(ctx, e.what(), json()).dump(2) << "\n";
        return 1;
    } catch (const input_error& e) {
        out << json{{"error", "input"}, {"message", e.what()}}.dump(2) << "\n";
        return 2;
    } catch (const json::exception& e) {
        out << json{{"error", "input"}, {"message", e.what()}}.dump(2) << "\n";
        return 2;
    }
}

} // namespace ramsey
