#include "ramsey/max_clique.hpp"

#include <algorithm>

namespace ramsey {

namespace {

struct Solver {
    const BitGraph& g;
    std::vector<int> by_degree; // degree descending, index ascending
    int best = 0;
    int target = -1; // >= 0: stop once best reaches target
    bool done = false;
    std::vector<int> stack, witness;
    std::vector<PointMask> classes; // scratch for the sequential coloring

    explicit Solver(const BitGraph& g_) : g(g_) {
        std::vector<std::pair<int, int>> keyed;
        keyed.reserve(g.n);
        for (int v = 0; v < g.n; ++v)
            keyed.emplace_back(-(int)g.adj[v].count(), v);
        std::sort(keyed.begin(), keyed.end());
        by_degree.reserve(g.n);
        for (const auto& [d, v] : keyed) by_degree.push_back(v);
    }

    // Sequential smallest-feasible coloring with recoloring: vertices that
    // would exceed the prune threshold are squeezed into lower classes by
    // swapping out their single conflict when possible. Emits vertices by
    // color ascending; colors[i] bounds any clique inside cand containing
    // order[i] and its predecessors.
    void color_sort(const PointMask& cand, int threshold,
                    std::vector<int>& order, std::vector<int>& colors) {
        classes.clear();
        for (int v : by_degree) {
            if (!cand.test(v)) continue;
            int c = 0;
            while (c < (int)classes.size() && (classes[c] & g.adj[v]).any())
                ++c;
            if (c + 1 > threshold && threshold > 1 && renumber(v, threshold))
                continue;
            if (c == (int)classes.size()) classes.emplace_back();
            classes[c].set(v);
        }
        order.clear();
        colors.clear();
        for (int c = 0; c < (int)classes.size(); ++c)
            for (int v = (int)classes[c]._Find_first(); v < g.n;
                 v = (int)classes[c]._Find_next(v)) {
                order.push_back(v);
                colors.push_back(c + 1);
            }
    }

    bool renumber(int v, int threshold) {
        for (int c1 = 0; c1 + 1 < threshold && c1 < (int)classes.size(); ++c1) {
            PointMask conflict = classes[c1] & g.adj[v];
            if (conflict.count() != 1) continue;
            int w = (int)conflict._Find_first();
            for (int c2 = 0; c2 + 1 < threshold && c2 < (int)classes.size();
                 ++c2) {
                if (c2 == c1 || (classes[c2] & g.adj[w]).any()) continue;
                classes[c1].reset(w);
                classes[c1].set(v);
                classes[c2].set(w);
                return true;
            }
        }
        return false;
    }

    // Greedy cliques from a few high-degree starts; updates best/witness.
    void seed(const PointMask& allowed, int tries) {
        for (int v : by_degree) {
            if (done || tries-- <= 0) break;
            if (!allowed.test(v)) continue;
            std::vector<int> members{v};
            PointMask cand = allowed & g.adj[v];
            while (cand.any()) {
                int u = -1;
                for (int w : by_degree)
                    if (cand.test(w)) {
                        u = w;
                        break;
                    }
                members.push_back(u);
                cand &= g.adj[u];
            }
            if ((int)members.size() > best) {
                best = (int)members.size();
                witness = members;
                if (target >= 0 && best >= target) done = true;
            }
        }
    }

    void expand(const PointMask& cand, int size) {
        if (done) return;
        if (!cand.any()) {
            if (size > best) {
                best = size;
                witness = stack;
                if (target >= 0 && best >= target) done = true;
            }
            return;
        }
        std::vector<int> order, colors;
        color_sort(cand, best - size, order, colors);
        PointMask rest = cand;
        for (int idx = (int)order.size() - 1; idx >= 0; --idx) {
            if (done) return;
            if (size + colors[idx] <= best) return;
            int v = order[idx];
            stack.push_back(v);
            expand(rest & g.adj[v], size + 1);
            stack.pop_back();
            rest.reset(v);
        }
    }

    // Decision query with witness; resets search state, reuses the order.
    bool find(const PointMask& allowed, int size, std::vector<int>& out) {
        if (size <= 0) {
            out.clear();
            return true;
        }
        if ((int)allowed.count() < size) return false;
        best = size - 1;
        target = size;
        done = false;
        stack.clear();
        witness.clear();
        seed(allowed, 4);
        if (!done) expand(allowed, 0);
        if (best >= size) {
            out = witness;
            std::sort(out.begin(), out.end());
            return true;
        }
        return false;
    }
};

PointMask full_mask(int n) {
    PointMask m;
    for (int i = 0; i < n; ++i) m.set(i);
    return m;
}

} // namespace

int max_clique_size(const BitGraph& g, const PointMask& allowed) {
    if (!allowed.any()) return 0;
    Solver s(g);
    s.seed(allowed, 24);
    s.expand(allowed, 0);
    return s.best;
}

int max_clique_size(const BitGraph& g) {
    return max_clique_size(g, full_mask(g.n));
}

bool has_clique(const BitGraph& g, const PointMask& allowed, int target) {
    Solver s(g);
    std::vector<int> scratch;
    return s.find(allowed, target, scratch);
}

std::vector<int> lex_least_clique(const BitGraph& g, const PointMask& allowed,
                                  int size) {
    Solver solver(g);
    std::vector<int> current; // known completion, sorted ascending
    if (!solver.find(allowed, size, current)) return {};

    std::vector<int> out;
    PointMask cand = allowed;
    int start = 0;
    while (!current.empty()) {
        int anchor = current.front(); // committing it needs no search
        bool committed = false;
        for (int v = start; v < anchor && !committed; ++v) {
            if (!cand.test(v)) continue;
            PointMask next = cand & g.adj[v];
            for (int w = 0; w <= v; ++w) next.reset(w);
            std::vector<int> completion;
            if (solver.find(next, (int)current.size() - 1, completion)) {
                out.push_back(v);
                cand = next;
                start = v + 1;
                current = std::move(completion);
                committed = true;
            }
        }
        if (!committed) {
            out.push_back(anchor);
            PointMask next = cand & g.adj[anchor];
            for (int w = 0; w <= anchor; ++w) next.reset(w);
            cand = next;
            start = anchor + 1;
            current.erase(current.begin());
        }
    }
    return out;
}

std::vector<int> lex_least_max_clique(const BitGraph& g) {
    PointMask all = full_mask(g.n);
    return lex_least_clique(g, all, max_clique_size(g, all));
}

} // namespace ramsey
