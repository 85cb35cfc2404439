#include "ramsey/oracle.hpp"

namespace ramsey {
namespace oracle {

namespace {

// True when a is lex-smaller than b, comparing the sets as ascending
// index sequences. The set containing the lowest differing index wins.
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
    std::uint32_t d = a ^ b;
    if (d == 0) return false;
    return a & (d & -d);
}

} // namespace

MonochromeResult brute_max_monochrome(const FiniteMetricSpace& s,
                                      const PairColoring& chi) {
    const int n = s.size();
    if (n > 20) throw input_error("brute_max_monochrome is limited to 20 points");
    // adjacency masks per color, straight from chi
    std::vector<std::uint32_t> adj0(n, 0), adj1(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (chi.at(i, j) == 0) {
                adj0[i] |= 1u << j;
                adj0[j] |= 1u << i;
            } else {
                adj1[i] |= 1u << j;
                adj1[j] |= 1u << i;
            }
        }
    std::uint32_t best_mask = 1; // {0}
    int best_size = 1;
    int best_color = 0;
    auto consider = [&](std::uint32_t mask, int size, int color) {
        if (size > best_size ||
            (size == best_size &&
             (color < best_color ||
              (color == best_color && mask_lex_less(mask, best_mask))))) {
            best_mask = mask;
            best_size = size;
            best_color = color;
        }
    };
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size < best_size) continue;
        bool mono0 = true, mono1 = true;
        for (std::uint32_t m = mask; m; m &= m - 1) {
            int i = __builtin_ctz(m);
            std::uint32_t others = mask & ~(1u << i);
            if ((adj0[i] & others) != others) mono0 = false;
            if ((adj1[i] & others) != others) mono1 = false;
            if (!mono0 && !mono1) break;
        }
        if (size == 1) mono1 = false; // singletons count as color 0
        if (mono0) consider(mask, size, 0);
        if (mono1) consider(mask, size, 1);
    }
    MonochromeResult r;
    r.color = (std::uint8_t)best_color;
    for (int i = 0; i < n; ++i)
        if (best_mask >> i & 1) r.subset.push_back(i);
    return r;
}

bool equidistance_guarantee(int n, int k) {
    if (n < 1 || n > 6)
        throw input_error("equidistance_guarantee enumerates n <= 6 only");
    if (k < 1) throw input_error("equidistance_guarantee requires k >= 1");
    if (k == 1) return true;
    if (k > n) return false;
    const int pairs = n * (n - 1) / 2;
    // pair index (i,j), i<j
    std::vector<std::vector<int>> pid(n, std::vector<int>(n, -1));
    {
        int next = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pid[i][j] = next++;
    }
    // pair masks of every k-subset
    std::vector<std::uint32_t> subset_pairs;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::uint32_t pm = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if ((mask >> i & 1) && (mask >> j & 1)) pm |= 1u << pid[i][j];
        subset_pairs.push_back(pm);
    }
    // assignment bit = 1 means the pair gets distance 2, else 1
    for (std::uint32_t assign = 0; assign < (1u << pairs); ++assign) {
        bool found = false;
        for (std::uint32_t pm : subset_pairs) {
            std::uint32_t v = assign & pm;
            if (v == 0 || v == pm) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

} // namespace oracle
} // namespace ramsey
