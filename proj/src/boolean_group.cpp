#include "ramsey/boolean_group.hpp"

#include <unordered_map>

namespace ramsey {

namespace {

constexpr int kMaxSpaceLen = 10;
constexpr int kMaxCheckLen = 8;

void check_len(int len, int cap, const char* what) {
    if (len < 1 || len > cap)
        throw input_error(std::string(what) + " requires 1 <= L <= " +
                          std::to_string(cap));
}

} // namespace

std::uint32_t b_parse(const std::string& bits) {
    if (bits.empty() || bits.size() > 16)
        throw input_error("element bit string must have length 1..16");
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v |= 1u << i;
        else if (bits[i] != '0')
            throw input_error("element bit string must be 0/1: " + bits);
    }
    return v;
}

std::string b_format(std::uint32_t value, int len) {
    std::string s((std::size_t)len, '0');
    for (int i = 0; i < len; ++i)
        if (value >> i & 1) s[(std::size_t)i] = '1';
    return s;
}

int b_distance(std::uint32_t x, std::uint32_t y, int len) {
    if (len < 1 || len > 16)
        throw input_error("b_distance requires 1 <= L <= 16");
    if (x >= (1u << len) || y >= (1u << len))
        throw input_error("element out of range for length L");
    std::uint32_t d = x ^ y;
    if (d == 0) return 0;
    return 32 - __builtin_clz(d); // 1 + highest differing coordinate
}

FiniteMetricSpace b_space(int len) {
    check_len(len, kMaxSpaceLen, "b_space");
    const int n = 1 << len;
    std::vector<std::string> ids;
    ids.reserve(n);
    for (int v = 0; v < n; ++v) ids.push_back(b_format((std::uint32_t)v, len));
    std::vector<Rat> flat((std::size_t)n * n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat d(b_distance((std::uint32_t)i, (std::uint32_t)j, len));
            flat[(std::size_t)i * n + j] = d;
            flat[(std::size_t)j * n + i] = d;
        }
    return FiniteMetricSpace::trusted(std::move(ids), std::move(flat),
                                      MetricClass::ultrametric);
}

ProfileTree b_profile_tree(int len) {
    check_len(len, kMaxSpaceLen, "b_profile_tree");
    ProfileTree t;
    for (int v = len; v >= 1; --v) t.levels.push_back(Rat(v));
    // Chain of binary splits ending in a two-point leaf.
    if (len == 1) {
        t.root.groups.push_back(
            TreeGroup{Mult::fin(1), nullptr, LeafSpec{false, 2}});
        return t;
    }
    auto node = std::make_shared<TreeNode>();
    node->groups.push_back(TreeGroup{Mult::fin(1), nullptr, LeafSpec{false, 2}});
    for (int depth = len - 2; depth >= 1; --depth) {
        auto up = std::make_shared<TreeNode>();
        up->groups.push_back(TreeGroup{Mult::fin(2), node, std::nullopt});
        node = up;
    }
    t.root.groups.push_back(TreeGroup{Mult::fin(2), node, std::nullopt});
    return t;
}

std::optional<PsViolation> is_ps_coloring(int len, const PairColoring& chi) {
    check_len(len, kMaxCheckLen, "is_ps_coloring");
    const int n = 1 << len;
    if (chi.points() != n)
        throw input_error("coloring size does not match 2^L elements");
    std::unordered_map<std::uint32_t, std::pair<std::array<int, 2>, std::uint8_t>>
        by_sum;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::uint32_t sum = (std::uint32_t)(i ^ j);
            std::uint8_t c = chi.at(i, j);
            auto it = by_sum.find(sum);
            if (it == by_sum.end())
                by_sum.emplace(sum, std::make_pair(std::array<int, 2>{i, j}, c));
            else if (it->second.second != c)
                return PsViolation{it->second.first, {i, j}, sum};
        }
    return std::nullopt;
}

std::optional<InvarianceViolation>
is_invariant_coloring(int len, const PairColoring& chi) {
    check_len(len, kMaxCheckLen, "is_invariant_coloring");
    const int n = 1 << len;
    if (chi.points() != n)
        throw input_error("coloring size does not match 2^L elements");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int g = 1; g < n; ++g) {
                int ti = i ^ g, tj = j ^ g;
                if (chi.at(i, j) != chi.at(ti, tj))
                    return InvarianceViolation{{i, j}, (std::uint32_t)g};
            }
    return std::nullopt;
}

} // namespace ramsey
