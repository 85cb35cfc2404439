#include "ramsey/json_io.hpp"

namespace ramsey {

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    throw input_error("rational must be an integer or a \"p/q\" string");
}

json rat_to_json(const Rat& r) {
    if (r.is_integer()) return r.num();
    return r.str();
}

FiniteMetricSpace space_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dist"))
        throw input_error("space JSON requires a \"dist\" matrix");
    std::vector<std::string> points;
    if (j.contains("points")) {
        for (const auto& p : j.at("points")) {
            if (p.is_string())
                points.push_back(p.get<std::string>());
            else if (p.is_number_integer())
                points.push_back(std::to_string(p.get<std::int64_t>()));
            else
                throw input_error("point identifiers must be strings or integers");
        }
    }
    const json& dj = j.at("dist");
    if (!dj.is_array()) throw input_error("\"dist\" must be an array of rows");
    std::vector<std::vector<Rat>> dist;
    for (const auto& row : dj) {
        if (!row.is_array()) throw input_error("\"dist\" rows must be arrays");
        std::vector<Rat> r;
        for (const auto& v : row) r.push_back(rat_from_json(v));
        dist.push_back(std::move(r));
    }
    return FiniteMetricSpace::create(std::move(points), dist);
}

json space_to_json(const FiniteMetricSpace& s) {
    json j;
    j["points"] = s.points();
    json rows = json::array();
    for (int i = 0; i < s.size(); ++i) {
        json row = json::array();
        for (int k = 0; k < s.size(); ++k) row.push_back(rat_to_json(s.dist(i, k)));
        rows.push_back(std::move(row));
    }
    j["dist"] = std::move(rows);
    j["classification"] = to_string(s.classification());
    return j;
}

ScaleMap scale_map_from_json(const json& j) {
    if (!j.is_object() || !j.contains("scale") || !j.contains("colors"))
        throw input_error("scale map JSON requires \"scale\" and \"colors\"");
    ScaleMap f;
    for (const auto& v : j.at("scale")) f.scale.push_back(rat_from_json(v));
    for (const auto& c : j.at("colors")) {
        int v = c.get<int>();
        if (v != 0 && v != 1) throw input_error("colors must be 0 or 1");
        f.colors.push_back((std::uint8_t)v);
    }
    if (f.scale.size() != f.colors.size())
        throw input_error("scale and colors must have equal length");
    for (std::size_t i = 1; i < f.scale.size(); ++i)
        if (!(f.scale[i - 1] < f.scale[i]))
            throw input_error("scale values must be strictly increasing");
    return f;
}

json scale_map_to_json(const ScaleMap& f) {
    json scale = json::array();
    for (const Rat& r : f.scale) scale.push_back(rat_to_json(r));
    json colors = json::array();
    for (std::uint8_t c : f.colors) colors.push_back((int)c);
    return json{{"scale", std::move(scale)}, {"colors", std::move(colors)}};
}

PairColoring pair_coloring_from_json(const json& j, int n) {
    if (!j.is_array()) throw input_error("pair coloring must be an array of triples");
    PairColoring chi(n);
    std::vector<char> seen((std::size_t)n * n, 0);
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3)
            throw input_error("pair coloring entries must be [i, j, color]");
        int a = t[0].get<int>(), b = t[1].get<int>(), c = t[2].get<int>();
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw input_error("pair coloring indices out of range");
        if (c != 0 && c != 1) throw input_error("colors must be 0 or 1");
        if (a > b) std::swap(a, b);
        if (seen[(std::size_t)a * n + b]++)
            throw input_error("duplicate pair in coloring");
        chi.set(a, b, (std::uint8_t)c);
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!seen[(std::size_t)a * n + b])
                throw input_error("pair coloring must be total; missing (" +
                                  std::to_string(a) + "," + std::to_string(b) +
                                  ")");
    return chi;
}

json pair_coloring_to_json(const PairColoring& chi) {
    json out = json::array();
    for (int i = 0; i < chi.points(); ++i)
        for (int j = i + 1; j < chi.points(); ++j)
            out.push_back(json::array({i, j, (int)chi.at(i, j)}));
    return out;
}

std::vector<std::vector<int>> cells_from_json(const json& j,
                                              const FiniteMetricSpace& s) {
    const json* cj = &j;
    if (j.is_object() && j.contains("cells")) cj = &j.at("cells");
    if (!cj->is_array()) throw input_error("cells must be an array of arrays");
    std::vector<std::vector<int>> cells;
    for (const auto& cell : *cj) {
        if (!cell.is_array()) throw input_error("each cell must be an array");
        std::vector<int> out;
        for (const auto& p : cell) {
            std::string id = p.is_string()
                                 ? p.get<std::string>()
                                 : std::to_string(p.get<std::int64_t>());
            int idx = s.index_of(id);
            if (idx < 0) throw input_error("unknown point in cell: " + id);
            out.push_back(idx);
        }
        cells.push_back(std::move(out));
    }
    return cells;
}

json cells_to_json(const std::vector<std::vector<int>>& cells,
                   const FiniteMetricSpace& s) {
    json out = json::array();
    for (const auto& cell : cells) {
        json c = json::array();
        for (int i : cell) c.push_back(s.point(i));
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

Mult mult_from_json(const json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "omega") return Mult::omega();
        if (s == "unbounded") return Mult::unbounded();
        throw input_error("multiplicity must be an integer, \"omega\" or "
                          "\"unbounded\"");
    }
    if (j.is_number_integer()) return Mult::fin(j.get<std::int64_t>());
    throw input_error("bad multiplicity");
}

json mult_to_json(const Mult& m) {
    switch (m.kind) {
    case Mult::Kind::finite: return m.count;
    case Mult::Kind::omega: return "omega";
    case Mult::Kind::unbounded: return "unbounded";
    }
    return nullptr;
}

LeafSpec leaf_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "omega")
        return LeafSpec{true, 0};
    if (j.is_number_integer()) return LeafSpec{false, j.get<std::int64_t>()};
    throw input_error("leaf multiplicity must be an integer or \"omega\"");
}

TreeNode node_from_json(const json& j) {
    if (!j.is_object() || !j.contains("groups"))
        throw input_error("tree node requires a \"groups\" array");
    TreeNode node;
    for (const auto& gj : j.at("groups")) {
        if (!gj.is_object() || !gj.contains("shape") || !gj.contains("mult"))
            throw input_error("tree group requires \"shape\" and \"mult\"");
        TreeGroup g;
        g.mult = mult_from_json(gj.at("mult"));
        const json& shape = gj.at("shape");
        if (shape.is_object() && shape.contains("leaf")) {
            g.leaf = leaf_from_json(shape.at("leaf"));
        } else {
            g.node = std::make_shared<TreeNode>(node_from_json(shape));
        }
        node.groups.push_back(std::move(g));
    }
    return node;
}

json node_to_json(const TreeNode& node) {
    json groups = json::array();
    for (const auto& g : node.groups) {
        json gj;
        gj["mult"] = mult_to_json(g.mult);
        if (g.leaf)
            gj["shape"] =
                json{{"leaf", g.leaf->omega ? json("omega") : json(g.leaf->count)}};
        else
            gj["shape"] = node_to_json(*g.node);
        groups.push_back(std::move(gj));
    }
    return json{{"groups", std::move(groups)}};
}

} // namespace

ProfileTree tree_from_json(const json& j) {
    if (!j.is_object() || !j.contains("levels") || !j.contains("root"))
        throw input_error("tree JSON requires \"levels\" and \"root\"");
    ProfileTree t;
    for (const auto& v : j.at("levels")) t.levels.push_back(rat_from_json(v));
    t.root = node_from_json(j.at("root"));
    validate_tree(t);
    return t;
}

json tree_to_json(const ProfileTree& t) {
    json levels = json::array();
    for (const Rat& r : t.levels) levels.push_back(rat_to_json(r));
    return json{{"levels", std::move(levels)}, {"root", node_to_json(t.root)}};
}

json partition_to_json(const Partition& p, const FiniteMetricSpace& s) {
    json out = json::array();
    for (const auto& block : p.blocks) {
        json b = json::array();
        for (int i : block) b.push_back(s.point(i));
        out.push_back(std::move(b));
    }
    return out;
}

} // namespace ramsey
