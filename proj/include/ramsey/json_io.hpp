#pragma once

#include <json.hpp>

#include "ramsey/boolean_group.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/integer_ramsey.hpp"
#include "ramsey/metric_space.hpp"
#include "ramsey/profile_tree.hpp"

namespace ramsey {

using nlohmann::json;

// Rationals serialize as plain integers when possible, "p/q" otherwise.
Rat rat_from_json(const json& j);
json rat_to_json(const Rat& r);

// {"points": [...], "dist": [[...]]}; points optional on input.
FiniteMetricSpace space_from_json(const json& j);
json space_to_json(const FiniteMetricSpace& s); // adds "classification"

// {"scale": [...], "colors": [0,1,...]}
ScaleMap scale_map_from_json(const json& j);
json scale_map_to_json(const ScaleMap& f);

// list of [i, j, color] triples covering every pair of n points
PairColoring pair_coloring_from_json(const json& j, int n);
json pair_coloring_to_json(const PairColoring& chi);

// {"cells": [[point ids]]} resolved against a space
std::vector<std::vector<int>> cells_from_json(const json& j,
                                              const FiniteMetricSpace& s);
json cells_to_json(const std::vector<std::vector<int>>& cells,
                   const FiniteMetricSpace& s);

// {"levels": [...], "root": {"groups": [{"shape": <node>|{"leaf": m},
//  "mult": int|"omega"|"unbounded"}]}}
ProfileTree tree_from_json(const json& j);
json tree_to_json(const ProfileTree& t);

json partition_to_json(const Partition& p, const FiniteMetricSpace& s);

} // namespace ramsey
