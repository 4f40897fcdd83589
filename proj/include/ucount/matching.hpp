/*
 * Copyright 2026 The ucount Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include <map>
#include <optional>
#include <vector>

#include "ucount/graph.hpp"

namespace ucount {

/// Finds one perfect matching of the subgraph induced on `active` vertices
/// (all vertices when `active` is empty). Returns edge ids, or nothing.
inline std::optional<std::vector<int>> find_perfect_matching(const Multigraph& g,
                                                             const std::vector<char>& active = {}) {
  const int n = g.vertex_count();
  auto on = [&](int v) { return active.empty() || active[v]; };
  std::vector<int> local(n, -1), global;
  for (int v = 0; v < n; ++v)
    if (on(v)) {
      local[v] = static_cast<int>(global.size());
      global.push_back(v);
    }
  const int k = static_cast<int>(global.size());
  if (k % 2 == 1) return std::nullopt;
  if (k == 0) return std::vector<int>{};

  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BG bg(k);
  std::map<std::pair<int, int>, int> edge_of;
  for (const auto& e : g.edges()) {
    if (e.is_loop() || !on(e.u) || !on(e.v)) continue;
    auto key = std::minmax(local[e.u], local[e.v]);
    if (edge_of.emplace(key, e.id).second) boost::add_edge(key.first, key.second, bg);
  }
  std::vector<boost::graph_traits<BG>::vertex_descriptor> mate(k);
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  std::vector<int> out;
  for (int i = 0; i < k; ++i) {
    auto j = mate[i];
    if (j == boost::graph_traits<BG>::null_vertex()) return std::nullopt;
    if (static_cast<int>(j) > i) out.push_back(edge_of.at({i, static_cast<int>(j)}));
  }
  return out;
}

inline bool has_perfect_matching(const Multigraph& g, const std::vector<char>& active = {}) {
  return find_perfect_matching(g, active).has_value();
}

}  // namespace ucount
