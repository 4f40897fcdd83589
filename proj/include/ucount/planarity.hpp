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
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "ucount/graph.hpp"

namespace ucount {

/// Computes some planar rotation system for g, or nothing if g is not
/// planar. Every edge is subdivided twice first so that loops and parallel
/// edges reach the embedder as a simple graph.
inline std::optional<RotationSystem> embed_planar(const Multigraph& g) {
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                   boost::property<boost::vertex_index_t, int>,
                                   boost::property<boost::edge_index_t, int>>;
  const int n = g.vertex_count(), m = g.edge_count();
  BG h(n + 2 * m);
  // H-edge index -> dart at an original vertex, or -1 for middle segments.
  std::vector<int> dart_for;
  auto add = [&](int a, int b, int dart) {
    boost::add_edge(a, b, static_cast<int>(dart_for.size()), h);
    dart_for.push_back(dart);
  };
  for (const auto& e : g.edges()) {
    int s0 = n + 2 * e.id, s1 = s0 + 1;
    add(e.u, s0, dart_of(e.id, 0));
    add(s0, s1, -1);
    add(s1, e.v, dart_of(e.id, 1));
  }
  using EdgeDesc = boost::graph_traits<BG>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> storage(boost::num_vertices(h));
  auto emb = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, h));
  bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = h,
                                                    boost::boyer_myrvold_params::embedding = emb);
  if (!planar) return std::nullopt;
  auto eidx = boost::get(boost::edge_index, h);
  RotationSystem rot;
  rot.order.assign(n, {});
  for (int v = 0; v < n; ++v)
    for (const auto& ed : storage[v]) rot.order[v].push_back(dart_for[eidx[ed]]);
  return rot;
}

/// Rotation from straight-line coordinates: darts sorted by angle.
inline RotationSystem rotation_from_coordinates(const Multigraph& g,
                                                const std::vector<std::pair<double, double>>& xy) {
  RotationSystem rot;
  rot.order.assign(g.vertex_count(), {});
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::pair<double, int>> darts;
    for (int e : g.incident(v)) {
      const Edge& ed = g.edge(e);
      int side = ed.u == v ? 0 : 1;
      int w = ed.other(v);
      double ang = std::atan2(xy[w].second - xy[v].second, xy[w].first - xy[v].first);
      darts.emplace_back(ang, dart_of(e, side));
    }
    std::sort(darts.begin(), darts.end());
    for (auto& [a, d] : darts) rot.order[v].push_back(d);
  }
  return rot;
}

}  // namespace ucount
