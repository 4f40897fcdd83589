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

#include <functional>
#include <queue>
#include <vector>

#include "ucount/graph.hpp"
#include "ucount/matching.hpp"
#include "ucount/oracle.hpp"
#include "ucount/pfaffian.hpp"

namespace ucount {

struct OrientedPlanarGraph {
  Multigraph graph;
  RotationSystem embedding;
  FaceSet faces;
};

namespace detail {

/// Counts darts of a face walk whose edge points the same way as the walk.
inline int along_in_face(const Multigraph& g, const std::vector<int>& face) {
  int k = 0;
  for (int d : face)
    if (dart_along(g, d)) ++k;
  return k;
}

/// Orients a spanning forest, then sets each cotree edge from the leaves of
/// the dual tree inward so that every non-root face reaches the parity
/// wanted[f] (1 = odd number of along darts). Roots are fs.outer.
inline void orient_by_face_parity(Multigraph& g, const FaceSet& fs, const std::vector<int>& wanted) {
  const int n = g.vertex_count(), m = g.edge_count();
  std::vector<char> tree(m, 0), seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int e : g.incident(x)) {
        int y = g.edge(e).other(x);
        if (seen[y]) continue;
        seen[y] = 1;
        tree[e] = 1;
        g.set_orientation(e, g.edge(e).u == x ? Orient::uv : Orient::vu);
        q.push(y);
      }
    }
  }
  // Dual BFS over cotree edges, one root per component.
  const int F = fs.size();
  std::vector<int> parent_edge(F, -1), order;
  std::vector<char> reached(F, 0);
  for (int c = 0; c < fs.component_count; ++c) {
    int r = fs.outer[c];
    if (r < 0) continue;
    reached[r] = 1;
    std::queue<int> q;
    q.push(r);
    while (!q.empty()) {
      int f = q.front();
      q.pop();
      order.push_back(f);
      for (int d : fs.faces[f]) {
        int e = dart_edge(d);
        if (tree[e] || g.edge(e).is_loop()) continue;
        int h = fs.face_of[dart_twin(d)];
        if (reached[h]) continue;
        reached[h] = 1;
        parent_edge[h] = e;
        q.push(h);
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int f = *it, pe = parent_edge[f];
    if (pe < 0) continue;
    g.set_orientation(pe, Orient::uv);
    int k = along_in_face(g, fs.faces[f]);
    if ((k & 1) != wanted[f]) g.set_orientation(pe, Orient::vu);
  }
}

}  // namespace detail

/// Kasteleyn orientation: every face other than the outer one gets an odd
/// number of edges oriented along its boundary walk.
inline OrientedPlanarGraph pfaffian_orientation(const Multigraph& g, const RotationSystem& rot,
                                                bool allow_disconnected = false) {
  if (!g.is_simple()) throw Error(Errc::NotSimple, "pfaffian_orientation needs a simple graph");
  OrientedPlanarGraph og{g, rot, validate_embedding(g, rot)};
  if (!allow_disconnected && og.faces.component_count > 1) throw Error(Errc::NotConnected, "graph is disconnected");
  detail::orient_by_face_parity(og.graph, og.faces, std::vector<int>(og.faces.size(), 1));
  return og;
}

/// Checks that every even central cycle is oddly oriented; returns the first
/// that is not.
inline std::optional<Cycle> pfaffian_violation(const Multigraph& g) {
  std::optional<Cycle> bad;
  enumerate_central_cycles(g, [&](const Cycle& c) {
    if (!bad && c.length() % 2 == 0 && !is_oddly_oriented(g, c)) bad = c;
  });
  return bad;
}

/// PerfMatch as a Pfaffian, signed by one witness matching. Strict mode
/// re-verifies the orientation by central-cycle enumeration first.
inline Rational perfmatch_via_pfaffian(const OrientedPlanarGraph& og, bool strict = false) {
  const Multigraph& g = og.graph;
  if (strict && pfaffian_violation(g))
    throw Error(Errc::OrientationNotVerifiedPfaffian, "an even central cycle is evenly oriented");
  if (g.vertex_count() % 2 == 1) return 0;
  auto witness = find_perfect_matching(g);
  if (!witness) return 0;
  return matching_sign_of(g, *witness) * pfaffian(build_skew_adjacency(g));
}

/// Subgraph on the listed vertices with the inherited rotation. Edges with
/// an endpoint outside, and loops, are dropped.
inline std::pair<Multigraph, RotationSystem> induced_embedded(const Multigraph& g, const RotationSystem& rot,
                                                              const std::vector<char>& keep,
                                                              bool invert_weights = false) {
  std::vector<int> vid(g.vertex_count(), -1), eid(g.edge_count(), -1);
  Multigraph h;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (keep[v]) vid[v] = h.add_vertex();
  for (const auto& e : g.edges()) {
    if (e.is_loop() || vid[e.u] < 0 || vid[e.v] < 0) continue;
    eid[e.id] = h.add_edge(vid[e.u], vid[e.v], invert_weights ? Rational(1 / e.w) : e.w, e.dir);
  }
  RotationSystem r;
  r.order.assign(h.vertex_count(), {});
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (vid[v] < 0) continue;
    for (int d : rot.order[v])
      if (eid[dart_edge(d)] >= 0) r.order[vid[v]].push_back(dart_of(eid[dart_edge(d)], d & 1));
  }
  return {std::move(h), std::move(r)};
}

/// uperm of a planar graph of maximum degree 3 as p * PerfMatch(G_inv),
/// G_inv being the degree-3 vertices with reciprocal weights.
inline Rational uperm_degree3(const Multigraph& g, const RotationSystem& rot, bool strict = false) {
  validate_embedding(g, rot);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 3) throw Error(Errc::DegreeTooHigh, "vertex " + std::to_string(v));
  for (const auto& e : g.edges())
    if (e.w == 0) throw Error(Errc::ZeroWeightEdge, "edge " + std::to_string(e.id));
  std::vector<char> keep(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < 2) return 0;
    keep[v] = g.degree(v) == 3;
  }
  auto [inv, irot] = induced_embedded(g, rot, keep, true);
  if (!inv.is_simple()) throw Error(Errc::NotSimple, "parallel edges between degree-3 vertices");
  auto og = pfaffian_orientation(inv, irot, true);
  return weight_product(g) * perfmatch_via_pfaffian(og, strict);
}

}  // namespace ucount
