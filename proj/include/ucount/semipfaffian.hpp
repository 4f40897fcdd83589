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

#include <cstdlib>
#include <optional>
#include <queue>
#include <vector>

#include "ucount/fkt.hpp"
#include "ucount/graph.hpp"
#include "ucount/matching.hpp"
#include "ucount/oracle.hpp"
#include "ucount/pfaffian.hpp"

namespace ucount {

namespace detail {

inline void require_cubic(const Multigraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3) throw Error(Errc::NotCubic, "vertex " + std::to_string(v) + " has degree " +
                                                          std::to_string(g.degree(v)));
}

inline void require_cycle(const Multigraph& g, const Cycle& c) {
  const int k = c.length();
  if (k == 0 || static_cast<int>(c.vertices.size()) != k) throw Error(Errc::CycleNotInGraph, "malformed cycle");
  std::vector<char> seen(g.vertex_count(), 0);
  for (int i = 0; i < k; ++i) {
    int v = c.vertices[i], e = c.edges[i];
    if (v < 0 || v >= g.vertex_count() || e < 0 || e >= g.edge_count() || seen[v])
      throw Error(Errc::CycleNotInGraph, "cycle is not simple in this graph");
    seen[v] = 1;
    const Edge& ed = g.edge(e);
    int w = c.vertices[(i + 1) % k];
    if (!((ed.u == v && ed.v == w) || (ed.v == v && ed.u == w)))
      throw Error(Errc::CycleNotInGraph, "edge " + std::to_string(e) + " does not join consecutive vertices");
  }
}

}  // namespace detail

enum class Side { in, out };

/// Labels each cycle vertex by the side of the cycle its third edge lies on.
/// The outside is the side holding the declared outer face.
inline std::vector<Side> classify_in_out(const Multigraph& g, const RotationSystem& rot, const Cycle& c) {
  detail::require_cubic(g);
  detail::require_cycle(g, c);
  FaceSet fs = validate_embedding(g, rot);
  std::vector<char> on_cycle(g.edge_count(), 0);
  for (int e : c.edges) on_cycle[e] = 1;
  std::vector<char> outside(fs.size(), 0);
  std::queue<int> q;
  int root = fs.outer[fs.component[c.vertices[0]]];
  outside[root] = 1;
  q.push(root);
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    for (int d : fs.faces[f]) {
      if (on_cycle[dart_edge(d)]) continue;
      int h = fs.face_of[dart_twin(d)];
      if (!outside[h]) {
        outside[h] = 1;
        q.push(h);
      }
    }
  }
  std::vector<Side> out;
  for (int i = 0; i < c.length(); ++i) {
    int v = c.vertices[i], third = -1;
    for (int e : g.incident(v))
      if (!on_cycle[e]) third = e;
    out.push_back(outside[fs.face_of[dart_of(third, 0)]] ? Side::out : Side::in);
  }
  return out;
}

struct TensionReport {
  Cycle cycle;
  std::vector<int> v1, v2;  // alternate vertices along the cycle
  int out1 = 0, out2 = 0;
  int tension = 0;
};

inline TensionReport tension(const Multigraph& g, const RotationSystem& rot, const Cycle& c) {
  if (c.length() % 2) throw Error(Errc::OddCycle, "tension needs an even cycle");
  auto side = classify_in_out(g, rot, c);
  TensionReport r;
  r.cycle = c;
  int in1 = 0, in2 = 0;
  for (int i = 0; i < c.length(); ++i) {
    bool out = side[i] == Side::out;
    if (i % 2 == 0) {
      r.v1.push_back(c.vertices[i]);
      (out ? r.out1 : in1)++;
    } else {
      r.v2.push_back(c.vertices[i]);
      (out ? r.out2 : in2)++;
    }
  }
  r.tension = std::abs(r.out1 - r.out2);
  if (r.tension != std::abs(in1 - in2)) throw Error(Errc::CycleNotInGraph, "in/out tension disagree");
  return r;
}

struct TensionCheck {
  bool without_tension = true;
  std::optional<TensionReport> witness;
};

inline TensionCheck is_without_tension(const Multigraph& g, const RotationSystem& rot) {
  detail::require_cubic(g);
  TensionCheck r;
  enumerate_central_cycles(g, [&](const Cycle& c) {
    if (!r.without_tension || c.length() % 2) return;
    auto t = tension(g, rot, c);
    if (t.tension != 0) {
      r.without_tension = false;
      r.witness = t;
    }
  });
  return r;
}

/// First central cycle of length 2k whose orientation parity differs from
/// k mod 2, if any.
inline std::optional<Cycle> verify_semi_pfaffian(const Multigraph& g) {
  detail::require_cubic(g);
  if (!g.fully_oriented()) throw Error(Errc::UnorientedEdge, "graph must be fully oriented");
  std::optional<Cycle> bad;
  enumerate_central_cycles(g, [&](const Cycle& c) {
    if (bad || c.length() % 2) return;
    if (is_oddly_oriented(g, c) != ((c.length() / 2) % 2 == 1)) bad = c;
  });
  return bad;
}

inline constexpr int kSemiPfaffianSearchBound = 20;

/// Face-parity construction (a face of length 2k gets k mod 2 along edges,
/// an odd face is used as the root), then exhaustive search over cotree
/// orientations. Every returned orientation has passed verification.
inline OrientedPlanarGraph find_semi_pfaffian(const Multigraph& g, const RotationSystem& rot,
                                              int search_bound = kSemiPfaffianSearchBound) {
  detail::require_cubic(g);
  if (!g.is_simple()) throw Error(Errc::NotSimple, "find_semi_pfaffian needs a simple graph");
  OrientedPlanarGraph og{g, rot, validate_embedding(g, rot)};
  FaceSet& fs = og.faces;
  for (int f = 0; f < fs.size(); ++f)
    if (fs.faces[f].size() % 2) fs.outer[fs.component[dart_tail(g, fs.faces[f][0])]] = f;
  std::vector<int> wanted(fs.size(), 1);
  for (int f = 0; f < fs.size(); ++f)
    if (fs.faces[f].size() % 2 == 0) wanted[f] = (fs.faces[f].size() / 2) % 2;
  detail::orient_by_face_parity(og.graph, fs, wanted);
  if (!verify_semi_pfaffian(og.graph)) return og;

  // Switching every edge at a vertex keeps all cycle parities, so the
  // spanning-tree edges may stay fixed.
  std::vector<char> tree(g.edge_count(), 0), seen(g.vertex_count(), 0);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int e : g.incident(x)) {
        int y = g.edge(e).other(x);
        if (!seen[y]) {
          seen[y] = tree[e] = 1;
          q.push(y);
        }
      }
    }
  }
  std::vector<int> free;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!tree[e]) free.push_back(e);
  if (static_cast<int>(free.size()) > search_bound)
    throw Error(Errc::SearchSpaceTooLarge, std::to_string(free.size()) + " cotree edges");
  for (unsigned long mask = 0; mask < (1ul << free.size()); ++mask) {
    for (size_t i = 0; i < free.size(); ++i) og.graph.set_orientation(free[i], (mask >> i) & 1 ? Orient::vu : Orient::uv);
    if (!verify_semi_pfaffian(og.graph)) return og;
  }
  throw Error(Errc::NoSemiPfaffianOrientation, "exhausted " + std::to_string(1ul << free.size()) + " orientations");
}

/// Skew adjacency with every nonzero entry replaced by its reciprocal.
inline SkewMatrix build_inverse_skew_adjacency(const Multigraph& g) {
  SkewMatrix a(g.vertex_count());
  for (const auto& e : g.edges()) {
    if (e.w == 0) throw Error(Errc::ZeroWeightEdge, "edge " + std::to_string(e.id));
    if (e.dir == Orient::none) throw Error(Errc::UnorientedEdge, "edge " + std::to_string(e.id));
    a.set(e.tail(), e.head(), Rational(1 / e.w));
  }
  return a;
}

/// udet of a tension-free cubic planar graph as f * p * Pf(A_inv), where f is
/// read off one witness cover.
inline Rational udet_cubic(const Multigraph& g, const RotationSystem& rot, bool check_tension = true,
                           int search_bound = kSemiPfaffianSearchBound) {
  detail::require_cubic(g);
  if (!g.is_simple()) throw Error(Errc::NotSimple, "udet_cubic needs a simple graph");
  for (const auto& e : g.edges())
    if (e.w == 0) throw Error(Errc::ZeroWeightEdge, "edge " + std::to_string(e.id));
  if (check_tension) {
    auto t = is_without_tension(g, rot);
    if (!t.without_tension) throw Error(Errc::TensionPresent, "an even central cycle has tension " +
                                                                  std::to_string(t.witness->tension));
  }
  auto witness = find_perfect_matching(g);
  if (!witness) return 0;
  OrientedPlanarGraph og = find_semi_pfaffian(g, rot, search_bound);
  auto cover = edge_complement(g, *witness);
  detail::UnionFind uf(g.vertex_count());
  for (int e : cover) uf.unite(g.edge(e).u, g.edge(e).v);
  int cycles = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (uf.find(v) == v) ++cycles;
  int f = matching_sign_of(og.graph, *witness) * (cycles % 2 ? -1 : 1);
  return f * weight_product(g) * pfaffian(build_inverse_skew_adjacency(og.graph));
}

}  // namespace ucount
