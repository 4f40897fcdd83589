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

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ucount/error.hpp"
#include "ucount/rational.hpp"

namespace ucount {

enum class Orient : unsigned char { none, uv, vu };

struct Edge {
  int id = 0;
  int u = 0;
  int v = 0;
  Rational w = 1;
  Orient dir = Orient::none;

  bool is_loop() const { return u == v; }
  int other(int x) const { return x == u ? v : u; }
  int tail() const { return dir == Orient::vu ? v : u; }
  int head() const { return dir == Orient::vu ? u : v; }
};

/// Undirected weighted multigraph with dense vertex and edge ids.
/// Loops and parallel edges are allowed; a loop is listed twice in the
/// incidence list of its vertex.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n) : adj_(n) {}

  int add_vertex() {
    adj_.emplace_back();
    return static_cast<int>(adj_.size()) - 1;
  }

  int add_edge(int u, int v, Rational w = 1, Orient dir = Orient::none) {
    check_vertex(u);
    check_vertex(v);
    int id = static_cast<int>(edges_.size());
    edges_.push_back(Edge{id, u, v, std::move(w), dir});
    adj_[u].push_back(id);
    adj_[v].push_back(id);
    return id;
  }

  /// Moves one endpoint of an edge; `side` 0 is u, 1 is v.
  void reattach(int e, int side, int x) {
    check_vertex(x);
    Edge& ed = edges_.at(e);
    int& end = side == 0 ? ed.u : ed.v;
    auto& list = adj_[end];
    list.erase(std::find(list.begin(), list.end(), e));
    end = x;
    adj_[x].push_back(e);
  }

  void set_weight(int e, Rational w) { edges_.at(e).w = std::move(w); }
  void set_orientation(int e, Orient d) { edges_.at(e).dir = d; }

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& incident(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  int max_degree() const {
    int m = 0;
    for (const auto& a : adj_) m = std::max(m, static_cast<int>(a.size()));
    return m;
  }

  bool has_loops() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
  }

  bool has_parallel_edges() const {
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges_) {
      if (e.is_loop()) continue;
      if (!seen.insert(std::minmax(e.u, e.v)).second) return true;
    }
    return false;
  }

  bool is_simple() const { return !has_loops() && !has_parallel_edges(); }

  bool fully_oriented() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.dir != Orient::none; });
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count()) throw Error(Errc::ParseError, "vertex " + std::to_string(v) + " out of range");
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// Darts: dart 2e+0 leaves endpoint u of edge e, dart 2e+1 leaves endpoint v.
inline int dart_of(int e, int side) { return 2 * e + side; }
inline int dart_edge(int d) { return d >> 1; }
inline int dart_twin(int d) { return d ^ 1; }
inline int dart_tail(const Multigraph& g, int d) {
  const Edge& e = g.edge(dart_edge(d));
  return (d & 1) ? e.v : e.u;
}
inline int dart_head(const Multigraph& g, int d) { return dart_tail(g, dart_twin(d)); }

/// True when the edge of dart d is oriented in the dart's direction.
inline bool dart_along(const Multigraph& g, int d) {
  const Edge& e = g.edge(dart_edge(d));
  if (e.dir == Orient::none) throw Error(Errc::UnorientedEdge, "edge " + std::to_string(e.id));
  return (d & 1) ? e.dir == Orient::vu : e.dir == Orient::uv;
}

struct RotationSystem {
  std::vector<std::vector<int>> order;  // per vertex, darts in cyclic order
  std::optional<int> outer_dart;        // a dart on the declared outer face

  bool empty() const { return order.empty(); }
};

struct FaceSet {
  std::vector<std::vector<int>> faces;  // dart walks
  std::vector<int> face_of;             // dart -> face
  std::vector<int> component;           // vertex -> component
  std::vector<int> outer;               // component -> chosen outer face (-1 if edgeless)
  int component_count = 0;

  int size() const { return static_cast<int>(faces.size()); }
};

/// Connected components by union of edges; returns count.
inline int connected_components(const Multigraph& g, std::vector<int>& comp) {
  int n = g.vertex_count();
  comp.assign(n, -1);
  int c = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int e : g.incident(x)) {
        int y = g.edge(e).other(x);
        if (comp[y] < 0) {
          comp[y] = c;
          stack.push_back(y);
        }
      }
    }
    ++c;
  }
  return c;
}

/// Face-traces the rotation system and checks Euler's formula on every
/// component. The face that follows dart d is entered by the dart after
/// twin(d) in the rotation at head(d).
inline FaceSet validate_embedding(const Multigraph& g, const RotationSystem& rot) {
  int n = g.vertex_count(), m = g.edge_count();
  if (static_cast<int>(rot.order.size()) != n) throw Error(Errc::IncompleteRotation, "rotation vertex count mismatch");
  std::vector<int> pos(2 * m, -1);
  for (int v = 0; v < n; ++v) {
    const auto& ord = rot.order[v];
    if (static_cast<int>(ord.size()) != g.degree(v))
      throw Error(Errc::IncompleteRotation, "vertex " + std::to_string(v) + " rotation has wrong size");
    for (int i = 0; i < static_cast<int>(ord.size()); ++i) {
      int d = ord[i];
      if (d < 0 || d >= 2 * m || dart_tail(g, d) != v || pos[d] != -1)
        throw Error(Errc::IncompleteRotation, "vertex " + std::to_string(v) + " rotation lists a foreign dart");
      pos[d] = i;
    }
  }
  FaceSet fs;
  fs.face_of.assign(2 * m, -1);
  for (int d0 = 0; d0 < 2 * m; ++d0) {
    if (fs.face_of[d0] >= 0) continue;
    int f = fs.size();
    fs.faces.emplace_back();
    int d = d0;
    while (fs.face_of[d] < 0) {
      fs.face_of[d] = f;
      fs.faces[f].push_back(d);
      int t = dart_twin(d);
      int h = dart_tail(g, t);
      const auto& ord = rot.order[h];
      d = ord[(pos[t] + 1) % ord.size()];
    }
    if (d != d0) throw Error(Errc::NotPlanarEmbedding, "face walk did not close");
  }
  fs.component_count = connected_components(g, fs.component);
  std::vector<long> vc(fs.component_count, 0), ec(fs.component_count, 0), fc(fs.component_count, 0);
  for (int v = 0; v < n; ++v) ++vc[fs.component[v]];
  for (const auto& e : g.edges()) ++ec[fs.component[e.u]];
  for (const auto& face : fs.faces) ++fc[fs.component[dart_tail(g, face[0])]];
  for (int c = 0; c < fs.component_count; ++c) {
    if (ec[c] == 0) continue;
    if (vc[c] - ec[c] + fc[c] != 2)
      throw Error(Errc::NotPlanarEmbedding, "Euler check fails on component " + std::to_string(c));
  }
  fs.outer.assign(fs.component_count, -1);
  if (rot.outer_dart && *rot.outer_dart >= 0 && *rot.outer_dart < 2 * m) {
    int f = fs.face_of[*rot.outer_dart];
    fs.outer[fs.component[dart_tail(g, *rot.outer_dart)]] = f;
  }
  for (int f = 0; f < fs.size(); ++f) {
    int c = fs.component[dart_tail(g, fs.faces[f][0])];
    if (fs.outer[c] < 0) fs.outer[c] = f;
  }
  return fs;
}

inline Rational weight_product(const Multigraph& g) {
  Rational p = 1;
  for (const auto& e : g.edges()) p *= e.w;
  return p;
}

inline std::vector<int> edge_complement(const Multigraph& g, const std::vector<int>& subset) {
  std::vector<char> in(g.edge_count(), 0);
  for (int e : subset) {
    if (e < 0 || e >= g.edge_count()) throw Error(Errc::UnknownEdgeId, std::to_string(e));
    in[e] = 1;
  }
  std::vector<int> out;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!in[e]) out.push_back(e);
  return out;
}

/// Dense skew-symmetric matrix; set() writes both triangles.
class SkewMatrix {
 public:
  SkewMatrix() = default;
  explicit SkewMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, Rational(0)) {}

  int size() const { return n_; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  void set(int i, int j, const Rational& x) {
    if (i == j) {
      if (x != 0) throw Error(Errc::ParseError, "skew matrix diagonal must be zero");
      return;
    }
    a_[static_cast<size_t>(i) * n_ + j] = x;
    a_[static_cast<size_t>(j) * n_ + i] = -x;
  }

  bool is_skew() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (at(i, j) != -at(j, i)) return false;
    return true;
  }

 private:
  int n_ = 0;
  std::vector<Rational> a_;
};

inline SkewMatrix build_skew_adjacency(const Multigraph& g) {
  if (g.has_loops()) throw Error(Errc::LoopPresent, "skew adjacency needs a loopless graph");
  if (g.has_parallel_edges()) throw Error(Errc::MultiEdgePresent, "skew adjacency needs a simple graph");
  SkewMatrix a(g.vertex_count());
  for (const auto& e : g.edges()) {
    if (e.dir == Orient::none) throw Error(Errc::UnorientedEdge, "edge " + std::to_string(e.id));
    a.set(e.tail(), e.head(), e.w);
  }
  return a;
}

struct Stub {
  std::string id;
  int vertex = 0;
  Rational weight = 1;
};

/// An internal edge whose presence in a cover is reported in signature keys.
struct Selector {
  std::string name;
  int edge = 0;
};

struct Gadget {
  std::string name;
  Multigraph graph;
  std::vector<Stub> external;
  std::vector<std::pair<std::string, std::string>> base_pairing;
  std::vector<Selector> selectors;
  std::vector<std::string> vertex_labels;
};

}  // namespace ucount
