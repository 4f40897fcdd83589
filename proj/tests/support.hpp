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

// Reference implementations and corpus builders shared by the tests. The
// references deliberately avoid library code paths: they filter raw edge
// subsets and raw permutations.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ucount/graph.hpp"
#include "ucount/named_graphs.hpp"
#include "ucount/planarity.hpp"
#include "ucount/rational.hpp"

namespace ref {

using ucount::Multigraph;
using ucount::Rational;

struct CoverSums {
  Rational det_sum = 0;   // Σ (-1)^{|c|} w(c)
  Rational perm_sum = 0;  // Σ w(c)
  long count = 0;
};

inline int find_root(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

/// Walks every subset of E (include/exclude per edge id) and keeps those
/// where each vertex has degree exactly 2. Branches that already exceed
/// degree 2, or cannot reach it, are cut.
inline CoverSums cover_sums(const Multigraph& g) {
  const int n = g.vertex_count(), m = g.edge_count();
  std::vector<int> deg(n, 0), left(n, 0);
  for (const auto& e : g.edges()) {
    left[e.u]++;
    left[e.v]++;
  }
  std::vector<char> pick(m, 0);
  CoverSums out;
  std::function<void(int)> go = [&](int i) {
    if (i == m) {
      for (int v = 0; v < n; ++v)
        if (deg[v] != 2) return;
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      Rational w = 1;
      for (int e = 0; e < m; ++e)
        if (pick[e]) {
          w *= g.edge(e).w;
          p[find_root(p, g.edge(e).u)] = find_root(p, g.edge(e).v);
        }
      int comps = 0;
      for (int v = 0; v < n; ++v) comps += find_root(p, v) == v;
      out.perm_sum += w;
      out.det_sum += comps % 2 ? Rational(-w) : w;
      out.count++;
      return;
    }
    const auto& e = g.edge(i);
    left[e.u]--;
    left[e.v]--;
    bool ok_out = deg[e.u] + left[e.u] >= 2 && deg[e.v] + left[e.v] >= 2;
    if (ok_out) go(i + 1);
    deg[e.u]++;
    deg[e.v]++;
    if (deg[e.u] <= 2 && deg[e.v] <= 2) {
      pick[i] = 1;
      go(i + 1);
      pick[i] = 0;
    }
    deg[e.u]--;
    deg[e.v]--;
    left[e.u]++;
    left[e.v]++;
  };
  go(0);
  return out;
}

inline Rational udet(const Multigraph& g) {
  Rational s = cover_sums(g).det_sum;
  return g.vertex_count() % 2 ? Rational(-s) : s;
}

inline Rational uperm(const Multigraph& g) { return cover_sums(g).perm_sum; }

/// Weighted perfect matchings by the same subset filter with degree 1.
inline Rational perfmatch(const Multigraph& g) {
  const int n = g.vertex_count(), m = g.edge_count();
  std::vector<int> deg(n, 0);
  Rational total = 0;
  std::function<void(int, Rational)> go = [&](int i, Rational w) {
    if (i == m) {
      for (int v = 0; v < n; ++v)
        if (deg[v] != 1) return;
      total += w;
      return;
    }
    go(i + 1, w);
    const auto& e = g.edge(i);
    if (e.is_loop() || deg[e.u] || deg[e.v]) return;
    deg[e.u] = deg[e.v] = 1;
    go(i + 1, w * e.w);
    deg[e.u] = deg[e.v] = 0;
  };
  go(0, 1);
  return total;
}

inline int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  return inv % 2 ? -1 : 1;
}

/// Leibniz expansion over all n! permutations.
inline Rational leibniz_det(const std::vector<std::vector<Rational>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    Rational t = permutation_sign(p);
    for (int i = 0; i < n && t != 0; ++i) t *= a[i][p[i]];
    total += t;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Pfaffian as a sum over all pairings of 0..n-1, each signed by the
/// inversion count of (i1 j1 i2 j2 ...).
inline Rational pfaffian(const std::vector<std::vector<Rational>>& a) {
  const int n = static_cast<int>(a.size());
  if (n % 2) return 0;
  Rational total = 0;
  std::vector<int> seq;
  std::vector<char> used(n, 0);
  std::function<void()> go = [&]() {
    int i = 0;
    while (i < n && used[i]) ++i;
    if (i == n) {
      Rational t = permutation_sign(seq);
      for (size_t k = 0; k < seq.size(); k += 2) t *= a[seq[k]][seq[k + 1]];
      total += t;
      return;
    }
    used[i] = 1;
    for (int j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      seq.push_back(i);
      seq.push_back(j);
      go();
      seq.resize(seq.size() - 2);
      used[j] = 0;
    }
    used[i] = 0;
  };
  go();
  return total;
}

inline std::vector<std::vector<Rational>> dense(const ucount::SkewMatrix& a) {
  std::vector<std::vector<Rational>> d(a.size(), std::vector<Rational>(a.size()));
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) d[i][j] = a.at(i, j);
  return d;
}

}  // namespace ref

namespace corpus {

using ucount::EmbeddedGraph;
using ucount::Multigraph;
using ucount::Rational;

/// Nonzero rational p/q with |p| <= 5, 1 <= q <= 4.
inline Rational random_weight(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(1, 5), den(1, 4), sgn(0, 1);
  Rational w(num(rng), den(rng));
  w.canonicalize();
  return sgn(rng) ? Rational(-w) : w;
}

inline ucount::SkewMatrix random_skew(int n, std::mt19937& rng) {
  ucount::SkewMatrix a(n);
  std::uniform_int_distribution<int> zero(0, 5);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (zero(rng)) a.set(i, j, random_weight(rng));
  return a;
}

inline EmbeddedGraph embedded(std::string name, Multigraph g) {
  auto rot = ucount::embed_planar(g);
  return EmbeddedGraph{std::move(name), std::move(g), *rot};
}

/// Connected simple planar graph with max degree 3 and n vertices: a random
/// tree, then random extra edges that keep degree <= 3 and planarity.
inline EmbeddedGraph random_subcubic(int n, std::mt19937& rng, bool weighted = true) {
  Multigraph g(n);
  std::vector<int> deg(n, 0);
  for (int v = 1; v < n; ++v) {
    std::vector<int> cand;
    for (int u = 0; u < v; ++u)
      if (deg[u] < 3) cand.push_back(u);
    int u = cand[std::uniform_int_distribution<size_t>(0, cand.size() - 1)(rng)];
    g.add_edge(u, v);
    deg[u]++;
    deg[v]++;
  }
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  for (auto [u, v] : pairs) {
    if (deg[u] >= 3 || deg[v] >= 3) continue;
    bool dup = false;
    for (int e : g.incident(u)) dup |= g.edge(e).other(u) == v;
    if (dup) continue;
    Multigraph h = g;
    h.add_edge(u, v);
    if (!ucount::embed_planar(h)) continue;
    g = std::move(h);
    deg[u]++;
    deg[v]++;
  }
  if (weighted)
    for (int e = 0; e < g.edge_count(); ++e) g.set_weight(e, random_weight(rng));
  return embedded("random-subcubic-" + std::to_string(n), std::move(g));
}

/// Grows a cubic planar graph from K4: pick a face, subdivide two of its
/// edges and join the new vertices across the face.
inline EmbeddedGraph random_cubic(int n, std::mt19937& rng) {
  EmbeddedGraph cur = ucount::named::k4();
  while (cur.graph.vertex_count() < n) {
    auto fs = ucount::validate_embedding(cur.graph, cur.rotation);
    auto& face = fs.faces[std::uniform_int_distribution<int>(0, fs.size() - 1)(rng)];
    std::vector<int> es;
    for (int d : face) es.push_back(ucount::dart_edge(d));
    std::shuffle(es.begin(), es.end(), rng);
    Multigraph g = cur.graph;
    int x = g.add_vertex(), y = g.add_vertex();
    int e1 = es[0], e2 = es[1];
    if (e1 == e2) continue;
    g.add_edge(x, g.edge(e1).v);
    g.reattach(e1, 1, x);
    g.add_edge(y, g.edge(e2).v);
    g.reattach(e2, 1, y);
    g.add_edge(x, y);
    if (!g.is_simple()) continue;
    auto rot = ucount::embed_planar(g);
    cur = EmbeddedGraph{"random-cubic-" + std::to_string(n), std::move(g), *rot};
  }
  return cur;
}

inline Multigraph reweighted(Multigraph g, std::mt19937& rng) {
  for (int e = 0; e < g.edge_count(); ++e) g.set_weight(e, random_weight(rng));
  return g;
}

/// Graphs with a stored embedding used across the fkt, orientation and
/// oracle suites.
inline std::vector<EmbeddedGraph> named_subcubic() {
  using namespace ucount::named;
  return {cycle(4), cycle(5), cycle(6), cycle(8), k4(), prism(3), cube(), prism(5), prism(6)};
}

}  // namespace corpus
