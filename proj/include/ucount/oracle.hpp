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
#include <cstdlib>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ucount/error.hpp"
#include "ucount/graph.hpp"
#include "ucount/matching.hpp"
#include "ucount/pfaffian.hpp"
#include "ucount/rational.hpp"

namespace ucount {

enum class Flavor { permanental, determinantal };

inline const char* flavor_name(Flavor f) { return f == Flavor::permanental ? "perm" : "det"; }

struct CycleCover {
  std::vector<int> edges;
  int components = 0;
  Rational weight = 1;
};

/// Caps worker threads for enumeration; read from UCOUNT_THREADS.
inline unsigned thread_cap() {
  if (const char* s = std::getenv("UCOUNT_THREADS")) {
    int v = std::atoi(s);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

namespace detail {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// Pruned depth-first search over per-vertex choices of two cover items.
// Items are the edges of g followed by optional half-edge stubs.
class CoverSearch {
 public:
  CoverSearch(const Multigraph& g, std::vector<int> stub_vertices = {})
      : g_(g), stubs_(std::move(stub_vertices)) {
    const int n = g.vertex_count(), m = g.edge_count();
    inc_.assign(n, {});
    for (const auto& e : g.edges()) {
      inc_[e.u].push_back(e.id);
      if (!e.is_loop()) inc_[e.v].push_back(e.id);
    }
    for (size_t s = 0; s < stubs_.size(); ++s) inc_[stubs_[s]].push_back(m + static_cast<int>(s));
    state_.assign(m + stubs_.size(), -1);
    deg_.assign(n, 0);
    cap_.assign(n, 0);
    for (int v = 0; v < n; ++v)
      for (int it : inc_[v]) cap_[v] += contrib(it);
  }

  int item_count() const { return static_cast<int>(state_.size()); }
  bool is_stub(int it) const { return it >= g_.edge_count(); }

  /// Every choice available at the first vertex, for splitting work.
  std::vector<std::vector<int>> root_choices() const {
    if (g_.vertex_count() == 0) return {{}};
    return choices(0);
  }

  /// Runs the search; `visit(state)` is called once per cover with the
  /// per-item 0/1 vector. Restrict the root to one choice when given.
  template <class Visit>
  void run(Visit&& visit, const std::vector<int>* root = nullptr) {
    for (int v = 0; v < g_.vertex_count(); ++v)
      if (cap_[v] < 2) return;
    recurse(0, visit, root);
  }

 private:
  int contrib(int it) const {
    if (it >= g_.edge_count()) return 1;
    return g_.edge(it).is_loop() ? 2 : 1;
  }

  std::vector<std::vector<int>> choices(int v) const {
    std::vector<int> und;
    for (int it : inc_[v])
      if (state_[it] < 0) und.push_back(it);
    std::vector<std::vector<int>> out;
    int need = 2 - deg_[v];
    if (need == 0) {
      out.push_back({});
    } else if (need == 1) {
      for (int it : und)
        if (contrib(it) == 1) out.push_back({it});
    } else if (need == 2) {
      for (size_t i = 0; i < und.size(); ++i) {
        if (contrib(und[i]) == 2) {
          out.push_back({und[i]});
          continue;
        }
        for (size_t j = i + 1; j < und.size(); ++j)
          if (contrib(und[j]) == 1) out.push_back({und[i], und[j]});
      }
    }
    return out;
  }

  // Decide item `it` with value `val`; returns false if some endpoint
  // becomes infeasible. Always records the change for undo.
  bool decide(int it, signed char val, std::vector<int>& trail) {
    state_[it] = val;
    trail.push_back(it);
    bool ok = true;
    auto touch = [&](int x, int c) {
      cap_[x] -= c;
      if (val) deg_[x] += c;
      if (deg_[x] > 2 || deg_[x] + cap_[x] < 2) ok = false;
    };
    if (is_stub(it)) {
      touch(stubs_[it - g_.edge_count()], 1);
    } else {
      const Edge& e = g_.edge(it);
      if (e.is_loop()) {
        touch(e.u, 2);
      } else {
        touch(e.u, 1);
        touch(e.v, 1);
      }
    }
    return ok;
  }

  void undo(std::vector<int>& trail, size_t mark) {
    while (trail.size() > mark) {
      int it = trail.back();
      trail.pop_back();
      signed char val = state_[it];
      state_[it] = -1;
      auto back = [&](int x, int c) {
        cap_[x] += c;
        if (val) deg_[x] -= c;
      };
      if (is_stub(it)) {
        back(stubs_[it - g_.edge_count()], 1);
      } else {
        const Edge& e = g_.edge(it);
        if (e.is_loop()) {
          back(e.u, 2);
        } else {
          back(e.u, 1);
          back(e.v, 1);
        }
      }
    }
  }

  template <class Visit>
  void recurse(int v, Visit& visit, const std::vector<int>* root) {
    if (v == g_.vertex_count()) {
      visit(state_);
      return;
    }
    std::vector<std::vector<int>> opts;
    if (root && v == 0)
      opts.push_back(*root);
    else
      opts = choices(v);
    std::vector<int> und;
    for (int it : inc_[v])
      if (state_[it] < 0) und.push_back(it);
    for (const auto& pick : opts) {
      size_t mark = trail_.size();
      bool ok = true;
      for (int it : und) {
        bool chosen = std::find(pick.begin(), pick.end(), it) != pick.end();
        if (!decide(it, chosen ? 1 : 0, trail_)) ok = false;
      }
      if (ok && deg_[v] == 2) recurse(v + 1, visit, root);
      undo(trail_, mark);
    }
  }

  const Multigraph& g_;
  std::vector<int> stubs_;
  std::vector<std::vector<int>> inc_;
  std::vector<signed char> state_;
  std::vector<int> deg_, cap_;
  std::vector<int> trail_;
};

inline CycleCover make_cover(const Multigraph& g, const std::vector<signed char>& state) {
  CycleCover c;
  UnionFind uf(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!state[e]) continue;
    c.edges.push_back(e);
    c.weight *= g.edge(e).w;
    uf.unite(g.edge(e).u, g.edge(e).v);
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (uf.find(v) == v) ++c.components;
  return c;
}

}  // namespace detail

/// Streams every cycle cover of g in a deterministic order.
template <class Visit>
void enumerate_cycle_covers(const Multigraph& g, Visit&& visit) {
  detail::CoverSearch search(g);
  search.run([&](const std::vector<signed char>& state) { visit(detail::make_cover(g, state)); });
}

inline std::vector<CycleCover> cycle_covers(const Multigraph& g) {
  std::vector<CycleCover> out;
  enumerate_cycle_covers(g, [&](const CycleCover& c) { out.push_back(c); });
  return out;
}

/// Σ_c s(c) w(c) over the enumerated stream, where s(c) = (-1)^{|c|} for the
/// determinantal flavor and 1 otherwise. Work is split over root choices.
inline Rational cover_sum_enumerated(const Multigraph& g, Flavor flavor, unsigned threads = thread_cap()) {
  auto branch = [&g, flavor](std::optional<std::vector<int>> root) {
    detail::CoverSearch search(g);
    Rational total = 0;
    auto visit = [&](const std::vector<signed char>& state) {
      CycleCover c = detail::make_cover(g, state);
      if (flavor == Flavor::determinantal && c.components % 2 == 1)
        total -= c.weight;
      else
        total += c.weight;
    };
    if (root)
      search.run(visit, &*root);
    else
      search.run(visit);
    return total;
  };
  if (threads <= 1 || g.vertex_count() == 0) return branch(std::nullopt);
  auto roots = detail::CoverSearch(g).root_choices();
  Rational total = 0;
  for (size_t start = 0; start < roots.size(); start += threads) {
    std::vector<std::future<Rational>> jobs;
    for (size_t i = start; i < std::min(roots.size(), start + threads); ++i)
      jobs.push_back(std::async(std::launch::async, branch, roots[i]));
    for (auto& j : jobs) total += j.get();
  }
  return total;
}

namespace detail {

// Vertex order for the frontier sum: the breadth-first order, over all
// roots, with the smallest maximum frontier.
inline std::vector<int> frontier_order(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> nb(n);
  for (const auto& e : g.edges())
    if (!e.is_loop()) {
      nb[e.u].push_back(e.v);
      nb[e.v].push_back(e.u);
    }
  for (auto& l : nb) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  auto bfs = [&](int s) {
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    for (int r = 0; r < n; ++r) {
      int src = r == 0 ? s : r;
      if (seen[src]) continue;
      seen[src] = 1;
      size_t head = order.size();
      order.push_back(src);
      while (head < order.size()) {
        int x = order[head++];
        for (int y : nb[x])
          if (!seen[y]) {
            seen[y] = 1;
            order.push_back(y);
          }
      }
    }
    return order;
  };
  auto width = [&](const std::vector<int>& order) {
    std::vector<int> pos(n), last(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    for (int v = 0; v < n; ++v) {
      last[v] = pos[v];
      for (int y : nb[v]) last[v] = std::max(last[v], pos[y]);
    }
    std::vector<int> delta(n + 1, 0);
    for (int v = 0; v < n; ++v) {
      ++delta[pos[v]];
      --delta[last[v] + 1];
    }
    int cur = 0, best = 0;
    for (int i = 0; i < n; ++i) best = std::max(best, cur += delta[i]);
    return best;
  };
  std::vector<int> best;
  int best_w = n + 1;
  int stride = std::max(1, n / 64);
  for (int s = 0; s < n; s += stride) {
    auto o = bfs(s);
    int w = width(o);
    if (w < best_w) {
      best_w = w;
      best = std::move(o);
    }
  }
  return best;
}

}  // namespace detail

/// Σ_c s(c) w(c) by a memoised sweep over the same per-vertex choices:
/// partial covers that agree on the frontier (degree and path partner of
/// each open vertex) are merged before the sweep continues.
inline Rational cover_sum_frontier(const Multigraph& g, Flavor flavor) {
  const int n = g.vertex_count();
  if (n == 0) return 1;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < 2) return 0;
  const bool det = flavor == Flavor::determinantal;
  const auto order = detail::frontier_order(g);
  std::vector<int> pos(n), last(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (int v = 0; v < n; ++v) {
    last[v] = pos[v];
    for (int e : g.incident(v)) last[v] = std::max(last[v], pos[g.edge(e).other(v)]);
  }

  // Codes: kFree (degree 0), kFull (degree 2), else partner slot (degree 1).
  constexpr char kFree = 127, kFull = 126;
  using Table = std::unordered_map<std::string, Rational>;
  Table cur;
  cur.emplace(std::string(), Rational(1));
  std::vector<int> active;
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    active.push_back(v);
    if (active.size() >= 120) throw Error(Errc::ResourceLimit, "frontier too wide");
    {
      Table next;
      next.reserve(cur.size());
      for (auto& [k, val] : cur) next.emplace(k + kFree, std::move(val));
      cur.swap(next);
    }
    auto slot = [&](int x) {
      return static_cast<int>(std::find(active.begin(), active.end(), x) - active.begin());
    };
    std::vector<int> here = g.incident(v);
    std::sort(here.begin(), here.end());
    here.erase(std::unique(here.begin(), here.end()), here.end());
    for (int e : here) {
      const Edge& ed = g.edge(e);
      int u = ed.other(v);
      if (pos[u] > i) continue;
      const int pa = slot(v), pb = slot(u);
      Table next;
      next.reserve(cur.size() * 2);
      for (const auto& [k, val] : cur) {
        next[k] += val;
        std::string s = k;
        Rational x = val * ed.w;
        if (pa == pb) {
          if (s[pa] != kFree) continue;
          s[pa] = kFull;
          if (det) x = -x;
        } else {
          char ca = s[pa], cb = s[pb];
          if (ca == kFull || cb == kFull) continue;
          if (ca == kFree && cb == kFree) {
            s[pa] = static_cast<char>(pb);
            s[pb] = static_cast<char>(pa);
          } else if (ca == kFree) {
            s[pb] = kFull;
            s[pa] = cb;
            s[static_cast<int>(cb)] = static_cast<char>(pa);
          } else if (cb == kFree) {
            s[pa] = kFull;
            s[pb] = ca;
            s[static_cast<int>(ca)] = static_cast<char>(pb);
          } else if (ca == pb) {
            s[pa] = s[pb] = kFull;
            if (det) x = -x;
          } else {
            s[static_cast<int>(ca)] = cb;
            s[static_cast<int>(cb)] = ca;
            s[pa] = s[pb] = kFull;
          }
        }
        next[s] += x;
      }
      cur.swap(next);
    }
    // Retire vertices whose neighbours are all swept.
    std::vector<int> keep;
    std::vector<int> remap(active.size(), -1);
    for (size_t t = 0; t < active.size(); ++t)
      if (last[active[t]] > i) {
        remap[t] = static_cast<int>(keep.size());
        keep.push_back(static_cast<int>(t));
      }
    if (keep.size() != active.size()) {
      Table next;
      next.reserve(cur.size());
      for (auto& [k, val] : cur) {
        if (val == 0) continue;
        bool ok = true;
        for (size_t t = 0; t < active.size() && ok; ++t)
          if (remap[t] < 0 && k[t] != kFull) ok = false;
        if (!ok) continue;
        std::string s;
        s.reserve(keep.size());
        for (int t : keep) {
          char c = k[t];
          s.push_back(c == kFree || c == kFull ? c : static_cast<char>(remap[static_cast<int>(c)]));
        }
        next[s] += val;
      }
      cur.swap(next);
      std::vector<int> na;
      for (int t : keep) na.push_back(active[t]);
      active.swap(na);
    }
  }
  Rational total = 0;
  for (auto& [k, val] : cur) total += val;
  return total;
}

enum class Engine { frontier, enumeration };

inline Rational cover_sum(const Multigraph& g, Flavor flavor, Engine engine = Engine::frontier) {
  return engine == Engine::frontier ? cover_sum_frontier(g, flavor) : cover_sum_enumerated(g, flavor);
}

/// udet G = (-1)^n Σ_c (-1)^{|c|} w(c).
inline Rational udet(const Multigraph& g, Engine engine = Engine::frontier) {
  Rational s = cover_sum(g, Flavor::determinantal, engine);
  return g.vertex_count() % 2 ? Rational(-s) : s;
}

inline Rational uperm(const Multigraph& g, Engine engine = Engine::frontier) {
  return cover_sum(g, Flavor::permanental, engine);
}

/// Streams perfect matchings as sorted edge-id lists.
template <class Visit>
void enumerate_perfect_matchings(const Multigraph& g, Visit&& visit) {
  const int n = g.vertex_count();
  if (n % 2 == 1) return;
  std::vector<char> used(n, 0);
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int v) {
    while (v < n && used[v]) ++v;
    if (v == n) {
      std::vector<int> out = chosen;
      std::sort(out.begin(), out.end());
      visit(out);
      return;
    }
    used[v] = 1;
    for (int e : g.incident(v)) {
      const Edge& ed = g.edge(e);
      if (ed.is_loop()) continue;
      int u = ed.other(v);
      if (used[u]) continue;
      used[u] = 1;
      chosen.push_back(e);
      rec(v + 1);
      chosen.pop_back();
      used[u] = 0;
    }
    used[v] = 0;
  };
  rec(0);
}

inline Rational perfmatch(const Multigraph& g) {
  Rational total = 0;
  enumerate_perfect_matchings(g, [&](const std::vector<int>& m) {
    Rational w = 1;
    for (int e : m) w *= g.edge(e).w;
    total += w;
  });
  return total;
}

// ---------------------------------------------------------------------------
// Gadget signatures

using Pairing = std::vector<std::pair<std::string, std::string>>;

/// Parity of the pairing modifications joining `base` to `p`. Computed as
/// (k - #cycles of base ∪ p) mod 2 for 2k stubs.
inline int pairing_parity(const Pairing& p, const Pairing& base) {
  std::map<std::string, std::string> a, b;
  for (const auto& [x, y] : p) {
    if (!a.emplace(x, y).second || !a.emplace(y, x).second) throw Error(Errc::MismatchedSupport, "repeated stub");
  }
  for (const auto& [x, y] : base) {
    if (!b.emplace(x, y).second || !b.emplace(y, x).second) throw Error(Errc::MismatchedSupport, "repeated stub");
  }
  if (a.size() != b.size()) throw Error(Errc::MismatchedSupport, "pairings on different stub sets");
  for (const auto& [x, y] : a)
    if (!b.count(x)) throw Error(Errc::MismatchedSupport, "stub " + x + " missing from base");
  std::map<std::string, char> seen;
  int cycles = 0;
  for (const auto& [s, unused] : a) {
    if (seen.count(s)) continue;
    ++cycles;
    std::string x = s;
    while (!seen.count(x)) {
      seen[x] = 1;
      std::string y = a.at(x);
      seen[y] = 1;
      x = b.at(y);
    }
  }
  int k = static_cast<int>(a.size()) / 2;
  return (k - cycles) & 1;
}

struct SignatureTable {
  Flavor flavor = Flavor::permanental;
  std::map<std::vector<std::string>, Rational> entries;  // nonzero only
  std::map<std::vector<std::string>, long> covers;       // configurations per key

  Rational at(std::vector<std::string> key) const {
    std::sort(key.begin(), key.end());
    auto it = entries.find(key);
    return it == entries.end() ? Rational(0) : it->second;
  }
  long cover_count() const {
    long t = 0;
    for (const auto& [k, c] : covers) t += c;
    return t;
  }
};

inline std::string key_string(const std::vector<std::string>& key) {
  std::string s = "{";
  for (size_t i = 0; i < key.size(); ++i) s += (i ? "," : "") + key[i];
  return s + "}";
}

/// Signature of a gadget. A stub in S forces its vertex to use it as one of
/// its two cover edges; stub weights multiply in. Paths between stubs are
/// not cycles: the determinantal sign is (-1)^{#closed cycles + τ}.
inline SignatureTable gadget_signature(const Gadget& gd, Flavor flavor) {
  const Multigraph& g = gd.graph;
  std::vector<int> sv;
  for (const auto& s : gd.external) sv.push_back(s.vertex);
  detail::CoverSearch search(g, sv);
  SignatureTable t;
  t.flavor = flavor;
  std::map<std::vector<std::string>, Rational> acc;
  const int m = g.edge_count();
  const bool global_flip = flavor == Flavor::determinantal && g.vertex_count() % 2 == 1;
  search.run([&](const std::vector<signed char>& state) {
    std::vector<std::string> key;
    Rational w = 1;
    detail::UnionFind uf(g.vertex_count());
    for (int e = 0; e < m; ++e)
      if (state[e]) {
        w *= g.edge(e).w;
        uf.unite(g.edge(e).u, g.edge(e).v);
      }
    std::vector<int> chosen;
    for (size_t s = 0; s < gd.external.size(); ++s)
      if (state[m + s]) {
        chosen.push_back(static_cast<int>(s));
        key.push_back(gd.external[s].id);
        w *= gd.external[s].weight;
      }
    for (const auto& sel : gd.selectors)
      if (state[sel.edge]) key.push_back(sel.name);
    std::sort(key.begin(), key.end());
    if (flavor == Flavor::determinantal) {
      std::map<int, std::vector<int>> by_comp;
      for (int s : chosen) by_comp[uf.find(gd.external[s].vertex)].push_back(s);
      int closed = 0;
      for (int v = 0; v < g.vertex_count(); ++v)
        if (uf.find(v) == v && !by_comp.count(v)) ++closed;
      int tau = 0;
      if (chosen.size() >= 4) {
        Pairing pc, p0;
        std::set<std::string> in;
        for (int s : chosen) in.insert(gd.external[s].id);
        for (auto& [c, list] : by_comp) pc.emplace_back(gd.external[list.at(0)].id, gd.external[list.at(1)].id);
        for (const auto& pr : gd.base_pairing)
          if (in.count(pr.first) && in.count(pr.second)) p0.push_back(pr);
        if (2 * p0.size() != chosen.size())
          throw Error(Errc::MissingBasePairing, "gadget '" + gd.name + "' has no base pairing for " + key_string(key));
        tau = pairing_parity(pc, p0);
      }
      if ((closed + tau) % 2 == 1) w = -w;
      if (global_flip) w = -w;
    }
    acc[key] += w;
    t.covers[key] += 1;
  });
  for (auto& [k, v] : acc)
    if (v != 0) t.entries[k] = v;
  return t;
}

// ---------------------------------------------------------------------------
// Cycles

struct Cycle {
  std::vector<int> vertices;  // cyclic order
  std::vector<int> edges;     // edges[i] joins vertices[i] and vertices[i+1]

  int length() const { return static_cast<int>(edges.size()); }
};

/// Streams every simple cycle once (loops and parallel pairs included).
template <class Visit>
void enumerate_simple_cycles(const Multigraph& g, Visit&& visit) {
  const int n = g.vertex_count();
  for (const auto& e : g.edges())
    if (e.is_loop()) visit(Cycle{{e.u}, {e.id}});
  for (const auto& e : g.edges())
    for (const auto& f : g.edges())
      if (!e.is_loop() && e.id < f.id && std::minmax(e.u, e.v) == std::minmax(f.u, f.v)) {
        int a = std::min(e.u, e.v), b = std::max(e.u, e.v);
        visit(Cycle{{a, b}, {e.id, f.id}});
      }
  std::vector<char> on(n, 0);
  Cycle path;
  std::function<void(int, int)> dfs = [&](int s, int x) {
    for (int e : g.incident(x)) {
      const Edge& ed = g.edge(e);
      if (ed.is_loop()) continue;
      int y = ed.other(x);
      if (y == s && path.edges.size() >= 2) {
        if (path.edges.front() < e) {
          path.edges.push_back(e);
          visit(path);
          path.edges.pop_back();
        }
        continue;
      }
      if (y <= s || on[y]) continue;
      on[y] = 1;
      path.vertices.push_back(y);
      path.edges.push_back(e);
      dfs(s, y);
      path.edges.pop_back();
      path.vertices.pop_back();
      on[y] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    on[s] = 1;
    path.vertices = {s};
    path.edges.clear();
    dfs(s, s);
    on[s] = 0;
  }
}

/// Cycles whose removal leaves a graph with a perfect matching.
template <class Visit>
void enumerate_central_cycles(const Multigraph& g, Visit&& visit) {
  std::vector<char> active(g.vertex_count(), 1);
  enumerate_simple_cycles(g, [&](const Cycle& c) {
    if ((g.vertex_count() - static_cast<int>(c.vertices.size())) % 2) return;
    for (int v : c.vertices) active[v] = 0;
    bool central = has_perfect_matching(g, active);
    for (int v : c.vertices) active[v] = 1;
    if (central) visit(c);
  });
}

inline std::vector<Cycle> central_cycles(const Multigraph& g) {
  std::vector<Cycle> out;
  enumerate_central_cycles(g, [&](const Cycle& c) { out.push_back(c); });
  return out;
}

/// Counts edges oriented along the traversal vertices[0] -> vertices[1] ...
inline int along_count(const Multigraph& g, const Cycle& c) {
  int k = 0;
  for (int i = 0; i < c.length(); ++i) {
    const Edge& e = g.edge(c.edges[i]);
    if (e.dir == Orient::none) throw Error(Errc::UnorientedEdge, "edge " + std::to_string(e.id));
    if (e.tail() == c.vertices[i] && e.head() == c.vertices[(i + 1) % c.vertices.size()]) ++k;
  }
  return k;
}

inline bool is_oddly_oriented(const Multigraph& g, const Cycle& c) { return along_count(g, c) % 2 == 1; }

/// Sign of a perfect matching of the whole vertex set, edges tail first.
inline int matching_sign_of(const Multigraph& g, const std::vector<int>& matching) {
  std::vector<std::pair<int, int>> pairs;
  for (int e : matching) {
    const Edge& ed = g.edge(e);
    if (ed.dir == Orient::none) throw Error(Errc::UnorientedEdge, "edge " + std::to_string(e));
    pairs.emplace_back(ed.tail(), ed.head());
  }
  return matching_sign(pairs);
}

struct ConstancyResult {
  bool constant = true;
  int value = 0;  // 0 when the graph has no cycle cover
  std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
};

/// f(c) = (-1)^{|c|} sgn(complement of c) over all cycle covers.
inline ConstancyResult f_constancy_check(const Multigraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3) throw Error(Errc::NotCubic, "vertex " + std::to_string(v));
  if (!g.is_simple()) throw Error(Errc::NotSimple, "f constancy needs a simple graph");
  if (!g.fully_oriented()) throw Error(Errc::UnorientedEdge, "graph must be fully oriented");
  ConstancyResult r;
  std::vector<int> first;
  enumerate_cycle_covers(g, [&](const CycleCover& c) {
    if (!r.constant) return;
    int f = matching_sign_of(g, edge_complement(g, c.edges)) * (c.components % 2 ? -1 : 1);
    if (r.value == 0) {
      r.value = f;
      first = c.edges;
    } else if (f != r.value) {
      r.constant = false;
      r.witness = std::make_pair(first, c.edges);
    }
  });
  return r;
}

}  // namespace ucount
