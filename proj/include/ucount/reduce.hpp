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
#include <array>
#include <cstdint>
#include <deque>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "ucount/gadgets.hpp"
#include "ucount/graph.hpp"
#include "ucount/planarity.hpp"

namespace ucount {

struct Literal {
  int var = 1;  // 1-based
  bool positive = true;
};

struct CnfFormula {
  int variable_count = 0;
  std::vector<std::vector<Literal>> clauses;

  int clause_count() const { return static_cast<int>(clauses.size()); }
};

inline void check_formula(const CnfFormula& f) {
  if (f.variable_count < 0) throw Error(Errc::ParseError, "negative variable count");
  for (const auto& c : f.clauses) {
    if (c.size() != 3) throw Error(Errc::ParseError, "clause with " + std::to_string(c.size()) + " literals");
    for (const auto& l : c)
      if (l.var < 1 || l.var > f.variable_count)
        throw Error(Errc::ParseError, "variable " + std::to_string(l.var) + " out of range");
  }
}

/// DIMACS CNF; every clause must have exactly three literals.
inline CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula f;
  bool header = false;
  long declared = 0;
  std::vector<Literal> cur;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "%") break;
    if (tok == "p") {
      std::string fmt;
      if (header || !(ls >> fmt >> f.variable_count >> declared) || fmt != "cnf")
        throw Error(Errc::ParseError, "bad problem line: " + line);
      header = true;
      continue;
    }
    if (!header) throw Error(Errc::ParseError, "clause before the problem line");
    ls.clear();
    ls.str(line);
    long x;
    while (ls >> x) {
      if (x == 0) {
        f.clauses.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(Literal{static_cast<int>(x > 0 ? x : -x), x > 0});
      }
    }
    if (!ls.eof()) throw Error(Errc::ParseError, "non-integer token in: " + line);
  }
  if (!header) throw Error(Errc::ParseError, "missing problem line");
  if (!cur.empty()) throw Error(Errc::ParseError, "last clause is not 0-terminated");
  if (declared != f.clause_count())
    throw Error(Errc::ParseError, "header declares " + std::to_string(declared) + " clauses, found " +
                                      std::to_string(f.clause_count()));
  check_formula(f);
  return f;
}

inline CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

inline std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.variable_count << ' ' << f.clause_count() << '\n';
  for (const auto& c : f.clauses) {
    for (const auto& l : c) out << (l.positive ? l.var : -l.var) << ' ';
    out << "0\n";
  }
  return out.str();
}

inline constexpr int kMaxSatVariables = 24;

/// Number of satisfying assignments over all variable_count variables.
inline std::uint64_t sat_count(const CnfFormula& f) {
  check_formula(f);
  if (f.variable_count > kMaxSatVariables)
    throw Error(Errc::TooManyVariables, std::to_string(f.variable_count) + " variables");
  std::vector<std::uint32_t> pos, neg;
  for (const auto& c : f.clauses) {
    std::uint32_t p = 0, q = 0;
    for (const auto& l : c) (l.positive ? p : q) |= 1u << (l.var - 1);
    pos.push_back(p);
    neg.push_back(q);
  }
  std::uint64_t count = 0;
  const std::uint32_t total = 1u << f.variable_count;
  for (std::uint32_t a = 0; a < total; ++a) {
    bool ok = true;
    for (size_t j = 0; ok && j < pos.size(); ++j) ok = (a & pos[j]) || (~a & neg[j]);
    count += ok;
  }
  return count;
}

struct CompiledReduction {
  Multigraph graph;
  RotationSystem rotation;
  Mode mode = Mode::det;
  Rational scale = 1;
  std::vector<std::string> vertex_origin;
  std::vector<std::string> edge_origin;
  int crossings = 0;
};

namespace detail {

struct Builder {
  CompiledReduction& out;

  void tag_edges(const std::string& ctx) {
    while (static_cast<int>(out.edge_origin.size()) < out.graph.edge_count()) out.edge_origin.push_back(ctx);
  }

  /// Copies a gadget in; returns vertex and edge maps.
  std::pair<std::vector<int>, std::vector<int>> place(const Gadget& gd, const std::string& prefix) {
    std::vector<int> vm(gd.graph.vertex_count()), em;
    for (int v = 0; v < gd.graph.vertex_count(); ++v) {
      vm[v] = out.graph.add_vertex();
      out.vertex_origin.push_back(prefix + gd.vertex_labels[v]);
    }
    for (const auto& e : gd.graph.edges()) em.push_back(out.graph.add_edge(vm[e.u], vm[e.v], e.w));
    tag_edges(prefix + gd.name);
    return {vm, em};
  }

  int edge(int a, int b, const Rational& w, const std::string& ctx) {
    int e = out.graph.add_edge(a, b, w);
    tag_edges(ctx);
    return e;
  }
};

inline int label_index(const Gadget& gd, const std::string& label) {
  for (size_t i = 0; i < gd.vertex_labels.size(); ++i)
    if (gd.vertex_labels[i] == label) return static_cast<int>(i);
  throw Error(Errc::ParseError, "no vertex " + label + " in " + gd.name);
}

inline int selector_edge(const Gadget& gd, const std::string& name) {
  for (const auto& s : gd.selectors)
    if (s.name == name) return s.edge;
  throw Error(Errc::ParseError, "no selector " + name + " in " + gd.name);
}

/// Shortest dual path from a face at vertex `from` to a face holding edge
/// `target`. Returns the crossed darts (each taken in the face being left)
/// and the final face. When the two lie in different components nothing is
/// crossed: the target's component can be drawn inside a face at `from`.
inline std::pair<std::vector<int>, int> route_corridor(const Multigraph& g, const FaceSet& fs, int from, int target) {
  const int F = fs.size();
  const int t0 = fs.face_of[dart_of(target, 0)], t1 = fs.face_of[dart_of(target, 1)];
  if (fs.component[from] != fs.component[g.edge(target).u]) return {{}, t0};
  std::vector<int> via(F, -2), prev(F, -1);
  std::deque<int> q;
  for (int f = 0; f < F; ++f)
    for (int d : fs.faces[f])
      if (dart_tail(g, d) == from && via[f] == -2) {
        via[f] = -1;
        q.push_back(f);
      }
  while (!q.empty()) {
    int f = q.front();
    q.pop_front();
    if (f == t0 || f == t1) {
      std::vector<int> darts;
      for (int x = f; via[x] != -1; x = prev[x]) darts.push_back(via[x]);
      return {std::vector<int>(darts.rbegin(), darts.rend()), f};
    }
    for (int d : fs.faces[f]) {
      if (dart_edge(d) == target) continue;
      int h = fs.face_of[dart_twin(d)];
      if (via[h] == -2) {
        via[h] = d;
        prev[h] = f;
        q.push_back(h);
      }
    }
  }
  throw Error(Errc::RoutingNotPlanar, "no corridor reaches the target edge");
}

inline RotationSystem embed_or_throw(const Multigraph& g, const std::string& what) {
  auto rot = embed_planar(g);
  if (!rot) throw Error(Errc::RoutingNotPlanar, what + " is not planar");
  return *rot;
}

}  // namespace detail

/// Synchronizes the edge pair (L's loop segments, target) with an iff core on
/// L, crossing every edge on the way with a stacked pair of skew crossovers.
/// Returns the number of crossed edges.
inline int splice_extended_iff(CompiledReduction& cr, int L, int target, const std::string& ctx) {
  detail::Builder b{cr};
  Multigraph& g = cr.graph;
  RotationSystem rot = detail::embed_or_throw(g, "graph before " + ctx);
  FaceSet fs = validate_embedding(g, rot);
  auto [crossed, last_face] = detail::route_corridor(g, fs, L, target);

  int td = fs.face_of[dart_of(target, 0)] == last_face ? dart_of(target, 0) : dart_of(target, 1);

  const Rational d = mode_weight(cr.mode);
  IffCore core = add_iff_core(g, &cr.vertex_origin, cr.mode, ctx + ".", L);
  b.tag_edges(ctx + ".core");
  int up = core.R, low = core.R;
  Rational w_low = -d;
  const Gadget x = make_skew_crossover(cr.mode);
  int n = 0;
  for (int dart : crossed) {
    const int r = dart_edge(dart), Q = dart_head(g, dart);
    const std::string tag = ctx + ".x" + std::to_string(++n);
    const std::vector<int> U = b.place(x, tag + "U.").first;
    const std::vector<int> D = b.place(x, tag + "D.").first;
    // Corners: a=0, c=2, d=3, f=5.
    g.reattach(r, 1 - (dart & 1), U[0]);
    b.edge(U[5], D[2], 1, tag);
    b.edge(D[3], Q, 1, tag);
    b.edge(up, U[3], 1, tag);
    b.edge(low, D[0], w_low, tag);
    up = U[2];
    low = D[5];
    w_low = 1;
  }
  const int Y = dart_head(g, td);
  g.reattach(target, 1 - (td & 1), up);
  b.edge(low, Y, w_low, ctx + ".tail");
  return n;
}

/// Builds the graph whose uperm (perm mode) or (-1)^m udet (det mode)
/// equals the number of satisfying assignments of f.
inline CompiledReduction compile(const CnfFormula& f, Mode mode) {
  check_formula(f);
  CompiledReduction cr;
  cr.mode = mode;
  detail::Builder b{cr};

  // Occurrence vertices per (variable, polarity), in clause order.
  std::vector<std::array<int, 2>> seen(f.variable_count + 1, {0, 0});
  std::vector<std::array<int, 2>> total(f.variable_count + 1, {0, 0});
  for (const auto& c : f.clauses)
    for (const auto& l : c) ++total[l.var][l.positive ? 0 : 1];

  std::vector<std::array<std::vector<int>, 2>> occ(f.variable_count + 1);
  for (int i = 1; i <= f.variable_count; ++i) {
    Gadget gd = make_variable_gadget(total[i][0], total[i][1], mode);
    const std::vector<int> vm = b.place(gd, "x" + std::to_string(i) + ".").first;
    for (int t = 1; t <= total[i][0]; ++t) occ[i][0].push_back(vm[detail::label_index(gd, "x" + std::to_string(t))]);
    for (int t = 1; t <= total[i][1]; ++t) occ[i][1].push_back(vm[detail::label_index(gd, "~x" + std::to_string(t))]);
  }
  std::vector<std::array<int, 3>> literal_edge;
  const Gadget clause = make_clause_gadget(mode);
  for (int j = 0; j < f.clause_count(); ++j) {
    const std::vector<int> em = b.place(clause, "c" + std::to_string(j + 1) + ".").second;
    literal_edge.push_back({em[detail::selector_edge(clause, "a")], em[detail::selector_edge(clause, "b")],
                            em[detail::selector_edge(clause, "c")]});
  }
  static const char* names = "abc";
  for (int j = 0; j < f.clause_count(); ++j)
    for (int k = 0; k < 3; ++k) {
      const Literal& l = f.clauses[j][k];
      int side = l.positive ? 0 : 1;
      int L = occ[l.var][side][seen[l.var][side]++];
      cr.crossings += splice_extended_iff(cr, L, literal_edge[j][k],
                                          "sync.c" + std::to_string(j + 1) + "." + names[k]);
    }
  cr.rotation = detail::embed_or_throw(cr.graph, "compiled graph");
  FaceSet fs = validate_embedding(cr.graph, cr.rotation);
  if (fs.size() > 0) cr.rotation.outer_dart = fs.faces[fs.outer[0]][0];
  return cr;
}

namespace detail {

/// Joins x and y through a null-edge gadget.
inline void add_null_edge(CompiledReduction& cr, int x, int y, const std::string& ctx) {
  Builder b{cr};
  const std::vector<int> vm = b.place(make_null_edge(), ctx + ".").first;
  b.edge(x, vm[0], 1, ctx);
  b.edge(vm[3], y, 1, ctx);
}

/// K4 with one edge subdivided by s (weights -1 and -1/2, udet 1), joined
/// to y through a null edge.
inline void add_absorber(CompiledReduction& cr, int y, const std::string& ctx) {
  Builder b{cr};
  Multigraph& g = cr.graph;
  int k[4], s;
  for (int i = 0; i < 4; ++i) {
    k[i] = g.add_vertex();
    cr.vertex_origin.push_back(ctx + ".k" + std::to_string(i + 1));
  }
  s = g.add_vertex();
  cr.vertex_origin.push_back(ctx + ".s");
  b.edge(k[0], s, -1, ctx);
  b.edge(s, k[1], Rational(-1, 2), ctx);
  b.edge(k[0], k[2], 1, ctx);
  b.edge(k[0], k[3], 1, ctx);
  b.edge(k[1], k[2], 1, ctx);
  b.edge(k[1], k[3], 1, ctx);
  b.edge(k[2], k[3], 1, ctx);
  add_null_edge(cr, y, s, ctx + ".null");
}

}  // namespace detail

/// Replaces every degree-4 vertex by the degree-4 vertex gadget (its stubs
/// taken in rotation order) and pads degree-2 vertices with null edges.
/// udet(result) = scale * udet(input) with scale = 4^k: each gadget carries
/// -4 times a lone vertex's signature, and its 55 extra vertices flip (-1)^n.
inline CompiledReduction cubicize(const Multigraph& g, const RotationSystem& rot,
                                  const std::vector<std::string>& origin = {}) {
  validate_embedding(g, rot);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 4) throw Error(Errc::DegreeTooHigh, "vertex " + std::to_string(v));
    if (g.degree(v) < 2) throw Error(Errc::NotCubic, "vertex " + std::to_string(v) + " has degree below 2");
  }
  if (g.has_loops()) throw Error(Errc::LoopPresent, "cubicize expects a loopless graph");
  CompiledReduction cr;
  cr.mode = Mode::det;
  detail::Builder b{cr};
  const Gadget box = make_degree4_vertex_gadget();
  const char* corner[4] = {"BL", "BR", "TR", "TL"};

  std::vector<int> vid(g.vertex_count(), -1);
  std::vector<std::array<int, 4>> stub_at(g.vertex_count());
  int k = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::string name = origin.empty() ? "v" + std::to_string(v) : origin[v];
    if (g.degree(v) == 4) {
      const std::vector<int> vm = b.place(box, name + ".").first;
      for (int i = 0; i < 4; ++i) stub_at[v][i] = vm[detail::stub_vertex(box, corner[i])];
      ++k;
    } else {
      vid[v] = cr.graph.add_vertex();
      cr.vertex_origin.push_back(name);
    }
  }
  // Endpoint of dart d in the new graph.
  auto end = [&](int d) {
    int v = dart_tail(g, d);
    if (vid[v] >= 0) return vid[v];
    const auto& ord = rot.order[v];
    int i = static_cast<int>(std::find(ord.begin(), ord.end(), d) - ord.begin());
    return stub_at[v][i];
  };
  for (const auto& e : g.edges()) b.edge(end(dart_of(e.id, 0)), end(dart_of(e.id, 1)), e.w, "edge" + std::to_string(e.id));
  cr.scale = 1;
  for (int i = 0; i < k; ++i) cr.scale *= 4;

  int pads = 0;
  for (;;) {
    RotationSystem r = detail::embed_or_throw(cr.graph, "cubicized graph");
    FaceSet fs = validate_embedding(cr.graph, r);
    std::pair<int, int> pair{-1, -1};
    for (const auto& face : fs.faces) {
      int first = -1;
      for (int d : face) {
        int v = dart_tail(cr.graph, d);
        if (cr.graph.degree(v) != 2) continue;
        if (first < 0) first = v;
        else if (v != first) {
          pair = {first, v};
          break;
        }
      }
      if (pair.first >= 0) break;
    }
    if (pair.first < 0) break;
    detail::add_null_edge(cr, pair.first, pair.second, "pad" + std::to_string(++pads));
  }
  for (int v = 0; v < cr.graph.vertex_count(); ++v)
    if (cr.graph.degree(v) == 2) detail::add_absorber(cr, v, "absorb" + std::to_string(++pads));
  cr.rotation = detail::embed_or_throw(cr.graph, "cubicized graph");
  FaceSet fs = validate_embedding(cr.graph, cr.rotation);
  if (fs.size() > 0) cr.rotation.outer_dart = fs.faces[fs.outer[0]][0];
  return cr;
}

inline CompiledReduction cubicize(const CompiledReduction& in) {
  if (in.mode != Mode::det) throw Error(Errc::ParseError, "cubicize applies to det-mode graphs");
  CompiledReduction out = cubicize(in.graph, in.rotation, in.vertex_origin);
  out.scale *= in.scale;
  out.crossings = in.crossings;
  return out;
}

}  // namespace ucount
