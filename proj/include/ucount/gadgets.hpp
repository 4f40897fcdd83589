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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ucount/graph.hpp"
#include "ucount/oracle.hpp"

namespace ucount {

enum class Mode { det, perm };

inline const char* mode_name(Mode m) { return m == Mode::det ? "det" : "perm"; }

/// d = 1 for the determinant, -1 for the permanent.
inline Rational mode_weight(Mode m) { return m == Mode::det ? 1 : -1; }

inline Flavor flavor_of(Mode m) { return m == Mode::det ? Flavor::determinantal : Flavor::permanental; }

namespace detail {

class GadgetBuilder {
 public:
  explicit GadgetBuilder(std::string name) { g_.name = std::move(name); }

  int vertex(const std::string& label) {
    int v = g_.graph.add_vertex();
    g_.vertex_labels.push_back(label);
    by_label_[label] = v;
    return v;
  }
  int operator[](const std::string& label) const { return by_label_.at(label); }
  int edge(const std::string& a, const std::string& b, Rational w = 1) {
    return g_.graph.add_edge(by_label_.at(a), by_label_.at(b), std::move(w));
  }
  void stub(const std::string& id, const std::string& at, Rational w = 1) {
    g_.external.push_back(Stub{id, by_label_.at(at), std::move(w)});
  }
  void selector(const std::string& name, int e) { g_.selectors.push_back(Selector{name, e}); }
  void pair(const std::string& a, const std::string& b) { g_.base_pairing.emplace_back(a, b); }
  Gadget done() { return std::move(g_); }

 private:
  Gadget g_;
  std::map<std::string, int> by_label_;
};

}  // namespace detail

/// Ladder a b c over d e f with the middle rung weighted d. Stubs LT at a,
/// RT at c, LB at d, RB at f.
inline Gadget make_skew_crossover(Mode mode) {
  detail::GadgetBuilder b(std::string("skew-crossover-") + mode_name(mode));
  for (const char* s : {"a", "b", "c", "d", "e", "f"}) b.vertex(s);
  b.edge("a", "b");
  b.edge("b", "c");
  b.edge("d", "e");
  b.edge("e", "f");
  b.edge("a", "d");
  b.edge("b", "e", mode_weight(mode));
  b.edge("c", "f");
  b.stub("LT", "a");
  b.stub("RT", "c");
  b.stub("LB", "d");
  b.stub("RB", "f");
  b.pair("LT", "LB");
  b.pair("RT", "RB");
  return b.done();
}

/// Stubs L1 L2 sit on vertex L, R1 R2 on vertex R; R2 carries the -d factor
/// (multiedge variant: no factor, a -d arc inside instead).
inline Gadget make_iff(Mode mode, bool allow_multiedges = false) {
  const Rational d = mode_weight(mode);
  if (allow_multiedges) {
    detail::GadgetBuilder b(std::string("iff-multiedge-") + mode_name(mode));
    for (const char* s : {"L", "m1", "m2", "R"}) b.vertex(s);
    b.edge("L", "m1");
    b.edge("L", "m1");
    b.edge("m1", "m2");
    b.edge("m1", "m2", -d);
    b.edge("m2", "R");
    b.edge("m2", "R");
    b.stub("L1", "L");
    b.stub("L2", "L");
    b.stub("R1", "R");
    b.stub("R2", "R");
    b.pair("L1", "L2");
    b.pair("R1", "R2");
    return b.done();
  }
  detail::GadgetBuilder b(std::string("iff-") + mode_name(mode));
  for (const char* s : {"a", "b", "c", "d", "e", "f", "L", "R"}) b.vertex(s);
  b.edge("a", "b");
  b.edge("b", "c");
  b.edge("d", "e");
  b.edge("e", "f");
  b.edge("a", "d");
  b.edge("b", "e", d);
  b.edge("c", "f");
  b.edge("L", "d");
  b.edge("L", "f");
  b.edge("R", "c");
  b.edge("R", "a", -1);
  b.stub("L1", "L");
  b.stub("L2", "L");
  b.stub("R1", "R");
  b.stub("R2", "R", -d);
  b.pair("L1", "L2");
  b.pair("R1", "R2");
  return b.done();
}

/// Literal edges: a is a loop at v4, b is v3v6, c is a loop at v7.
inline Gadget make_clause_gadget(Mode mode) {
  const Rational d = mode_weight(mode);
  detail::GadgetBuilder b(std::string("clause-") + mode_name(mode));
  for (const char* s : {"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"}) b.vertex(s);
  b.edge("v1", "v2");
  b.edge("v1", "v3");
  b.edge("v1", "v4");
  b.edge("v1", "v7");
  b.edge("v2", "v3");
  b.edge("v2", "v5");
  int lb = b.edge("v3", "v6");
  b.edge("v4", "v8");
  int la = b.edge("v4", "v4");
  b.edge("v5", "v6", -d);
  b.edge("v5", "v8");
  b.edge("v6", "v8");
  b.edge("v7", "v8");
  int lc = b.edge("v7", "v7");
  b.selector("a", la);
  b.selector("b", lb);
  b.selector("c", lc);
  return b.done();
}

struct IffCore {
  int L = -1, R = -1;
  int a = -1, c = -1, d = -1, f = -1;  // crossover corners
};

/// Adds the eight-vertex iff core to g: a skew crossover plus L joined to its
/// bottom corners and R joined to its top corners. An existing vertex may
/// serve as L or R. The four stubs are left to the caller.
inline IffCore add_iff_core(Multigraph& g, std::vector<std::string>* labels, Mode mode, const std::string& prefix,
                            int L = -1, int R = -1) {
  const Gadget x = make_skew_crossover(mode);
  std::vector<int> map(x.graph.vertex_count());
  for (int v = 0; v < x.graph.vertex_count(); ++v) {
    map[v] = g.add_vertex();
    if (labels) labels->push_back(prefix + x.vertex_labels[v]);
  }
  for (const auto& e : x.graph.edges()) g.add_edge(map[e.u], map[e.v], e.w);
  IffCore k;
  k.a = map[0];
  k.c = map[2];
  k.d = map[3];
  k.f = map[5];
  if (L < 0) {
    L = g.add_vertex();
    if (labels) labels->push_back(prefix + "L");
  }
  if (R < 0) {
    R = g.add_vertex();
    if (labels) labels->push_back(prefix + "R");
  }
  k.L = L;
  k.R = R;
  g.add_edge(k.L, k.d);
  g.add_edge(k.L, k.f);
  g.add_edge(k.R, k.c);
  g.add_edge(k.R, k.a, -1);
  return k;
}

/// Hub with one loop per polarity. With k > 0 occurrences the loop runs
/// through k occurrence vertices x1..xk (or ~x1..), each meant to become the
/// L vertex of an iff core. With k = 0 the loop is synchronized with itself.
/// Selectors "x" and "~x" mark the loop edge leaving the hub.
inline Gadget make_variable_gadget(int occurrences_pos, int occurrences_neg, Mode mode = Mode::det) {
  detail::GadgetBuilder b(std::string("variable-") + mode_name(mode));
  b.vertex("hub");
  std::vector<std::pair<std::string, int>> self_sync;
  auto loop = [&](const std::string& tag, int k) {
    if (k == 0) {
      b.vertex(tag + ".L");
      b.vertex(tag + ".R");
      b.selector(tag, b.edge("hub", tag + ".L"));
      b.edge(tag + ".L", tag + ".R");
      b.edge(tag + ".R", "hub", -mode_weight(mode));
      self_sync.emplace_back(tag, b[tag + ".L"]);
      return;
    }
    std::string prev = "hub";
    for (int i = 1; i <= k; ++i) {
      std::string s = tag + std::to_string(i);
      b.vertex(s);
      int e = b.edge(prev, s);
      if (i == 1) b.selector(tag, e);
      prev = s;
    }
    b.edge(prev, "hub");
  };
  loop("x", occurrences_pos);
  loop("~x", occurrences_neg);
  Gadget g = b.done();
  for (const auto& [tag, L] : self_sync) add_iff_core(g.graph, &g.vertex_labels, mode, tag + ".", L, L + 1);
  return g;
}

/// Outer 8-cycle v1..v8, inner 4-cycle w1..w4, spokes from the even outer
/// vertices. Corner stubs BL BR TR TL on v1 v3 v5 v7.
inline Gadget make_auxiliary_gadget() {
  detail::GadgetBuilder b("auxiliary");
  for (int i = 1; i <= 8; ++i) b.vertex("v" + std::to_string(i));
  for (int i = 1; i <= 4; ++i) b.vertex("w" + std::to_string(i));
  for (int i = 1; i <= 8; ++i) b.edge("v" + std::to_string(i), "v" + std::to_string(i % 8 + 1));
  for (int i = 1; i <= 4; ++i) b.edge("w" + std::to_string(i), "w" + std::to_string(i % 4 + 1));
  for (int i = 1; i <= 4; ++i) b.edge("v" + std::to_string(2 * i), "w" + std::to_string(i));
  b.stub("BL", "v1");
  b.stub("BR", "v3");
  b.stub("TR", "v5");
  b.stub("TL", "v7");
  b.pair("BL", "BR");
  b.pair("TR", "TL");
  return b.done();
}

/// Square v1 v2 v3 v4 with both diagonals, v1v3 weighted -1; stubs A at v1
/// and B at v4.
inline Gadget make_null_edge() {
  detail::GadgetBuilder b("null-edge");
  for (const char* s : {"v1", "v2", "v3", "v4"}) b.vertex(s);
  b.edge("v1", "v2");
  b.edge("v2", "v3");
  b.edge("v3", "v4");
  b.edge("v1", "v3", -1);
  b.edge("v2", "v4");
  b.stub("A", "v1");
  b.stub("B", "v4");
  return b.done();
}

namespace detail {

/// Copies gadget vertices and edges into host with a label prefix; returns
/// the host id of every gadget vertex.
inline std::vector<int> splice_copy(Multigraph& host, std::vector<std::string>* labels, const Gadget& gd,
                                    const std::string& prefix) {
  std::vector<int> map(gd.graph.vertex_count());
  for (int v = 0; v < gd.graph.vertex_count(); ++v) {
    map[v] = host.add_vertex();
    if (labels) labels->push_back(prefix + gd.vertex_labels[v]);
  }
  for (const auto& e : gd.graph.edges()) host.add_edge(map[e.u], map[e.v], e.w);
  return map;
}

inline int stub_vertex(const Gadget& gd, const std::string& id) {
  for (const auto& s : gd.external)
    if (s.id == id) return s.vertex;
  throw Error(Errc::ParseError, "gadget " + gd.name + " has no stub " + id);
}

}  // namespace detail

/// Four auxiliary boxes in a ring (ring edges -1/2) with null edges on the
/// left and right sides. Stubs BL BR TR TL.
inline Gadget make_degree4_vertex_gadget() {
  const Gadget aux = make_auxiliary_gadget();
  const Gadget nul = make_null_edge();
  Gadget g;
  g.name = "degree4-vertex";
  std::map<std::string, std::vector<int>> box;
  for (const char* pos : {"BL", "BR", "TR", "TL"})
    box[pos] = detail::splice_copy(g.graph, &g.vertex_labels, aux, std::string(pos) + ".");
  auto corner = [&](const std::string& b, const std::string& c) { return box[b][detail::stub_vertex(aux, c)]; };
  const Rational half(-1, 2);
  g.graph.add_edge(corner("BL", "BR"), corner("BR", "BL"), half);
  g.graph.add_edge(corner("BR", "TR"), corner("TR", "BR"), half);
  g.graph.add_edge(corner("TR", "TL"), corner("TL", "TR"), half);
  g.graph.add_edge(corner("TL", "BL"), corner("BL", "TL"), half);
  auto null_between = [&](int x, int y, const std::string& tag) {
    auto m = detail::splice_copy(g.graph, &g.vertex_labels, nul, tag);
    g.graph.add_edge(x, m[detail::stub_vertex(nul, "A")]);
    g.graph.add_edge(m[detail::stub_vertex(nul, "B")], y);
  };
  null_between(corner("BL", "TR"), corner("TL", "BR"), "null-left.");
  null_between(corner("BR", "TL"), corner("TR", "BL"), "null-right.");
  for (const char* pos : {"BL", "BR", "TR", "TL"}) g.external.push_back(Stub{pos, corner(pos, pos), 1});
  g.base_pairing = {{"BL", "BR"}, {"TR", "TL"}};
  return g;
}

/// A single vertex with four stubs, for comparing against the gadget above.
inline Gadget make_plain_degree4_vertex() {
  detail::GadgetBuilder b("plain-degree4-vertex");
  b.vertex("x");
  for (const char* s : {"BL", "BR", "TR", "TL"}) b.stub(s, "x");
  b.pair("BL", "BR");
  b.pair("TR", "TL");
  return b.done();
}

inline Gadget builtin_gadget(const std::string& name, Mode mode) {
  if (name == "skew-crossover") return make_skew_crossover(mode);
  if (name == "iff") return make_iff(mode, false);
  if (name == "iff-multiedge") return make_iff(mode, true);
  if (name == "clause") return make_clause_gadget(mode);
  if (name == "variable") return make_variable_gadget(0, 0, mode);
  if (name == "auxiliary") return make_auxiliary_gadget();
  if (name == "null-edge") return make_null_edge();
  if (name == "degree4-vertex") return make_degree4_vertex_gadget();
  throw Error(Errc::ParseError, "unknown builtin gadget '" + name + "'");
}

}  // namespace ucount
