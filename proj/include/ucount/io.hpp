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

// JSON forms of graphs, gadgets, signature tables and matrices.
//
//   {"vertices":[0,1,...],
//    "edges":[{"id":0,"u":0,"v":1,"w":"-1/2","dir":"uv"|"vu"|null}],
//    "rotation":{"0":["0u","3v",...]}, "outer":"0u"}
//
// A rotation entry "<id>u" is the end of edge <id> at its u endpoint.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ucount/graph.hpp"
#include "ucount/oracle.hpp"
#include "ucount/reduce.hpp"

namespace ucount {

using Json = nlohmann::ordered_json;

namespace detail {

inline Rational json_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(Errc::ParseError, "weight must be a rational string or an integer");
}

inline std::string dart_ref(int d) { return std::to_string(dart_edge(d)) + ((d & 1) ? "v" : "u"); }

inline int parse_dart_ref(const std::string& s, int m) {
  if (s.size() < 2 || (s.back() != 'u' && s.back() != 'v'))
    throw Error(Errc::IncompleteRotation, "bad edge-end reference '" + s + "'");
  int e;
  try {
    size_t used = 0;
    e = std::stoi(s.substr(0, s.size() - 1), &used);
    if (used != s.size() - 1) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw Error(Errc::IncompleteRotation, "bad edge-end reference '" + s + "'");
  }
  if (e < 0 || e >= m) throw Error(Errc::UnknownEdgeId, "edge-end reference '" + s + "'");
  return dart_of(e, s.back() == 'v' ? 1 : 0);
}

}  // namespace detail

struct GraphFile {
  Multigraph graph;
  RotationSystem rotation;  // empty when absent
};

inline Json graph_to_json(const Multigraph& g, const RotationSystem* rot = nullptr) {
  Json j;
  j["vertices"] = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back(v);
  j["edges"] = Json::array();
  for (const auto& e : g.edges()) {
    Json je{{"id", e.id}, {"u", e.u}, {"v", e.v}, {"w", to_string(e.w)}};
    je["dir"] = e.dir == Orient::uv ? Json("uv") : e.dir == Orient::vu ? Json("vu") : Json(nullptr);
    j["edges"].push_back(je);
  }
  if (rot && !rot->empty()) {
    Json r = Json::object();
    for (int v = 0; v < g.vertex_count(); ++v) {
      Json list = Json::array();
      for (int d : rot->order[v]) list.push_back(detail::dart_ref(d));
      r[std::to_string(v)] = list;
    }
    j["rotation"] = r;
    if (rot->outer_dart) j["outer"] = detail::dart_ref(*rot->outer_dart);
  }
  return j;
}

inline GraphFile graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw Error(Errc::ParseError, "graph JSON needs 'vertices' and 'edges'");
  GraphFile gf;
  const auto& vs = j.at("vertices");
  if (!vs.is_array()) throw Error(Errc::ParseError, "'vertices' must be an array");
  for (size_t i = 0; i < vs.size(); ++i) {
    if (!vs[i].is_number_integer() || vs[i].get<long>() != static_cast<long>(i))
      throw Error(Errc::ParseError, "vertices must be 0..n-1 in order");
    gf.graph.add_vertex();
  }
  const auto& es = j.at("edges");
  if (!es.is_array()) throw Error(Errc::ParseError, "'edges' must be an array");
  for (size_t i = 0; i < es.size(); ++i) {
    const auto& e = es[i];
    try {
      if (e.contains("id") && e.at("id").get<long>() != static_cast<long>(i))
        throw Error(Errc::ParseError, "edge ids must be 0..m-1 in order");
      Orient dir = Orient::none;
      if (e.contains("dir") && !e.at("dir").is_null()) {
        auto s = e.at("dir").get<std::string>();
        if (s == "uv") dir = Orient::uv;
        else if (s == "vu") dir = Orient::vu;
        else throw Error(Errc::ParseError, "dir must be \"uv\", \"vu\" or null");
      }
      Rational w = e.contains("w") ? detail::json_rational(e.at("w")) : Rational(1);
      gf.graph.add_edge(e.at("u").get<int>(), e.at("v").get<int>(), w, dir);
    } catch (const Json::exception& ex) {
      throw Error(Errc::ParseError, std::string("edge ") + std::to_string(i) + ": " + ex.what());
    }
  }
  if (j.contains("rotation") && !j.at("rotation").is_null()) {
    const auto& r = j.at("rotation");
    if (!r.is_object()) throw Error(Errc::ParseError, "'rotation' must be an object");
    const int m = gf.graph.edge_count();
    gf.rotation.order.assign(gf.graph.vertex_count(), {});
    for (int v = 0; v < gf.graph.vertex_count(); ++v) {
      auto key = std::to_string(v);
      if (!r.contains(key)) {
        if (gf.graph.degree(v) == 0) continue;
        throw Error(Errc::IncompleteRotation, "no rotation for vertex " + key);
      }
      for (const auto& ref : r.at(key)) gf.rotation.order[v].push_back(detail::parse_dart_ref(ref.get<std::string>(), m));
    }
    if (j.contains("outer") && !j.at("outer").is_null())
      gf.rotation.outer_dart = detail::parse_dart_ref(j.at("outer").get<std::string>(), m);
  }
  return gf;
}

inline Json gadget_to_json(const Gadget& gd) {
  Json j = graph_to_json(gd.graph);
  j["name"] = gd.name;
  j["external"] = Json::array();
  for (const auto& s : gd.external) {
    Json js{{"stub", s.id}, {"vertex", s.vertex}};
    if (s.weight != 1) js["w"] = to_string(s.weight);
    j["external"].push_back(js);
  }
  j["base_pairing"] = Json::array();
  for (const auto& [a, b] : gd.base_pairing) j["base_pairing"].push_back({a, b});
  if (!gd.selectors.empty()) {
    j["selectors"] = Json::array();
    for (const auto& s : gd.selectors) j["selectors"].push_back({{"name", s.name}, {"edge", s.edge}});
  }
  if (!gd.vertex_labels.empty()) j["labels"] = gd.vertex_labels;
  return j;
}

inline Gadget gadget_from_json(const Json& j) {
  Gadget gd;
  gd.graph = graph_from_json(j).graph;
  gd.name = j.value("name", std::string("gadget"));
  try {
    if (j.contains("external"))
      for (const auto& s : j.at("external")) {
        int v = s.at("vertex").get<int>();
        if (v < 0 || v >= gd.graph.vertex_count()) throw Error(Errc::ParseError, "stub vertex out of range");
        gd.external.push_back(Stub{s.at("stub").get<std::string>(), v,
                                   s.contains("w") ? detail::json_rational(s.at("w")) : Rational(1)});
      }
    if (j.contains("base_pairing"))
      for (const auto& p : j.at("base_pairing")) {
        if (!p.is_array() || p.size() != 2) throw Error(Errc::ParseError, "base_pairing entries are pairs");
        gd.base_pairing.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
      }
    if (j.contains("selectors"))
      for (const auto& s : j.at("selectors")) {
        int e = s.at("edge").get<int>();
        if (e < 0 || e >= gd.graph.edge_count()) throw Error(Errc::UnknownEdgeId, std::to_string(e));
        gd.selectors.push_back(Selector{s.at("name").get<std::string>(), e});
      }
    if (j.contains("labels")) gd.vertex_labels = j.at("labels").get<std::vector<std::string>>();
  } catch (const Json::exception& ex) {
    throw Error(Errc::ParseError, ex.what());
  }
  return gd;
}

inline Json signature_to_json(const SignatureTable& t) {
  Json j{{"flavor", flavor_name(t.flavor)}, {"entries", Json::array()}};
  for (const auto& [k, v] : t.entries) j["entries"].push_back({{"stubs", k}, {"value", to_string(v)}});
  return j;
}

inline SignatureTable signature_from_json(const Json& j) {
  SignatureTable t;
  try {
    auto f = j.at("flavor").get<std::string>();
    if (f != "perm" && f != "det") throw Error(Errc::ParseError, "flavor must be perm or det");
    t.flavor = f == "perm" ? Flavor::permanental : Flavor::determinantal;
    for (const auto& e : j.at("entries")) {
      auto key = e.at("stubs").get<std::vector<std::string>>();
      std::sort(key.begin(), key.end());
      Rational v = detail::json_rational(e.at("value"));
      if (v != 0) t.entries[key] = v;
    }
  } catch (const Json::exception& ex) {
    throw Error(Errc::ParseError, ex.what());
  }
  return t;
}

inline SkewMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "matrix must be an array of rows");
  const int n = static_cast<int>(j.size());
  std::vector<std::vector<Rational>> m(n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != n) throw Error(Errc::ParseError, "matrix must be square");
    for (int k = 0; k < n; ++k) m[i].push_back(detail::json_rational(j[i][k]));
  }
  SkewMatrix a(n);
  for (int i = 0; i < n; ++i) {
    if (m[i][i] != 0) throw Error(Errc::ParseError, "diagonal entry is nonzero");
    for (int k = i + 1; k < n; ++k) {
      if (m[i][k] != -m[k][i]) throw Error(Errc::ParseError, "matrix is not skew-symmetric");
      a.set(i, k, m[i][k]);
    }
  }
  return a;
}

inline Json provenance_to_json(const CompiledReduction& cr) {
  return Json{{"mode", mode_name(cr.mode)},
              {"scale", to_string(cr.scale)},
              {"crossings", cr.crossings},
              {"vertices", cr.vertex_origin},
              {"edges", cr.edge_origin}};
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& ex) {
    throw Error(Errc::ParseError, path + ": " + ex.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path);
  out << text;
}

}  // namespace ucount
