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

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "ucount/graph.hpp"
#include "ucount/planarity.hpp"

namespace ucount {

struct EmbeddedGraph {
  std::string name;
  Multigraph graph;
  RotationSystem rotation;
};

namespace named {

namespace detail {

inline EmbeddedGraph from_drawing(std::string name, const std::vector<std::pair<double, double>>& xy,
                                  const std::vector<std::pair<int, int>>& edges) {
  EmbeddedGraph eg;
  eg.name = std::move(name);
  eg.graph = Multigraph(static_cast<int>(xy.size()));
  for (auto [u, v] : edges) eg.graph.add_edge(u, v);
  eg.rotation = rotation_from_coordinates(eg.graph, xy);
  return eg;
}

inline std::pair<double, double> polar(double r, int i, int k) {
  const double t = 2.0 * M_PI * i / k + 0.1;
  return {r * std::cos(t), r * std::sin(t)};
}

}  // namespace detail

inline EmbeddedGraph cycle(int n) {
  std::vector<std::pair<double, double>> xy;
  std::vector<std::pair<int, int>> ed;
  for (int i = 0; i < n; ++i) {
    xy.push_back(detail::polar(1, i, n));
    ed.emplace_back(i, (i + 1) % n);
  }
  return detail::from_drawing("C" + std::to_string(n), xy, ed);
}

inline EmbeddedGraph k4() {
  return detail::from_drawing("K4", {{0, 0}, {0, 1}, {-0.87, -0.5}, {0.87, -0.5}},
                              {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}});
}

/// k-gon prism: inner ring 0..k-1, outer ring k..2k-1.
inline EmbeddedGraph prism(int k) {
  std::vector<std::pair<double, double>> xy;
  std::vector<std::pair<int, int>> ed;
  for (int i = 0; i < k; ++i) xy.push_back(detail::polar(1, i, k));
  for (int i = 0; i < k; ++i) xy.push_back(detail::polar(2, i, k));
  for (int i = 0; i < k; ++i) {
    ed.emplace_back(i, (i + 1) % k);
    ed.emplace_back(k + i, k + (i + 1) % k);
    ed.emplace_back(i, k + i);
  }
  std::string name = k == 3 ? "triangle-prism" : k == 4 ? "cube" : k == 6 ? "hexagonal-prism" : "prism" + std::to_string(k);
  return detail::from_drawing(name, xy, ed);
}

inline EmbeddedGraph cube() { return prism(4); }

/// Hub 0 joined to the rim 1..k.
inline EmbeddedGraph wheel(int k) {
  std::vector<std::pair<double, double>> xy{{0, 0}};
  std::vector<std::pair<int, int>> ed;
  for (int i = 0; i < k; ++i) {
    xy.push_back(detail::polar(1, i, k));
    ed.emplace_back(0, 1 + i);
    ed.emplace_back(1 + i, 1 + (i + 1) % k);
  }
  return detail::from_drawing("W" + std::to_string(k), xy, ed);
}

/// Two triangles sharing vertex 0.
inline EmbeddedGraph bowtie() {
  return detail::from_drawing("bowtie", {{0, 0}, {-1, 1}, {-1, -1}, {1, 1}, {1, -1}},
                              {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
}

/// u=0 and v=1 both joined to a,b,c,d (2..5), plus the edges ab and cd.
/// Two vertices of degree 4, the rest of degree 3.
inline EmbeddedGraph double_fan() {
  return detail::from_drawing("double-fan", {{-1, 0}, {1, 0}, {0, 1.5}, {0, 0.5}, {0, -0.5}, {0, -1.5}},
                              {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {4, 5}});
}

/// K5 with the rotation of a regular pentagon drawing; not an embedding.
inline EmbeddedGraph k5() {
  std::vector<std::pair<double, double>> xy;
  std::vector<std::pair<int, int>> ed;
  for (int i = 0; i < 5; ++i) xy.push_back(detail::polar(1, i, 5));
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) ed.emplace_back(i, j);
  return detail::from_drawing("K5", xy, ed);
}

}  // namespace named
}  // namespace ucount
