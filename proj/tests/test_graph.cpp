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
#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "ucount/graph.hpp"
#include "ucount/io.hpp"
#include "ucount/named_graphs.hpp"
#include "ucount/planarity.hpp"

namespace {

using namespace ucount;

TEST(Rational, ParsesAndNormalises) {
  EXPECT_EQ(parse_rational("-2/4"), Rational(-1, 2));
  EXPECT_EQ(to_string(parse_rational("-6/3")), "-2");
  EXPECT_THROW(parse_rational("6/-3"), Error);
  EXPECT_EQ(parse_rational(" 7 "), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("0.5"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(Multigraph, DegreeSumIsTwiceEdgeCount) {
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    Multigraph g(6);
    std::uniform_int_distribution<int> v(0, 5);
    for (int i = 0; i < 10; ++i) g.add_edge(v(rng), v(rng));
    int sum = 0;
    for (int x = 0; x < g.vertex_count(); ++x) sum += g.degree(x);
    EXPECT_EQ(sum, 2 * g.edge_count());
  }
}

TEST(Multigraph, LoopCountsTwice) {
  Multigraph g(1);
  g.add_edge(0, 0);
  EXPECT_EQ(g.degree(0), 2);
  EXPECT_TRUE(g.has_loops());
  EXPECT_FALSE(g.is_simple());
}

TEST(Multigraph, RejectsUnknownEndpoint) { EXPECT_THROW(Multigraph(2).add_edge(0, 2), Error); }

TEST(SkewAdjacency, SingleEdge) {
  Multigraph g(2);
  g.add_edge(0, 1, 1, Orient::uv);
  auto a = build_skew_adjacency(g);
  EXPECT_EQ(a.at(0, 1), 1);
  EXPECT_EQ(a.at(1, 0), -1);
  EXPECT_EQ(a.at(0, 0), 0);
}

TEST(SkewAdjacency, EmptyGraphIsZero) {
  auto a = build_skew_adjacency(Multigraph(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(a.at(i, j), 0);
}

TEST(SkewAdjacency, OrientedFourCycle) {
  Multigraph g(4);
  for (int i = 0; i < 4; ++i) g.add_edge(i, (i + 1) % 4, 1, Orient::uv);
  auto a = build_skew_adjacency(g);
  EXPECT_EQ(a.at(0, 1), 1);
  EXPECT_EQ(a.at(1, 2), 1);
  EXPECT_EQ(a.at(2, 3), 1);
  EXPECT_EQ(a.at(3, 0), 1);
  EXPECT_EQ(a.at(0, 3), -1);
  EXPECT_EQ(a.at(0, 2), 0);
  EXPECT_TRUE(a.is_skew());
}

TEST(SkewAdjacency, Errors) {
  Multigraph loop(1);
  loop.add_edge(0, 0, 1, Orient::uv);
  try {
    build_skew_adjacency(loop);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::LoopPresent);
  }
  Multigraph par(2);
  par.add_edge(0, 1, 1, Orient::uv);
  par.add_edge(0, 1, 1, Orient::uv);
  try {
    build_skew_adjacency(par);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::MultiEdgePresent);
  }
  Multigraph un(2);
  un.add_edge(0, 1);
  try {
    build_skew_adjacency(un);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnorientedEdge);
  }
}

TEST(SkewAdjacency, AlwaysSkewOnRandomOrientations) {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    auto eg = corpus::random_subcubic(10, rng);
    for (int e = 0; e < eg.graph.edge_count(); ++e) eg.graph.set_orientation(e, rng() % 2 ? Orient::uv : Orient::vu);
    EXPECT_TRUE(build_skew_adjacency(eg.graph).is_skew());
  }
}

TEST(EdgeComplement, Examples) {
  auto k4 = named::k4().graph;
  // Hamiltonian cycle 0-1-2-3-0: edges 0 (01), 3 (12), 4 (23), 2 (03).
  auto m = edge_complement(k4, {0, 3, 4, 2});
  EXPECT_EQ(m, (std::vector<int>{1, 5}));
  EXPECT_TRUE(edge_complement(k4, {0, 1, 2, 3, 4, 5}).empty());
  EXPECT_EQ(edge_complement(k4, {}).size(), 6u);
  try {
    edge_complement(k4, {6});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownEdgeId);
  }
}

TEST(EdgeComplement, Involution) {
  std::mt19937 rng(3);
  auto g = named::prism(5).graph;
  for (int t = 0; t < 50; ++t) {
    std::vector<int> s;
    for (int e = 0; e < g.edge_count(); ++e)
      if (rng() % 2) s.push_back(e);
    EXPECT_EQ(edge_complement(g, edge_complement(g, s)), s);
  }
}

TEST(WeightProduct, Examples) {
  EXPECT_EQ(weight_product(named::k4().graph), 1);
  Multigraph g(3);
  g.add_edge(0, 1, -1);
  g.add_edge(1, 2, Rational(-1, 2));
  EXPECT_EQ(weight_product(g), Rational(1, 2));
  EXPECT_EQ(weight_product(Multigraph(4)), 1);
}

TEST(Embedding, FaceCounts) {
  EXPECT_EQ(validate_embedding(named::k4().graph, named::k4().rotation).size(), 4);
  EXPECT_EQ(validate_embedding(named::cycle(4).graph, named::cycle(4).rotation).size(), 2);
  EXPECT_EQ(validate_embedding(named::cube().graph, named::cube().rotation).size(), 6);
}

TEST(Embedding, K5IsRejected) {
  auto k5 = named::k5();
  try {
    validate_embedding(k5.graph, k5.rotation);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotPlanarEmbedding);
  }
  EXPECT_FALSE(embed_planar(k5.graph).has_value());
}

TEST(Embedding, AcceptsBundledAndRejectsCorrupted) {
  for (auto eg : {named::k4(), named::prism(3), named::cube(), named::prism(5), named::prism(6)}) {
    SCOPED_TRACE(eg.name);
    auto fs = validate_embedding(eg.graph, eg.rotation);
    EXPECT_EQ(eg.graph.vertex_count() - eg.graph.edge_count() + fs.size(), 2);
    // Swapping two darts at a degree-3 vertex mirrors its local rotation.
    auto bad = eg.rotation;
    std::swap(bad.order[0][0], bad.order[0][1]);
    EXPECT_THROW(validate_embedding(eg.graph, bad), Error);
  }
}

TEST(Embedding, IncompleteRotation) {
  auto eg = named::k4();
  eg.rotation.order[2].pop_back();
  try {
    validate_embedding(eg.graph, eg.rotation);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::IncompleteRotation);
  }
}

TEST(Embedding, BoyerMyrvoldOutputValidates) {
  std::mt19937 rng(9);
  for (int t = 0; t < 20; ++t) {
    auto eg = corpus::random_subcubic(12, rng);
    EXPECT_NO_THROW(validate_embedding(eg.graph, eg.rotation));
  }
  Multigraph multi(2);
  multi.add_edge(0, 1);
  multi.add_edge(0, 1);
  multi.add_edge(1, 1);
  auto rot = embed_planar(multi);
  ASSERT_TRUE(rot.has_value());
  EXPECT_EQ(validate_embedding(multi, *rot).size(), 3);
}

TEST(Embedding, DeclaredOuterFace) {
  auto eg = named::cube();
  eg.rotation.outer_dart = 5;
  auto fs = validate_embedding(eg.graph, eg.rotation);
  EXPECT_EQ(fs.outer[0], fs.face_of[5]);
}

TEST(Json, GraphRoundTrip) {
  std::mt19937 rng(21);
  auto eg = corpus::random_subcubic(9, rng);
  eg.graph.set_orientation(0, Orient::vu);
  eg.rotation.outer_dart = 3;
  auto back = graph_from_json(Json::parse(graph_to_json(eg.graph, &eg.rotation).dump()));
  ASSERT_EQ(back.graph.edge_count(), eg.graph.edge_count());
  for (int e = 0; e < eg.graph.edge_count(); ++e) {
    EXPECT_EQ(back.graph.edge(e).u, eg.graph.edge(e).u);
    EXPECT_EQ(back.graph.edge(e).w, eg.graph.edge(e).w);
    EXPECT_EQ(back.graph.edge(e).dir, eg.graph.edge(e).dir);
  }
  EXPECT_EQ(back.rotation.order, eg.rotation.order);
  EXPECT_EQ(back.rotation.outer_dart, eg.rotation.outer_dart);
}

TEST(Json, RejectsMalformed) {
  EXPECT_THROW(graph_from_json(Json::parse(R"({"vertices":[0,1]})")), Error);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"vertices":[0,1],"edges":[{"u":0,"v":2}]})")), Error);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"vertices":[0,1],"edges":[{"u":0,"v":1,"w":0.5}]})")), Error);
  try {
    graph_from_json(Json::parse(R"({"vertices":[0,1],"edges":[{"u":0,"v":1}],"rotation":{"0":["0u"],"1":["4v"]}})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownEdgeId);
  }
}

TEST(Json, SkewMatrixInput) {
  auto a = matrix_from_json(Json::parse(R"([["0","1/2"],["-1/2","0"]])"));
  EXPECT_EQ(a.at(0, 1), Rational(1, 2));
  EXPECT_THROW(matrix_from_json(Json::parse(R"([["0","1"],["1","0"]])")), Error);
  EXPECT_THROW(matrix_from_json(Json::parse(R"([["1","1"],["-1","0"]])")), Error);
}

}  // namespace
