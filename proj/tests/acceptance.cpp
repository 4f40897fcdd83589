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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. UCOUNT_ACCEPT_ENGINE=enumeration switches the compiled
// formula checks to pruned cover enumeration.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "ucount/fkt.hpp"
#include "ucount/gadgets.hpp"
#include "ucount/named_graphs.hpp"
#include "ucount/oracle.hpp"
#include "ucount/pfaffian.hpp"
#include "ucount/reduce.hpp"
#include "ucount/semipfaffian.hpp"

namespace {

using namespace ucount;
using Clock = std::chrono::steady_clock;
using Key = std::vector<std::string>;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(const std::string& why) {
    pass = false;
    if (failures.size() < 5) failures.push_back(why);
  }
};

// 1. Golden signature tables.

Outcome golden_signatures() {
  Outcome o;
  struct Golden {
    std::string name;
    std::function<Gadget()> make;
    Flavor flavor;
    std::vector<std::string> names;
    std::map<Key, Rational> table;
    long covers = -1;
  };
  const Key cross{"LB", "LT", "RB", "RT"}, box{"BL", "BR", "TL", "TR"}, iff{"L1", "L2", "R1", "R2"};
  std::map<Key, Rational> clause_perm, clause_det, deg4;
  for (int m = 1; m < 8; ++m) {
    Key k;
    for (int i = 0; i < 3; ++i)
      if (m >> i & 1) k.push_back(std::string(1, "abc"[i]));
    clause_perm[k] = 1;
    clause_det[k] = -1;
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) deg4[{box[i], box[j]}] = -4;
  std::vector<Golden> goldens{
      {"skew-crossover/perm", [] { return make_skew_crossover(Mode::perm); }, Flavor::permanental, cross,
       {{{}, 1}, {cross, -1}, {{"LB", "RT"}, -1}, {{"LT", "RB"}, -1}}},
      {"skew-crossover/det", [] { return make_skew_crossover(Mode::det); }, Flavor::determinantal, cross,
       {{{}, -1}, {cross, 1}, {{"LB", "RT"}, 1}, {{"LT", "RB"}, 1}}},
      {"iff/perm", [] { return make_iff(Mode::perm); }, Flavor::permanental, iff, {{{}, 1}, {iff, 1}}},
      {"iff/det", [] { return make_iff(Mode::det); }, Flavor::determinantal, iff, {{{}, 1}, {iff, 1}}},
      {"clause/perm", [] { return make_clause_gadget(Mode::perm); }, Flavor::permanental, {"a", "b", "c"},
       clause_perm, 7},
      {"clause/det", [] { return make_clause_gadget(Mode::det); }, Flavor::determinantal, {"a", "b", "c"},
       clause_det, 7},
      {"auxiliary", make_auxiliary_gadget, Flavor::determinantal, box,
       {{{}, 1}, {{"BL", "BR"}, 2}, {{"BR", "TR"}, 2}, {{"TL", "TR"}, 2}, {{"BL", "TL"}, 2}, {{"BL", "TR"}, -2},
        {{"BR", "TL"}, -2}}},
      {"null-edge", make_null_edge, Flavor::determinantal, {"A", "B"}, {{{}, 1}}},
      {"degree4-vertex", make_degree4_vertex_gadget, Flavor::determinantal, box, deg4},
  };
  double slowest = 0;
  for (const auto& g : goldens) {
    auto t0 = Clock::now();
    SignatureTable t = gadget_signature(g.make(), g.flavor);
    double s = seconds_since(t0);
    slowest = std::max(slowest, s);
    if (s >= 1.0) o.fail(g.name + " took " + std::to_string(s) + " s");
    const int k = static_cast<int>(g.names.size());
    for (int m = 0; m < (1 << k); ++m) {
      Key key;
      for (int i = 0; i < k; ++i)
        if (m >> i & 1) key.push_back(g.names[i]);
      std::sort(key.begin(), key.end());
      auto it = g.table.find(key);
      Rational want = it == g.table.end() ? Rational(0) : it->second;
      if (t.at(key) != want)
        o.fail(g.name + " " + key_string(key) + ": got " + to_string(t.at(key)) + ", want " + to_string(want));
    }
    if (g.covers >= 0 && t.cover_count() != g.covers) o.fail(g.name + " cover count " + std::to_string(t.cover_count()));
  }
  o.detail = std::to_string(goldens.size()) + " tables, slowest " + std::to_string(slowest).substr(0, 5) + " s";
  return o;
}

// Corpus for criteria 2 and 8: named subcubic graphs plus random ones.

std::vector<EmbeddedGraph> subcubic_corpus() {
  std::vector<EmbeddedGraph> gs = corpus::named_subcubic();
  std::mt19937 rng(20260101);
  for (int t = 0; t < 24; ++t) gs.push_back(corpus::random_subcubic(6 + t % 11, rng));
  return gs;
}

struct CubicCase {
  std::string name;
  Multigraph graph;
  RotationSystem rotation;
};

// Corpus for criteria 3, 4 and 8: tension-free cubic graphs where the
// semi-Pfaffian search succeeds.
std::vector<CubicCase> cubic_corpus(int* rejected) {
  std::vector<CubicCase> out;
  std::mt19937 rng(20260102);
  std::vector<EmbeddedGraph> base{named::cube(), named::prism(6)};
  for (int t = 0; t < 12; ++t) base.push_back(corpus::random_cubic(8 + 2 * (t % 5), rng));
  *rejected = 0;
  for (const auto& eg : base) {
    bool ok = is_without_tension(eg.graph, eg.rotation).without_tension;
    if (ok) {
      try {
        find_semi_pfaffian(eg.graph, eg.rotation);
      } catch (const Error&) {
        ok = false;
      }
    }
    if (!ok) {
      ++*rejected;
      continue;
    }
    out.push_back({eg.name, eg.graph, eg.rotation});
    for (int r = 0; r < 2; ++r) out.push_back({eg.name + "/reweighted", corpus::reweighted(eg.graph, rng), eg.rotation});
  }
  return out;
}

// 2. FKT equivalence.

Outcome fkt_equivalence(const std::vector<EmbeddedGraph>& gs) {
  Outcome o;
  int random = 0;
  for (const auto& eg : gs) {
    random += eg.name.rfind("random", 0) == 0;
    Rational got = uperm_degree3(eg.graph, eg.rotation);
    Rational want = uperm(eg.graph, Engine::enumeration);
    if (got != want) o.fail(eg.name + ": fkt " + to_string(got) + " vs oracle " + to_string(want));
  }
  o.detail = std::to_string(gs.size()) + " graphs (" + std::to_string(random) + " random weighted)";
  return o;
}

// 3. udet_cubic against the oracle.

Outcome cubic_equivalence(const std::vector<CubicCase>& cs, int rejected) {
  Outcome o;
  bool cube = false, hex = false;
  for (const auto& c : cs) {
    cube |= c.name == "cube";
    hex |= c.name == "hexagonal-prism";
    Rational want = udet(c.graph, Engine::enumeration);
    Rational got = udet_cubic(c.graph, c.rotation);
    if (got != want) o.fail(c.name + ": " + to_string(got) + " vs oracle " + to_string(want));
    if (c.name == "cube" && want != -3) o.fail("cube oracle gives " + to_string(want));
  }
  if (!cube || !hex) o.fail("cube or hexagonal prism missing from corpus");
  o.detail = std::to_string(cs.size()) + " graphs, " + std::to_string(rejected) + " random candidates skipped (tension or no orientation)";
  return o;
}

// 4. f constant on the same corpus.

Outcome f_constancy(const std::vector<CubicCase>& cs) {
  Outcome o;
  for (const auto& c : cs) {
    auto og = find_semi_pfaffian(c.graph, c.rotation);
    auto r = f_constancy_check(og.graph);
    if (!r.constant) o.fail(c.name + ": f is not constant");
  }
  o.detail = std::to_string(cs.size()) + " graphs";
  return o;
}

// 5. Pfaffian core.

Outcome pfaffian_core() {
  Outcome o;
  std::mt19937 rng(20260105);
  int n_checked = 0;
  for (int n : {4, 6, 8, 10})
    for (int t = 0; t < 100; ++t) {
      SkewMatrix a = corpus::random_skew(n, rng);
      Rational pf = pfaffian(a);
      if (pf * pf != determinant(a)) o.fail("Pf^2 != det at n=" + std::to_string(n));
      if (pf != pfaffian_by_definition(a)) o.fail("Pf != definition at n=" + std::to_string(n));
      ++n_checked;
    }
  o.detail = std::to_string(n_checked) + " matrices";
  return o;
}

// 6. End-to-end reduction.

Outcome reduction(Engine engine, double* slowest) {
  Outcome o;
  const std::vector<std::string> formulas{
      "p cnf 1 1\n1 1 1 0\n",           "p cnf 1 1\n1 -1 1 0\n",          "p cnf 1 1\n-1 -1 -1 0\n",
      "p cnf 2 1\n1 2 2 0\n",           "p cnf 2 1\n-1 2 -1 0\n",         "p cnf 3 1\n1 2 3 0\n",
      "p cnf 3 1\n-1 -2 -3 0\n",        "p cnf 3 1\n1 -2 3 0\n",          "p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n",
      "p cnf 2 2\n1 2 2 0\n-1 -2 -2 0\n", "p cnf 2 2\n1 -2 1 0\n2 2 -1 0\n", "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n",
      "p cnf 3 2\n1 -2 3 0\n2 -3 -1 0\n", "p cnf 3 2\n1 1 2 0\n3 3 3 0\n",  "p cnf 2 2\n1 1 1 0\n2 2 2 0\n",
      "p cnf 3 2\n-1 -1 -1 0\n1 2 3 0\n",
  };
  *slowest = 0;
  for (const auto& text : formulas) {
    auto t0 = Clock::now();
    CnfFormula f = parse_dimacs(text);
    long want = static_cast<long>(sat_count(f));
    auto perm = compile(f, Mode::perm);
    Rational up = uperm(perm.graph, engine);
    auto det = compile(f, Mode::det);
    Rational ud = udet(det.graph, engine);
    if (f.clause_count() % 2) ud = -ud;
    std::string tag = to_dimacs(f);
    std::replace(tag.begin(), tag.end(), '\n', ' ');
    if (up != want) o.fail(tag + ": uperm " + to_string(up) + " vs #SAT " + std::to_string(want));
    if (ud != want) o.fail(tag + ": signed udet " + to_string(ud) + " vs #SAT " + std::to_string(want));
    double s = seconds_since(t0);
    *slowest = std::max(*slowest, s);
    if (s > 600) o.fail(tag + ": over 10 min");
  }
  o.detail = std::to_string(formulas.size()) + " formulas, engine " +
             (engine == Engine::frontier ? "frontier-dp" : "enumeration") + ", slowest " +
             std::to_string(*slowest).substr(0, 5) + " s";
  return o;
}

// 7. Cubicization on the bowtie (k = 1) and the double fan (k = 2), by
// pruned enumeration.

Outcome cubicization() {
  const Engine engine = Engine::enumeration;
  Outcome o;
  std::ostringstream ss;
  for (auto [eg, k] : {std::pair{named::bowtie(), 1}, std::pair{named::double_fan(), 2}}) {
    auto t0 = Clock::now();
    auto cr = cubicize(eg.graph, eg.rotation);
    Rational factor = 1;
    for (int i = 0; i < k; ++i) factor *= -4;
    Rational before = udet(eg.graph, engine), after = udet(cr.graph, engine);
    if (after != factor * before)
      o.fail(eg.name + ": " + to_string(after) + " vs " + to_string(factor) + " * " + to_string(before));
    if (seconds_since(t0) > 600) o.fail(eg.name + ": over 10 min");
    ss << eg.name << " " << to_string(after) << " = " << to_string(factor) << "*" << to_string(before) << ", ";
  }
  o.detail = ss.str() + "engine enumeration";
  return o;
}

// 8. Orientation verification.

Outcome orientations(const std::vector<EmbeddedGraph>& gs, const std::vector<CubicCase>& cs) {
  Outcome o;
  int pf = 0, semi = 0;
  for (const auto& eg : gs) {
    if (eg.graph.vertex_count() > 16) continue;
    auto og = pfaffian_orientation(eg.graph, eg.rotation);
    if (auto bad = pfaffian_violation(og.graph)) o.fail(eg.name + ": evenly oriented central cycle");
    ++pf;
  }
  for (auto eg : {named::k4(), named::prism(3), named::cube(), named::prism(6)}) {
    auto og = pfaffian_orientation(eg.graph, eg.rotation);
    if (pfaffian_violation(og.graph)) o.fail(eg.name + ": evenly oriented central cycle");
    ++pf;
  }
  for (const auto& c : cs) {
    if (c.graph.vertex_count() > 16) continue;
    auto og = find_semi_pfaffian(c.graph, c.rotation);
    if (verify_semi_pfaffian(og.graph)) o.fail(c.name + ": 2k-parity rule broken");
    ++semi;
  }
  o.detail = std::to_string(pf) + " Pfaffian and " + std::to_string(semi) + " semi-Pfaffian orientations";
  return o;
}

}  // namespace

int main() {
  Engine engine = Engine::frontier;
  if (const char* e = std::getenv("UCOUNT_ACCEPT_ENGINE"); e && std::string(e) == "enumeration")
    engine = Engine::enumeration;

  struct Criterion {
    int id;
    std::string name;
    double budget;  // seconds
    std::function<Outcome()> run;
  };
  std::vector<EmbeddedGraph> subcubic;
  std::vector<CubicCase> cubic;
  int rejected = 0;
  double slowest_formula = 0;
  auto corpus_t0 = Clock::now();
  subcubic = subcubic_corpus();
  cubic = cubic_corpus(&rejected);
  double corpus_s = seconds_since(corpus_t0);

  std::vector<Criterion> criteria{
      {1, "golden gadget signatures", 9.0, golden_signatures},
      {2, "fkt equals oracle uperm", 60, [&] { return fkt_equivalence(subcubic); }},
      {3, "udet_cubic equals oracle udet", 600, [&] { return cubic_equivalence(cubic, rejected); }},
      {4, "f constant on the cubic corpus", 60, [&] { return f_constancy(cubic); }},
      {5, "pfaffian squared is det, equals definition", 60, pfaffian_core},
      {6, "sat count equals compiled cover sums", 600 * 16, [&] { return reduction(engine, &slowest_formula); }},
      {7, "cubicize multiplies udet by (-4)^k", 1200, cubicization},
      {8, "orientations verified by central cycles", 300, [&] { return orientations(subcubic, cubic); }},
  };

  std::cout << "corpus built in " << std::to_string(corpus_s).substr(0, 5) << " s\n";
  bool all = true;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double s = seconds_since(t0);
    if (s > c.budget) o.fail("took " + std::to_string(s) + " s, budget " + std::to_string(c.budget) + " s");
    all &= o.pass;
    std::cout << "criterion " << c.id << " [" << c.name << "]: " << (o.pass ? "PASS" : "FAIL") << " ("
              << o.detail << "; " << std::to_string(s).substr(0, 6) << " s)\n";
    for (const auto& f : o.failures) std::cout << "    " << f << "\n";
    std::cout.flush();
  }
  return all ? 0 : 1;
}
