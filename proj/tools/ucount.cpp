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

// ucount: counting cycle covers and perfect matchings of small graphs.
//
// Exit codes: 0 ok, 1 verification or golden mismatch, 2 input error,
// 3 resource bound exceeded.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "ucount/fkt.hpp"
#include "ucount/gadgets.hpp"
#include "ucount/io.hpp"
#include "ucount/oracle.hpp"
#include "ucount/pfaffian.hpp"
#include "ucount/planarity.hpp"
#include "ucount/reduce.hpp"
#include "ucount/semipfaffian.hpp"

namespace {

using namespace ucount;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct Options {
  bool json = false;
  int max_vertices = 0;
  double max_seconds = 0;
};

struct Report {
  std::string command;
  Json inputs = Json::array();
  std::string method;
  Json results = Json::object();
  Json verification = Json::object();
  std::vector<std::string> lines;  // human form
  int exit_code = kExitOk;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream ss;
  for (unsigned i = 0; i < len; ++i) ss << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return ss.str();
}

std::string note_input(Report& r, const std::string& path) {
  std::string text = read_file(path);
  r.inputs.push_back({{"path", path}, {"sha256", sha256_hex(text)}});
  return text;
}

Json parse_json_text(const std::string& text, const std::string& path) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& ex) {
    throw Error(Errc::ParseError, path + ": " + ex.what());
  }
}

GraphFile load_graph(Report& r, const std::string& path) {
  return graph_from_json(parse_json_text(note_input(r, path), path));
}

void check_vertex_bound(const Options& o, const Multigraph& g) {
  if (o.max_vertices > 0 && g.vertex_count() > o.max_vertices)
    throw Error(Errc::ResourceLimit, std::to_string(g.vertex_count()) + " vertices exceed --max-vertices " +
                                         std::to_string(o.max_vertices));
}

/// The stored rotation, or a Boyer-Myrvold embedding when the file has none.
RotationSystem rotation_or_embed(const GraphFile& gf) {
  if (!gf.rotation.empty()) return gf.rotation;
  auto rot = embed_planar(gf.graph);
  if (!rot) throw Error(Errc::NotPlanarEmbedding, "graph is not planar");
  return *rot;
}

Engine parse_engine(const std::string& s) { return s == "enumeration" ? Engine::enumeration : Engine::frontier; }

Mode parse_mode(const std::string& s) { return s == "perm" ? Mode::perm : Mode::det; }

std::string cycle_text(const Cycle& c) {
  std::string s;
  for (size_t i = 0; i < c.vertices.size(); ++i) s += (i ? " " : "") + std::to_string(c.vertices[i]);
  return s;
}

Json cycle_json(const Cycle& c) { return Json{{"vertices", c.vertices}, {"edges", c.edges}}; }

// count

struct CountArgs {
  std::string file, quantity = "udet", method = "oracle", engine = "frontier";
  bool cross_check = false, strict = false;
};

Rational oracle_value(const Multigraph& g, const std::string& q, Engine engine) {
  if (q == "udet") return udet(g, engine);
  if (q == "uperm") return uperm(g, engine);
  return perfmatch(g);
}

void cmd_count(const CountArgs& a, const Options& o, Report& r) {
  GraphFile gf = load_graph(r, a.file);
  r.method = a.method;
  Rational value;
  if (a.method == "oracle") {
    check_vertex_bound(o, gf.graph);
    value = oracle_value(gf.graph, a.quantity, parse_engine(a.engine));
  } else if (a.method == "fkt") {
    if (a.quantity == "udet") throw Error(Errc::ParseError, "usage: fkt computes uperm or perfmatch, not udet");
    RotationSystem rot = rotation_or_embed(gf);
    if (a.quantity == "uperm") {
      value = uperm_degree3(gf.graph, rot, a.strict);
    } else {
      value = perfmatch_via_pfaffian(pfaffian_orientation(gf.graph, rot, true), a.strict);
    }
  } else {
    if (a.quantity != "udet") throw Error(Errc::ParseError, "usage: semipfaffian computes udet only");
    value = udet_cubic(gf.graph, rotation_or_embed(gf));
  }
  r.results[a.quantity] = to_string(value);
  r.lines.push_back(to_string(value));
  if (a.cross_check && a.method != "oracle") {
    check_vertex_bound(o, gf.graph);
    Rational want = oracle_value(gf.graph, a.quantity, parse_engine(a.engine));
    bool ok = want == value;
    r.verification["cross_check"] = ok ? "pass" : "fail";
    r.verification["oracle"] = to_string(want);
    r.lines.push_back(std::string("cross-check: ") + (ok ? "pass" : "FAIL") + " (oracle " + to_string(want) + ")");
    if (!ok) r.exit_code = kExitMismatch;
  }
}

// signature

struct SignatureArgs {
  std::string file, builtin, mode = "det", flavor, golden;
};

void cmd_signature(const SignatureArgs& a, const Options& o, Report& r) {
  if (a.file.empty() == a.builtin.empty()) throw Error(Errc::ParseError, "give exactly one of FILE or --builtin");
  Gadget gd;
  Flavor flavor = Flavor::permanental;
  if (!a.builtin.empty()) {
    gd = builtin_gadget(a.builtin, parse_mode(a.mode));
    flavor = flavor_of(parse_mode(a.mode));
    r.inputs.push_back({{"builtin", a.builtin}, {"mode", a.mode}});
  } else {
    gd = gadget_from_json(parse_json_text(note_input(r, a.file), a.file));
  }
  if (!a.flavor.empty()) flavor = a.flavor == "det" ? Flavor::determinantal : Flavor::permanental;
  check_vertex_bound(o, gd.graph);
  r.method = std::string("oracle/") + flavor_name(flavor);
  SignatureTable t = gadget_signature(gd, flavor);
  r.results["signature"] = signature_to_json(t);
  r.results["covers"] = t.cover_count();
  r.lines.push_back(gd.name + " (" + flavor_name(flavor) + ")");
  for (const auto& [k, v] : t.entries) r.lines.push_back("  " + key_string(k) + "  " + to_string(v));
  if (a.golden.empty()) return;

  SignatureTable want = signature_from_json(parse_json_text(note_input(r, a.golden), a.golden));
  Json diffs = Json::array();
  auto diff = [&](const std::vector<std::string>& k) {
    Rational got = t.at(k), exp = want.at(k);
    if (got != exp) diffs.push_back({{"stubs", k}, {"got", to_string(got)}, {"want", to_string(exp)}});
  };
  for (const auto& [k, v] : t.entries) diff(k);
  for (const auto& [k, v] : want.entries)
    if (!t.entries.count(k)) diff(k);
  if (want.flavor != flavor) diffs.push_back({{"flavor", flavor_name(want.flavor)}});
  bool ok = diffs.empty();
  r.verification["golden"] = ok ? "pass" : "fail";
  if (!ok) r.verification["differences"] = diffs;
  r.lines.push_back(std::string("golden: ") + (ok ? "pass" : "FAIL"));
  for (const auto& d : diffs) r.lines.push_back("  " + d.dump());
  if (!ok) r.exit_code = kExitMismatch;
}

// compile

struct CompileArgs {
  std::string file, mode = "det", out, provenance;
  bool cubicize = false;
};

void cmd_compile(const CompileArgs& a, const Options&, Report& r) {
  CnfFormula f = parse_dimacs(note_input(r, a.file));
  Mode mode = parse_mode(a.mode);
  r.method = std::string("compile/") + a.mode + (a.cubicize ? "+cubicize" : "");
  CompiledReduction cr = compile(f, mode);
  if (a.cubicize) {
    if (mode != Mode::det) throw Error(Errc::ParseError, "usage: --cubicize needs --mode det");
    cr = cubicize(cr);
  }
  write_text_file(a.out, graph_to_json(cr.graph, &cr.rotation).dump(1) + "\n");
  std::string prov = a.provenance.empty() ? a.out + ".provenance.json" : a.provenance;
  Json pj = provenance_to_json(cr);
  pj["formula"] = to_dimacs(f);
  pj["sign"] = mode == Mode::det && f.clause_count() % 2 ? -1 : 1;
  write_text_file(prov, pj.dump(1) + "\n");
  r.results["vertices"] = cr.graph.vertex_count();
  r.results["edges"] = cr.graph.edge_count();
  r.results["crossings"] = cr.crossings;
  r.results["scale"] = to_string(cr.scale);
  r.results["output"] = a.out;
  r.results["provenance"] = prov;
  r.lines.push_back("wrote " + a.out + " (" + std::to_string(cr.graph.vertex_count()) + " vertices, " +
                    std::to_string(cr.graph.edge_count()) + " edges, " + std::to_string(cr.crossings) +
                    " crossings, scale " + to_string(cr.scale) + ")");
}

// satcount

void cmd_satcount(const std::string& file, const Options&, Report& r) {
  CnfFormula f = parse_dimacs(note_input(r, file));
  r.method = "brute-force";
  auto n = sat_count(f);
  r.results["sat_count"] = std::to_string(n);
  r.lines.push_back(std::to_string(n));
}

// orient / verify

struct OrientArgs {
  std::string file, out;
  bool pfaffian = false, semi = false;
  int search_bound = kSemiPfaffianSearchBound;
};

void cmd_orient(const OrientArgs& a, const Options&, Report& r) {
  GraphFile gf = load_graph(r, a.file);
  RotationSystem rot = rotation_or_embed(gf);
  OrientedPlanarGraph og = a.semi ? find_semi_pfaffian(gf.graph, rot, a.search_bound)
                                  : pfaffian_orientation(gf.graph, rot, true);
  r.method = a.semi ? "semi-pfaffian" : "pfaffian";
  if (!og.embedding.outer_dart) {
    FaceSet fs = validate_embedding(og.graph, og.embedding);
    if (!fs.outer.empty() && fs.outer[0] >= 0) og.embedding.outer_dart = fs.faces[fs.outer[0]][0];
  }
  write_text_file(a.out, graph_to_json(og.graph, &og.embedding).dump(1) + "\n");
  r.results["output"] = a.out;
  r.lines.push_back("wrote " + a.out);
}

void cmd_verify(const OrientArgs& a, const Options& o, Report& r) {
  GraphFile gf = load_graph(r, a.file);
  check_vertex_bound(o, gf.graph);
  if (!gf.graph.fully_oriented()) throw Error(Errc::UnorientedEdge, "graph must be fully oriented");
  r.method = a.semi ? "semi-pfaffian" : "pfaffian";
  std::optional<Cycle> bad = a.semi ? verify_semi_pfaffian(gf.graph) : pfaffian_violation(gf.graph);
  r.verification[r.method] = bad ? "fail" : "pass";
  if (bad) {
    r.verification["counterexample"] = cycle_json(*bad);
    r.lines.push_back("FAIL: central cycle " + cycle_text(*bad) + " has " +
                      std::to_string(along_count(gf.graph, *bad)) + " forward edges");
    r.exit_code = kExitMismatch;
  } else {
    r.lines.push_back("pass");
  }
}

// tension

struct TensionArgs {
  std::string file, cycle;
  bool all_central = false;
};

Cycle cycle_from_vertices(const Multigraph& g, const std::string& text) {
  Cycle c;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      c.vertices.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "bad vertex '" + tok + "' in --cycle");
    }
  }
  const int k = static_cast<int>(c.vertices.size());
  for (int i = 0; i < k; ++i) {
    int v = c.vertices[i], w = c.vertices[(i + 1) % k], found = -1;
    if (v < 0 || v >= g.vertex_count()) throw Error(Errc::CycleNotInGraph, "vertex " + std::to_string(v));
    for (int e : g.incident(v))
      if (g.edge(e).other(v) == w && !g.edge(e).is_loop()) found = e;
    if (found < 0) throw Error(Errc::CycleNotInGraph, std::to_string(v) + "-" + std::to_string(w) + " is not an edge");
    c.edges.push_back(found);
  }
  return c;
}

void cmd_tension(const TensionArgs& a, const Options& o, Report& r) {
  GraphFile gf = load_graph(r, a.file);
  RotationSystem rot = rotation_or_embed(gf);
  r.method = "tension";
  std::vector<Cycle> cycles;
  if (!a.cycle.empty()) cycles.push_back(cycle_from_vertices(gf.graph, a.cycle));
  if (a.all_central) {
    check_vertex_bound(o, gf.graph);
    detail::require_cubic(gf.graph);
    for (auto& c : central_cycles(gf.graph))
      if (c.length() % 2 == 0) cycles.push_back(std::move(c));
  }
  if (cycles.empty() && a.cycle.empty() && !a.all_central)
    throw Error(Errc::ParseError, "usage: give --cycle or --all-central");
  Json list = Json::array();
  int worst = 0;
  for (const auto& c : cycles) {
    TensionReport t = tension(gf.graph, rot, c);
    worst = std::max(worst, t.tension);
    list.push_back({{"cycle", c.vertices}, {"out1", t.out1}, {"out2", t.out2}, {"tension", t.tension}});
    r.lines.push_back(std::to_string(t.tension) + "  [" + cycle_text(c) + "]");
  }
  r.results["cycles"] = list;
  r.results["max_tension"] = worst;
  r.lines.push_back("max tension " + std::to_string(worst) + " over " + std::to_string(cycles.size()) + " cycles");
}

// pfaffian

void cmd_pfaffian(const std::string& file, bool with_det, const Options&, Report& r) {
  SkewMatrix a = matrix_from_json(parse_json_text(note_input(r, file), file));
  r.method = "elimination";
  Rational pf = pfaffian(a);
  r.results["pfaffian"] = to_string(pf);
  r.lines.push_back(to_string(pf));
  if (with_det) {
    Rational d = determinant(a);
    bool ok = pf * pf == d;
    r.results["determinant"] = to_string(d);
    r.verification["pf_squared_is_det"] = ok ? "pass" : "fail";
    r.lines.push_back("det " + to_string(d) + (ok ? " = Pf^2" : " != Pf^2"));
    if (!ok) r.exit_code = kExitMismatch;
  }
}

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::ResourceLimit:
    case Errc::SearchSpaceTooLarge:
    case Errc::DimensionTooLargeForOracle:
    case Errc::TooManyVariables:
      return kExitResource;
    case Errc::OrientationNotVerifiedPfaffian:
      return kExitMismatch;
    default:
      return kExitInput;
  }
}

void emit(const Report& r, const Options& o, double ms) {
  if (o.json) {
    Json j{{"command", r.command}, {"inputs", r.inputs}, {"method", r.method}, {"results", r.results},
           {"verification", r.verification}, {"timing_ms", std::llround(ms)}, {"exit_code", r.exit_code}};
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& l : r.lines) std::cout << l << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ucount: cycle covers, matchings and gadget signatures of small graphs"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable report");
  app.add_option("--max-vertices", opt.max_vertices, "Refuse exponential oracles above this many vertices (0 = no limit)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--max-seconds", opt.max_seconds, "Wall-clock limit (0 = none)")->check(CLI::NonNegativeNumber);

  const std::vector<std::string> quantities{"udet", "uperm", "perfmatch"};
  const std::vector<std::string> modes{"det", "perm"};

  CountArgs ca;
  auto* count = app.add_subcommand("count", "Evaluate udet, uperm or PerfMatch");
  count->add_option("graph", ca.file, "Graph JSON")->required();
  count->add_option("--quantity,-q", ca.quantity)->check(CLI::IsMember(quantities));
  count->add_option("--method,-m", ca.method)->check(CLI::IsMember({"oracle", "fkt", "semipfaffian"}));
  count->add_option("--engine", ca.engine, "Oracle engine")->check(CLI::IsMember({"frontier", "enumeration"}));
  count->add_flag("--cross-check", ca.cross_check, "Also run the oracle and compare");
  count->add_flag("--strict", ca.strict, "Re-verify the orientation by central-cycle enumeration");

  SignatureArgs sa;
  auto* sig = app.add_subcommand("signature", "Enumerate a gadget signature table");
  sig->add_option("gadget", sa.file, "Gadget JSON");
  sig->add_option("--builtin", sa.builtin, "Built-in gadget name");
  sig->add_option("--mode", sa.mode, "Mode for built-in gadgets")->check(CLI::IsMember(modes));
  sig->add_option("--flavor", sa.flavor)->check(CLI::IsMember(modes));
  sig->add_option("--golden", sa.golden, "Golden signature JSON to compare against");

  CompileArgs cpa;
  auto* comp = app.add_subcommand("compile", "Compile a 3-CNF formula into a planar graph");
  comp->add_option("cnf", cpa.file)->required();
  comp->add_option("--mode", cpa.mode)->check(CLI::IsMember(modes));
  comp->add_flag("--cubicize", cpa.cubicize, "Replace degree-4 vertices (det mode)");
  comp->add_option("-o,--output", cpa.out)->required();
  comp->add_option("--provenance", cpa.provenance, "Provenance sidecar path");

  std::string sat_file;
  auto* sat = app.add_subcommand("satcount", "Count satisfying assignments");
  sat->add_option("cnf", sat_file)->required();

  OrientArgs oa;
  auto* orient = app.add_subcommand("orient", "Write a Pfaffian or semi-Pfaffian orientation");
  orient->add_option("graph", oa.file)->required();
  orient->add_option("-o,--output", oa.out)->required();
  auto* og1 = orient->add_flag("--pfaffian", oa.pfaffian);
  auto* og2 = orient->add_flag("--semi-pfaffian", oa.semi);
  og1->excludes(og2);
  orient->add_option("--search-bound", oa.search_bound, "Cotree edges allowed in the exhaustive fallback");

  OrientArgs va;
  auto* verify = app.add_subcommand("verify", "Check an orientation by central-cycle enumeration");
  verify->add_option("graph", va.file)->required();
  auto* vg1 = verify->add_flag("--pfaffian", va.pfaffian);
  auto* vg2 = verify->add_flag("--semi-pfaffian", va.semi);
  vg1->excludes(vg2);

  TensionArgs ta;
  auto* tens = app.add_subcommand("tension", "Tension of even cycles in a cubic embedded graph");
  tens->add_option("graph", ta.file)->required();
  tens->add_flag("--all-central", ta.all_central, "Every even central cycle");
  tens->add_option("--cycle", ta.cycle, "Comma-separated vertex list");

  std::string mat_file;
  bool with_det = false;
  auto* pf = app.add_subcommand("pfaffian", "Pfaffian of a skew-symmetric rational matrix");
  pf->add_option("matrix", mat_file)->required();
  pf->add_flag("--det", with_det, "Also print the determinant and check Pf^2 = det");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }
  if ((orient->parsed() && !oa.pfaffian && !oa.semi) || (verify->parsed() && !va.pfaffian && !va.semi)) {
    std::cerr << "error: choose --pfaffian or --semi-pfaffian\n";
    return kExitInput;
  }

  Report report;
  for (int i = 1; i < argc; ++i) report.command += (i > 1 ? " " : "") + std::string(argv[i]);

  auto run = [&]() -> int {
    try {
      if (count->parsed()) cmd_count(ca, opt, report);
      else if (sig->parsed()) cmd_signature(sa, opt, report);
      else if (comp->parsed()) cmd_compile(cpa, opt, report);
      else if (sat->parsed()) cmd_satcount(sat_file, opt, report);
      else if (orient->parsed()) cmd_orient(oa, opt, report);
      else if (verify->parsed()) cmd_verify(va, opt, report);
      else if (tens->parsed()) cmd_tension(ta, opt, report);
      else cmd_pfaffian(mat_file, with_det, opt, report);
      return report.exit_code;
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return exit_code_for(e.code());
    } catch (const std::bad_alloc&) {
      std::cerr << "error: out of memory\n";
      return kExitResource;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitInput;
    }
  };

  auto t0 = std::chrono::steady_clock::now();
  int rc;
  if (opt.max_seconds > 0) {
    auto fut = std::async(std::launch::async, run);
    if (fut.wait_for(std::chrono::duration<double>(opt.max_seconds)) == std::future_status::timeout) {
      std::cerr << "error: ResourceLimit: exceeded --max-seconds " << opt.max_seconds << "\n";
      std::cout.flush();
      std::_Exit(kExitResource);
    }
    rc = fut.get();
  } else {
    rc = run();
  }
  if (rc != kExitOk && rc != kExitMismatch) return rc;
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  emit(report, opt, ms);
  return rc;
}
