// hatcensus: construct, classify and catalogue tightly attached tetravalent graphs.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hat/bruteforce.hpp"
#include "hat/census.hpp"
#include "hat/classify.hpp"
#include "hat/errors.hpp"
#include "hat/orientation.hpp"
#include "hat/paths.hpp"
#include "hat/tables.hpp"

using json = nlohmann::ordered_json;
using namespace hat;

namespace {

struct Tuple {
  std::string family = "even";
  int m = 0;
  std::int64_t n = 0, r = 0, t = 0;
};

void add_tuple(CLI::App* sub, Tuple& x, const std::string& suffix = "", bool required = true) {
  auto* m = sub->add_option("--m" + suffix, x.m, "number of layers");
  auto* n = sub->add_option("--n" + suffix, x.n, "layer size");
  auto* r = sub->add_option("--r" + suffix, x.r, "multiplier");
  sub->add_option("--t" + suffix, x.t, "wrap shift (even family)")->capture_default_str();
  if (required) {
    m->required();
    n->required();
    r->required();
  }
}

ResidueParams params_of(const Tuple& x) {
  return validate(family_from_string(x.family), x.m, x.n, x.r, x.t);
}

json params_json(const ResidueParams& p) {
  json j;
  j["family"] = to_string(p.family);
  j["m"] = p.m;
  j["n"] = p.n;
  j["r"] = p.r;
  j["t"] = p.t;
  return j;
}

int cmd_construct(const Tuple& x, const std::string& format) {
  const ResidueParams p = params_of(x);
  const Graph g = record_graph(p);
  if (format == "adj") {
    std::optional<TetraGraph> tg;
    if (p.family != Family::Metacirculant4 || p.n % 2 == 1) {
      tg = p.family == Family::Metacirculant4 ? build_metacirculant(p.r, 4, p.n) : build(p);
    }
    for (int v = 0; v < g.size(); ++v) {
      std::cout << (tg ? vertex_name(*tg, v) : std::to_string(v)) << ":";
      for (int w : g.adj[static_cast<std::size_t>(v)]) {
        std::cout << ' ' << (tg ? vertex_name(*tg, w) : std::to_string(w));
      }
      std::cout << '\n';
    }
  } else {
    std::cout << export_graph6(g) << '\n';
  }
  return 0;
}

int cmd_classify(const Tuple& x) {
  const ResidueParams p = params_of(x);
  json j;
  j["params"] = params_json(p);
  j["canonical"] = params_json(canonical_params_any(p));
  Classification c;
  if (p.family == Family::Metacirculant4 && p.n % 2 == 0) {
    MetaResult mr = metacirculant_classify(p.r, p.n);
    c = mr.classification;
    j["component"] = params_json(mr.component);
    j["component_edge_violations"] = mr.edge_violations;
  } else {
    c = classify(p, true);
  }
  j["verdict"] = to_string(c.verdict);
  j["reason"] = to_string(c.reason);
  j["witness"] = c.witness.has_value();
  if (c.reversed_arc) j["reversed_arc"] = {c.reversed_arc->first, c.reversed_arc->second};
  std::cout << j.dump() << '\n';
  return 0;
}

int cmd_cycles(const Tuple& x, int len) {
  const ResidueParams p = params_of(x);
  if (p.family == Family::Metacirculant4) throw PreconditionFailed("cycles needs even or odd family");
  const TetraGraph g = build(p);
  const OrientedGraph d = orient(g);
  auto orbits = orbit_partition(d, build_generators(g).list(), enumerate_cycles(g.graph, len));
  std::optional<TableCheck> check;
  const std::int64_t r2 = mulmod(p.r, p.r, p.n);
  if (len == 8 && p.family == Family::EvenRadius && r2 != 1 % p.n && r2 != p.n - 1) {
    check = match_tables(p, orbits);
  }
  for (const auto& o : orbits) {
    json j;
    j["trace"] = o.trace;
    j["code"] = o.code;
    j["refinement"] = o.refinement;
    j["length"] = o.length;
    j["row"] = o.matched ? json(o.matched->label) : json();
    std::cout << j.dump() << '\n';
  }
  if (check) {
    for (const auto& s : check->degenerate_rows) std::cerr << "degenerate: " << s << '\n';
    for (const auto& s : check->problems) std::cerr << "problem: " << s << '\n';
    if (!check->ok()) return 3;
  }
  return 0;
}

int cmd_aut(const Tuple& x) {
  const ResidueParams p = params_of(x);
  const Graph g = record_graph(p);
  const AutomorphismGroup a = automorphism_group(g);
  json j;
  j["params"] = params_json(p);
  j["vertices"] = g.size();
  j["order"] = a.order.str();
  j["stabilizer_order"] = vertex_stabilizer_order(a, 0).str();
  j["vertex_transitive"] = is_vertex_transitive(g, a);
  j["edge_transitive"] = is_edge_transitive(g, a);
  j["arc_transitive"] = is_arc_transitive(g, a);
  std::cout << j.dump() << '\n';
  return 0;
}

int cmd_isocheck(const Tuple& a, Tuple b) {
  b.family = a.family;
  const ResidueParams p = params_of(a), q = params_of(b);
  const auto map = are_isomorphic(record_graph(p), record_graph(q));
  const ResidueParams cp = canonical_params_any(p), cq = canonical_params_any(q);
  json j;
  j["first"] = params_json(p);
  j["second"] = params_json(q);
  j["isomorphic"] = map.has_value();
  j["same_canonical_class"] = cp.m == cq.m && cp.n == cq.n && cp.r == cq.r && cp.t == cq.t;
  std::cout << j.dump() << '\n';
  return 0;
}

int cmd_census(CensusConfig cfg, const std::string& family, const std::string& format,
               const std::string& out) {
  cfg.family = family_from_string(family);
  cfg.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Jsonl;
  try {
    Catalog cat = census_run(cfg);
    if (out.empty()) {
      std::cout << render_catalog(cat, cfg.format);
    } else {
      write_catalog(cat, cfg.format, out);
    }
    std::cerr << cat.records.size() << " records from " << cat.tuples << " tuples";
    if (cat.skipped) std::cerr << " (" << cat.skipped << " outside the classified domain)";
    std::cerr << '\n';
  } catch (const OracleMismatch& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tightly attached tetravalent graphs: construction, classification, census"};
  app.require_subcommand(1);

  Tuple x, y;
  std::string format = "graph6", census_format = "jsonl", out;
  int len = 8;
  CensusConfig cfg;
  int only_m = 0;

  auto family_opt = [&](CLI::App* sub) {
    sub->add_option("--family", x.family, "even, odd or meta")
        ->check(CLI::IsMember({"even", "odd", "meta"}))
        ->capture_default_str();
  };

  auto* construct = app.add_subcommand("construct", "print graph6 or adjacency lists");
  family_opt(construct);
  add_tuple(construct, x);
  construct->add_option("--format", format, "graph6 or adj")->check(CLI::IsMember({"graph6", "adj"}));

  auto* cls = app.add_subcommand("classify", "decide HAT or AT from the parameters");
  family_opt(cls);
  add_tuple(cls, x);

  auto* cyc = app.add_subcommand("cycles", "H-orbits of short cycles and table matches");
  family_opt(cyc);
  add_tuple(cyc, x);
  cyc->add_option("--len", len, "cycle length")->check(CLI::Range(3, 10))->capture_default_str();

  auto* aut = app.add_subcommand("aut", "brute-force automorphism group");
  family_opt(aut);
  add_tuple(aut, x);

  auto* iso = app.add_subcommand("isocheck", "brute-force isomorphism of two tuples");
  family_opt(iso);
  add_tuple(iso, x);
  add_tuple(iso, y, "2");

  auto* census = app.add_subcommand("census", "sweep a family and emit a catalog");
  family_opt(census);
  census->add_option("--max-m", cfg.max_m, "largest m")->capture_default_str();
  census->add_option("--max-n", cfg.max_n, "largest n")->capture_default_str();
  census->add_option("--m", only_m, "restrict to one m");
  census->add_flag("--verify", cfg.verify, "cross-check every verdict with the oracle");
  census->add_flag("!--no-cycles", cfg.cycles, "skip the 8-cycle orbit summary");
  census->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  census->add_option("--format", census_format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
  census->add_option("--out", out, "output path; a .g6 sidecar is written next to it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*construct) return cmd_construct(x, format);
    if (*cls) return cmd_classify(x);
    if (*cyc) return cmd_cycles(x, len);
    if (*aut) return cmd_aut(x);
    if (*iso) return cmd_isocheck(x, y);
    if (*census) {
      if (only_m) cfg.only_m = only_m;
      return cmd_census(cfg, x.family, census_format, out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
