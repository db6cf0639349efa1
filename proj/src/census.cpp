#include "hat/census.hpp"

#include <omp.h>

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "hat/bruteforce.hpp"
#include "hat/errors.hpp"
#include "hat/orientation.hpp"
#include "hat/tables.hpp"

namespace hat {

bool satisfies_constraints(Family family, int m, std::int64_t n, std::int64_t r, std::int64_t t) {
  if (r < 0 || r >= n || t < 0 || t >= n) return false;
  if (std::gcd(r, n) != 1) return false;
  const std::int64_t rm = powmod(r, static_cast<std::uint64_t>(m), n);
  switch (family) {
    case Family::EvenRadius: {
      if (m < 4 || m % 2 || n < 4 || n % 2) return false;
      if (rm != 1 % n || mulmod(t, r - 1, n) != 0) return false;
      std::int64_t s = 0, pw = 1 % n;
      for (int i = 0; i < m; ++i) {
        s = mod(s + pw, n);
        pw = mulmod(pw, r, n);
      }
      return mod(s + 2 * t, n) == 0;
    }
    case Family::OddRadius:
      if (m < 3 || n < 3 || n % 2 == 0 || t != 0) return false;
      return rm == 1 % n || rm == n - 1;
    case Family::Metacirculant4:
      if (m != 4 || n < 3 || t != 0) return false;
      return rm == 1 % n || rm == n - 1;
  }
  return false;
}

std::vector<ResidueParams> enumerate_params(Family family, int max_m, std::int64_t max_n) {
  std::vector<ResidueParams> out;
  const int m_lo = family == Family::OddRadius ? 3 : 4;
  const int m_hi = family == Family::Metacirculant4 ? std::min(max_m, 4) : max_m;
  for (int m = m_lo; m <= m_hi; ++m) {
    if (family == Family::EvenRadius && m % 2) continue;
    for (std::int64_t n = 3; n <= max_n; ++n) {
      for (std::int64_t r = 0; r < n; ++r) {
        const std::int64_t t_hi = family == Family::EvenRadius ? n : 1;
        for (std::int64_t t = 0; t < t_hi; ++t) {
          if (satisfies_constraints(family, m, n, r, t)) out.push_back(validate(family, m, n, r, t));
        }
      }
    }
  }
  return out;
}

bool in_classified_domain(const ResidueParams& p) {
  if (p.family != Family::Metacirculant4) return true;
  return p.n % 2 == 1 || metacirculant_applicable(p.r, p.n);
}

Graph record_graph(const ResidueParams& p) {
  if (p.family != Family::Metacirculant4) return build(p).graph;
  TetraGraph g = build_metacirculant(p.r, 4, p.n);
  if (p.n % 2 == 1) return g.graph;
  return component_of(g.graph, 0).graph;
}

int girth(const Graph& g) {
  const int V = g.size();
  int best = 0;
  std::vector<int> dist(static_cast<std::size_t>(V)), parent(static_cast<std::size_t>(V));
  for (int s = 0; s < V; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> q{s};
    dist[static_cast<std::size_t>(s)] = 0;
    parent[static_cast<std::size_t>(s)] = -1;
    while (!q.empty()) {
      const int u = q.front();
      q.pop_front();
      if (best && 2 * dist[static_cast<std::size_t>(u)] + 1 >= best) break;
      for (int w : g.adj[static_cast<std::size_t>(u)]) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(w)] = u;
          q.push_back(w);
        } else if (w != parent[static_cast<std::size_t>(u)]) {
          const int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1;
          if (!best || len < best) best = len;
        }
      }
    }
  }
  return best;
}

CensusRecord analyze(const ResidueParams& p, bool verify, bool cycles) {
  CensusRecord rec;
  rec.params = p;
  rec.classification = classify(p, true);
  const Graph g = record_graph(p);
  rec.girth = girth(g);
  rec.graph6 = export_graph6(g);

  // orientation data comes from an X_e or X_o graph with the same edges
  // (the component isomorphism for metacirculants of even n)
  ResidueParams ap = p;
  if (p.family == Family::Metacirculant4) {
    ap = p.n % 2 == 1 ? validate(Family::OddRadius, 4, p.n, p.r, 0)
                      : metacirculant_classify(p.r, p.n).component;
  }
  const TetraGraph tg = build(ap);
  try {
    const OrientedGraph d = orient(tg);
    const AlternatingStructure s = alternating_cycles(d);
    rec.radius = s.radius;
    rec.attachment_number = s.attachment_number;
  } catch (const NotAlternatingRegular&) {
    // radius and attachment left empty
  }
  if (cycles) {
    const OrientedGraph d = orient(tg);
    const Generators gens = build_generators(tg);
    auto orbits = orbit_partition(d, gens.list(), enumerate_cycles(tg.graph, 8));
    const std::int64_t r2 = mulmod(ap.r, ap.r, ap.n);
    if (ap.family == Family::EvenRadius && r2 != 1 % ap.n && r2 != ap.n - 1) {
      match_tables(ap, orbits);
    }
    for (const auto& o : orbits) {
      rec.orbits.push_back({o.trace, o.code, o.length, o.matched ? o.matched->label : ""});
    }
  }

  if (verify) {
    const AutomorphismGroup aut = automorphism_group(g);
    rec.aut_order = aut.order.str();
    const bool at = is_arc_transitive(g, aut);
    bool agrees;
    if (rec.classification.verdict == Verdict::ArcTransitive) {
      agrees = at;
    } else {
      agrees = !at && is_vertex_transitive(g, aut) && is_edge_transitive(g, aut);
    }
    rec.oracle_agrees = agrees;
  }
  return rec;
}

Catalog census_collect(const CensusConfig& cfg) {
  Catalog cat;
  std::vector<ResidueParams> all = enumerate_params(cfg.family, cfg.max_m, cfg.max_n);
  cat.tuples = static_cast<std::int64_t>(all.size());
  std::map<std::tuple<int, std::int64_t, std::int64_t, std::int64_t>, ResidueParams> classes;
  for (const auto& p : all) {
    if (cfg.only_m && p.m != *cfg.only_m) continue;
    if (!in_classified_domain(p)) {
      ++cat.skipped;
      continue;
    }
    ResidueParams c = canonical_params_any(p);
    classes.try_emplace({c.m, c.n, c.r, c.t}, c);
  }
  std::vector<ResidueParams> work;
  for (auto& [k, p] : classes) work.push_back(p);
  cat.records.resize(work.size());
  std::vector<std::string> errors(work.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, cfg.jobs))
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(work.size()); ++k) {
    const auto idx = static_cast<std::size_t>(k);
    try {
      cat.records[idx] = analyze(work[idx], cfg.verify, cfg.cycles);
    } catch (const std::exception& e) {
      errors[idx] = describe(work[idx]) + ": " + e.what();
    }
  }

  for (std::size_t k = 0; k < work.size(); ++k) {
    if (!errors[k].empty()) throw Error(errors[k]);
    const auto& rec = cat.records[k];
    if (rec.oracle_agrees && !*rec.oracle_agrees) {
      cat.mismatches.push_back(describe(rec.params) + " classified " +
                               to_string(rec.classification.verdict) + " but oracle disagrees (|Aut| = " +
                               rec.aut_order.value_or("?") + ")");
    }
  }
  return cat;
}

Catalog census_run(const CensusConfig& cfg) {
  Catalog cat = census_collect(cfg);
  if (!cat.mismatches.empty()) {
    std::string msg = "oracle mismatch:";
    for (const auto& m : cat.mismatches) msg += "\n  " + m;
    throw OracleMismatch(msg);
  }
  return cat;
}

nlohmann::ordered_json to_json(const CensusRecord& r) {
  nlohmann::ordered_json j;
  j["family"] = to_string(r.params.family);
  j["m"] = r.params.m;
  j["n"] = r.params.n;
  j["r"] = r.params.r;
  j["t"] = r.params.t;
  j["verdict"] = to_string(r.classification.verdict);
  j["reason"] = to_string(r.classification.reason);
  j["aut_order"] = r.aut_order ? nlohmann::ordered_json(*r.aut_order) : nlohmann::ordered_json();
  j["radius"] = r.radius ? nlohmann::ordered_json(*r.radius) : nlohmann::ordered_json();
  j["attachment_number"] =
      r.attachment_number ? nlohmann::ordered_json(*r.attachment_number) : nlohmann::ordered_json();
  j["girth"] = r.girth;
  auto orbits = nlohmann::ordered_json::array();
  for (const auto& o : r.orbits) {
    nlohmann::ordered_json x;
    x["trace"] = o.trace;
    x["code"] = o.code;
    x["length"] = o.length;
    x["row"] = o.row.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(o.row);
    orbits.push_back(std::move(x));
  }
  j["orbits8"] = std::move(orbits);
  j["graph6"] = r.graph6;
  return j;
}

std::string to_jsonl(const CensusRecord& r) { return to_json(r).dump(); }

std::string csv_header() {
  return "family,m,n,r,t,verdict,reason,aut_order,radius,attachment_number,girth,orbits8,graph6";
}

std::string to_csv(const CensusRecord& r) {
  std::ostringstream os;
  os << to_string(r.params.family) << ',' << r.params.m << ',' << r.params.n << ',' << r.params.r
     << ',' << r.params.t << ',' << to_string(r.classification.verdict) << ','
     << to_string(r.classification.reason) << ',' << r.aut_order.value_or("") << ',';
  if (r.radius) os << *r.radius;
  os << ',';
  if (r.attachment_number) os << *r.attachment_number;
  os << ',' << r.girth << ',';
  for (std::size_t k = 0; k < r.orbits.size(); ++k) {
    const auto& o = r.orbits[k];
    if (k) os << ';';
    os << o.trace << '/' << o.code << '/' << o.length << '/' << o.row;
  }
  // graph6 uses characters 63..126, none of which is a comma or quote
  os << ',' << r.graph6;
  return os.str();
}

std::string render_catalog(const Catalog& c, OutputFormat f) {
  std::string out;
  if (f == OutputFormat::Csv) out += csv_header() + "\n";
  for (const auto& r : c.records) out += (f == OutputFormat::Csv ? to_csv(r) : to_jsonl(r)) + "\n";
  return out;
}

void write_catalog(const Catalog& c, OutputFormat f, const std::string& path) {
  std::ofstream main(path, std::ios::binary);
  if (!main) throw Error("cannot open " + path);
  main << render_catalog(c, f);
  std::ofstream side(path + ".g6", std::ios::binary);
  if (!side) throw Error("cannot open " + path + ".g6");
  for (const auto& r : c.records) side << r.graph6 << "\n";
}

}  // namespace hat
