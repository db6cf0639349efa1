#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hat/classify.hpp"
#include "hat/graphs.hpp"
#include "hat/paths.hpp"
#include "hat/residue.hpp"

namespace hat {

enum class OutputFormat { Jsonl, Csv };

struct CensusConfig {
  Family family = Family::EvenRadius;
  int max_m = 6;
  std::int64_t max_n = 20;
  std::optional<int> only_m;  // restrict the sweep to one m
  bool verify = false;
  int jobs = 1;
  bool cycles = true;  // 8-cycle orbit summary
  OutputFormat format = OutputFormat::Jsonl;
};

// Cheap membership test for the family constraints, without exceptions.
bool satisfies_constraints(Family family, int m, std::int64_t n, std::int64_t r, std::int64_t t);

// Every valid tuple with m <= max_m and n <= max_n, ascending (m, n, r, t).
std::vector<ResidueParams> enumerate_params(Family family, int max_m, std::int64_t max_n);

struct OrbitSummary {
  std::string trace, code;
  std::int64_t length = 0;
  std::string row;  // matched table row, empty if none
};

struct CensusRecord {
  ResidueParams params;  // canonical
  Classification classification;
  std::optional<std::string> aut_order;  // decimal, when the oracle ran
  std::optional<bool> oracle_agrees;
  std::optional<int> radius, attachment_number;
  int girth = 0;
  std::vector<OrbitSummary> orbits;
  std::string graph6;
};

struct Catalog {
  std::vector<CensusRecord> records;
  std::int64_t tuples = 0;   // enumerated before dedup
  std::int64_t skipped = 0;  // tuples outside the classifiable domain
  std::vector<std::string> mismatches;
};

// The graph a record describes: X_e or X_o, or for metacirculants the
// component of u_0^0 (the whole graph when n is odd).
Graph record_graph(const ResidueParams& p);

// Metacirculant tuples are classifiable when n is odd, or when n = 2 n1 with
// n1 even and r of multiplicative order 4.
bool in_classified_domain(const ResidueParams& p);

int girth(const Graph& g);

CensusRecord analyze(const ResidueParams& p, bool verify, bool cycles);

// One record per canonical class.  Throws OracleMismatch after the sweep if
// any verdict disagrees with the oracle.
Catalog census_run(const CensusConfig& cfg);
// Same, without throwing; mismatches are listed in the catalog.
Catalog census_collect(const CensusConfig& cfg);

nlohmann::ordered_json to_json(const CensusRecord& r);
std::string to_jsonl(const CensusRecord& r);
std::string csv_header();
std::string to_csv(const CensusRecord& r);

// Writes the catalog to `path` and the graph6 sidecar to `path + ".g6"`.
void write_catalog(const Catalog& c, OutputFormat f, const std::string& path);
std::string render_catalog(const Catalog& c, OutputFormat f);

}  // namespace hat
