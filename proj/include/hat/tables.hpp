#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hat/paths.hpp"
#include "hat/shapes.hpp"

namespace hat {

struct OrbitLength {
  int coef;
  bool per_mn;  // coef * mn, else coef * n
  std::int64_t value(const ResidueParams& p) const {
    return coef * (per_mn ? static_cast<std::int64_t>(p.m) * p.n : p.n);
  }
  std::string str() const;
};

struct TableRow {
  int table = 0;  // 1, 2 or 6
  int row = 0;
  std::string trace;  // canonical
  std::string code;   // canonical
  bool code_used = true;  // false where only trace, condition and length are matched
  // Shared-trace rows (table 1): condition as a polynomial in r (ascending);
  // empty means none.
  std::vector<int> r_poly;
  // Tables 2 and 6: equation and optional inequation over Z[r]/(r^m - 1) plus t.
  std::optional<WrappedPoly> eq, neq;
  OrbitLength length{1, true};

  std::string label() const;
  // Literal condition of the row at the tuple.
  bool condition(const ResidueParams& p) const;
};

const std::vector<TableRow>& table1();
const std::vector<TableRow>& table2();  // m = 8, coiled
const std::vector<TableRow>& table6();  // m = 4, coiled

// A trace whose orbits are described by a family of conditions rather than
// table rows.  Empty `conditions` means orbits are matched by word
// derivation alone.
struct ConditionFamily {
  int index = 0;
  std::string name;
  int m = 0;
  std::string trace;  // canonical
  std::vector<WrappedPoly> conditions;
  OrbitLength length{1, false};
};

const std::vector<ConditionFamily>& families();

// Representative classes of the shared-trace rows, derived by searching words whose trace,
// code (where used) and zero-displacement polynomial agree with the row.
struct RowRepresentative {
  const TableRow* row;
  std::vector<Word> classes;  // canonical words
  std::vector<std::string> codes;
};
const std::vector<RowRepresentative>& table1_representatives();

struct ExpectedOrbit {
  std::string source;  // row label or family name
  int table = 0, row = 0;
  std::string trace, code;  // code empty if unused
  std::int64_t length = 0;
};

struct TableCheck {
  std::vector<ExpectedOrbit> expected;
  std::vector<std::string> problems;
  // rows whose literal condition holds but whose representative degenerates
  std::vector<std::string> degenerate_rows;
  bool ok() const { return problems.empty(); }
};

// Expected 8-cycle orbits at a tuple with r^2 != +-1.
std::vector<ExpectedOrbit> expected_orbits(const ResidueParams& p,
                                           std::vector<std::string>* degenerate = nullptr);

// Matches orbits of 8-cycles against the expectation, filling `matched`.
// Problems list every expected orbit not observed and every observed orbit
// left unmatched.
TableCheck match_tables(const ResidueParams& p, std::vector<CycleOrbit>& orbits);

// Same as match_tables but throws UnmatchedOrbit on any problem.
void match_tables_strict(const ResidueParams& p, std::vector<CycleOrbit>& orbits);

}  // namespace hat
