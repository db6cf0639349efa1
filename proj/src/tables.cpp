#include "hat/tables.hpp"

#include <map>
#include <mutex>
#include <set>

#include "hat/canon.hpp"
#include "hat/errors.hpp"

namespace hat {

std::string OrbitLength::str() const {
  return (coef == 1 ? "" : std::to_string(coef)) + (per_mn ? "mn" : "n");
}

std::string TableRow::label() const {
  return "T" + std::to_string(table) + "." + std::to_string(row);
}

namespace {

std::int64_t eval_r(const std::vector<int>& c, const ResidueParams& p) {
  std::int64_t v = 0, pw = 1 % p.n;
  for (int x : c) {
    v = mod(v + mulmod(x, pw, p.n), p.n);
    pw = mulmod(pw, p.r, p.n);
  }
  return v;
}

TableRow t1(int row, const char* trace, const char* code, std::vector<int> poly, int coef) {
  TableRow r;
  r.table = 1;
  r.row = row;
  r.trace = canonical_string(trace);
  r.code = canonical_string(code);
  r.code_used = !(row >= 18 && row <= 21);
  r.r_poly = std::move(poly);
  r.length = {coef, true};
  return r;
}

WrappedPoly wp(int m, std::vector<int> c, int ct) {
  WrappedPoly p;
  c.resize(static_cast<std::size_t>(m), 0);
  p.c = std::move(c);
  p.ct = ct;
  return p;
}

TableRow coiled(int table, int row, const char* code, std::optional<WrappedPoly> eq,
                std::optional<WrappedPoly> neq, int coef) {
  TableRow r;
  r.table = table;
  r.row = row;
  r.trace = "nnnnnnnn";
  r.code = canonical_string(code);
  r.eq = std::move(eq);
  r.neq = std::move(neq);
  r.length = {coef, false};
  return r;
}

}  // namespace

bool TableRow::condition(const ResidueParams& p) const {
  if (table == 1) return r_poly.empty() || eval_r(r_poly, p) == 0;
  if (eq && !holds(*eq, p)) return false;
  if (neq && holds(*neq, p)) return false;
  return true;
}

const std::vector<TableRow>& table1() {
  static const std::vector<TableRow> rows = {
      t1(1, "anananan", "agazagaz", {}, 1),
      t1(2, "aaaaanan", "aaaaazaz", {3, -1}, 1),
      t1(3, "aaaaanan", "aaaaagag", {3, 1}, 1),
      t1(4, "aaaaanan", "aaaaazaz", {1, -3}, 1),
      t1(5, "aaaaanan", "aaaaagag", {1, 3}, 1),
      t1(6, "aanannan", "aagaggag", {1, 2, 1}, 2),
      t1(7, "aanannan", "aazazgag", {1, 2, -1}, 2),
      t1(8, "aanannan", "aazazzaz", {1, -2, 1}, 2),
      t1(9, "aanannan", "aagagzaz", {1, -2, -1}, 2),
      t1(10, "aaannann", "aaazgagz", {2, -1, -1}, 1),
      t1(11, "aaannann", "aaazzazz", {2, -1, 1}, 1),
      t1(12, "aaannann", "aaagzazg", {2, 1, -1}, 1),
      t1(13, "aaannann", "aaaggagg", {2, 1, 1}, 1),
      t1(14, "aaannann", "aaaggagg", {1, 1, 2}, 1),
      t1(15, "aaannann", "aaagzazg", {1, -1, -2}, 1),
      t1(16, "aaannann", "aaazzazz", {1, -1, 2}, 1),
      t1(17, "aaannann", "aaazgagz", {1, 1, -2}, 1),
      t1(18, "annnannn", "aggzaggz", {1, 0, 0, -1}, 2),
      t1(19, "annnannn", "agzgazzz", {1, 0, 0, -1}, 2),
      t1(20, "annnannn", "agggazgz", {1, 0, 0, 1}, 2),
      t1(21, "annnannn", "agzzagzz", {1, 0, 0, 1}, 2),
      t1(22, "annnannn", "agggaggg", {1, 1, 1, 1}, 1),
      t1(23, "annnannn", "aggzazgg", {1, 1, 1, -1}, 1),
      t1(24, "annnannn", "agzzazzg", {1, 1, -1, 1}, 1),
      t1(25, "annnannn", "agzgagzg", {1, 1, -1, -1}, 1),
      t1(26, "annnannn", "azzgagzz", {1, -1, 1, 1}, 1),
      t1(27, "annnannn", "azzzazzz", {1, -1, 1, -1}, 1),
      t1(28, "annnannn", "azgzazgz", {1, -1, -1, 1}, 1),
      t1(29, "annnannn", "azggaggz", {1, -1, -1, -1}, 1),
  };
  return rows;
}

const std::vector<TableRow>& table2() {
  static const std::vector<TableRow> rows = {
      coiled(2, 1, "gggggggg", wp(8, {}, 1), std::nullopt, 2),
      coiled(2, 2, "ggggzzzz", wp(8, {1, 0, 1}, 1), std::nullopt, 16),
      coiled(2, 3, "gggzgggz", wp(8, {1, 1, 1, 1}, 1), std::nullopt, 8),
      coiled(2, 4, "ggzzggzz", wp(8, {1, 0, 0, 0, 1}, 1), std::nullopt, 8),
      coiled(2, 5, "ggzgzzgz", wp(8, {1, 1, 0, 1, 1}, 1), std::nullopt, 16),
      coiled(2, 6, "gzzzgzzz", wp(8, {1, 0, 1, 1, 0, 1}, 1), std::nullopt, 8),
      coiled(2, 7, "gzgzgzgz", wp(8, {1, 1, 0, 0, 1, 1}, 1), std::nullopt, 4),
      coiled(2, 8, "zzzzzzzz", wp(8, {1, 0, 1, 0, 1, 0, 1}, 1), std::nullopt, 2),
  };
  return rows;
}

const std::vector<TableRow>& table6() {
  static const std::vector<TableRow> rows = {
      coiled(6, 1, "gggggggg", wp(4, {}, 2), wp(4, {}, 1), 1),
      coiled(6, 2, "gggzgggz", std::nullopt, wp(4, {}, 1), 4),
      coiled(6, 3, "gzzzgzzz", std::nullopt, wp(4, {1, 0, 1}, 1), 4),
      coiled(6, 4, "gzgzgzgz", wp(4, {2, 2}, 2), std::nullopt, 2),
      coiled(6, 5, "zzzzzzzz", wp(4, {2, 0, 2}, 2), wp(4, {1, 0, 1}, 1), 1),
  };
  return rows;
}

const std::vector<ConditionFamily>& families() {
  static const std::vector<ConditionFamily> fams = [] {
    std::vector<ConditionFamily> out;
    ConditionFamily a4n4{1, "a4n4", 4, canonical_string("aaaannnn"), {}, {8, false}};
    for (int d1 = 0; d1 <= 1; ++d1)
      for (int d2 = 0; d2 <= 1; ++d2)
        for (int d3 = 0; d3 <= 1; ++d3) a4n4.conditions.push_back(wp(4, {3, d1, d2, d3}, 1));
    ConditionFamily a2na2n3{2, "a2na2n3", 4, canonical_string("aanaannn"), {}, {8, false}};
    for (int d1 : {-1, 2})
      for (int d2 = 0; d2 <= 1; ++d2)
        for (int d3 = 0; d3 <= 1; ++d3) a2na2n3.conditions.push_back(wp(4, {2, d1, d2, d3}, 1));
    ConditionFamily a2n2a2n2{3, "a2n2a2n2", 4, canonical_string("aannaann"), {}, {4, false}};
    for (int d2 : {-1, 2})
      for (int d1 = 0; d1 <= 1; ++d1)
        for (int d3 = 0; d3 <= 1; ++d3) a2n2a2n2.conditions.push_back(wp(4, {2, d1, d2, d3}, 1));
    ConditionFamily anan5{4, "anan5", 4, canonical_string("anannnnn"), {}, {8, false}};
    ConditionFamily a2n6{5, "a2n6", 6, canonical_string("aannnnnn"), {}, {12, false}};
    for (int mask = 0; mask < 32; ++mask) {
      std::vector<int> c{-1};
      for (int i = 0; i < 5; ++i) c.push_back((mask >> i) & 1);
      a2n6.conditions.push_back(wp(6, c, 1));
    }
    out = {a4n4, a2na2n3, a2n2a2n2, anan5, a2n6};
    return out;
  }();
  return fams;
}

const std::vector<RowRepresentative>& table1_representatives() {
  static const std::vector<RowRepresentative> reps = [] {
    std::set<std::string> traces;
    for (const auto& r : table1()) traces.insert(r.trace);
    struct Info {
      std::string trace, code;
      std::vector<int> poly;
    };
    std::map<Word, Info> classes;
    for (const Word& w : all_words(8)) {
      int net = 0;
      for (const Step& s : w) net += s.dir;
      if (net != 0) continue;
      std::string tr = canonical_string(word_trace(w));
      if (!traces.count(tr)) continue;
      Word key = canonical_word(w);
      if (classes.count(key)) continue;
      classes.emplace(key, Info{tr, canonical_string(word_code(key)), unwrapped_poly(key)});
    }
    std::vector<RowRepresentative> out;
    for (const auto& row : table1()) {
      RowRepresentative rep{&row, {}, {}};
      for (const auto& [w, info] : classes) {
        if (info.trace != row.trace || info.poly != row.r_poly) continue;
        if (row.code_used && info.code != row.code) continue;
        rep.classes.push_back(w);
        rep.codes.push_back(info.code);
      }
      out.push_back(std::move(rep));
    }
    return out;
  }();
  return reps;
}

namespace {

const std::vector<SymbolicClass>& cached_classes(int m, const std::string& trace) {
  static std::mutex mu;
  static std::map<std::pair<int, std::string>, std::vector<SymbolicClass>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(m, trace);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, symbolic_classes(m, trace)).first;
  return it->second;
}

}  // namespace

std::vector<ExpectedOrbit> expected_orbits(const ResidueParams& p,
                                           std::vector<std::string>* degenerate) {
  std::vector<ExpectedOrbit> out;
  for (const auto& rep : table1_representatives()) {
    const TableRow& row = *rep.row;
    if (!row.condition(p)) continue;
    bool simple = false;
    for (const Word& w : rep.classes) simple = simple || instantiate(p, w).simple;
    if (!simple) {
      if (degenerate) degenerate->push_back(row.label());
      continue;
    }
    out.push_back({row.label(), 1, row.row, row.trace, row.code_used ? row.code : "",
                   row.length.value(p)});
  }
  const std::vector<TableRow>* coiled_rows = p.m == 8 ? &table2() : p.m == 4 ? &table6() : nullptr;
  if (coiled_rows) {
    for (const auto& row : *coiled_rows) {
      if (row.condition(p)) {
        out.push_back({row.label(), row.table, row.row, row.trace, row.code, row.length.value(p)});
      }
    }
  }
  for (const auto& fam : families()) {
    if (fam.m != p.m) continue;
    if (fam.conditions.empty()) {
      for (const auto& d : derived_orbits(p)) {
        if (d.trace == fam.trace) {
          out.push_back({fam.name, 0, fam.index, fam.trace, d.code, fam.length.value(p)});
        }
      }
      continue;
    }
    const auto& classes = cached_classes(fam.m, fam.trace);
    std::set<std::size_t> hit;
    for (const auto& cond : fam.conditions) {
      if (!holds(cond, p)) continue;
      const WrappedPoly key = normalize(cond);
      for (std::size_t k = 0; k < classes.size(); ++k) {
        if (classes[k].polys.count(key) && instantiate(p, classes[k].word).simple) hit.insert(k);
      }
    }
    for (std::size_t k : hit) {
      out.push_back({fam.name, 0, fam.index, fam.trace, classes[k].code, fam.length.value(p)});
    }
  }
  return out;
}

TableCheck match_tables(const ResidueParams& p, std::vector<CycleOrbit>& orbits) {
  const std::int64_t r2 = mulmod(p.r, p.r, p.n);
  if (r2 == 1 || r2 == mod(-1, p.n)) {
    throw PreconditionFailed("table matching assumes r^2 != +-1");
  }
  TableCheck check;
  check.expected = expected_orbits(p, &check.degenerate_rows);
  std::vector<char> used(check.expected.size(), 0);
  for (auto& o : orbits) {
    if (o.representative.size() != 8) continue;
    o.matched.reset();
    for (std::size_t k = 0; k < check.expected.size(); ++k) {
      const auto& e = check.expected[k];
      if (used[k] || e.trace != o.trace || e.length != o.length) continue;
      if (!e.code.empty() && e.code != o.code) continue;
      used[k] = 1;
      o.matched = TableMatch{e.table, e.row, e.source};
      break;
    }
    if (!o.matched) {
      check.problems.push_back("unmatched orbit trace=" + o.trace + " code=" + o.code +
                               " length=" + std::to_string(o.length));
    }
  }
  for (std::size_t k = 0; k < check.expected.size(); ++k) {
    if (!used[k]) {
      const auto& e = check.expected[k];
      check.problems.push_back("expected " + e.source + " (" + e.trace + " " + e.code +
                               " length " + std::to_string(e.length) + ") not observed");
    }
  }
  return check;
}

void match_tables_strict(const ResidueParams& p, std::vector<CycleOrbit>& orbits) {
  TableCheck c = match_tables(p, orbits);
  if (!c.ok()) throw UnmatchedOrbit(describe(p) + ": " + c.problems.front());
}

}  // namespace hat
