#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hat/graphs.hpp"
#include "hat/group.hpp"
#include "hat/residue.hpp"

namespace hat {

enum class Verdict { HalfArcTransitive, ArcTransitive };

enum class Reason {
  RSquaredPlusMinusOne,
  ExceptionalM6,
  ExceptionalOddM6,
  OddRSquared,
  OddSmallCase,
  Generic
};

std::string to_string(Verdict v);
std::string to_string(Reason r);

struct Classification {
  Verdict verdict = Verdict::HalfArcTransitive;
  Reason reason = Reason::Generic;
  // arc-reversing automorphism, verified when present
  std::optional<Permutation> witness;
  std::optional<std::pair<int, int>> reversed_arc;
};

// Pass build_witness = false for a verdict only.
Classification classify_even(const ResidueParams& p, bool build_witness = true);
Classification classify_odd(const ResidueParams& p);
Classification classify(const ResidueParams& p, bool build_witness = true);

// (r, t), (-r, t + S), (r^-1, t), (-r^-1, t + S) with S = r + r^3 + ... + r^(m-1).
std::array<ResidueParams, 4> iso_variants(const ResidueParams& p);
ResidueParams canonical_params(const ResidueParams& p);

// Odd family: least of r, -r, r^-1, -r^-1.  Metacirculants: least of r, -r.
ResidueParams canonical_params_any(const ResidueParams& p);

// phi for r^2 = 1, psi for r^2 = -1.  PreconditionFailed otherwise.
Permutation build_prop31_map(const ResidueParams& p);
// phi sigma (r^2 = 1) or psi tau sigma (r^2 = -1); swaps u_0^0 and u_1^0.
Permutation prop31_witness(const ResidueParams& p);

enum class VariantMap { NegateR, InvertR };

struct CrossMap {
  ResidueParams source;
  ResidueParams target;
  std::vector<int> map;  // flat index in X -> flat index in the target graph
};

// NegateR: X_e(m,n;r,t) -> X_e(m,n;-r,t+S).  InvertR: -> X_e(m,n;r^-1,t).
// Each is checked to be an isomorphism before it is returned.
CrossMap build_prop38_map(const ResidueParams& p, VariantMap which);

// True when p is in the normal form the exceptional involution needs:
// 2 - r - r^2 = 0 together with the remaining exceptional conditions.
bool exceptional_normal_form(const ResidueParams& p);
// The exceptional involution.  PreconditionFailed unless exceptional_normal_form(p).
Permutation build_exceptional_map(const ResidueParams& p);

struct ExceptionalWitness {
  ResidueParams normal_form;
  std::vector<VariantMap> path;  // maps applied to reach the normal form
  Permutation phi;               // on the normal form
  Permutation psi;               // nonidentity element of H_{u_1^0}
  Permutation swap;              // phi psi sigma, swaps u_1^0 and u_2^0
  Permutation on_original;       // swap transported back to X
};

// Condition (ii) of the even classification must hold.
ExceptionalWitness exceptional_witness(const ResidueParams& p);

struct MetaResult {
  Classification classification;
  std::int64_t r_used;        // r or n - r, whichever is below n/2
  ResidueParams component;    // X_e(4, n/2; r', t')
  std::vector<int> component_vertices;  // flat indices of the u_0^0 component in M(r_used;4,n)
  std::vector<int> map;       // component index -> flat index in X_e(4,n/2;r',t')
  std::int64_t edge_violations = 0;
};

MetaResult metacirculant_classify(std::int64_t r, std::int64_t n);
bool metacirculant_applicable(std::int64_t r, std::int64_t n);

}  // namespace hat
