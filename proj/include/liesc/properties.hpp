#pragma once
// Structural property decisions: the class predicates (abelian, nilpotent,
// solvable, strongly solvable, supersolvable, almost abelian, quasi-abelian,
// simple), minimal ideals, the largest nilpotent ideal, and Frattini theory.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liesc/enumerate.hpp"
#include "liesc/lie_algebra.hpp"
#include "liesc/series.hpp"

namespace liesc {

// L = L^2 + Fx with abelian L^2 of codimension 1 and some x acting as the
// identity on it; disjoint from abelian by convention
bool is_almost_abelian(const LieAlgebra& l);

struct QuasiAbelianResult {
  bool verdict;
  // pair u, v with [u,v] outside span{u,v}, present exactly when false
  std::optional<std::pair<Vec, Vec>> witness;
};

// every subspace a subalgebra <=> abelian or almost abelian; decided
// structurally, witness found by a grid search over two-term basis sums
QuasiAbelianResult quasi_abelian_check(const LieAlgebra& l);

// All 1-dimensional ideals as joint eigenlines of the adjoint action,
// sorted canonically. Over GF(p) every eigenvalue is tried, so the list is
// exhaustive. Over Q rational eigenvalues are complete for existence, and
// each multi-dimensional joint eigenspace is reported through its canonical
// basis lines (every line of such a space is an ideal).
std::vector<Subspace> one_dim_ideals(const LieAlgebra& l);

// ascending chain 0 < L_1 < ... < L_n = L of i-dimensional ideals, or
// nothing; candidates tried in canonical subspace order, depth-first
std::optional<std::vector<Subspace>> supersolvable_flag(const LieAlgebra& l);

struct SimpleResult {
  bool simple;
  std::string certificate;
};

// no proper nonzero ideal and L^2 = L (so dim <= 1 is never simple here);
// exhaustive ideal-closure scan over finite fields, Killing/centroid
// criteria over Q
SimpleResult simple_check(const LieAlgebra& l, const ScanCaps& caps = {});
bool is_simple(const LieAlgebra& l, const ScanCaps& caps = {});
bool is_simple_or_1dim(const LieAlgebra& l, const ScanCaps& caps = {});

struct MinimalIdeals {
  // isolated minimal proper nonzero ideals
  std::vector<Subspace> ideals;
  // families "every line of this subspace is a minimal ideal"
  std::vector<Subspace> line_families;
  bool complete;
};

// minimal nonzero proper ideals; exhaustive over finite fields, weight-space
// analysis of the center of the nilradical over Q (throws CapExceeded when
// the rational eigen-search cannot certify completeness)
MinimalIdeals minimal_ideals(const LieAlgebra& l, const ScanCaps& caps = {});

// the nilradical: sum of all nilpotent ideals
Subspace largest_nilpotent_ideal(const LieAlgebra& l, const ScanCaps& caps = {});

// largest ideal of L contained in v, by shrinking v through
// I_{k+1} = {x in I_k : [x, L] inside I_k}
Subspace ideal_core(const LieAlgebra& l, const Subspace& v);

struct FrattiniResult {
  Subspace frattini_subspace;  // F(L): intersection of maximal subalgebras
  Subspace frattini_ideal;     // phi(L): ideal core of F(L)
  bool phi_free;               // phi(L) = 0
};

// finite fields only (maximal subalgebras are enumerated); Unsupported on Q
FrattiniResult frattini(const LieAlgebra& l, const ScanCaps& caps = {});

struct PropertyReport {
  // fixed order: abelian, nilpotent, solvable, strongly_solvable,
  // supersolvable, almost_abelian, quasi_abelian, simple
  std::vector<std::pair<std::string, bool>> verdicts;
  std::map<std::string, std::string> certificates;
  bool value(const std::string& name) const;  // UnknownProperty on miss
};

// decides all eight properties, cross-checks nilpotency against Engel and
// aborts on any implication-chain violation
PropertyReport property_report(const LieAlgebra& l, const ScanCaps& caps = {});

}  // namespace liesc
