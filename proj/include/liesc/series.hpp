#pragma once
// Derived and lower central series, computed for any subalgebra S of an
// ambient algebra L without rebasing: each term is a subspace of L.

#include <vector>

#include "liesc/lie_algebra.hpp"

namespace liesc {

struct SeriesChain {
  std::vector<Subspace> terms;  // starts at S itself
  bool reached_zero = false;    // last term is the zero subspace

  const Subspace& last() const { return terms.back(); }
  std::size_t length() const { return terms.size(); }
};

// S >= [S,S] >= [[S,S],[S,S]] >= ...
SeriesChain derived_series(const LieAlgebra& L, const Subspace& s);
// S >= [S,S] >= [S,[S,S]] >= ...
SeriesChain lower_central_series(const LieAlgebra& L, const Subspace& s);

bool is_abelian_on(const LieAlgebra& L, const Subspace& s);
bool is_solvable_on(const LieAlgebra& L, const Subspace& s);
bool is_nilpotent_on(const LieAlgebra& L, const Subspace& s);
// solvable with nilpotent derived subalgebra
bool is_strongly_solvable_on(const LieAlgebra& L, const Subspace& s);

inline bool is_abelian(const LieAlgebra& L) { return is_abelian_on(L, L.full_space()); }
inline bool is_solvable(const LieAlgebra& L) { return is_solvable_on(L, L.full_space()); }
inline bool is_nilpotent(const LieAlgebra& L) { return is_nilpotent_on(L, L.full_space()); }
inline bool is_strongly_solvable(const LieAlgebra& L) {
  return is_strongly_solvable_on(L, L.full_space());
}

}  // namespace liesc
