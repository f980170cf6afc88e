#include "liesc/series.hpp"

#include "liesc/errors.hpp"

namespace liesc {

static SeriesChain descend(const LieAlgebra& L, const Subspace& s, bool lower_central) {
  SeriesChain chain;
  chain.terms.push_back(s);
  for (;;) {
    const Subspace& cur = chain.terms.back();
    if (cur.is_zero()) {
      chain.reached_zero = true;
      return chain;
    }
    Subspace next = lower_central ? L.bracket_span(s, cur) : L.bracket_span(cur, cur);
    if (!cur.contains(next))
      throw NotASubalgebra("series terms escape the starting subspace");
    if (next.dim() == cur.dim()) return chain;  // stalled, next == cur
    chain.terms.push_back(next);
  }
}

SeriesChain derived_series(const LieAlgebra& L, const Subspace& s) {
  return descend(L, s, false);
}

SeriesChain lower_central_series(const LieAlgebra& L, const Subspace& s) {
  return descend(L, s, true);
}

bool is_abelian_on(const LieAlgebra& L, const Subspace& s) {
  return L.bracket_span(s, s).is_zero();
}

bool is_solvable_on(const LieAlgebra& L, const Subspace& s) {
  return derived_series(L, s).reached_zero;
}

bool is_nilpotent_on(const LieAlgebra& L, const Subspace& s) {
  return lower_central_series(L, s).reached_zero;
}

bool is_strongly_solvable_on(const LieAlgebra& L, const Subspace& s) {
  if (!is_solvable_on(L, s)) return false;
  return is_nilpotent_on(L, L.bracket_span(s, s));
}

}  // namespace liesc
